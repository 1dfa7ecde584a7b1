#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"

namespace hypernest {

/// One species term of a complex: the species index within the owning
/// network and its stoichiometric coefficient (>= 1).
struct ComplexTerm {
    std::size_t species;
    int coefficient;

    friend bool operator==(const ComplexTerm&, const ComplexTerm&) = default;
};

/// A complex: a nonempty positive-integer combination of species. Terms keep
/// the order in which the complex was first written; identity is the
/// coefficient map, not the term order.
struct Complex {
    std::vector<ComplexTerm> terms;

    int coefficient_of(std::size_t species) const {
        for (const ComplexTerm& t : terms)
            if (t.species == species) return t.coefficient;
        return 0;
    }

    bool same_composition(const Complex& other) const {
        auto normal = [](const Complex& c) {
            std::vector<ComplexTerm> t = c.terms;
            std::sort(t.begin(), t.end(), [](const ComplexTerm& a, const ComplexTerm& b) {
                return a.species < b.species;
            });
            return t;
        };
        return normal(*this) == normal(other);
    }

    friend bool operator==(const Complex&, const Complex&) = default;
};

/// A reaction: reactant complex turning into product complex, both given as
/// indices into the owning network's complex table.
struct Reaction {
    std::string id;
    std::size_t reactant;
    std::size_t product;

    friend bool operator==(const Reaction&, const Reaction&) = default;
};

/// Chemical reaction network: ordered species set, ordered complex set
/// (deduplicated by composition) and ordered reaction set.
class Crn {
public:
    const std::vector<std::string>& species() const { return species_; }
    const std::vector<Complex>& complexes() const { return complexes_; }
    const std::vector<Reaction>& reactions() const { return reactions_; }

    static bool valid_species_name(std::string_view name) {
        if (name.empty() || (name.front() >= '0' && name.front() <= '9')) return false;
        for (char c : name) {
            bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '_';
            if (!ok) return false;
        }
        return true;
    }

    /// Adds a species; returns its index. The name must be an identifier and
    /// not already present.
    std::size_t add_species(std::string name) {
        if (!valid_species_name(name))
            throw std::invalid_argument("invalid species name '" + name + "'");
        if (find_species(name))
            throw std::invalid_argument("duplicate species name '" + name + "'");
        species_.push_back(std::move(name));
        return species_.size() - 1;
    }

    /// Finds or creates the complex with the given (species name,
    /// coefficient) terms, creating unseen species in term order. Returns the
    /// complex index; an existing complex of equal composition is reused.
    std::size_t add_complex(const std::vector<std::pair<std::string, int>>& terms) {
        if (terms.empty()) throw std::invalid_argument("complex needs at least one term");
        Complex complex;
        for (const auto& [name, coefficient] : terms) {
            if (coefficient < 1)
                throw std::invalid_argument("stoichiometric coefficient of '" + name +
                                            "' must be a positive integer");
            std::size_t s = find_or_add_species(name);
            for (const ComplexTerm& t : complex.terms)
                if (t.species == s)
                    throw std::invalid_argument("duplicate species '" + name +
                                                "' in complex; merge coefficients");
            complex.terms.push_back(ComplexTerm{s, coefficient});
        }
        for (std::size_t i = 0; i < complexes_.size(); ++i)
            if (complexes_[i].same_composition(complex)) return i;
        complexes_.push_back(std::move(complex));
        return complexes_.size() - 1;
    }

    /// Appends a reaction between two existing complexes. Self-reactions are
    /// representable (validate() reports them); duplicate ids are not.
    void add_reaction(std::string id, std::size_t reactant, std::size_t product) {
        if (reactant >= complexes_.size() || product >= complexes_.size())
            throw std::out_of_range("reaction '" + id + "' references an unknown complex");
        for (const Reaction& r : reactions_)
            if (r.id == id) throw std::invalid_argument("duplicate reaction id '" + id + "'");
        reactions_.push_back(Reaction{std::move(id), reactant, product});
    }

    /// Canonical rendering of a complex, e.g. "2B" or "A + C".
    std::string complex_label(std::size_t index) const {
        const Complex& c = complexes_.at(index);
        std::string out;
        for (std::size_t i = 0; i < c.terms.size(); ++i) {
            if (i > 0) out += " + ";
            if (c.terms[i].coefficient != 1) out += std::to_string(c.terms[i].coefficient);
            out += species_[c.terms[i].species];
        }
        return out;
    }

    friend bool operator==(const Crn&, const Crn&) = default;

private:
    std::vector<std::string> species_;
    std::vector<Complex> complexes_;
    std::vector<Reaction> reactions_;

    const std::string* find_species(std::string_view name) const {
        for (const std::string& s : species_)
            if (s == name) return &s;
        return nullptr;
    }

    std::size_t find_or_add_species(const std::string& name) {
        for (std::size_t i = 0; i < species_.size(); ++i)
            if (species_[i] == name) return i;
        return add_species(name);
    }
};

// ---------------------------------------------------------------------------
// Axiom validation
// ---------------------------------------------------------------------------

enum class ViolationKind {
    SelfReaction,     // (y, y) in R
    IsolatedComplex,  // complex at neither end of any reaction
    UnusedSpecies,    // species in no complex
    DuplicateReaction // the same (y, y') declared more than once
};

enum class Severity { Error, Warning };

/// Duplicate reactions are tolerated (the reaction set simply collapses
/// them); everything else breaks the network axioms.
inline Severity severity(ViolationKind kind) {
    return kind == ViolationKind::DuplicateReaction ? Severity::Warning : Severity::Error;
}

struct Violation {
    ViolationKind kind;
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks the network axioms; violations are data, not errors. An empty
/// network is vacuously fine.
inline std::vector<Violation> validate(const Crn& crn) {
    std::vector<Violation> out;

    for (const Reaction& r : crn.reactions()) {
        if (r.reactant == r.product)
            out.push_back({ViolationKind::SelfReaction,
                           "reaction '" + r.id + "': complex '" +
                               crn.complex_label(r.reactant) + "' reacts to itself"});
    }

    std::vector<bool> complex_used(crn.complexes().size(), false);
    for (const Reaction& r : crn.reactions()) {
        complex_used[r.reactant] = true;
        complex_used[r.product] = true;
    }
    for (std::size_t i = 0; i < complex_used.size(); ++i) {
        if (!complex_used[i])
            out.push_back({ViolationKind::IsolatedComplex,
                           "complex '" + crn.complex_label(i) + "' is isolated"});
    }

    std::vector<bool> species_used(crn.species().size(), false);
    for (const Complex& c : crn.complexes())
        for (const ComplexTerm& t : c.terms) species_used[t.species] = true;
    for (std::size_t i = 0; i < species_used.size(); ++i) {
        if (!species_used[i])
            out.push_back({ViolationKind::UnusedSpecies,
                           "species '" + crn.species()[i] + "' appears in no complex"});
    }

    for (std::size_t i = 0; i < crn.reactions().size(); ++i) {
        for (std::size_t j = i + 1; j < crn.reactions().size(); ++j) {
            const Reaction& a = crn.reactions()[i];
            const Reaction& b = crn.reactions()[j];
            if (a.reactant == b.reactant && a.product == b.product)
                out.push_back({ViolationKind::DuplicateReaction,
                               "reactions '" + a.id + "' and '" + b.id + "' both declare " +
                                   crn.complex_label(a.reactant) + " -> " +
                                   crn.complex_label(a.product)});
        }
    }
    return out;
}

inline bool is_valid(const std::vector<Violation>& violations) {
    return std::none_of(violations.begin(), violations.end(), [](const Violation& v) {
        return severity(v.kind) == Severity::Error;
    });
}

// ---------------------------------------------------------------------------
// Reaction-list DSL
// ---------------------------------------------------------------------------
//
//   file     := line*
//   line     := [id ":"] complex arrow complex [comment] | comment | blank
//   id       := identifier ["+" | "-"]
//   arrow    := "->" | "<->"          (aliases: "→" | "⇌", "↔")
//   complex  := term ("+" term)*
//   term     := [integer] identifier  (absent integer means 1; integer >= 1)
//
// "#" starts a comment to end of line. A reversible line with id r yields the
// two reactions r+ and r-; an unlabeled line is named r<N> by its 1-based
// position among reaction lines. The optional id suffix exists so rendered
// reversible pairs reparse.

namespace detail {

inline bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

struct LineCursor {
    std::string_view text;
    std::size_t line;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    std::size_t column() const { return pos + 1; }
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(line, column(), message);
    }
};

// One parsed complex side: (species name, coefficient) in appearance order.
// Stops before an arrow ('<' or '-') or at end of line.
inline std::vector<std::pair<std::string, int>> parse_complex(LineCursor& cur) {
    std::vector<std::pair<std::string, int>> terms;
    while (true) {
        cur.skip_ws();
        if (cur.pos >= cur.text.size()) cur.fail("expected a species term");
        long long coefficient = 1;
        if (cur.text[cur.pos] >= '0' && cur.text[cur.pos] <= '9') {
            std::size_t start = cur.pos;
            while (cur.pos < cur.text.size() && cur.text[cur.pos] >= '0' &&
                   cur.text[cur.pos] <= '9')
                ++cur.pos;
            std::string digits(cur.text.substr(start, cur.pos - start));
            if (digits.size() > 9) throw ParseError(cur.line, start + 1, "coefficient too large");
            coefficient = std::stoll(digits);
            if (coefficient == 0)
                throw ParseError(cur.line, start + 1, "zero stoichiometric coefficient");
            cur.skip_ws();
        }
        if (cur.pos >= cur.text.size() || !is_ident_start(cur.text[cur.pos]))
            cur.fail("expected a species identifier");
        std::size_t start = cur.pos;
        while (cur.pos < cur.text.size() && is_ident_char(cur.text[cur.pos])) ++cur.pos;
        std::string name(cur.text.substr(start, cur.pos - start));
        for (const auto& [seen, _] : terms) {
            if (seen == name)
                throw ParseError(cur.line, start + 1,
                                 "species '" + name + "' repeated in complex; write " +
                                     "a single term with its coefficient");
        }
        terms.emplace_back(std::move(name), static_cast<int>(coefficient));

        cur.skip_ws();
        if (cur.pos >= cur.text.size()) break;
        char next = cur.text[cur.pos];
        if (next == '<' || next == '-') break; // arrow follows
        if (next != '+') cur.fail("expected '+', the reaction arrow, or end of line");
        ++cur.pos;
    }
    return terms;
}

} // namespace detail

/// Parses a reaction-list document into a network. Species are collected in
/// first-appearance order and complexes deduplicated by composition; each
/// reversible line becomes a +/- pair of reactions. Throws ParseError with a
/// 1-based line/column position.
inline Crn parse_crn(std::string_view text) {
    Crn crn;
    std::size_t line_no = 0;
    std::size_t reaction_lines = 0;

    std::size_t offset = 0;
    while (offset <= text.size()) {
        std::size_t eol = text.find('\n', offset);
        std::string_view raw = (eol == std::string_view::npos)
                                   ? text.substr(offset)
                                   : text.substr(offset, eol - offset);
        offset = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        std::string_view line = raw;
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

        // Normalize unicode arrows so the cursor only sees ASCII ones.
        std::string ascii(line);
        auto replace_all = [&ascii](std::string_view from, std::string_view to) {
            std::size_t at = 0;
            while ((at = ascii.find(from, at)) != std::string::npos) {
                ascii.replace(at, from.size(), to);
                at += to.size();
            }
        };
        replace_all("⇌", "<->"); // reversible harpoons
        replace_all("↔", "<->"); // double-headed arrow
        replace_all("→", "->");  // rightwards arrow

        detail::LineCursor cur{ascii, line_no};
        ++reaction_lines;

        std::string id;
        if (std::size_t colon = ascii.find(':'); colon != std::string::npos) {
            detail::LineCursor head{ascii, line_no};
            head.skip_ws();
            std::size_t start = head.pos;
            if (start >= colon || !detail::is_ident_start(ascii[start]))
                head.fail("expected a reaction id before ':'");
            std::size_t end = start;
            while (end < colon && detail::is_ident_char(ascii[end])) ++end;
            if (end < colon && (ascii[end] == '+' || ascii[end] == '-')) ++end;
            std::size_t tail = ascii.find_first_not_of(" \t", end);
            if (tail != colon)
                throw ParseError(line_no, end + 1, "malformed reaction id");
            id = ascii.substr(start, end - start);
            cur.pos = colon + 1;
        } else {
            id = "r" + std::to_string(reaction_lines);
        }

        auto lhs = detail::parse_complex(cur);
        cur.skip_ws();
        std::size_t arrow_col = cur.column();
        bool reversible = false;
        if (cur.pos < cur.text.size() && cur.text[cur.pos] == '<') {
            reversible = true;
            ++cur.pos;
        }
        if (!cur.text.substr(cur.pos).starts_with("->")) cur.fail("expected '->' or '<->'");
        cur.pos += 2;
        auto rhs = detail::parse_complex(cur);
        if (!cur.done()) cur.fail("unexpected trailing input");

        std::size_t reactant;
        std::size_t product;
        try {
            reactant = crn.add_complex(lhs);
            product = crn.add_complex(rhs);
        } catch (const std::invalid_argument& err) {
            throw ParseError(line_no, 1, err.what());
        }
        if (crn.complexes()[reactant].same_composition(crn.complexes()[product]))
            throw ParseError(line_no, arrow_col,
                             "complex '" + crn.complex_label(reactant) + "' reacts to itself");
        try {
            if (reversible) {
                crn.add_reaction(id + "+", reactant, product);
                crn.add_reaction(id + "-", product, reactant);
            } else {
                crn.add_reaction(id, reactant, product);
            }
        } catch (const std::invalid_argument& err) {
            throw ParseError(line_no, 1, err.what());
        }
    }
    return crn;
}

/// Canonical rendering: one reaction per line, "id: " prefix, terms in
/// first-appearance order, single spaces around '+' and the arrow.
inline std::string render_crn(const Crn& crn) {
    std::string out;
    for (const Reaction& r : crn.reactions()) {
        out += r.id;
        out += ": ";
        out += crn.complex_label(r.reactant);
        out += " -> ";
        out += crn.complex_label(r.product);
        out += "\n";
    }
    return out;
}

/// Compiles a network into its reaction hypergraph: one node per species,
/// one simple hyperedge per complex (its stoichiometric coefficients carried
/// as an edge feature vector aligned with species order), and one directed
/// hyperedge per reaction from reactant complex to product complex.
inline Hypergraph to_reaction_hypergraph(const Crn& crn) {
    std::vector<Violation> violations = validate(crn);
    if (!is_valid(violations))
        throw std::invalid_argument("invalid reaction network: " + violations.front().message);

    Hypergraph g(0, crn.species().size());
    std::vector<NodeId> species_nodes;
    species_nodes.reserve(crn.species().size());
    for (const std::string& name : crn.species())
        species_nodes.push_back(g.add_node(name));

    std::vector<EdgeId> complex_edges;
    complex_edges.reserve(crn.complexes().size());
    for (std::size_t i = 0; i < crn.complexes().size(); ++i) {
        std::vector<NodeId> members;
        std::vector<double> coefficients(crn.species().size(), 0.0);
        for (const ComplexTerm& t : crn.complexes()[i].terms) {
            members.push_back(species_nodes[t.species]);
            coefficients[t.species] = static_cast<double>(t.coefficient);
        }
        complex_edges.push_back(
            g.add_simple_edge(std::move(members), crn.complex_label(i), std::move(coefficients)));
    }

    for (const Reaction& r : crn.reactions()) {
        g.add_directed_edge(complex_edges[r.reactant], complex_edges[r.product], r.id,
                            std::vector<double>(crn.species().size(), 0.0));
    }
    return g;
}

} // namespace hypernest
