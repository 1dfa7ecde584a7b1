#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "crn.hpp"
#include "hypergraph.hpp"

namespace hypernest {

/// Dense integer node-by-hyperedge (or species-by-complex/reaction) matrix
/// with labeled rows and columns. Row/column orderings are deterministic:
/// ascending ids for hypergraphs, declaration/first-appearance order for
/// reaction networks.
struct IncidenceMatrix {
    std::string row_kind; // leading CSV cell, "node" or "species"
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<int>> cells; // row-major, rows() x columns()

    std::size_t rows() const { return row_labels.size(); }
    std::size_t columns() const { return col_labels.size(); }
    int at(std::size_t row, std::size_t column) const { return cells.at(row).at(column); }

    friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;
};

/// Lossless directed incidence: source memberships and target memberships as
/// two unsigned matrices sharing row and column orderings.
struct SplitIncidence {
    IncidenceMatrix source; // H_s
    IncidenceMatrix target; // H_t

    friend bool operator==(const SplitIncidence&, const SplitIncidence&) = default;
};

namespace detail {

inline IncidenceMatrix node_rows_matrix(const Hypergraph& g) {
    IncidenceMatrix m;
    m.row_kind = "node";
    m.row_labels.reserve(g.order());
    for (const Node& n : g.nodes()) m.row_labels.push_back("v" + std::to_string(n.id.value));
    return m;
}

inline std::unordered_map<NodeId, std::size_t> node_row_index(const Hypergraph& g) {
    std::unordered_map<NodeId, std::size_t> index;
    index.reserve(g.order());
    for (std::size_t i = 0; i < g.nodes().size(); ++i) index.emplace(g.nodes()[i].id, i);
    return index;
}

} // namespace detail

/// H(v, e) = 1 iff v lies in e's leaf node set. Columns are emitted for
/// every hyperedge; for nesting and directed hyperedges the membership test
/// uses the transitive leaf closure (the natural lift of the node-set
/// definition).
inline IncidenceMatrix incidence(const Hypergraph& g) {
    IncidenceMatrix m = detail::node_rows_matrix(g);
    auto row = detail::node_row_index(g);
    m.cells.assign(g.order(), {});
    for (auto& r : m.cells) r.assign(g.size(), 0);
    std::size_t column = 0;
    for (const Hyperedge& e : g.edges()) {
        m.col_labels.push_back("e" + std::to_string(e.id.value));
        for (NodeId v : g.leaf_node_set(e.id)) m.cells[row.at(v)][column] = 1;
        ++column;
    }
    return m;
}

/// H_s and H_t over the directed hyperedges only: H_s(v, e) = 1 iff v is a
/// leaf of e's source, H_t(v, e) = 1 iff v is a leaf of e's target.
inline SplitIncidence directed_incidence_split(const Hypergraph& g) {
    SplitIncidence split{detail::node_rows_matrix(g), detail::node_rows_matrix(g)};
    auto row = detail::node_row_index(g);
    std::vector<const Hyperedge*> directed;
    for (const Hyperedge& e : g.edges())
        if (e.kind() == EdgeKind::Directed) directed.push_back(&e);

    for (IncidenceMatrix* m : {&split.source, &split.target}) {
        m->cells.assign(g.order(), {});
        for (auto& r : m->cells) r.assign(directed.size(), 0);
        for (const Hyperedge* e : directed)
            m->col_labels.push_back("e" + std::to_string(e->id.value));
    }
    for (std::size_t column = 0; column < directed.size(); ++column) {
        const auto& pair = std::get<DirectedPair>(directed[column]->payload);
        for (NodeId v : g.leaf_node_set(pair.source)) split.source.cells[row.at(v)][column] = 1;
        for (NodeId v : g.leaf_node_set(pair.target)) split.target.cells[row.at(v)][column] = 1;
    }
    return split;
}

/// Net signed incidence H = H_t - H_s: -1 for source-only leaves, +1 for
/// target-only leaves, 0 elsewhere. A leaf on both sides (a catalyst)
/// cancels to 0; the split form keeps the lossless view.
inline IncidenceMatrix directed_incidence_signed(const Hypergraph& g) {
    SplitIncidence split = directed_incidence_split(g);
    IncidenceMatrix m = std::move(split.target);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.columns(); ++c) m.cells[r][c] -= split.source.cells[r][c];
    return m;
}

/// Stoichiometric matrix S: species as rows (declaration order), complexes
/// as columns (first-appearance order), entries the stoichiometric
/// coefficients.
inline IncidenceMatrix stoichiometric_complexes(const Crn& crn) {
    IncidenceMatrix m;
    m.row_kind = "species";
    m.row_labels = crn.species();
    m.cells.assign(crn.species().size(), std::vector<int>(crn.complexes().size(), 0));
    for (std::size_t c = 0; c < crn.complexes().size(); ++c) {
        m.col_labels.push_back(crn.complex_label(c));
        for (const ComplexTerm& t : crn.complexes()[c].terms) m.cells[t.species][c] = t.coefficient;
    }
    return m;
}

/// Signed per-reaction stoichiometry: one column per reaction, entry =
/// coefficient in the product complex minus coefficient in the reactant
/// complex.
inline IncidenceMatrix stoichiometric_reactions_signed(const Crn& crn) {
    IncidenceMatrix m;
    m.row_kind = "species";
    m.row_labels = crn.species();
    m.cells.assign(crn.species().size(), std::vector<int>(crn.reactions().size(), 0));
    for (std::size_t c = 0; c < crn.reactions().size(); ++c) {
        const Reaction& r = crn.reactions()[c];
        m.col_labels.push_back(r.id);
        for (std::size_t s = 0; s < crn.species().size(); ++s) {
            m.cells[s][c] = crn.complexes()[r.product].coefficient_of(s) -
                            crn.complexes()[r.reactant].coefficient_of(s);
        }
    }
    return m;
}

} // namespace hypernest
