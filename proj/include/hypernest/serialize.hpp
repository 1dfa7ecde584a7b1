#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chem.hpp"
#include "errors.hpp"
#include "hypergraph.hpp"

namespace hypernest {

inline constexpr const char* kCanonicalSchema = "hypernest/1";

namespace detail {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] inline void schema_error(const std::string& message) {
    throw ParseError(1, 1, "schema violation: " + message);
}

inline const ordered_json& member(const ordered_json& object, const char* key) {
    auto it = object.find(key);
    if (it == object.end()) schema_error(std::string("missing key '") + key + "'");
    return *it;
}

inline std::uint64_t as_id(const ordered_json& value, const char* what) {
    if (!value.is_number_unsigned()) schema_error(std::string(what) + " must be a nonnegative integer");
    return value.get<std::uint64_t>();
}

inline std::string as_string(const ordered_json& value, const char* what) {
    if (!value.is_string()) schema_error(std::string(what) + " must be a string");
    return value.get<std::string>();
}

inline std::vector<double> as_features(const ordered_json& value) {
    if (!value.is_array()) schema_error("'features' must be an array of numbers");
    std::vector<double> out;
    out.reserve(value.size());
    for (const auto& item : value) {
        if (!item.is_number()) schema_error("'features' must be an array of numbers");
        out.push_back(item.get<double>());
    }
    return out;
}

inline void reject_unknown_keys(const ordered_json& object,
                                std::initializer_list<const char*> allowed) {
    for (auto it = object.begin(); it != object.end(); ++it) {
        bool known = false;
        for (const char* key : allowed)
            if (it.key() == key) known = true;
        if (!known) schema_error("unknown key '" + it.key() + "'");
    }
}

} // namespace detail

/// Serializes a hypergraph as the canonical document: fixed key order,
/// ids ascending, two-space indentation, trailing newline. Deterministic
/// byte-for-byte.
inline std::string to_canonical(const Hypergraph& g) {
    using detail::ordered_json;
    ordered_json doc;
    doc["schema"] = kCanonicalSchema;
    doc["node_feature_dim"] = g.node_feature_dim();
    doc["edge_feature_dim"] = g.edge_feature_dim();
    doc["nodes"] = ordered_json::array();
    for (const Node& n : g.nodes()) {
        ordered_json item;
        item["id"] = n.id.value;
        item["label"] = n.label;
        item["features"] = n.features;
        doc["nodes"].push_back(std::move(item));
    }
    doc["edges"] = ordered_json::array();
    for (const Hyperedge& e : g.edges()) {
        ordered_json item;
        item["id"] = e.id.value;
        if (const auto* s = std::get_if<SimpleMembers>(&e.payload)) {
            item["kind"] = "simple";
            auto members = ordered_json::array();
            for (NodeId m : s->nodes) members.push_back(m.value);
            item["members"] = std::move(members);
        } else if (const auto* n = std::get_if<NestingMembers>(&e.payload)) {
            item["kind"] = "nesting";
            auto members = ordered_json::array();
            for (EdgeId m : n->edges) members.push_back(m.value);
            item["members"] = std::move(members);
        } else {
            const auto& d = std::get<DirectedPair>(e.payload);
            item["kind"] = "directed";
            item["source"] = d.source.value;
            item["target"] = d.target.value;
        }
        item["label"] = e.label;
        item["features"] = e.features;
        if (e.weight) item["weight"] = *e.weight;
        doc["edges"].push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

/// Parses a canonical document and re-validates every hypergraph invariant
/// (unique ids, resolvable references, containment acyclicity, feature
/// dimensions). Throws ParseError for malformed documents and
/// std::invalid_argument / std::logic_error for semantic breaches.
inline Hypergraph from_canonical(const std::string& text) {
    using detail::ordered_json;
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(1, 1, std::string("invalid document: ") + err.what());
    }
    if (!doc.is_object()) detail::schema_error("top level must be an object");
    detail::reject_unknown_keys(doc, {"schema", "node_feature_dim", "edge_feature_dim",
                                      "nodes", "edges"});
    if (detail::as_string(detail::member(doc, "schema"), "'schema'") != kCanonicalSchema)
        detail::schema_error(std::string("expected schema '") + kCanonicalSchema + "'");
    std::size_t node_dim = detail::as_id(detail::member(doc, "node_feature_dim"),
                                         "'node_feature_dim'");
    std::size_t edge_dim = detail::as_id(detail::member(doc, "edge_feature_dim"),
                                         "'edge_feature_dim'");

    const ordered_json& nodes = detail::member(doc, "nodes");
    const ordered_json& edges = detail::member(doc, "edges");
    if (!nodes.is_array() || !edges.is_array())
        detail::schema_error("'nodes' and 'edges' must be arrays");

    std::vector<Node> node_table;
    node_table.reserve(nodes.size());
    for (const auto& item : nodes) {
        if (!item.is_object()) detail::schema_error("node entries must be objects");
        detail::reject_unknown_keys(item, {"id", "label", "features"});
        node_table.push_back(Node{NodeId{detail::as_id(detail::member(item, "id"), "node 'id'")},
                                  detail::as_string(detail::member(item, "label"), "node 'label'"),
                                  detail::as_features(detail::member(item, "features"))});
    }

    std::vector<Hyperedge> edge_table;
    edge_table.reserve(edges.size());
    for (const auto& item : edges) {
        if (!item.is_object()) detail::schema_error("edge entries must be objects");
        Hyperedge e;
        e.id = EdgeId{detail::as_id(detail::member(item, "id"), "edge 'id'")};
        std::string kind = detail::as_string(detail::member(item, "kind"), "edge 'kind'");
        if (kind == "simple" || kind == "nesting") {
            detail::reject_unknown_keys(item,
                                        {"id", "kind", "members", "label", "features", "weight"});
            const ordered_json& members = detail::member(item, "members");
            if (!members.is_array() || members.empty())
                detail::schema_error("'members' must be a nonempty array");
            if (kind == "simple") {
                SimpleMembers payload;
                for (const auto& m : members)
                    payload.nodes.push_back(NodeId{detail::as_id(m, "member id")});
                e.payload = std::move(payload);
            } else {
                NestingMembers payload;
                for (const auto& m : members)
                    payload.edges.push_back(EdgeId{detail::as_id(m, "member id")});
                e.payload = std::move(payload);
            }
        } else if (kind == "directed") {
            detail::reject_unknown_keys(item,
                                        {"id", "kind", "source", "target", "label", "features",
                                         "weight"});
            e.payload = DirectedPair{
                EdgeId{detail::as_id(detail::member(item, "source"), "edge 'source'")},
                EdgeId{detail::as_id(detail::member(item, "target"), "edge 'target'")}};
        } else {
            detail::schema_error("edge 'kind' must be simple, nesting or directed");
        }
        e.label = detail::as_string(detail::member(item, "label"), "edge 'label'");
        e.features = detail::as_features(detail::member(item, "features"));
        if (auto it = item.find("weight"); it != item.end()) {
            if (!it->is_number()) detail::schema_error("'weight' must be a number");
            e.weight = it->get<double>();
        }
        edge_table.push_back(std::move(e));
    }

    return Hypergraph::restore(node_dim, edge_dim, std::move(node_table), std::move(edge_table));
}

/// Renders a chemical-system document: top-level "molecules" and "reactions"
/// sections whose field names mirror the in-memory types.
inline std::string render_chemical_system(const ChemicalSystemSpec& spec) {
    using detail::ordered_json;
    ordered_json doc;
    doc["molecules"] = ordered_json::array();
    for (const MoleculeSpec& m : spec.molecules) {
        ordered_json molecule;
        molecule["name"] = m.name;
        molecule["atoms"] = ordered_json::array();
        for (const AtomSpec& atom : m.atoms) {
            ordered_json entry;
            entry["element"] = atom.element;
            if (!atom.features.empty()) entry["features"] = atom.features;
            molecule["atoms"].push_back(std::move(entry));
        }
        molecule["bonds"] = ordered_json::array();
        for (const BondSpec& bond : m.bonds) {
            ordered_json entry;
            entry["atoms"] = bond.atoms;
            entry["type"] = bond.type;
            molecule["bonds"].push_back(std::move(entry));
        }
        doc["molecules"].push_back(std::move(molecule));
    }
    doc["reactions"] = ordered_json::array();
    for (const ReactionSpec& r : spec.reactions) {
        ordered_json reaction;
        reaction["id"] = r.id;
        for (const char* side : {"reactants", "products"}) {
            const auto& participants = (std::string(side) == "reactants") ? r.reactants : r.products;
            reaction[side] = ordered_json::array();
            for (const ReactionParticipant& p : participants) {
                ordered_json entry;
                entry["molecule"] = p.molecule;
                entry["multiplicity"] = p.multiplicity;
                reaction[side].push_back(std::move(entry));
            }
        }
        doc["reactions"].push_back(std::move(reaction));
    }
    return doc.dump(2) + "\n";
}

/// Parses a chemical-system document.
inline ChemicalSystemSpec parse_chemical_system(const std::string& text) {
    using detail::ordered_json;
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(1, 1, std::string("invalid document: ") + err.what());
    }
    if (!doc.is_object()) detail::schema_error("top level must be an object");
    detail::reject_unknown_keys(doc, {"molecules", "reactions"});

    ChemicalSystemSpec spec;
    if (auto it = doc.find("molecules"); it != doc.end()) {
        if (!it->is_array()) detail::schema_error("'molecules' must be an array");
        for (const auto& item : *it) {
            if (!item.is_object()) detail::schema_error("molecule entries must be objects");
            detail::reject_unknown_keys(item, {"name", "atoms", "bonds"});
            MoleculeSpec molecule;
            molecule.name = detail::as_string(detail::member(item, "name"), "molecule 'name'");
            const ordered_json& atoms = detail::member(item, "atoms");
            if (!atoms.is_array()) detail::schema_error("'atoms' must be an array");
            for (const auto& atom : atoms) {
                if (!atom.is_object()) detail::schema_error("atom entries must be objects");
                detail::reject_unknown_keys(atom, {"element", "features"});
                AtomSpec a;
                a.element = detail::as_string(detail::member(atom, "element"), "'element'");
                if (auto f = atom.find("features"); f != atom.end())
                    a.features = detail::as_features(*f);
                molecule.atoms.push_back(std::move(a));
            }
            if (auto bonds = item.find("bonds"); bonds != item.end()) {
                if (!bonds->is_array()) detail::schema_error("'bonds' must be an array");
                for (const auto& bond : *bonds) {
                    if (!bond.is_object()) detail::schema_error("bond entries must be objects");
                    detail::reject_unknown_keys(bond, {"atoms", "type"});
                    BondSpec b;
                    const ordered_json& indices = detail::member(bond, "atoms");
                    if (!indices.is_array()) detail::schema_error("bond 'atoms' must be an array");
                    for (const auto& index : indices)
                        b.atoms.push_back(detail::as_id(index, "bond atom index"));
                    b.type = detail::as_string(detail::member(bond, "type"), "bond 'type'");
                    molecule.bonds.push_back(std::move(b));
                }
            }
            spec.molecules.push_back(std::move(molecule));
        }
    }
    if (auto it = doc.find("reactions"); it != doc.end()) {
        if (!it->is_array()) detail::schema_error("'reactions' must be an array");
        for (const auto& item : *it) {
            if (!item.is_object()) detail::schema_error("reaction entries must be objects");
            detail::reject_unknown_keys(item, {"id", "reactants", "products"});
            ReactionSpec reaction;
            reaction.id = detail::as_string(detail::member(item, "id"), "reaction 'id'");
            for (const char* side : {"reactants", "products"}) {
                const ordered_json& list = detail::member(item, side);
                if (!list.is_array()) detail::schema_error("reaction sides must be arrays");
                auto& participants =
                    (std::string(side) == "reactants") ? reaction.reactants : reaction.products;
                for (const auto& p : list) {
                    if (!p.is_object()) detail::schema_error("participants must be objects");
                    detail::reject_unknown_keys(p, {"molecule", "multiplicity"});
                    ReactionParticipant participant;
                    participant.molecule =
                        detail::as_string(detail::member(p, "molecule"), "'molecule'");
                    participant.multiplicity = static_cast<int>(
                        detail::as_id(detail::member(p, "multiplicity"), "'multiplicity'"));
                    participants.push_back(std::move(participant));
                }
            }
            spec.reactions.push_back(std::move(reaction));
        }
    }
    return spec;
}

} // namespace hypernest
