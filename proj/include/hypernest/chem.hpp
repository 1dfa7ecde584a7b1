#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypergraph.hpp"

namespace hypernest {

struct AtomSpec {
    std::string element;
    std::vector<double> features; // optional; empty means "pad with zeros"

    friend bool operator==(const AtomSpec&, const AtomSpec&) = default;
};

/// A bond or molecular substructure: an index set into the molecule's atom
/// list plus a free-form type label ("sigma", "pi-delocalized", "ring", ...).
/// More than two atoms makes it a multicenter bond or substructure.
struct BondSpec {
    std::vector<std::size_t> atoms;
    std::string type;

    friend bool operator==(const BondSpec&, const BondSpec&) = default;
};

struct MoleculeSpec {
    std::string name;
    std::vector<AtomSpec> atoms;
    std::vector<BondSpec> bonds;

    friend bool operator==(const MoleculeSpec&, const MoleculeSpec&) = default;
};

struct ReactionParticipant {
    std::string molecule;
    int multiplicity = 1;

    friend bool operator==(const ReactionParticipant&, const ReactionParticipant&) = default;
};

struct ReactionSpec {
    std::string id;
    std::vector<ReactionParticipant> reactants;
    std::vector<ReactionParticipant> products;

    friend bool operator==(const ReactionSpec&, const ReactionSpec&) = default;
};

/// Declarative input document for a chemical system: molecules by name plus
/// the reactions over them.
struct ChemicalSystemSpec {
    std::vector<MoleculeSpec> molecules;
    std::vector<ReactionSpec> reactions;

    const MoleculeSpec* find_molecule(const std::string& name) const {
        for (const MoleculeSpec& m : molecules)
            if (m.name == name) return &m;
        return nullptr;
    }

    friend bool operator==(const ChemicalSystemSpec&, const ChemicalSystemSpec&) = default;
};

namespace detail {

inline void check_molecule(const MoleculeSpec& spec) {
    for (const BondSpec& bond : spec.bonds) {
        if (bond.atoms.empty())
            throw std::invalid_argument("molecule '" + spec.name + "' has an empty bond");
        std::vector<std::size_t> sorted = bond.atoms;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] >= spec.atoms.size())
                throw std::invalid_argument("molecule '" + spec.name + "' bond references atom " +
                                            std::to_string(sorted[i]) + " but has only " +
                                            std::to_string(spec.atoms.size()) + " atoms");
            if (i > 0 && sorted[i] == sorted[i - 1])
                throw std::invalid_argument("molecule '" + spec.name +
                                            "' bond repeats atom " + std::to_string(sorted[i]));
        }
    }
}

// All explicitly given atom feature vectors must agree on one length, which
// becomes the node feature dimension; atoms without features get zeros.
inline std::size_t atom_feature_dim(const std::vector<const MoleculeSpec*>& molecules) {
    std::size_t dim = 0;
    for (const MoleculeSpec* m : molecules) {
        for (const AtomSpec& atom : m->atoms) {
            if (atom.features.empty()) continue;
            if (dim == 0) dim = atom.features.size();
            if (atom.features.size() != dim)
                throw std::invalid_argument("molecule '" + m->name +
                                            "' mixes atom feature lengths");
        }
    }
    return dim;
}

// Adds one molecule instance: atom nodes, bond simple edges and the molecule
// nesting edge over them. A bond-free molecule contributes a single simple
// edge over all of its atoms so the nesting edge is well formed.
inline EdgeId instantiate_molecule(Hypergraph& g, const MoleculeSpec& spec, std::size_t dim) {
    std::vector<NodeId> atom_nodes;
    atom_nodes.reserve(spec.atoms.size());
    for (const AtomSpec& atom : spec.atoms) {
        std::vector<double> features = atom.features;
        features.resize(dim, 0.0);
        atom_nodes.push_back(g.add_node(atom.element, std::move(features)));
    }
    std::vector<EdgeId> bond_edges;
    for (const BondSpec& bond : spec.bonds) {
        std::vector<NodeId> members;
        members.reserve(bond.atoms.size());
        for (std::size_t index : bond.atoms) members.push_back(atom_nodes[index]);
        bond_edges.push_back(g.add_simple_edge(std::move(members), bond.type));
    }
    if (bond_edges.empty())
        bond_edges.push_back(g.add_simple_edge(atom_nodes, "atoms"));
    return g.add_nesting_edge(std::move(bond_edges), spec.name);
}

} // namespace detail

/// Compiles a molecule into its molecular hypergraph: one node per atom and
/// one simple hyperedge per bond or substructure. The result is always a
/// simple hypergraph.
inline Hypergraph build_molecular_hypergraph(const MoleculeSpec& spec) {
    detail::check_molecule(spec);
    std::size_t dim = detail::atom_feature_dim({&spec});
    Hypergraph g(dim, 0);
    std::vector<NodeId> atom_nodes;
    atom_nodes.reserve(spec.atoms.size());
    for (const AtomSpec& atom : spec.atoms) {
        std::vector<double> features = atom.features;
        features.resize(dim, 0.0);
        atom_nodes.push_back(g.add_node(atom.element, std::move(features)));
    }
    for (const BondSpec& bond : spec.bonds) {
        std::vector<NodeId> members;
        members.reserve(bond.atoms.size());
        for (std::size_t index : bond.atoms) members.push_back(atom_nodes[index]);
        g.add_simple_edge(std::move(members), bond.type);
    }
    return g;
}

/// Compiles a chemical system into its multilevel hypergraph. Every
/// (molecule, multiplicity k) reaction participant instantiates k
/// atom-disjoint molecule copies; each copy is a nesting hyperedge over its
/// bond edges. Per reaction, a reactant-side and a product-side nesting
/// hyperedge group the participating molecule edges and a directed hyperedge
/// runs from the reactant side to the product side. Molecules referenced by
/// no reaction are built standalone.
inline Hypergraph build_chemical_hypergraph(const ChemicalSystemSpec& spec) {
    for (std::size_t i = 0; i < spec.molecules.size(); ++i) {
        detail::check_molecule(spec.molecules[i]);
        for (std::size_t j = i + 1; j < spec.molecules.size(); ++j)
            if (spec.molecules[i].name == spec.molecules[j].name)
                throw std::invalid_argument("duplicate molecule name '" +
                                            spec.molecules[i].name + "'");
    }
    std::vector<const MoleculeSpec*> all;
    for (const MoleculeSpec& m : spec.molecules) all.push_back(&m);
    std::size_t dim = detail::atom_feature_dim(all);

    auto resolve = [&spec](const ReactionParticipant& p) {
        const MoleculeSpec* m = spec.find_molecule(p.molecule);
        if (!m) throw std::invalid_argument("reaction references unknown molecule '" +
                                            p.molecule + "'");
        if (p.multiplicity < 1)
            throw std::invalid_argument("multiplicity of '" + p.molecule +
                                        "' must be a positive integer");
        return m;
    };

    Hypergraph g(dim, 0);
    std::vector<bool> referenced(spec.molecules.size(), false);
    auto mark = [&spec, &referenced](const std::string& name) {
        for (std::size_t i = 0; i < spec.molecules.size(); ++i)
            if (spec.molecules[i].name == name) referenced[i] = true;
    };

    for (const ReactionSpec& reaction : spec.reactions) {
        std::vector<EdgeId> reactant_molecules;
        std::vector<EdgeId> product_molecules;
        for (const ReactionParticipant& p : reaction.reactants) {
            const MoleculeSpec* m = resolve(p);
            mark(p.molecule);
            for (int copy = 0; copy < p.multiplicity; ++copy)
                reactant_molecules.push_back(detail::instantiate_molecule(g, *m, dim));
        }
        for (const ReactionParticipant& p : reaction.products) {
            const MoleculeSpec* m = resolve(p);
            mark(p.molecule);
            for (int copy = 0; copy < p.multiplicity; ++copy)
                product_molecules.push_back(detail::instantiate_molecule(g, *m, dim));
        }
        if (reactant_molecules.empty() || product_molecules.empty())
            throw std::invalid_argument("reaction '" + reaction.id +
                                        "' needs reactants and products");
        EdgeId reactant_side =
            g.add_nesting_edge(std::move(reactant_molecules), reaction.id + ":reactants");
        EdgeId product_side =
            g.add_nesting_edge(std::move(product_molecules), reaction.id + ":products");
        g.add_directed_edge(reactant_side, product_side, reaction.id);
    }

    for (std::size_t i = 0; i < spec.molecules.size(); ++i) {
        if (!referenced[i]) detail::instantiate_molecule(g, spec.molecules[i], dim);
    }
    return g;
}

} // namespace hypernest
