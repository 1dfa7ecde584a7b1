#pragma once

#include <string>

#include "chem.hpp"
#include "hypergraph.hpp"

namespace hypernest {

/// Benzene, C6H6: carbons 0..5 around the ring, hydrogens 6..11 with H(6+i)
/// on C(i). Six C-H sigma bonds, six C-C sigma bonds and the delocalized
/// six-center pi bond.
inline MoleculeSpec benzene_fixture() {
    MoleculeSpec spec;
    spec.name = "benzene";
    for (int i = 0; i < 6; ++i) spec.atoms.push_back({"C", {}});
    for (int i = 0; i < 6; ++i) spec.atoms.push_back({"H", {}});
    for (std::size_t i = 0; i < 6; ++i) spec.bonds.push_back({{i, i + 6}, "sigma"});
    for (std::size_t i = 0; i < 6; ++i) spec.bonds.push_back({{i, (i + 1) % 6}, "sigma"});
    spec.bonds.push_back({{0, 1, 2, 3, 4, 5}, "pi-delocalized"});
    return spec;
}

/// Molecular hydrogen: two atoms, one sigma bond.
inline MoleculeSpec hydrogen_fixture() {
    return MoleculeSpec{"H2", {{"H", {}}, {"H", {}}}, {{{0, 1}, "sigma"}}};
}

/// Cyclohexane, C6H12: carbons 0..5 in the ring, hydrogens 6..17 with
/// H(6+2i) and H(7+2i) on C(i). Six C-C and twelve C-H sigma bonds.
inline MoleculeSpec cyclohexane_fixture() {
    MoleculeSpec spec;
    spec.name = "cyclohexane";
    for (int i = 0; i < 6; ++i) spec.atoms.push_back({"C", {}});
    for (int i = 0; i < 12; ++i) spec.atoms.push_back({"H", {}});
    for (std::size_t i = 0; i < 6; ++i) spec.bonds.push_back({{i, (i + 1) % 6}, "sigma"});
    for (std::size_t i = 0; i < 6; ++i) {
        spec.bonds.push_back({{i, 6 + 2 * i}, "sigma"});
        spec.bonds.push_back({{i, 7 + 2 * i}, "sigma"});
    }
    return spec;
}

/// The benzene hydrogenation system C6H6 + 3 H2 -> C6H12.
inline ChemicalSystemSpec hydrogenation_fixture() {
    ChemicalSystemSpec spec;
    spec.molecules = {benzene_fixture(), hydrogen_fixture(), cyclohexane_fixture()};
    spec.reactions = {{"hydrogenation",
                       {{"benzene", 1}, {"H2", 3}},
                       {{"cyclohexane", 1}}}};
    return spec;
}

/// Classic five-species reaction network with two reversible reactions.
inline std::string feinberg_fixture() {
    return "r1: A <-> 2B\n"
           "r2: A + C <-> D\n"
           "r3: D -> B + E\n"
           "r4: B + E -> A + C\n";
}

/// Small metabolic network: three reactions (the first reversible) over five
/// metabolites, with non-unit stoichiometry on both sides.
inline std::string metabolic_fixture() {
    return "r1: 3a + 2b <-> c\n"
           "r2: c + b -> a + 4d\n"
           "r3: d -> 2e\n";
}

/// Miniature of the novel-structure schema: characters as nodes, scenes as
/// simple hyperedges, chapters/books/volumes as nesting hyperedges, and
/// directed hyperedges ordering sibling parts. Two volumes with invented
/// character placement.
inline Hypergraph lesmis_fixture() {
    Hypergraph g;
    NodeId myriel = g.add_node("Myriel");
    NodeId valjean = g.add_node("Valjean");
    NodeId javert = g.add_node("Javert");
    NodeId fantine = g.add_node("Fantine");
    NodeId cosette = g.add_node("Cosette");
    NodeId marius = g.add_node("Marius");

    // Volume 1, book 1
    EdgeId scene1 = g.add_simple_edge({myriel, valjean}, "scene:candlesticks");
    EdgeId scene2 = g.add_simple_edge({valjean, javert}, "scene:parole");
    EdgeId chapter1 = g.add_nesting_edge({scene1, scene2}, "chapter:the-bishop");
    EdgeId scene3 = g.add_simple_edge({fantine, valjean}, "scene:the-factory");
    EdgeId chapter2 = g.add_nesting_edge({scene3}, "chapter:fantine");
    EdgeId book1 = g.add_nesting_edge({chapter1, chapter2}, "book:an-upright-man");

    // Volume 1, book 2
    EdgeId scene4 = g.add_simple_edge({fantine, cosette, valjean}, "scene:the-promise");
    EdgeId chapter3 = g.add_nesting_edge({scene4}, "chapter:confiding");
    EdgeId book2 = g.add_nesting_edge({chapter3}, "book:the-descent");
    EdgeId volume1 = g.add_nesting_edge({book1, book2}, "volume:fantine");

    // Volume 2
    EdgeId scene5 = g.add_simple_edge({valjean, cosette}, "scene:the-doll");
    EdgeId scene6 = g.add_simple_edge({javert, valjean, cosette, marius}, "scene:the-chase");
    EdgeId chapter4 = g.add_nesting_edge({scene5, scene6}, "chapter:the-inn");
    EdgeId book3 = g.add_nesting_edge({chapter4}, "book:the-ship");
    EdgeId volume2 = g.add_nesting_edge({book3}, "volume:cosette");

    // Reading order among siblings at each level
    g.add_directed_edge(scene1, scene2, "order:scenes");
    g.add_directed_edge(scene5, scene6, "order:scenes");
    g.add_directed_edge(chapter1, chapter2, "order:chapters");
    g.add_directed_edge(book1, book2, "order:books");
    g.add_directed_edge(volume1, volume2, "order:volumes");
    return g;
}

} // namespace hypernest
