#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include <hypernest/chem.hpp>
#include <hypernest/crn.hpp>
#include <hypernest/fixtures.hpp>

#include "support.hpp"

using namespace hypernest;

namespace {

std::size_t count_kind(const Hypergraph& g, EdgeKind kind) {
    return std::count_if(g.edges().begin(), g.edges().end(),
                         [kind](const Hyperedge& e) { return e.kind() == kind; });
}

// Applies a permutation of atom positions to a molecule spec, remapping bond
// indices accordingly.
MoleculeSpec shuffle_atoms(const MoleculeSpec& spec, std::mt19937& rng) {
    std::vector<std::size_t> position(spec.atoms.size());
    std::iota(position.begin(), position.end(), 0);
    std::shuffle(position.begin(), position.end(), rng);
    // position[i] = old index placed at new slot i
    std::vector<std::size_t> new_slot(spec.atoms.size());
    for (std::size_t i = 0; i < position.size(); ++i) new_slot[position[i]] = i;

    MoleculeSpec out;
    out.name = spec.name;
    for (std::size_t old_index : position) out.atoms.push_back(spec.atoms[old_index]);
    for (const BondSpec& bond : spec.bonds) {
        BondSpec b;
        b.type = bond.type;
        for (std::size_t index : bond.atoms) b.atoms.push_back(new_slot[index]);
        out.bonds.push_back(std::move(b));
    }
    return out;
}

} // namespace

TEST_CASE("benzene builds as twelve nodes and thirteen simple hyperedges", "[chem]") {
    Hypergraph g = build_molecular_hypergraph(benzene_fixture());
    CHECK(g.order() == 12);
    CHECK(g.size() == 13);
    CHECK(g.classify() == HypergraphKind{false, false});

    std::vector<std::size_t> orders = testsupport::order_multiset(g);
    std::vector<std::size_t> expected(12, 2);
    expected.push_back(6);
    CHECK(orders == expected);

    std::size_t carbons = 0;
    std::size_t hydrogens = 0;
    for (const Node& n : g.nodes()) (n.label == "C" ? carbons : hydrogens) += 1;
    CHECK(carbons == 6);
    CHECK(hydrogens == 6);
}

TEST_CASE("molecular hydrogen is two nodes and one bond", "[chem]") {
    Hypergraph g = build_molecular_hypergraph(hydrogen_fixture());
    CHECK(g.order() == 2);
    CHECK(g.size() == 1);
    CHECK(g.order_of(g.edges()[0].id) == 2);
}

TEST_CASE("bond atom indices are range-checked", "[chem]") {
    MoleculeSpec spec = benzene_fixture();
    spec.bonds.push_back({{0, 99}, "sigma"});
    CHECK_THROWS_AS(build_molecular_hypergraph(spec), std::invalid_argument);

    MoleculeSpec repeated = benzene_fixture();
    repeated.bonds.push_back({{3, 3}, "sigma"});
    CHECK_THROWS_AS(build_molecular_hypergraph(repeated), std::invalid_argument);

    MoleculeSpec empty_bond = benzene_fixture();
    empty_bond.bonds.push_back({{}, "sigma"});
    CHECK_THROWS_AS(build_molecular_hypergraph(empty_bond), std::invalid_argument);
}

TEST_CASE("molecular hypergraphs never contain nesting or directed edges",
          "[chem][property]") {
    for (const MoleculeSpec& spec :
         {benzene_fixture(), hydrogen_fixture(), cyclohexane_fixture()}) {
        Hypergraph g = build_molecular_hypergraph(spec);
        CHECK(count_kind(g, EdgeKind::Simple) == g.size());
    }
}

TEST_CASE("hydrogenation system builds the full multilevel hypergraph", "[chem]") {
    ChemicalSystemSpec system = hydrogenation_fixture();
    Hypergraph g = build_chemical_hypergraph(system);

    // Derived expectations, recounted from the molecule specs themselves.
    const MoleculeSpec* benzene = system.find_molecule("benzene");
    const MoleculeSpec* h2 = system.find_molecule("H2");
    const MoleculeSpec* cyclohexane = system.find_molecule("cyclohexane");
    REQUIRE(benzene);
    REQUIRE(h2);
    REQUIRE(cyclohexane);
    std::size_t expected_nodes = benzene->atoms.size() + 3 * h2->atoms.size() +
                                 cyclohexane->atoms.size();
    std::size_t expected_bonds = benzene->bonds.size() + 3 * h2->bonds.size() +
                                 cyclohexane->bonds.size();
    REQUIRE(expected_nodes == 36);

    CHECK(g.order() == expected_nodes);
    CHECK(count_kind(g, EdgeKind::Simple) == expected_bonds);
    // 5 molecule instances + 2 reaction sides
    CHECK(count_kind(g, EdgeKind::Nesting) == 5 + 2);
    CHECK(count_kind(g, EdgeKind::Directed) == 1);
    CHECK(g.size() == expected_bonds + 5 + 2 + 1);
    CHECK(g.classify() == HypergraphKind{true, true});
}

TEST_CASE("hydrogenation structure relations", "[chem]") {
    Hypergraph g = build_chemical_hypergraph(hydrogenation_fixture());

    std::map<EdgeId, std::vector<EdgeId>> containing; // edge -> nesting parents
    for (const Hyperedge& e : g.edges()) {
        if (const auto* n = std::get_if<NestingMembers>(&e.payload))
            for (EdgeId m : n->edges) containing[m].push_back(e.id);
    }

    std::vector<EdgeId> molecule_edges;
    std::vector<EdgeId> side_edges;
    for (const Hyperedge& e : g.edges()) {
        if (e.kind() != EdgeKind::Nesting) continue;
        bool holds_simple =
            g.edge(std::get<NestingMembers>(e.payload).edges.front()).kind() == EdgeKind::Simple;
        (holds_simple ? molecule_edges : side_edges).push_back(e.id);
    }
    REQUIRE(molecule_edges.size() == 5);
    REQUIRE(side_edges.size() == 2);

    SECTION("every bond edge lies in exactly one molecule edge") {
        for (const Hyperedge& e : g.edges()) {
            if (e.kind() != EdgeKind::Simple) continue;
            REQUIRE(containing[e.id].size() == 1);
        }
    }
    SECTION("every molecule edge lies in exactly one reaction side") {
        for (EdgeId molecule : molecule_edges) REQUIRE(containing[molecule].size() == 1);
    }
    SECTION("multiplicity three yields three atom-disjoint hydrogen copies") {
        std::vector<std::set<NodeId>> hydrogen_leaves;
        for (EdgeId molecule : molecule_edges) {
            if (g.edge(molecule).label == "H2")
                hydrogen_leaves.push_back(testsupport::naive_leaf_set(g, molecule));
        }
        REQUIRE(hydrogen_leaves.size() == 3);
        for (std::size_t i = 0; i < hydrogen_leaves.size(); ++i) {
            CHECK(hydrogen_leaves[i].size() == 2);
            for (std::size_t j = i + 1; j < hydrogen_leaves.size(); ++j) {
                std::vector<NodeId> overlap;
                std::set_intersection(hydrogen_leaves[i].begin(), hydrogen_leaves[i].end(),
                                      hydrogen_leaves[j].begin(), hydrogen_leaves[j].end(),
                                      std::back_inserter(overlap));
                CHECK(overlap.empty());
            }
        }
    }
    SECTION("the reaction edge expands to reactant side then product side") {
        EdgeId reaction{0};
        for (const Hyperedge& e : g.edges())
            if (e.kind() == EdgeKind::Directed) reaction = e.id;
        const auto& pair = std::get<DirectedPair>(g.edge(reaction).payload);
        CHECK(g.expand_directed(reaction) == std::vector<EdgeId>{pair.source, pair.target});
        CHECK(g.edge(pair.source).label == "hydrogenation:reactants");
        CHECK(g.edge(pair.target).label == "hydrogenation:products");
    }
}

TEST_CASE("a reaction-free system is the molecular build plus molecule edges", "[chem]") {
    ChemicalSystemSpec system;
    system.molecules = {benzene_fixture()};
    Hypergraph g = build_chemical_hypergraph(system);
    Hypergraph molecular = build_molecular_hypergraph(benzene_fixture());
    CHECK(g.order() == molecular.order());
    CHECK(g.size() == molecular.size() + 1);
    CHECK(g.classify() == HypergraphKind{true, false});
}

TEST_CASE("reactions must reference declared molecules", "[chem]") {
    ChemicalSystemSpec system = hydrogenation_fixture();
    system.reactions[0].reactants.push_back({"X", 1});
    CHECK_THROWS_AS(build_chemical_hypergraph(system), std::invalid_argument);

    ChemicalSystemSpec zero = hydrogenation_fixture();
    zero.reactions[0].reactants[0].multiplicity = 0;
    CHECK_THROWS_AS(build_chemical_hypergraph(zero), std::invalid_argument);

    ChemicalSystemSpec duplicate = hydrogenation_fixture();
    duplicate.molecules.push_back(benzene_fixture());
    CHECK_THROWS_AS(build_chemical_hypergraph(duplicate), std::invalid_argument);
}

TEST_CASE("a bond-free molecule still forms a well-shaped molecule edge", "[chem]") {
    ChemicalSystemSpec system;
    system.molecules = {MoleculeSpec{"He", {{"He", {}}}, {}}};
    Hypergraph g = build_chemical_hypergraph(system);
    CHECK(g.order() == 1);
    CHECK(count_kind(g, EdgeKind::Simple) == 1);
    CHECK(count_kind(g, EdgeKind::Nesting) == 1);
    g.verify_invariants();
}

TEST_CASE("atom features pad to a common dimension", "[chem]") {
    MoleculeSpec spec{"X", {{"C", {1.0, 2.0}}, {"H", {}}}, {{{0, 1}, "sigma"}}};
    Hypergraph g = build_molecular_hypergraph(spec);
    CHECK(g.node_feature_dim() == 2);
    CHECK(g.nodes()[1].features == std::vector<double>{0.0, 0.0});

    MoleculeSpec mixed{"Y", {{"C", {1.0, 2.0}}, {"H", {3.0}}}, {{{0, 1}, "sigma"}}};
    CHECK_THROWS_AS(build_molecular_hypergraph(mixed), std::invalid_argument);
}

TEST_CASE("atom relabeling yields an isomorphic molecular hypergraph", "[chem][property]") {
    std::mt19937 rng(4242);
    for (const MoleculeSpec& spec : {benzene_fixture(), cyclohexane_fixture()}) {
        Hypergraph original = build_molecular_hypergraph(spec);
        for (int round = 0; round < 10; ++round) {
            Hypergraph shuffled = build_molecular_hypergraph(shuffle_atoms(spec, rng));
            CHECK(shuffled.classify() == original.classify());
            CHECK(testsupport::order_multiset(shuffled) == testsupport::order_multiset(original));
            auto labels = [](const Hypergraph& g) {
                std::multiset<std::string> out;
                for (const Node& n : g.nodes()) out.insert(n.label);
                return out;
            };
            CHECK(labels(shuffled) == labels(original));
        }
    }
}

TEST_CASE("fixture inventory", "[chem]") {
    CHECK(benzene_fixture().atoms.size() == 12);
    CHECK(cyclohexane_fixture().atoms.size() == 18);
    CHECK(cyclohexane_fixture().bonds.size() == 18);
    CHECK(parse_crn(metabolic_fixture()).reactions().size() == 4);
    CHECK(lesmis_fixture().classify() == HypergraphKind{true, true});
    lesmis_fixture().verify_invariants();
}
