#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <hypernest/fixtures.hpp>
#include <hypernest/hypernest.hpp>

#include "support.hpp"

using namespace hypernest;

TEST_CASE("containment stays acyclic under random valid mutations", "[property]") {
    std::mt19937 rng(1);
    for (int round = 0; round < 8; ++round) {
        Hypergraph g;
        g.add_node("seed");
        for (int step = 0; step < 250; ++step) {
            testsupport::random_mutation(rng, g);
            REQUIRE_NOTHROW(g.verify_invariants());
        }
    }
}

TEST_CASE("classification matches an exhaustive payload scan", "[property]") {
    std::mt19937 rng(2);
    for (int round = 0; round < 50; ++round) {
        Hypergraph g = testsupport::random_hypergraph(rng);
        bool nested = false;
        bool directed = false;
        for (const Hyperedge& e : g.edges()) {
            nested = nested || std::holds_alternative<NestingMembers>(e.payload);
            directed = directed || std::holds_alternative<DirectedPair>(e.payload);
        }
        REQUIRE(g.classify() == HypergraphKind{nested, directed});
    }
}

TEST_CASE("reduce_singleton is idempotent", "[property]") {
    std::mt19937 rng(3);
    for (int round = 0; round < 60; ++round) {
        Hypergraph g = testsupport::random_hypergraph(rng);
        EdgeId pick = g.edges()[rng() % g.edges().size()].id;
        EdgeId once = g.reduce_singleton(pick);
        Hypergraph after_once = g;
        EdgeId twice = g.reduce_singleton(once);
        REQUIRE(twice == once);
        REQUIRE(g == after_once);
    }
}

TEST_CASE("expansion length is directed-pair count plus one", "[property]") {
    std::mt19937 rng(4);
    for (int round = 0; round < 60; ++round) {
        Hypergraph g = testsupport::random_hypergraph(rng);
        for (const Hyperedge& e : g.edges()) {
            if (e.kind() != EdgeKind::Directed) continue;
            // count directed edges in the unfolded pair tree
            auto count_directed = [&g](auto&& self, EdgeId id) -> std::size_t {
                const Hyperedge& edge = g.edge(id);
                if (const auto* d = std::get_if<DirectedPair>(&edge.payload))
                    return 1 + self(self, d->source) + self(self, d->target);
                return 0;
            };
            REQUIRE(g.expand_directed(e.id).size() ==
                    count_directed(count_directed, e.id) + 1);
        }
    }
}

TEST_CASE("leaf sets grow monotonically along nesting membership", "[property]") {
    std::mt19937 rng(5);
    for (int round = 0; round < 40; ++round) {
        Hypergraph g = testsupport::random_hypergraph(rng);
        for (const Hyperedge& e : g.edges()) {
            const auto* n = std::get_if<NestingMembers>(&e.payload);
            if (!n) continue;
            std::vector<NodeId> outer = g.leaf_node_set(e.id);
            for (EdgeId m : n->edges) {
                std::vector<NodeId> inner = g.leaf_node_set(m);
                REQUIRE(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()));
            }
        }
    }
}

TEST_CASE("node permutations preserve structure and permute incidence rows", "[property]") {
    std::mt19937 rng(6);
    for (int round = 0; round < 40; ++round) {
        Hypergraph g = testsupport::random_hypergraph(rng);
        auto perm = testsupport::random_node_permutation(rng, g);
        Hypergraph h = g.permute_nodes(perm);
        REQUIRE(h.classify() == g.classify());
        REQUIRE(testsupport::order_multiset(h) == testsupport::order_multiset(g));
    }
}

TEST_CASE("canonical serialization round-trips random hypergraphs", "[property]") {
    std::mt19937 rng(7);
    for (int round = 0; round < 60; ++round) {
        Hypergraph g = testsupport::random_hypergraph(rng);
        std::string text = to_canonical(g);
        Hypergraph back = from_canonical(text);
        REQUIRE(back == g);
        REQUIRE(to_canonical(back) == text);
    }
}

TEST_CASE("leaf sets and incidence agree with brute force on small graphs", "[property]") {
    std::mt19937 rng(8);
    for (int round = 0; round < 60; ++round) {
        Hypergraph g = testsupport::random_hypergraph(rng, /*max_nodes=*/8, /*max_edges=*/12);
        for (const Hyperedge& e : g.edges()) {
            auto naive = testsupport::naive_leaf_set(g, e.id);
            REQUIRE(g.leaf_node_set(e.id) == std::vector<NodeId>(naive.begin(), naive.end()));
        }
        REQUIRE(incidence(g).cells == testsupport::naive_incidence_cells(g));
    }
}

TEST_CASE("reversible parses generate reverse reaction pairs", "[property][crn]") {
    std::mt19937 rng(9);
    std::vector<std::string> names{"A", "B", "C", "D", "E", "F"};
    for (int round = 0; round < 40; ++round) {
        // random two-species reversible line
        std::string lhs = names[rng() % names.size()];
        std::string rhs = names[rng() % names.size()];
        if (lhs == rhs) continue;
        int k = 1 + static_cast<int>(rng() % 3);
        std::string text = "rx: " + std::to_string(k) + lhs + " <-> " + rhs + "\n";
        Crn crn = parse_crn(text);
        REQUIRE(crn.reactions().size() == 2);
        REQUIRE(crn.reactions()[0].reactant == crn.reactions()[1].product);
        REQUIRE(crn.reactions()[0].product == crn.reactions()[1].reactant);
        // canonical rendering reparses to the identical network
        REQUIRE(parse_crn(render_crn(crn)) == crn);
    }
}
