#pragma once

// Shared test helpers: brute-force oracles kept independent of the library's
// query implementations, random structure generators, and a minimal DOT
// well-formedness checker.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <hypernest/hypergraph.hpp>

namespace testsupport {

// Recomputes the transitive node closure of an edge directly from the raw
// payloads, without calling Hypergraph::leaf_node_set.
inline std::set<hypernest::NodeId> naive_leaf_set(const hypernest::Hypergraph& g,
                                                  hypernest::EdgeId id,
                                                  std::set<hypernest::EdgeId>& seen) {
    std::set<hypernest::NodeId> out;
    if (!seen.insert(id).second) return out;
    const hypernest::Hyperedge& e = g.edge(id);
    if (const auto* s = std::get_if<hypernest::SimpleMembers>(&e.payload)) {
        out.insert(s->nodes.begin(), s->nodes.end());
    } else if (const auto* n = std::get_if<hypernest::NestingMembers>(&e.payload)) {
        for (hypernest::EdgeId m : n->edges) {
            auto sub = naive_leaf_set(g, m, seen);
            out.insert(sub.begin(), sub.end());
        }
    } else {
        const auto& d = std::get<hypernest::DirectedPair>(e.payload);
        auto a = naive_leaf_set(g, d.source, seen);
        auto b = naive_leaf_set(g, d.target, seen);
        out.insert(a.begin(), a.end());
        out.insert(b.begin(), b.end());
    }
    return out;
}

inline std::set<hypernest::NodeId> naive_leaf_set(const hypernest::Hypergraph& g,
                                                  hypernest::EdgeId id) {
    std::set<hypernest::EdgeId> seen;
    return naive_leaf_set(g, id, seen);
}

// Brute-force incidence: 1 iff the node is in the naive leaf set.
inline std::vector<std::vector<int>> naive_incidence_cells(const hypernest::Hypergraph& g) {
    std::vector<std::vector<int>> cells(g.order(), std::vector<int>(g.size(), 0));
    for (std::size_t c = 0; c < g.edges().size(); ++c) {
        auto leaves = naive_leaf_set(g, g.edges()[c].id);
        for (std::size_t r = 0; r < g.nodes().size(); ++r)
            cells[r][c] = leaves.count(g.nodes()[r].id) ? 1 : 0;
    }
    return cells;
}

inline std::vector<std::size_t> order_multiset(const hypernest::Hypergraph& g) {
    std::vector<std::size_t> orders;
    for (const hypernest::Hyperedge& e : g.edges()) orders.push_back(g.order_of(e.id));
    std::sort(orders.begin(), orders.end());
    return orders;
}

inline std::vector<double> random_features(std::mt19937& rng, std::size_t dim) {
    std::uniform_int_distribution<int> quarter(-8, 8);
    std::vector<double> out(dim);
    for (double& v : out) v = quarter(rng) * 0.25;
    return out;
}

// Grows a random well-formed hypergraph. Nesting and directed edges only
// reference earlier edges, so the result is acyclic by construction.
inline hypernest::Hypergraph random_hypergraph(std::mt19937& rng, std::size_t max_nodes = 10,
                                               std::size_t max_edges = 16) {
    using namespace hypernest;
    std::size_t node_dim = rng() % 3;
    std::size_t edge_dim = rng() % 2;
    Hypergraph g(node_dim, edge_dim);

    std::size_t node_count = 1 + rng() % max_nodes;
    std::vector<NodeId> node_ids;
    for (std::size_t i = 0; i < node_count; ++i)
        node_ids.push_back(g.add_node("n" + std::to_string(i), random_features(rng, node_dim)));

    std::size_t edge_count = 1 + rng() % max_edges;
    std::vector<EdgeId> edge_ids;
    for (std::size_t i = 0; i < edge_count; ++i) {
        int kind = edge_ids.empty() ? 0 : static_cast<int>(rng() % 3);
        std::optional<double> weight;
        if (rng() % 4 == 0) weight = (rng() % 16) * 0.5;
        if (kind == 0) {
            std::vector<NodeId> members = node_ids;
            std::shuffle(members.begin(), members.end(), rng);
            members.resize(1 + rng() % members.size());
            edge_ids.push_back(g.add_simple_edge(std::move(members), "s" + std::to_string(i),
                                                 random_features(rng, edge_dim), weight));
        } else if (kind == 1) {
            std::vector<EdgeId> members = edge_ids;
            std::shuffle(members.begin(), members.end(), rng);
            members.resize(1 + rng() % members.size());
            edge_ids.push_back(g.add_nesting_edge(std::move(members), "g" + std::to_string(i),
                                                  random_features(rng, edge_dim), weight));
        } else {
            EdgeId source = edge_ids[rng() % edge_ids.size()];
            EdgeId target = edge_ids[rng() % edge_ids.size()];
            edge_ids.push_back(g.add_directed_edge(source, target, "d" + std::to_string(i),
                                                   random_features(rng, edge_dim), weight));
        }
    }
    return g;
}

// Applies one random valid mutation: growing the graph by a node or an edge
// of any kind, or reducing a random singleton nesting edge.
inline void random_mutation(std::mt19937& rng, hypernest::Hypergraph& g) {
    using namespace hypernest;
    std::vector<NodeId> node_ids;
    for (const Node& n : g.nodes()) node_ids.push_back(n.id);
    std::vector<EdgeId> edge_ids;
    for (const Hyperedge& e : g.edges()) edge_ids.push_back(e.id);

    int choice = static_cast<int>(rng() % 5);
    if (choice == 1 && node_ids.empty()) choice = 0;
    if ((choice == 2 || choice == 3 || choice == 4) && edge_ids.empty()) choice = 0;

    switch (choice) {
    case 0:
        g.add_node("n" + std::to_string(g.order()),
                   random_features(rng, g.node_feature_dim()));
        break;
    case 1: {
        std::vector<NodeId> members = node_ids;
        std::shuffle(members.begin(), members.end(), rng);
        members.resize(1 + rng() % members.size());
        g.add_simple_edge(std::move(members), "s", random_features(rng, g.edge_feature_dim()));
        break;
    }
    case 2: {
        std::vector<EdgeId> members = edge_ids;
        std::shuffle(members.begin(), members.end(), rng);
        members.resize(1 + rng() % members.size());
        g.add_nesting_edge(std::move(members), "g", random_features(rng, g.edge_feature_dim()));
        break;
    }
    case 3:
        g.add_directed_edge(edge_ids[rng() % edge_ids.size()],
                            edge_ids[rng() % edge_ids.size()], "d",
                            random_features(rng, g.edge_feature_dim()));
        break;
    case 4:
        g.reduce_singleton(edge_ids[rng() % edge_ids.size()]);
        break;
    }
}

// A uniformly random bijection of the node id set onto itself.
inline std::map<hypernest::NodeId, hypernest::NodeId>
random_node_permutation(std::mt19937& rng, const hypernest::Hypergraph& g) {
    std::vector<hypernest::NodeId> ids;
    for (const hypernest::Node& n : g.nodes()) ids.push_back(n.id);
    std::vector<hypernest::NodeId> image = ids;
    std::shuffle(image.begin(), image.end(), rng);
    std::map<hypernest::NodeId, hypernest::NodeId> permutation;
    for (std::size_t i = 0; i < ids.size(); ++i) permutation[ids[i]] = image[i];
    return permutation;
}

// Minimal DOT well-formedness check: balanced braces and every vertex
// referenced by an edge statement declared somewhere in the document.
inline bool dot_well_formed(const std::string& text) {
    long depth = 0;
    for (char c : text) {
        if (c == '{') ++depth;
        if (c == '}') --depth;
        if (depth < 0) return false;
    }
    if (depth != 0) return false;

    std::set<std::string> declared;
    std::set<std::string> referenced;
    std::size_t pos = 0;
    auto is_id_char = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == '_';
    };
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        std::size_t start = line.find_first_not_of(' ');
        if (start == std::string::npos) continue;
        line = line.substr(start);
        if (line.rfind("subgraph", 0) == 0 || line.rfind("label", 0) == 0 ||
            line.rfind("style", 0) == 0 || line.rfind("compound", 0) == 0 ||
            line.rfind("node ", 0) == 0 || line.rfind("digraph", 0) == 0 || line == "}")
            continue;
        std::size_t arrow = line.find(" -> ");
        if (arrow != std::string::npos) {
            referenced.insert(line.substr(0, arrow));
            std::string rest = line.substr(arrow + 4);
            std::size_t end = 0;
            while (end < rest.size() && is_id_char(rest[end])) ++end;
            referenced.insert(rest.substr(0, end));
        } else {
            std::size_t end = 0;
            while (end < line.size() && is_id_char(line[end])) ++end;
            if (end > 0) declared.insert(line.substr(0, end));
        }
    }
    return std::all_of(referenced.begin(), referenced.end(),
                       [&declared](const std::string& id) { return declared.count(id) > 0; });
}

} // namespace testsupport
