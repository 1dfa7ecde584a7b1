#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ids.hpp"

namespace hypernest {

enum class EdgeKind { Simple, Nesting, Directed };

/// Payload of a simple hyperedge: a nonempty node set, stored sorted by id.
struct SimpleMembers {
    std::vector<NodeId> nodes;

    friend bool operator==(const SimpleMembers&, const SimpleMembers&) = default;
};

/// Payload of a nesting hyperedge: a nonempty set of member hyperedges,
/// stored sorted by id.
struct NestingMembers {
    std::vector<EdgeId> edges;

    friend bool operator==(const NestingMembers&, const NestingMembers&) = default;
};

/// Payload of a directed hyperedge: an ordered (source, target) pair of
/// hyperedges. Source and target may coincide.
struct DirectedPair {
    EdgeId source;
    EdgeId target;

    friend bool operator==(const DirectedPair&, const DirectedPair&) = default;
};

using EdgePayload = std::variant<SimpleMembers, NestingMembers, DirectedPair>;

struct Node {
    NodeId id;
    std::string label;
    std::vector<double> features;

    friend bool operator==(const Node&, const Node&) = default;
};

struct Hyperedge {
    EdgeId id;
    EdgePayload payload;
    std::string label;
    std::vector<double> features;
    std::optional<double> weight; // nonnegative when set

    EdgeKind kind() const {
        if (std::holds_alternative<SimpleMembers>(payload)) return EdgeKind::Simple;
        if (std::holds_alternative<NestingMembers>(payload)) return EdgeKind::Nesting;
        return EdgeKind::Directed;
    }

    friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

/// Classification of a hypergraph. Both flags false means a simple
/// hypergraph, unnested and undirected.
struct HypergraphKind {
    bool nested = false;
    bool directed = false;

    bool is_simple() const { return !nested && !directed; }

    friend bool operator==(HypergraphKind, HypergraphKind) = default;
};

/// A hypergraph whose hyperedges are simple (node set), nesting (hyperedge
/// set) or directed (ordered hyperedge pair). Nodes carry feature vectors of
/// a fixed dimension d, hyperedges of dimension d'.
///
/// Construction is append-only: members of an existing edge are never edited
/// except through reduce_singleton(), which rewrites references as a whole.
/// The edge-to-edge reference relation (nesting membership plus directed
/// endpoints) is kept acyclic at all times. A fully built hypergraph is
/// immutable by convention and safe for concurrent reads.
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(std::size_t node_feature_dim, std::size_t edge_feature_dim)
        : node_dim_(node_feature_dim), edge_dim_(edge_feature_dim) {}

    std::size_t node_feature_dim() const { return node_dim_; }
    std::size_t edge_feature_dim() const { return edge_dim_; }

    /// Number of nodes n.
    std::size_t order() const { return nodes_.size(); }
    /// Number of hyperedges m.
    std::size_t size() const { return edges_.size(); }

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Hyperedge>& edges() const { return edges_; }

    bool has_node(NodeId id) const { return find_node(id) != nullptr; }
    bool has_edge(EdgeId id) const { return find_edge(id) != nullptr; }

    const Node& node(NodeId id) const {
        const Node* n = find_node(id);
        if (!n) throw std::out_of_range("unknown node id " + std::to_string(id.value));
        return *n;
    }

    const Hyperedge& edge(EdgeId id) const {
        const Hyperedge* e = find_edge(id);
        if (!e) throw std::out_of_range("unknown edge id " + std::to_string(id.value));
        return *e;
    }

    NodeId add_node(std::string label, std::vector<double> features = {}) {
        require_feature_dim(features.size(), node_dim_, "node");
        NodeId id{next_node_id_++};
        nodes_.push_back(Node{id, std::move(label), std::move(features)});
        return id;
    }

    EdgeId add_simple_edge(std::vector<NodeId> members, std::string label = "",
                           std::vector<double> features = {},
                           std::optional<double> weight = std::nullopt) {
        require_feature_dim(features.size(), edge_dim_, "edge");
        require_weight(weight);
        canonicalize_members(members, "simple hyperedge");
        for (NodeId m : members) {
            if (!has_node(m))
                throw std::out_of_range("unknown node id " + std::to_string(m.value));
        }
        return push_edge(SimpleMembers{std::move(members)}, std::move(label),
                         std::move(features), weight);
    }

    EdgeId add_nesting_edge(std::vector<EdgeId> members, std::string label = "",
                            std::vector<double> features = {},
                            std::optional<double> weight = std::nullopt) {
        require_feature_dim(features.size(), edge_dim_, "edge");
        require_weight(weight);
        canonicalize_members(members, "nesting hyperedge");
        for (EdgeId m : members) {
            if (!has_edge(m))
                throw std::out_of_range("unknown edge id " + std::to_string(m.value));
        }
        // Members must already exist and the new id is fresh, so the insertion
        // cannot close a containment cycle; the invariant is still re-checked
        // wholesale by verify_invariants() and restore().
        return push_edge(NestingMembers{std::move(members)}, std::move(label),
                         std::move(features), weight);
    }

    EdgeId add_directed_edge(EdgeId source, EdgeId target, std::string label = "",
                             std::vector<double> features = {},
                             std::optional<double> weight = std::nullopt) {
        require_feature_dim(features.size(), edge_dim_, "edge");
        require_weight(weight);
        if (!has_edge(source))
            throw std::out_of_range("unknown edge id " + std::to_string(source.value));
        if (!has_edge(target))
            throw std::out_of_range("unknown edge id " + std::to_string(target.value));
        return push_edge(DirectedPair{source, target}, std::move(label),
                         std::move(features), weight);
    }

    /// Member count of a simple or nesting hyperedge; 2 for a directed
    /// hyperedge (an ordered pair).
    std::size_t order_of(EdgeId id) const {
        const Hyperedge& e = edge(id);
        if (const auto* s = std::get_if<SimpleMembers>(&e.payload)) return s->nodes.size();
        if (const auto* n = std::get_if<NestingMembers>(&e.payload)) return n->edges.size();
        return 2;
    }

    /// Transitive node closure of a hyperedge: a simple edge yields its
    /// members, a nesting edge the union over its members, a directed edge
    /// the union over source and target. Sorted by id.
    std::vector<NodeId> leaf_node_set(EdgeId id) const {
        (void)edge(id); // existence check
        std::set<NodeId> leaves;
        std::set<EdgeId> visited;
        collect_leaves(id, leaves, visited);
        return {leaves.begin(), leaves.end()};
    }

    /// Conventional implicit nesting: true iff inner's leaf node set is a
    /// subset of outer's. Provided for interoperability with the subset-based
    /// reading of containment.
    bool is_nested_in(EdgeId inner, EdgeId outer) const {
        std::vector<NodeId> a = leaf_node_set(inner);
        std::vector<NodeId> b = leaf_node_set(outer);
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    /// nested iff at least one nesting hyperedge exists, directed iff at
    /// least one directed hyperedge exists.
    HypergraphKind classify() const {
        HypergraphKind kind;
        for (const Hyperedge& e : edges_) {
            switch (e.kind()) {
            case EdgeKind::Nesting: kind.nested = true; break;
            case EdgeKind::Directed: kind.directed = true; break;
            case EdgeKind::Simple: break;
            }
        }
        return kind;
    }

    /// Applies the reduction {e} => e to fixpoint. While the edge is a
    /// nesting hyperedge with exactly one member, every reference to it
    /// (nesting memberships and directed endpoints) is rewritten to the
    /// member and the edge is deleted; the rule then reapplies to the member,
    /// so a singleton chain {{e}} collapses to e in one call. Any other edge
    /// is returned unchanged. The result is never itself reducible, which
    /// makes the operation idempotent.
    EdgeId reduce_singleton(EdgeId id) {
        EdgeId current = id;
        while (true) {
            EdgeId next = reduce_singleton_step(current);
            if (next == current) return current;
            current = next;
        }
    }


    /// In-order flattening of a directed hyperedge's pair tree, e.g.
    /// ((e1, e2), (e3, e4)) expands to [e1, e2, e3, e4]. A non-directed
    /// endpoint contributes itself; a directed endpoint is expanded
    /// recursively. Consecutive elements of the result are the implied
    /// pairwise directed relations; no new edges are materialized.
    std::vector<EdgeId> expand_directed(EdgeId id) const {
        const Hyperedge& e = edge(id);
        if (!std::holds_alternative<DirectedPair>(e.payload))
            throw std::invalid_argument("edge " + std::to_string(id.value) +
                                        " is not a directed hyperedge");
        std::vector<EdgeId> series;
        flatten_directed(id, series);
        return series;
    }

    /// Relabels nodes through a bijection over exactly this hypergraph's
    /// node id set; edge ids and all structure are otherwise unchanged.
    template <typename Map>
    Hypergraph permute_nodes(const Map& permutation) const {
        if (permutation.size() != nodes_.size())
            throw std::invalid_argument("node permutation is not a bijection over the node table");
        std::vector<NodeId> image;
        image.reserve(nodes_.size());
        for (const Node& n : nodes_) {
            auto it = permutation.find(n.id);
            if (it == permutation.end())
                throw std::invalid_argument("node permutation misses node id " +
                                            std::to_string(n.id.value));
            image.push_back(it->second);
        }
        std::vector<NodeId> sorted_image = image;
        std::sort(sorted_image.begin(), sorted_image.end());
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (sorted_image[i] != nodes_[i].id)
                throw std::invalid_argument("node permutation is not a bijection over the node table");
        }

        std::vector<Node> new_nodes;
        new_nodes.reserve(nodes_.size());
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            new_nodes.push_back(Node{image[i], nodes_[i].label, nodes_[i].features});

        std::vector<Hyperedge> new_edges = edges_;
        for (Hyperedge& e : new_edges) {
            if (auto* s = std::get_if<SimpleMembers>(&e.payload)) {
                for (NodeId& m : s->nodes) m = permutation.find(m)->second;
                std::sort(s->nodes.begin(), s->nodes.end());
            }
        }
        return restore(node_dim_, edge_dim_, std::move(new_nodes), std::move(new_edges));
    }

    /// Rebuilds a hypergraph from explicit node and edge tables (ids may have
    /// gaps), re-validating every structural invariant: unique ids, feature
    /// dimensions, nonempty duplicate-free member sets, resolvable references
    /// and containment acyclicity. Fresh ids continue past the maximum.
    static Hypergraph restore(std::size_t node_feature_dim, std::size_t edge_feature_dim,
                              std::vector<Node> nodes, std::vector<Hyperedge> edges) {
        Hypergraph g(node_feature_dim, edge_feature_dim);
        std::sort(nodes.begin(), nodes.end(),
                  [](const Node& a, const Node& b) { return a.id < b.id; });
        std::sort(edges.begin(), edges.end(),
                  [](const Hyperedge& a, const Hyperedge& b) { return a.id < b.id; });
        for (Hyperedge& e : edges) {
            if (auto* s = std::get_if<SimpleMembers>(&e.payload))
                std::sort(s->nodes.begin(), s->nodes.end());
            else if (auto* n = std::get_if<NestingMembers>(&e.payload))
                std::sort(n->edges.begin(), n->edges.end());
        }
        g.nodes_ = std::move(nodes);
        g.edges_ = std::move(edges);
        if (!g.nodes_.empty()) g.next_node_id_ = g.nodes_.back().id.value + 1;
        if (!g.edges_.empty()) g.next_edge_id_ = g.edges_.back().id.value + 1;
        try {
            g.verify_invariants();
        } catch (const std::logic_error& err) {
            throw std::invalid_argument(err.what());
        }
        return g;
    }

    /// Full structural re-check; throws std::logic_error naming the first
    /// violated invariant. Intended for tests and for validating restored
    /// tables; mutation paths keep the invariants by construction.
    void verify_invariants() const {
        for (std::size_t i = 1; i < nodes_.size(); ++i) {
            if (!(nodes_[i - 1].id < nodes_[i].id))
                throw std::logic_error("duplicate node id " + std::to_string(nodes_[i].id.value));
        }
        for (std::size_t i = 1; i < edges_.size(); ++i) {
            if (!(edges_[i - 1].id < edges_[i].id))
                throw std::logic_error("duplicate edge id " + std::to_string(edges_[i].id.value));
        }
        for (const Node& n : nodes_) {
            if (n.features.size() != node_dim_)
                throw std::logic_error("node " + std::to_string(n.id.value) +
                                       " breaks the node feature dimension");
        }
        for (const Hyperedge& e : edges_) {
            if (e.features.size() != edge_dim_)
                throw std::logic_error("edge " + std::to_string(e.id.value) +
                                       " breaks the edge feature dimension");
            if (e.weight && *e.weight < 0.0)
                throw std::logic_error("edge " + std::to_string(e.id.value) +
                                       " has a negative weight");
            if (const auto* s = std::get_if<SimpleMembers>(&e.payload)) {
                if (s->nodes.empty())
                    throw std::logic_error("edge " + std::to_string(e.id.value) +
                                           " is an empty simple hyperedge");
                for (std::size_t i = 0; i < s->nodes.size(); ++i) {
                    if (i > 0 && !(s->nodes[i - 1] < s->nodes[i]))
                        throw std::logic_error("edge " + std::to_string(e.id.value) +
                                               " has duplicate or unsorted members");
                    if (!has_node(s->nodes[i]))
                        throw std::logic_error("edge " + std::to_string(e.id.value) +
                                               " references unknown node id " +
                                               std::to_string(s->nodes[i].value));
                }
            } else if (const auto* n = std::get_if<NestingMembers>(&e.payload)) {
                if (n->edges.empty())
                    throw std::logic_error("edge " + std::to_string(e.id.value) +
                                           " is an empty nesting hyperedge");
                for (std::size_t i = 0; i < n->edges.size(); ++i) {
                    if (i > 0 && !(n->edges[i - 1] < n->edges[i]))
                        throw std::logic_error("edge " + std::to_string(e.id.value) +
                                               " has duplicate or unsorted members");
                    if (!has_edge(n->edges[i]))
                        throw std::logic_error("edge " + std::to_string(e.id.value) +
                                               " references unknown edge id " +
                                               std::to_string(n->edges[i].value));
                }
            } else {
                const auto& d = std::get<DirectedPair>(e.payload);
                if (!has_edge(d.source))
                    throw std::logic_error("edge " + std::to_string(e.id.value) +
                                           " references unknown edge id " +
                                           std::to_string(d.source.value));
                if (!has_edge(d.target))
                    throw std::logic_error("edge " + std::to_string(e.id.value) +
                                           " references unknown edge id " +
                                           std::to_string(d.target.value));
            }
        }
        check_acyclic();
    }

    /// Structural equality of dimensions and tables; id allocation counters
    /// are not observable and do not participate.
    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.node_dim_ == b.node_dim_ && a.edge_dim_ == b.edge_dim_ &&
               a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
    }

private:
    std::size_t node_dim_ = 0;
    std::size_t edge_dim_ = 0;
    std::vector<Node> nodes_;     // sorted by id
    std::vector<Hyperedge> edges_; // sorted by id
    std::uint64_t next_node_id_ = 0;
    std::uint64_t next_edge_id_ = 0;

    const Node* find_node(NodeId id) const {
        auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                                   [](const Node& n, NodeId v) { return n.id < v; });
        return (it != nodes_.end() && it->id == id) ? &*it : nullptr;
    }

    const Hyperedge* find_edge(EdgeId id) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                   [](const Hyperedge& e, EdgeId v) { return e.id < v; });
        return (it != edges_.end() && it->id == id) ? &*it : nullptr;
    }

    static void require_feature_dim(std::size_t got, std::size_t want, const char* what) {
        if (got != want)
            throw std::invalid_argument(std::string(what) + " feature vector length " +
                                        std::to_string(got) + " does not match dimension " +
                                        std::to_string(want));
    }

    static void require_weight(const std::optional<double>& w) {
        if (w && *w < 0.0) throw std::invalid_argument("hyperedge weight must be nonnegative");
    }

    template <typename Id>
    static void canonicalize_members(std::vector<Id>& members, const char* what) {
        if (members.empty())
            throw std::invalid_argument(std::string(what) + " needs at least one member");
        std::sort(members.begin(), members.end());
        for (std::size_t i = 1; i < members.size(); ++i) {
            if (members[i - 1] == members[i])
                throw std::invalid_argument(std::string(what) + " has duplicate member id " +
                                            std::to_string(members[i].value));
        }
    }

    EdgeId push_edge(EdgePayload payload, std::string label, std::vector<double> features,
                     std::optional<double> weight) {
        EdgeId id{next_edge_id_++};
        edges_.push_back(Hyperedge{id, std::move(payload), std::move(label),
                                   std::move(features), weight});
        return id;
    }

    // One application of {e} => e: rewrite references, delete the wrapper,
    // return the member. Non-singleton edges come back unchanged.
    EdgeId reduce_singleton_step(EdgeId id) {
        const Hyperedge& e = edge(id);
        const auto* nest = std::get_if<NestingMembers>(&e.payload);
        if (!nest || nest->edges.size() != 1) return id;
        EdgeId member = nest->edges.front();

        for (Hyperedge& other : edges_) {
            if (other.id == id) continue;
            if (auto* n = std::get_if<NestingMembers>(&other.payload)) {
                bool hit = false;
                for (EdgeId& m : n->edges) {
                    if (m == id) {
                        m = member;
                        hit = true;
                    }
                }
                if (hit) {
                    std::sort(n->edges.begin(), n->edges.end());
                    n->edges.erase(std::unique(n->edges.begin(), n->edges.end()),
                                   n->edges.end());
                }
            } else if (auto* d = std::get_if<DirectedPair>(&other.payload)) {
                if (d->source == id) d->source = member;
                if (d->target == id) d->target = member;
            }
        }

        auto it = std::find_if(edges_.begin(), edges_.end(),
                               [id](const Hyperedge& x) { return x.id == id; });
        edges_.erase(it);
        return member;
    }

    void collect_leaves(EdgeId id, std::set<NodeId>& leaves, std::set<EdgeId>& visited) const {
        if (!visited.insert(id).second) return;
        const Hyperedge& e = edge(id);
        if (const auto* s = std::get_if<SimpleMembers>(&e.payload)) {
            leaves.insert(s->nodes.begin(), s->nodes.end());
        } else if (const auto* n = std::get_if<NestingMembers>(&e.payload)) {
            for (EdgeId m : n->edges) collect_leaves(m, leaves, visited);
        } else {
            const auto& d = std::get<DirectedPair>(e.payload);
            collect_leaves(d.source, leaves, visited);
            collect_leaves(d.target, leaves, visited);
        }
    }

    void flatten_directed(EdgeId id, std::vector<EdgeId>& out) const {
        const Hyperedge& e = edge(id);
        if (const auto* d = std::get_if<DirectedPair>(&e.payload)) {
            flatten_directed(d->source, out);
            flatten_directed(d->target, out);
        } else {
            out.push_back(id);
        }
    }

    // DFS over the edge reference digraph (nesting members plus directed
    // endpoints); an edge reachable from itself is a containment cycle.
    void check_acyclic() const {
        enum class Color { White, Grey, Black };
        std::vector<Color> color(edges_.size(), Color::White);

        auto index_of = [this](EdgeId id) {
            auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                       [](const Hyperedge& e, EdgeId v) { return e.id < v; });
            return static_cast<std::size_t>(it - edges_.begin());
        };

        auto references = [](const Hyperedge& e) {
            std::vector<EdgeId> out;
            if (const auto* n = std::get_if<NestingMembers>(&e.payload))
                out = n->edges;
            else if (const auto* d = std::get_if<DirectedPair>(&e.payload))
                out = {d->source, d->target};
            return out;
        };

        for (std::size_t root = 0; root < edges_.size(); ++root) {
            if (color[root] != Color::White) continue;
            std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
            color[root] = Color::Grey;
            while (!stack.empty()) {
                auto& [idx, child] = stack.back();
                std::vector<EdgeId> refs = references(edges_[idx]);
                if (child >= refs.size()) {
                    color[idx] = Color::Black;
                    stack.pop_back();
                    continue;
                }
                std::size_t next = index_of(refs[child++]);
                if (color[next] == Color::Grey)
                    throw std::logic_error("containment cycle through edge id " +
                                           std::to_string(edges_[next].id.value));
                if (color[next] == Color::White) {
                    color[next] = Color::Grey;
                    stack.emplace_back(next, 0);
                }
            }
        }
    }
};

} // namespace hypernest
