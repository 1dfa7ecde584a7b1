#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypergraph.hpp"

namespace hypernest {

namespace detail {

inline std::string dot_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace detail

/// Emits the hypergraph in DOT cluster syntax following the visual notation
/// of nodes as circles and hyperedges as rounded rectangles. Simple and
/// nesting hyperedges become clusters, each holding an invisible anchor
/// vertex; directed hyperedges become arrows between the anchors of their
/// endpoints.
///
/// DOT clusters partition their contents, so membership nests as a true
/// cluster only when unique: a node inside exactly one simple hyperedge (or
/// an edge inside exactly one nesting hyperedge) is drawn contained, while
/// shared members are drawn top level with dashed containment links to each
/// owning cluster's anchor. Output is deterministic.
inline std::string to_dot(const Hypergraph& g) {
    std::map<NodeId, std::vector<EdgeId>> node_in; // simple edges holding the node
    std::map<EdgeId, std::vector<EdgeId>> edge_in; // nesting edges holding the edge
    for (const Hyperedge& e : g.edges()) {
        if (const auto* s = std::get_if<SimpleMembers>(&e.payload)) {
            for (NodeId m : s->nodes) node_in[m].push_back(e.id);
        } else if (const auto* n = std::get_if<NestingMembers>(&e.payload)) {
            for (EdgeId m : n->edges) edge_in[m].push_back(e.id);
        }
    }
    auto node_parent = [&node_in](NodeId v) -> const EdgeId* {
        auto it = node_in.find(v);
        return (it != node_in.end() && it->second.size() == 1) ? &it->second.front() : nullptr;
    };
    auto edge_parent = [&edge_in](EdgeId e) -> const EdgeId* {
        auto it = edge_in.find(e);
        return (it != edge_in.end() && it->second.size() == 1) ? &it->second.front() : nullptr;
    };

    std::string out = "digraph hypergraph {\n  compound=true;\n  node [shape=circle];\n";

    for (const Node& n : g.nodes()) {
        if (!node_parent(n.id))
            out += "  v" + std::to_string(n.id.value) + " [label=\"" +
                   detail::dot_escape(n.label) + "\"];\n";
    }

    auto anchor = [](EdgeId e) { return "__a" + std::to_string(e.value); };

    // Clusters nest along unique containment; everything else sits top level.
    auto emit_edge = [&](auto&& self, const Hyperedge& e, std::size_t depth) -> void {
        std::string pad(2 * (depth + 1), ' ');
        if (e.kind() == EdgeKind::Directed) {
            out += pad + anchor(e.id) + " [shape=point, style=invis];\n";
            return;
        }
        out += pad + "subgraph cluster_e" + std::to_string(e.id.value) + " {\n";
        out += pad + "  label=\"" + detail::dot_escape(e.label) + "\";\n";
        out += pad + "  style=rounded;\n";
        out += pad + "  " + anchor(e.id) + " [shape=point, style=invis];\n";
        if (const auto* s = std::get_if<SimpleMembers>(&e.payload)) {
            for (NodeId m : s->nodes) {
                const EdgeId* parent = node_parent(m);
                if (parent && *parent == e.id)
                    out += pad + "  v" + std::to_string(m.value) + " [label=\"" +
                           detail::dot_escape(g.node(m).label) + "\"];\n";
            }
        } else {
            const auto& n = std::get<NestingMembers>(e.payload);
            for (EdgeId m : n.edges) {
                const EdgeId* parent = edge_parent(m);
                if (parent && *parent == e.id) self(self, g.edge(m), depth + 1);
            }
        }
        out += pad + "}\n";
    };

    for (const Hyperedge& e : g.edges()) {
        if (!edge_parent(e.id)) emit_edge(emit_edge, e, 0);
    }

    // Containment that clusters cannot express: dashed, headless links.
    for (const Hyperedge& e : g.edges()) {
        if (const auto* s = std::get_if<SimpleMembers>(&e.payload)) {
            for (NodeId m : s->nodes) {
                const EdgeId* parent = node_parent(m);
                if (!parent || *parent != e.id)
                    out += "  v" + std::to_string(m.value) + " -> " + anchor(e.id) +
                           " [dir=none, style=dashed];\n";
            }
        } else if (const auto* n = std::get_if<NestingMembers>(&e.payload)) {
            for (EdgeId m : n->edges) {
                const EdgeId* parent = edge_parent(m);
                if (!parent || *parent != e.id)
                    out += "  " + anchor(m) + " -> " + anchor(e.id) +
                           " [dir=none, style=dashed];\n";
            }
        }
    }

    for (const Hyperedge& e : g.edges()) {
        const auto* d = std::get_if<DirectedPair>(&e.payload);
        if (!d) continue;
        std::vector<std::string> attrs;
        if (!e.label.empty()) attrs.push_back("label=\"" + detail::dot_escape(e.label) + "\"");
        if (g.edge(d->source).kind() != EdgeKind::Directed)
            attrs.push_back("ltail=cluster_e" + std::to_string(d->source.value));
        if (g.edge(d->target).kind() != EdgeKind::Directed)
            attrs.push_back("lhead=cluster_e" + std::to_string(d->target.value));
        out += "  " + anchor(d->source) + " -> " + anchor(d->target);
        if (!attrs.empty()) {
            out += " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) {
                if (i > 0) out += ", ";
                out += attrs[i];
            }
            out += "]";
        }
        out += ";\n";
    }

    out += "}\n";
    return out;
}

} // namespace hypernest
