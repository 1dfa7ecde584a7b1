#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace hypernest {

// Node and edge identifiers live in disjoint type spaces so they cannot be
// mixed up at compile time. Both are allocated sequentially per hypergraph
// and are never reused after removal.
struct NodeId {
    std::uint64_t value{0};

    friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

struct EdgeId {
    std::uint64_t value{0};

    friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

} // namespace hypernest

template <>
struct std::hash<hypernest::NodeId> {
    std::size_t operator()(hypernest::NodeId id) const noexcept {
        return std::hash<std::uint64_t>{}(id.value);
    }
};

template <>
struct std::hash<hypernest::EdgeId> {
    std::size_t operator()(hypernest::EdgeId id) const noexcept {
        return std::hash<std::uint64_t>{}(id.value);
    }
};
