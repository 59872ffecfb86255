#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace bmtsim {

// Tree layout:
//   level 0        counter blocks (not cached by the BMT cache subsystem)
//   level 1..N     BMT nodes, 64B each, `arity` digest slots
//   level N+1      root digest, held in a register outside memory
struct TreeGeometry {
    static constexpr unsigned kNodeSize = 64;

    unsigned arity = 8;
    unsigned levels = 3;  // N
    std::uint64_t counter_blocks = 512;

    unsigned digest_size() const { return kNodeSize / arity; }
    unsigned counters_per_block() const { return arity; }
    std::uint64_t counter_count() const { return counter_blocks * arity; }
    unsigned root_level() const { return levels + 1; }

    std::uint64_t full_leaf_count() const {
        std::uint64_t n = 1;
        for (unsigned i = 0; i < levels; ++i) n *= arity;
        return n;
    }

    // Number of nodes actually present at a level; missing children of a
    // partial tree are zero-filled in their parent slots.
    std::uint64_t nodes_at(unsigned level) const {
        if (level == root_level()) return 1;
        std::uint64_t n = counter_blocks;
        for (unsigned l = 0; l < level; ++l) n = (n + arity - 1) / arity;
        return n;
    }

    void validate() const {
        if (arity != 2 && arity != 4 && arity != 8)
            throw std::invalid_argument("arity must be 2, 4 or 8");
        if (levels < 1)
            throw std::invalid_argument("levels must be >= 1");
        if (counter_blocks < 1 || counter_blocks > full_leaf_count())
            throw std::invalid_argument("counter_blocks out of range for tree");
    }
};

struct NodeId {
    unsigned level = 0;
    std::uint64_t index = 0;

    auto operator<=>(const NodeId&) const = default;
};

struct NoParentError : std::logic_error {
    NoParentError() : std::logic_error("root has no parent") {}
};

inline bool node_in_range(const NodeId& n, const TreeGeometry& g) {
    if (n.level > g.root_level()) return false;
    return n.index < g.nodes_at(n.level);
}

inline void check_node(const NodeId& n, const TreeGeometry& g) {
    if (!node_in_range(n, g))
        throw std::out_of_range("node id out of range for geometry");
}

inline NodeId parent_of(const NodeId& n, const TreeGeometry& g) {
    if (n.level > g.levels) throw NoParentError{};
    check_node(n, g);
    if (n.level == g.levels) return NodeId{g.root_level(), 0};
    return NodeId{n.level + 1, n.index / g.arity};
}

// Digest-slot index of `n` inside its parent.
inline unsigned child_offset(const NodeId& n, const TreeGeometry& g) {
    if (n.level > g.levels) throw NoParentError{};
    check_node(n, g);
    if (n.level == g.levels) return 0;  // root holds a single digest
    return static_cast<unsigned>(n.index % g.arity);
}

struct PathStep {
    NodeId node;
    unsigned offset;  // slot of `node` inside its parent

    bool operator==(const PathStep&) const = default;
};

// Counter block up to the root's child, levels strictly increasing.
inline std::vector<PathStep> path_to_root(std::uint64_t counter_block,
                                          const TreeGeometry& g) {
    if (counter_block >= g.counter_blocks)
        throw std::out_of_range("counter block out of range");
    std::vector<PathStep> path;
    path.reserve(g.levels + 1);
    NodeId n{0, counter_block};
    for (unsigned l = 0; l <= g.levels; ++l) {
        path.push_back(PathStep{n, child_offset(n, g)});
        if (l < g.levels) n = parent_of(n, g);
    }
    return path;
}

struct Digest {
    std::array<std::uint8_t, 32> bytes{};
    std::uint8_t size = 8;

    bool operator==(const Digest& o) const {
        return size == o.size && std::memcmp(bytes.data(), o.bytes.data(), size) == 0;
    }
};

// One 64-byte block: `arity` digest slots for BMT nodes, or 64-bit
// little-endian counters for level-0 blocks.
struct NodeBlock {
    std::array<std::uint8_t, TreeGeometry::kNodeSize> bytes{};

    bool operator==(const NodeBlock&) const = default;

    std::uint64_t counter(unsigned slot) const {
        std::uint64_t v = 0;
        for (unsigned i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(bytes[slot * 8 + i]) << (8 * i);
        return v;
    }

    void set_counter(unsigned slot, std::uint64_t v) {
        for (unsigned i = 0; i < 8; ++i)
            bytes[slot * 8 + i] = static_cast<std::uint8_t>(v >> (8 * i));
    }

    Digest slot(unsigned idx, const TreeGeometry& g) const {
        Digest d;
        d.size = static_cast<std::uint8_t>(g.digest_size());
        std::memcpy(d.bytes.data(), bytes.data() + idx * g.digest_size(), d.size);
        return d;
    }

    void set_slot(unsigned idx, const Digest& d, const TreeGeometry& g) {
        std::memcpy(bytes.data() + idx * g.digest_size(), d.bytes.data(),
                    g.digest_size());
    }
};

// Root digest; lives in the trusted region, never in memory or cache.
struct RootRegister {
    Digest digest;
};

}  // namespace bmtsim
