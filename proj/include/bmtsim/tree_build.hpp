#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bmtsim/geometry.hpp"
#include "bmtsim/hash.hpp"

namespace bmtsim {

// A fully materialised tree: level-major node storage plus the root digest.
struct TreeImage {
    std::vector<std::vector<NodeBlock>> level;  // [0..N][index]
    RootRegister root;
};

// Builds a consistent image from initial counter values (row-major across
// blocks, missing counters zero). Slots for children absent from a partial
// tree stay zero-filled.
TreeImage build_tree(std::span<const std::uint64_t> initial_counters,
                     const TreeGeometry& g, const HashKey& key);

}  // namespace bmtsim
