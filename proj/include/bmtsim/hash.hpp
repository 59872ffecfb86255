#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "bmtsim/geometry.hpp"

namespace bmtsim {

using HashKey = std::array<std::uint8_t, 16>;

// SipHash-2-4. Keyed 64-bit hash; fast enough that digest computation never
// dominates a simulation run.
std::uint64_t siphash24(const HashKey& key, std::span<const std::uint8_t> data);

// Digest of a block at a given tree position. The node's (level, index) is
// mixed into the hash input so identical bytes at different positions yield
// different digests.
Digest digest_of(const NodeBlock& block, const NodeId& node, const HashKey& key,
                 const TreeGeometry& g);

}  // namespace bmtsim
