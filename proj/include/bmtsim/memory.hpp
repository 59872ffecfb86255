#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "bmtsim/geometry.hpp"
#include "bmtsim/tree_build.hpp"

namespace bmtsim {

struct MemStats {
    std::uint64_t reads = 0;
    std::uint64_t writes = 0;
    std::vector<std::uint64_t> reads_by_level;
    std::vector<std::uint64_t> writes_by_level;
};

enum class TamperKind { Replay, Spoof, Splice };

struct TamperAction {
    TamperKind kind;
    NodeId target;
    std::uint64_t snapshot_id = 0;  // Replay
    NodeBlock bytes{};              // Spoof
    NodeId source{};                // Splice; must differ from target
};

// Untrusted main memory: flat per-level block store. Controller traffic is
// counted; adversary mutations (snapshot restore, tamper) are not.
class MainMemory {
public:
    MainMemory(const TreeGeometry& g, TreeImage image);

    const TreeGeometry& geometry() const { return geom_; }
    const MemStats& stats() const { return stats_; }
    void reset_stats();

    NodeBlock read_block(const NodeId& n);
    void write_block(const NodeId& n, const NodeBlock& b);

    // Uncounted access, for test oracles and adversary setup.
    const NodeBlock& peek(const NodeId& n) const;

    std::uint64_t snapshot(const NodeId& n);
    void restore_snapshot(std::uint64_t id);
    void apply_tamper(const TamperAction& a);

    // Flat image, levels ascending, blocks in index order, 64B raw each.
    void dump(std::ostream& os) const;
    void load(std::istream& is);

private:
    NodeBlock& at(const NodeId& n);

    TreeGeometry geom_;
    std::vector<std::vector<NodeBlock>> level_;
    MemStats stats_;
    std::uint64_t next_snapshot_ = 1;
    std::map<std::uint64_t, std::pair<NodeId, NodeBlock>> snapshots_;
};

}  // namespace bmtsim
