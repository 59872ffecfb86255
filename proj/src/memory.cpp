#include "bmtsim/memory.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace bmtsim {

MainMemory::MainMemory(const TreeGeometry& g, TreeImage image)
    : geom_(g), level_(std::move(image.level)) {
    stats_.reads_by_level.assign(g.levels + 1, 0);
    stats_.writes_by_level.assign(g.levels + 1, 0);
    if (level_.size() != g.levels + 1)
        throw std::invalid_argument("image level count does not match geometry");
    for (unsigned l = 0; l <= g.levels; ++l)
        if (level_[l].size() != g.nodes_at(l))
            throw std::invalid_argument("image region size does not match geometry");
}

void MainMemory::reset_stats() {
    stats_ = MemStats{};
    stats_.reads_by_level.assign(geom_.levels + 1, 0);
    stats_.writes_by_level.assign(geom_.levels + 1, 0);
}

NodeBlock& MainMemory::at(const NodeId& n) {
    if (n.level > geom_.levels || n.index >= level_[n.level].size())
        throw std::out_of_range("memory access outside tree regions");
    return level_[n.level][n.index];
}

NodeBlock MainMemory::read_block(const NodeId& n) {
    NodeBlock& b = at(n);
    ++stats_.reads;
    ++stats_.reads_by_level[n.level];
    return b;
}

void MainMemory::write_block(const NodeId& n, const NodeBlock& b) {
    at(n) = b;
    ++stats_.writes;
    ++stats_.writes_by_level[n.level];
}

const NodeBlock& MainMemory::peek(const NodeId& n) const {
    return const_cast<MainMemory*>(this)->at(n);
}

std::uint64_t MainMemory::snapshot(const NodeId& n) {
    const std::uint64_t id = next_snapshot_++;
    snapshots_.emplace(id, std::make_pair(n, at(n)));
    return id;
}

void MainMemory::restore_snapshot(std::uint64_t id) {
    auto it = snapshots_.find(id);
    if (it == snapshots_.end()) throw std::out_of_range("unknown snapshot id");
    at(it->second.first) = it->second.second;
}

void MainMemory::apply_tamper(const TamperAction& a) {
    switch (a.kind) {
        case TamperKind::Replay:
            restore_snapshot(a.snapshot_id);
            break;
        case TamperKind::Spoof:
            at(a.target) = a.bytes;
            break;
        case TamperKind::Splice:
            if (a.source == a.target)
                throw std::invalid_argument("splice source equals target");
            at(a.target) = at(a.source);
            break;
    }
}

void MainMemory::dump(std::ostream& os) const {
    for (const auto& lvl : level_)
        for (const NodeBlock& b : lvl)
            os.write(reinterpret_cast<const char*>(b.bytes.data()), b.bytes.size());
}

void MainMemory::load(std::istream& is) {
    for (auto& lvl : level_)
        for (NodeBlock& b : lvl) {
            is.read(reinterpret_cast<char*>(b.bytes.data()), b.bytes.size());
            if (!is) throw std::runtime_error("memory image truncated");
        }
}

}  // namespace bmtsim
