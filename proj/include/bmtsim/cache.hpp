#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "bmtsim/geometry.hpp"

namespace bmtsim {

struct UnifiedCache {
    std::uint64_t total_bytes = 1536;
};

struct SplitCache {
    std::vector<std::uint64_t> per_level_bytes;  // levels 1..N
};

struct CacheConfig {
    std::variant<UnifiedCache, SplitCache> mode = SplitCache{{1024, 448, 64}};
    unsigned ways = 4;
    static constexpr unsigned kLineSize = TreeGeometry::kNodeSize;

    bool split() const { return std::holds_alternative<SplitCache>(mode); }
    void validate(const TreeGeometry& g) const;
};

struct EvictionRecord {
    NodeId victim;
    NodeBlock data;
    bool dirty = false;
};

struct CacheStats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::uint64_t insertions = 0;
    std::uint64_t evictions = 0;
    std::uint64_t dirty_evictions = 0;
    std::vector<std::uint64_t> hits_by_level;
    std::vector<std::uint64_t> misses_by_level;
    std::vector<std::uint64_t> insertions_by_level;
    std::vector<std::uint64_t> evictions_by_level;        // victim's level
    std::vector<std::uint64_t> dirty_evictions_by_level;  // victim's level
};

// Set-associative write-back cache over BMT nodes (levels 1..N). Unified mode
// shares one array across levels; split mode gives each level its own, so a
// victim's level always equals the inserted node's level.
//
// Line counts not divisible by the way count degrade to fully-associative
// (the 448B and 64B configurations have 7 and 1 lines).
class MetadataCache {
public:
    MetadataCache(const CacheConfig& cfg, const TreeGeometry& g);

    const CacheConfig& config() const { return cfg_; }
    const CacheStats& stats() const { return stats_; }

    std::optional<NodeBlock> lookup(const NodeId& n);

    // Makes `n` resident. Returns the displaced line when a full set had to
    // evict; the victim is the LRU line (tie-break: lowest way index).
    std::optional<EvictionRecord> insert(const NodeId& n, const NodeBlock& data,
                                         bool dirty);

    // Overwrites a resident line and marks it dirty; never allocates.
    bool update_in_place(const NodeId& n, const NodeBlock& data);

    bool contains(const NodeId& n) const;

    // Drains every line (records for dirty ones only, ascending level then
    // index). Not counted as evictions in stats.
    std::vector<EvictionRecord> flush_all();

    std::uint64_t line_count() const;

private:
    struct Line {
        bool valid = false;
        bool dirty = false;
        NodeId tag;
        NodeBlock data;
        std::uint64_t lru = 0;
    };

    struct Bank {  // one set-associative array
        std::vector<Line> lines;
        unsigned sets = 1;
        unsigned ways = 1;
    };

    Bank& bank_for(unsigned level);
    const Bank& bank_for(unsigned level) const;
    Line* find(Bank& b, const NodeId& n);
    std::uint64_t set_base(const Bank& b, const NodeId& n) const;
    void check_level(const NodeId& n) const;

    static Bank make_bank(std::uint64_t bytes, unsigned ways);

    CacheConfig cfg_;
    unsigned levels_;
    std::vector<Bank> banks_;  // split: [0..N-1] per level; unified: [0]
    CacheStats stats_;
    std::uint64_t tick_ = 0;
};

}  // namespace bmtsim
