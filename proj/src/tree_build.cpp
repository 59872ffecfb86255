#include "bmtsim/tree_build.hpp"

#include <stdexcept>

namespace bmtsim {

TreeImage build_tree(std::span<const std::uint64_t> initial_counters,
                     const TreeGeometry& g, const HashKey& key) {
    g.validate();
    if (initial_counters.size() > g.counter_count())
        throw std::overflow_error("more counters than the tree can hold");

    TreeImage img;
    img.level.resize(g.levels + 1);
    for (unsigned l = 0; l <= g.levels; ++l)
        img.level[l].assign(g.nodes_at(l), NodeBlock{});

    for (std::size_t i = 0; i < initial_counters.size(); ++i)
        img.level[0][i / g.arity].set_counter(static_cast<unsigned>(i % g.arity),
                                              initial_counters[i]);

    for (unsigned l = 1; l <= g.levels; ++l) {
        for (std::uint64_t i = 0; i < img.level[l].size(); ++i) {
            NodeBlock& parent = img.level[l][i];
            for (unsigned s = 0; s < g.arity; ++s) {
                const std::uint64_t child = i * g.arity + s;
                if (child >= img.level[l - 1].size()) break;
                NodeId cid{l - 1, child};
                parent.set_slot(s, digest_of(img.level[l - 1][child], cid, key, g), g);
            }
        }
    }

    img.root.digest =
        digest_of(img.level[g.levels][0], NodeId{g.levels, 0}, key, g);
    return img;
}

}  // namespace bmtsim
