#include "gts/game.hpp"

namespace gts::synthetic {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Score leaf_value(const SyntheticTreeParams& p, const std::uint8_t* path, int len) {
    if (p.explicit_leaves) {
        std::size_t idx = 0;
        for (int i = 0; i < len; ++i)
            idx = idx * static_cast<std::size_t>(p.branching) + path[i];
        return (*p.explicit_leaves)[idx];
    }
    std::uint64_t h = splitmix64(p.seed);
    for (int i = 0; i < len; ++i)
        h = splitmix64(h ^ (static_cast<std::uint64_t>(path[i]) + 1));
    const std::uint64_t span = static_cast<std::uint64_t>(p.leaf_hi - p.leaf_lo) + 1;
    return p.leaf_lo + static_cast<Score>(h % span);
}

}  // namespace gts::synthetic
