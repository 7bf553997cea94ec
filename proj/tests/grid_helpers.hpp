#pragma once

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <random>
#include <vector>

#include "contactcalc/grid.hpp"

namespace test_paths {
inline std::filesystem::path corpus() { return CORPUS_DIR; }
}  // namespace test_paths

namespace test_grids {

inline contactcalc::GridDiagram random_grid(std::mt19937_64& rng, int n) {
    std::vector<int> o(static_cast<std::size_t>(n)), x(static_cast<std::size_t>(n));
    std::iota(o.begin(), o.end(), 0);
    std::iota(x.begin(), x.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
    for (;;) {
        std::shuffle(x.begin(), x.end(), rng);
        bool clash = false;
        for (std::size_t c = 0; c < o.size(); ++c) clash = clash || o[c] == x[c];
        if (!clash) return {o, x};
    }
}

}  // namespace test_grids
