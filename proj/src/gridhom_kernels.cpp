#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>

#include "contactcalc/errors.hpp"
#include "contactcalc/gridhom.hpp"

namespace contactcalc::gridhom::kernels {

namespace {

std::uint32_t factorial(int n) {
    std::uint32_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint32_t>(i);
    return f;
}

// Rank of a d = (rows x cols) F2 matrix given as packed bit rows.
std::int64_t f2_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols) {
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> pivot(cols);
    std::int64_t rank = 0;
    for (auto& row : rows) {
        for (;;) {
            std::size_t w = 0;
            while (w < words && row[w] == 0) ++w;
            if (w == words) break;
            const std::size_t lead = w * 64 + static_cast<std::size_t>(__builtin_ctzll(row[w]));
            auto& p = pivot[lead];
            if (p.empty()) {
                p = std::move(row);
                ++rank;
                break;
            }
            for (std::size_t k = w; k < words; ++k) row[k] ^= p[k];
        }
    }
    return rank;
}

}  // namespace

std::vector<std::uint8_t> enumerate_generators(int n) {
    std::vector<std::uint8_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), std::uint8_t{0});
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(factorial(n)) * static_cast<std::size_t>(n));
    do {
        out.insert(out.end(), perm.begin(), perm.end());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::uint32_t lehmer_rank(const std::uint8_t* perm, int n) {
    std::uint32_t rank = 0;
    for (int i = 0; i < n; ++i) {
        std::uint32_t smaller = 0;
        for (int j = i + 1; j < n; ++j) smaller += perm[j] < perm[i];
        rank = rank * static_cast<std::uint32_t>(n - i) + smaller;
    }
    return rank;
}

std::vector<GridGrading> grade_all(const GridDiagram& g, const std::vector<std::uint8_t>& generators) {
    const int n = g.size();
    const auto count = static_cast<std::int64_t>(generators.size() / static_cast<std::size_t>(n));
    const std::int64_t blocks = n - g.components();

    auto self_pairs = [n](const int* p) {
        std::int64_t c = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) c += p[i] < p[j];
        return c;
    };
    const std::int64_t oo = self_pairs(g.o_perm().data());
    const std::int64_t xx_marks = self_pairs(g.x_perm().data());

    std::vector<GridGrading> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < count; ++k) {
        const std::uint8_t* x = generators.data() + k * n;
        std::int64_t xx = 0;
        std::int64_t mixed_o = 0;
        std::int64_t mixed_x = 0;
        for (int c = 0; c < n; ++c) {
            for (int d = 0; d < n; ++d) {
                if (c < d) xx += x[c] < x[d];
                // Lattice point (c, x(c)) against the marking centred in cell (d, row).
                if (c <= d) {
                    mixed_o += x[c] <= g.o(d);
                    mixed_x += x[c] <= g.x(d);
                } else {
                    mixed_o += g.o(d) < x[c];
                    mixed_x += g.x(d) < x[c];
                }
            }
        }
        const std::int64_t m_o = xx - mixed_o + oo + 1;
        const std::int64_t m_x = xx - mixed_x + xx_marks + 1;
        out[static_cast<std::size_t>(k)] = {HalfInteger::from_int(m_o), HalfInteger{(m_o - m_x) - blocks}};
    }
    return out;
}

ChainComplex build_tilde_complex(const GridDiagram& g) {
    const int n = g.size();
    if (n > kMaxGridSize) {
        throw ResourceError("grid size " + std::to_string(n) + " exceeds the cap of " + std::to_string(kMaxGridSize));
    }
    ChainComplex cx;
    cx.size = n;
    cx.generators = enumerate_generators(n);
    cx.gradings = grade_all(g, cx.generators);
    const auto count = static_cast<std::int64_t>(cx.gradings.size());

    // free_cells[((a * n + w) * n + r) * n + h]: the w x h block of cells with lower-left
    // cell (a, r) holds no marking.
    const auto un = static_cast<std::size_t>(n);
    std::vector<char> marked(un * un, 0);
    for (int c = 0; c < n; ++c) {
        marked[static_cast<std::size_t>(c) * un + static_cast<std::size_t>(g.o(c))] = 1;
        marked[static_cast<std::size_t>(c) * un + static_cast<std::size_t>(g.x(c))] = 1;
    }
    std::vector<char> free_cells(un * un * un * un, 0);
    for (int a = 0; a < n; ++a) {
        for (int r = 0; r < n; ++r) {
            for (int w = 1; w < n; ++w) {
                for (int h = 1; h < n; ++h) {
                    bool clear = true;
                    for (int i = 0; i < w && clear; ++i)
                        for (int j = 0; j < h && clear; ++j)
                            clear = !marked[static_cast<std::size_t>((a + i) % n) * un +
                                            static_cast<std::size_t>((r + j) % n)];
                    free_cells[((static_cast<std::size_t>(a) * un + static_cast<std::size_t>(w)) * un +
                                static_cast<std::size_t>(r)) * un + static_cast<std::size_t>(h)] = clear;
                }
            }
        }
    }

    const std::size_t max_degree = un * (un - 1);
    std::vector<std::uint32_t> scratch(static_cast<std::size_t>(count) * max_degree);
    std::vector<std::uint32_t> degree(static_cast<std::size_t>(count), 0);
    std::atomic<bool> grading_ok{true};

#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t k = 0; k < count; ++k) {
        const std::uint8_t* x = cx.generators.data() + k * n;
        std::uint8_t y[kMaxGridSize];
        std::uint32_t* out = scratch.data() + static_cast<std::size_t>(k) * max_degree;
        std::uint32_t deg = 0;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                const int w = (b - a + n) % n;
                const int h = (x[b] - x[a] + n) % n;
                if (!free_cells[((static_cast<std::size_t>(a) * un + static_cast<std::size_t>(w)) * un + x[a]) * un +
                                static_cast<std::size_t>(h)]) {
                    continue;
                }
                bool empty = true;
                for (int i = 1; i < w && empty; ++i) {
                    const int dy = (x[(a + i) % n] - x[a] + n) % n;
                    empty = !(dy > 0 && dy < h);
                }
                if (!empty) continue;
                std::copy(x, x + n, y);
                std::swap(y[a], y[b]);
                const std::uint32_t target = lehmer_rank(y, n);
                const GridGrading& from = cx.gradings[static_cast<std::size_t>(k)];
                const GridGrading& to = cx.gradings[target];
                if (to.maslov.twice != from.maslov.twice - 2 || to.alexander != from.alexander) {
                    grading_ok.store(false, std::memory_order_relaxed);
                }
                out[deg++] = target;
            }
        }
        std::sort(out, out + deg);
        // Two rectangles onto the same target cancel over F2.
        std::uint32_t kept = 0;
        for (std::uint32_t i = 0; i < deg;) {
            std::uint32_t j = i;
            while (j < deg && out[j] == out[i]) ++j;
            if ((j - i) % 2 != 0) out[kept++] = out[i];
            i = j;
        }
        degree[static_cast<std::size_t>(k)] = kept;
    }
    if (!grading_ok) {
        throw InternalConsistencyError("a rectangle does not drop Maslov grading by one at fixed Alexander grading");
    }

    cx.offsets.assign(static_cast<std::size_t>(count) + 1, 0);
    for (std::int64_t k = 0; k < count; ++k) {
        cx.offsets[static_cast<std::size_t>(k) + 1] = cx.offsets[static_cast<std::size_t>(k)] + degree[static_cast<std::size_t>(k)];
    }
    cx.targets.resize(cx.offsets.back());
    for (std::int64_t k = 0; k < count; ++k) {
        const std::uint32_t* src = scratch.data() + static_cast<std::size_t>(k) * max_degree;
        std::copy(src, src + degree[static_cast<std::size_t>(k)], cx.targets.begin() + cx.offsets[static_cast<std::size_t>(k)]);
    }
    return cx;
}

bool boundary_squares_to_zero(const ChainComplex& cx) {
    const auto count = static_cast<std::int64_t>(cx.generator_count());
    bool ok = true;
#pragma omp parallel for schedule(dynamic, 64) reduction(&& : ok)
    for (std::int64_t k = 0; k < count; ++k) {
        std::vector<std::uint32_t> two;
        for (auto i = cx.offsets[static_cast<std::size_t>(k)]; i < cx.offsets[static_cast<std::size_t>(k) + 1]; ++i) {
            const auto mid = cx.targets[i];
            two.insert(two.end(), cx.targets.begin() + cx.offsets[mid], cx.targets.begin() + cx.offsets[mid + 1]);
        }
        std::sort(two.begin(), two.end());
        for (std::size_t i = 0; i < two.size();) {
            std::size_t j = i;
            while (j < two.size() && two[j] == two[i]) ++j;
            if ((j - i) % 2 != 0) ok = false;
            i = j;
        }
    }
    return ok;
}

BigradedRanks homology(const ChainComplex& cx) {
    std::map<GridGrading, std::vector<std::uint32_t>> blocks;
    std::vector<std::uint32_t> local(cx.generator_count());
    for (std::uint32_t k = 0; k < cx.generator_count(); ++k) {
        auto& members = blocks[cx.gradings[k]];
        local[k] = static_cast<std::uint32_t>(members.size());
        members.push_back(k);
    }

    std::vector<GridGrading> keys;
    keys.reserve(blocks.size());
    for (const auto& [key, members] : blocks) keys.push_back(key);

    // outgoing[i] = rank of the differential leaving block keys[i].
    std::vector<std::int64_t> outgoing(keys.size(), 0);
    const auto nkeys = static_cast<std::int64_t>(keys.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < nkeys; ++i) {
        const GridGrading key = keys[static_cast<std::size_t>(i)];
        const GridGrading below{key.maslov - HalfInteger::from_int(1), key.alexander};
        auto it = blocks.find(below);
        if (it == blocks.end()) continue;
        const auto& sources = blocks.at(key);
        const std::size_t cols = it->second.size();
        const std::size_t words = (cols + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(sources.size(), std::vector<std::uint64_t>(words, 0));
        for (std::size_t r = 0; r < sources.size(); ++r) {
            const auto s = sources[r];
            for (auto e = cx.offsets[s]; e < cx.offsets[s + 1]; ++e) {
                const auto c = local[cx.targets[e]];
                rows[r][c / 64] ^= std::uint64_t{1} << (c % 64);
            }
        }
        outgoing[static_cast<std::size_t>(i)] = f2_rank(std::move(rows), cols);
    }

    std::map<GridGrading, std::int64_t> rank_out;
    for (std::size_t i = 0; i < keys.size(); ++i) rank_out[keys[i]] = outgoing[i];

    BigradedRanks out;
    for (const auto& [key, members] : blocks) {
        const GridGrading above{key.maslov + HalfInteger::from_int(1), key.alexander};
        auto in = rank_out.find(above);
        const std::int64_t incoming = in == rank_out.end() ? 0 : in->second;
        out.add(key, static_cast<std::int64_t>(members.size()) - rank_out[key] - incoming);
    }
    return out;
}

}  // namespace contactcalc::gridhom::kernels
