// Serial reference for the grid complex. Everything here follows the
// definitions directly: gradings from literal pair counts over doubled
// coordinates, rectangles as explicit cell sets, homology by dense
// elimination. Quadratic in the number of generators; meant for small grids
// in tests.

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "contactcalc/errors.hpp"
#include "contactcalc/gridhom.hpp"

namespace contactcalc::gridhom::reference {

namespace {

using Point = std::pair<int, int>;  // doubled coordinates

// #{(p, q) in P x Q : p strictly southwest of q}
std::int64_t southwest_pairs(const std::vector<Point>& p, const std::vector<Point>& q) {
    std::int64_t count = 0;
    for (const auto& a : p)
        for (const auto& b : q) count += (a.first < b.first && a.second < b.second);
    return count;
}

// Twice the symmetrized count J(P, Q).
std::int64_t twice_j(const std::vector<Point>& p, const std::vector<Point>& q) {
    return southwest_pairs(p, q) + southwest_pairs(q, p);
}

std::vector<Point> lattice_points(std::span<const int> x) {
    std::vector<Point> out;
    for (std::size_t c = 0; c < x.size(); ++c) out.emplace_back(2 * static_cast<int>(c), 2 * x[c]);
    return out;
}

std::vector<Point> marking_centres(const std::vector<int>& rows) {
    std::vector<Point> out;
    for (std::size_t c = 0; c < rows.size(); ++c) out.emplace_back(2 * static_cast<int>(c) + 1, 2 * rows[c] + 1);
    return out;
}

std::int64_t maslov_against(const std::vector<Point>& x, const std::vector<Point>& marks) {
    const std::int64_t twice = twice_j(x, x) - 2 * twice_j(x, marks) + twice_j(marks, marks);
    return twice / 2 + 1;
}

using Cell = std::pair<int, int>;

// Cells of the toroidal rectangle with lower-left corner (c0, r0) and upper-right (c1, r1).
std::set<Cell> rectangle_cells(int n, int c0, int r0, int c1, int r1) {
    std::set<Cell> cells;
    for (int c = c0; c != c1; c = (c + 1) % n)
        for (int r = r0; r != r1; r = (r + 1) % n) cells.emplace(c, r);
    return cells;
}

bool rectangle_is_empty(const GridDiagram& g, const std::vector<int>& x, const std::set<Cell>& cells) {
    const int n = g.size();
    for (int c = 0; c < n; ++c) {
        if (cells.count({c, g.o(c)}) || cells.count({c, g.x(c)})) return false;
    }
    // A lattice point is interior exactly when all four cells around it belong to the rectangle.
    for (int c = 0; c < n; ++c) {
        const int r = x[static_cast<std::size_t>(c)];
        const int cl = (c + n - 1) % n;
        const int rl = (r + n - 1) % n;
        if (cells.count({cl, rl}) && cells.count({c, rl}) && cells.count({cl, r}) && cells.count({c, r})) {
            return false;
        }
    }
    return true;
}

// Rank over F2 of a dense matrix, one std::vector<char> per row.
std::int64_t dense_rank(std::vector<std::vector<char>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && !m[pivot][col]) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != rank && m[r][col]) {
                for (std::size_t k = col; k < cols; ++k) m[r][k] ^= m[rank][k];
            }
        }
        ++rank;
    }
    return static_cast<std::int64_t>(rank);
}

}  // namespace

GridGrading grade_generator(const GridDiagram& g, std::span<const int> x) {
    const auto pts = lattice_points(x);
    const std::int64_t m_o = maslov_against(pts, marking_centres(g.o_perm()));
    const std::int64_t m_x = maslov_against(pts, marking_centres(g.x_perm()));
    return {HalfInteger::from_int(m_o), HalfInteger{m_o - m_x - (g.size() - g.components())}};
}

ChainComplex build_tilde_complex(const GridDiagram& g) {
    const int n = g.size();
    ChainComplex cx;
    cx.size = n;
    std::vector<std::vector<int>> gens;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        gens.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (const auto& x : gens) {
        for (int v : x) cx.generators.push_back(static_cast<std::uint8_t>(v));
        cx.gradings.push_back(grade_generator(g, x));
    }

    cx.offsets.push_back(0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& x = gens[i];
        std::vector<std::uint32_t> row;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            const auto& y = gens[j];
            std::vector<int> moved;
            for (int c = 0; c < n; ++c) {
                if (x[static_cast<std::size_t>(c)] != y[static_cast<std::size_t>(c)]) moved.push_back(c);
            }
            if (moved.size() != 2) continue;
            const int a = moved[0];
            const int b = moved[1];
            const int xa = x[static_cast<std::size_t>(a)];
            const int xb = x[static_cast<std::size_t>(b)];
            int count = 0;
            count += rectangle_is_empty(g, x, rectangle_cells(n, a, xa, b, xb));
            count += rectangle_is_empty(g, x, rectangle_cells(n, b, xb, a, xa));
            if (count % 2 == 0) continue;
            if (cx.gradings[j].maslov != cx.gradings[i].maslov - HalfInteger::from_int(1) ||
                cx.gradings[j].alexander != cx.gradings[i].alexander) {
                throw InternalConsistencyError("reference complex: rectangle with wrong grading change");
            }
            row.push_back(static_cast<std::uint32_t>(j));
        }
        cx.targets.insert(cx.targets.end(), row.begin(), row.end());
        cx.offsets.push_back(static_cast<std::uint32_t>(cx.targets.size()));
    }
    return cx;
}

bool boundary_squares_to_zero(const ChainComplex& cx) {
    const std::size_t count = cx.generator_count();
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<char> acc(count, 0);
        for (auto e = cx.offsets[i]; e < cx.offsets[i + 1]; ++e) {
            const auto mid = cx.targets[e];
            for (auto f = cx.offsets[mid]; f < cx.offsets[mid + 1]; ++f) acc[cx.targets[f]] ^= 1;
        }
        if (std::any_of(acc.begin(), acc.end(), [](char v) { return v != 0; })) return false;
    }
    return true;
}

BigradedRanks homology(const ChainComplex& cx) {
    std::map<GridGrading, std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < cx.generator_count(); ++i) blocks[cx.gradings[i]].push_back(i);

    auto differential_rank = [&](const GridGrading& from) -> std::int64_t {
        const GridGrading to{from.maslov - HalfInteger::from_int(1), from.alexander};
        auto src = blocks.find(from);
        auto dst = blocks.find(to);
        if (src == blocks.end() || dst == blocks.end()) return 0;
        std::vector<std::vector<char>> m(src->second.size(), std::vector<char>(dst->second.size(), 0));
        for (std::size_t r = 0; r < src->second.size(); ++r) {
            const auto s = src->second[r];
            for (auto e = cx.offsets[s]; e < cx.offsets[s + 1]; ++e) {
                auto pos = std::find(dst->second.begin(), dst->second.end(), cx.targets[e]);
                if (pos != dst->second.end()) m[r][static_cast<std::size_t>(pos - dst->second.begin())] ^= 1;
            }
        }
        return dense_rank(std::move(m));
    };

    BigradedRanks out;
    for (const auto& [key, members] : blocks) {
        const GridGrading above{key.maslov + HalfInteger::from_int(1), key.alexander};
        const std::int64_t kernel = static_cast<std::int64_t>(members.size()) - differential_rank(key);
        out.add(key, kernel - differential_rank(above));
    }
    return out;
}

}  // namespace contactcalc::gridhom::reference
