#pragma once

// Combinatorial grid homology over F2, fully blocked flavor.
//
// Generators of the complex are permutations x of {0..N-1}, read as the
// lattice points (c, x(c)) of the toroidal grid. The differential counts
// rectangles that contain no O, no X and no point of x in their interior.
// The homology of that complex is HFL-hat tensored with N - l copies of a
// two-dimensional space W supported in (M, A) = (0, 0) and (-1, -1), so
// dividing its Poincare polynomial by (1 + m^-1 a^-1)^(N-l) recovers HFL-hat
// with the collapsed Alexander grading.
//
// Two implementations of the complex live side by side:
//   gridhom::kernels    flat arrays, rank lookup by Lehmer code, OpenMP loops
//   gridhom::reference  serial, geometric, written for readability
// The public pipeline functions use the kernels; tests compare both.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "contactcalc/gradings.hpp"
#include "contactcalc/grid.hpp"
#include "contactcalc/model.hpp"

namespace contactcalc {

struct GridGrading {
    HalfInteger maslov;
    HalfInteger alexander;
    friend auto operator<=>(const GridGrading&, const GridGrading&) = default;
};

class BigradedRanks {
public:
    // Zero ranks are dropped; negative ranks throw InternalConsistencyError.
    void add(GridGrading at, std::int64_t rank);
    std::int64_t rank(GridGrading at) const;
    std::int64_t total() const;
    bool empty() const { return ranks_.empty(); }
    const std::map<GridGrading, std::int64_t>& support() const { return ranks_; }

    // "{(M,A):r, ...}" in increasing (M, A) order.
    std::string str() const;

    friend bool operator==(const BigradedRanks&, const BigradedRanks&) = default;

private:
    std::map<GridGrading, std::int64_t> ranks_;
};

// F2 chain complex in compressed sparse row form: the boundary of generator i
// is the sum of targets[offsets[i] .. offsets[i+1]).
struct ChainComplex {
    int size = 0;                          // N
    std::vector<std::uint8_t> generators;  // N entries per generator
    std::vector<GridGrading> gradings;
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> targets;

    std::size_t generator_count() const { return gradings.size(); }
};

namespace gridhom {

inline constexpr int kMaxGridSize = 8;

GridGrading grade_generator(const GridDiagram& g, std::span<const int> x);

BigradedRanks tilde_differential_rank(const GridDiagram& g);
BigradedRanks deduce_hfl_hat(const BigradedRanks& tilde, const GridDiagram& g);
std::int64_t thickness(const BigradedRanks& h);
Bigrading top_class(const BigradedRanks& h);

// Graded Euler characteristic, exponent of t -> coefficient. Integral
// Alexander gradings only.
std::map<std::int64_t, std::int64_t> euler_characteristic(const BigradedRanks& h);
bool euler_char_oracle(const BigradedRanks& h, const SmoothLinkRecord& record);

// rank(M, A) == rank(M - 2A, -A) everywhere.
bool is_symmetric(const BigradedRanks& h);

namespace kernels {

std::vector<std::uint8_t> enumerate_generators(int n);
std::uint32_t lehmer_rank(const std::uint8_t* perm, int n);
std::vector<GridGrading> grade_all(const GridDiagram& g, const std::vector<std::uint8_t>& generators);
// Throws ResourceError when N exceeds kMaxGridSize.
ChainComplex build_tilde_complex(const GridDiagram& g);
bool boundary_squares_to_zero(const ChainComplex& cx);
BigradedRanks homology(const ChainComplex& cx);

}  // namespace kernels

namespace reference {

GridGrading grade_generator(const GridDiagram& g, std::span<const int> x);
ChainComplex build_tilde_complex(const GridDiagram& g);
bool boundary_squares_to_zero(const ChainComplex& cx);
BigradedRanks homology(const ChainComplex& cx);

}  // namespace reference
}  // namespace gridhom
}  // namespace contactcalc
