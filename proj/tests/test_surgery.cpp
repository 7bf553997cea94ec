#include <doctest.h>

#include <random>

#include "contactcalc/exact.hpp"
#include "contactcalc/surgery.hpp"
#include "oracles.hpp"

using namespace contactcalc;

namespace {

const ContactDescriptor kSphere = ContactDescriptor::standard_sphere();

LegendrianLinkData hopf_like(std::int64_t tb1, std::int64_t tb2, std::int64_t lk) {
    return LegendrianLinkData("pair", {tb1, tb2}, {0, 0}, {{0, lk}, {lk, 0}});
}

std::int64_t lk_sum(const LegendrianLinkData& link, std::size_t i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < link.components(); ++j) s += link.lk(j, i);
    return s;
}

}  // namespace

TEST_SUITE("surgery") {

TEST_CASE("matrices for a two-component link") {
    const auto mats = surgery::build_matrices(hopf_like(-1, -1, 1), 1);
    CHECK(mats.m == IntMatrix::from_rows({{0, -1}, {-1, -2}}));
    CHECK(mats.m0 == IntMatrix::from_rows({{0, -1, 1}, {-1, -2, 1}, {1, 1, 0}}));
    CHECK(exact::det(mats.m) == -1);
    // 0 (0 - 1) + 1 (0 - 1) + 1 (-1 + 2) = 0
    CHECK(exact::det(mats.m0) == 0);
}

TEST_CASE("matrix shapes and block structure") {
    const LegendrianLinkData three("three", {1, -1, 0}, {0, 0, 1}, {{0, 1, 0}, {1, 0, -1}, {0, -1, 0}});
    const auto mats = surgery::build_matrices(three, 2);
    REQUIRE(mats.m.rows() == 4);
    REQUIRE(mats.m0.rows() == 5);
    CHECK(mats.m(0, 0) == 2);
    CHECK(mats.m(1, 1) == 0);
    CHECK(mats.m(2, 2) == 0);
    CHECK(mats.m(3, 3) == -2);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 2; c < 4; ++c) CHECK(mats.m(r, c) == 1);
    CHECK(mats.m0(4, 4) == 0);
    CHECK(mats.m0(0, 4) == 0);
    CHECK(mats.m0(2, 4) == -1);

    const LegendrianLinkData split("split", {-1, -2, -3}, {0, 1, 0}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    const auto d = surgery::build_matrices(split, 2);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 2; c < 4; ++c) CHECK(d.m(r, c) == 0);
}

TEST_CASE("a knot has nothing to double") {
    CHECK_THROWS_AS(surgery::build_matrices(LegendrianLinkData::knot("u", -1, 0), 0), UnderflowError);
    CHECK_THROWS_AS(surgery::build_matrices(hopf_like(-1, -1, 1), 2), DimensionError);
}

TEST_CASE("surgered invariants on small examples") {
    CHECK(surgery::surgered_tb(hopf_like(-1, 3, 0), 1) == Rational(3));
    CHECK(surgery::surgered_rot(hopf_like(-1, 3, 0), 1) == Rational(0));
    const auto linked = hopf_like(-1, -1, 1);
    CHECK(surgery::surgered_tb(linked, 1) == Rational(-1));
    CHECK(surgery::surgered_rot(linked, 1) == Rational(-2));
}

TEST_CASE("d3 shift examples") {
    const auto unknot = LegendrianLinkData::knot("unknot", -1, 0);
    CHECK(surgery::half_torsion_d3_shift(unknot, kSphere).d3 == Rational(1));
    CHECK(surgery::inductive_d3_shift(unknot, kSphere).d3 == Rational(1));
    CHECK(surgery::half_torsion_d3_shift(LegendrianLinkData::knot("trefoil", 1, 0), kSphere).d3 == Rational(-1));
    const auto hopf = hopf_like(-1, -1, 1);
    CHECK(surgery::half_torsion_d3_shift(hopf, kSphere).d3 == Rational(0));
    CHECK(surgery::verified_d3_shift(hopf, kSphere).d3 == Rational(0));
    CHECK(surgery::half_torsion_d3_shift(hopf, {Rational(1, 2), "t"}).spinc_label == "t");
}

TEST_CASE("two-component shift matches a single induction step") {
    for (std::int64_t k = -3; k <= 3; ++k) {
        const LegendrianLinkData link("two", {-2, 1}, {1, 2}, {{0, k}, {k, 0}});
        const Rational expected(-(-2 + 1 + 2 * k) + 1 + 2);
        CHECK(surgery::inductive_d3_shift(link, kSphere).d3 == expected);
    }
}

TEST_CASE("matrix path agrees with the closed form on random links") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 250; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
        const auto link = oracle::random_link(rng, n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto mats = surgery::build_matrices(link, i);
            REQUIRE(exact::det(mats.m0) == 0);
            REQUIRE(surgery::surgered_tb(link, i) == Rational(link.tb(i)));
            REQUIRE(surgery::surgered_rot(link, i) == Rational(link.rot(i) - 2 * lk_sum(link, i)));
        }
        REQUIRE(surgery::inductive_d3_shift(link, kSphere) == surgery::half_torsion_d3_shift(link, kSphere));
        ++checked;
    }
    CHECK(checked >= 200);
}

TEST_CASE("non-null-homologous bordering is detected") {
    // Bordering column that does not repeat per doubled curve: det(M0) no longer vanishes.
    IntMatrix m0 = IntMatrix::from_rows({{0, -1, 1}, {-1, -2, 0}, {1, 0, 0}});
    CHECK(exact::det(m0) != 0);
}

TEST_CASE("stacked torsion layers") {
    const auto link = hopf_like(-2, 0, 1);
    const ContactDescriptor start{Rational(3), "s"};
    CHECK(surgery::torsion_layers_d3_shift(link, start, 0) == start);
    CHECK(surgery::torsion_layers_d3_shift(link, start, 2) == start);
    CHECK(surgery::torsion_layers_d3_shift(link, start, 1) == surgery::half_torsion_d3_shift(link, start));
    CHECK(surgery::torsion_layers_d3_shift(link, start, 5) == surgery::half_torsion_d3_shift(link, start));
}

}  // TEST_SUITE
