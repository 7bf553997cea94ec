#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "contactcalc/errors.hpp"
#include "contactcalc/grid.hpp"
#include "grid_helpers.hpp"

using namespace contactcalc;

TEST_SUITE("grid") {

TEST_CASE("half integers") {
    CHECK(HalfInteger{3}.str() == "3/2");
    CHECK(HalfInteger{-3}.str() == "-3/2");
    CHECK(HalfInteger::from_int(-2).str() == "-2");
    CHECK(HalfInteger{4}.to_int() == 2);
    CHECK_FALSE(HalfInteger{1}.is_integer());
    CHECK(HalfInteger{1} + HalfInteger{1} == HalfInteger::from_int(1));
    CHECK(HalfInteger{1} < HalfInteger{2});
}

TEST_CASE("parse the smallest unknot") {
    const auto g = grid::parse_grid("2\n0 1\n1 0\n");
    CHECK(g.size() == 2);
    CHECK(g.components() == 1);
    CHECK(grid::to_text(g) == "2\n0 1\n1 0\n");
    CHECK(grid::parse_grid(grid::to_text(g)) == g);
}

TEST_CASE("comments, blank lines and trailing whitespace") {
    const auto g = grid::parse_grid("# Hopf link\n\n4   \n3 2 1 0 # O row per column\n\n1 0 3 2\t\n");
    CHECK(g.components() == 2);
    CHECK(g.o_perm() == std::vector<int>{3, 2, 1, 0});
}

TEST_CASE("the Hopf grids have two components and opposite linking") {
    const auto pos = grid::load_grid(test_paths::corpus() / "grids" / "hopf4.grid");
    const auto neg = grid::load_grid(test_paths::corpus() / "grids" / "hopf4-negative.grid");
    CHECK(pos.components() == 2);
    CHECK(neg.components() == 2);
    CHECK(grid::linking_number(pos, 0, 1) == 1);
    CHECK(grid::linking_number(neg, 0, 1) == -1);
    CHECK(grid::linking_number(grid::mirror(pos), 0, 1) == -1);
}

TEST_CASE("component cycles of the corpus grids") {
    for (const char* name : {"unknot2", "trefoil5", "t25", "t34"}) {
        const auto g = grid::load_grid(test_paths::corpus() / "grids" / (std::string(name) + ".grid"));
        CHECK_MESSAGE(g.components() == 1, name);
    }
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            grid::parse_grid(text, "t");
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("") >= 0);
    CHECK(line_of("2 3\n0 1\n1 0\n") == 1);
    CHECK(line_of("2\n0 1\n") >= 2);
    CHECK(line_of("# c\n2\n0 x\n1 0\n") == 3);
    CHECK(line_of("2\n0 1\n1 0 1\n") == 3);
    CHECK(line_of("2\n0 1\n1 0\n5\n") == 4);
    CHECK(line_of("1\n0\n0\n") == 1);
    CHECK(line_of("3\n0 1 1\n1 2 0\n") > 0);
    // O and X in the same cell.
    CHECK(line_of("2\n0 1\n0 1\n") > 0);
    CHECK_THROWS_AS(grid::load_grid("/nonexistent/grid"), ParseError);
}

TEST_CASE("construction rejects collisions") {
    CHECK_THROWS_AS(GridDiagram({0, 1, 2}, {1, 1, 0}), DataError);
    CHECK_THROWS_AS(GridDiagram({0, 1, 2}, {1, 2, 2}), DataError);
    CHECK_THROWS_AS(GridDiagram({0, 1}, {0, 1}), DataError);
    CHECK_THROWS_AS(GridDiagram({0, 1}, {1, 0, 2}), DataError);
}

TEST_CASE("mirror is an involution and negates writhe and linking") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + trial % 7;
        const auto g = test_grids::random_grid(rng, n);
        const auto m = grid::mirror(g);
        REQUIRE(grid::mirror(m) == g);
        CHECK(m.components() == g.components());
        CHECK(grid::writhe(m) == -grid::writhe(g));
        // Components are numbered by first appearance, so relabel through the reflected columns.
        std::vector<int> label(static_cast<std::size_t>(g.components()));
        for (int c = 0; c < n; ++c) {
            label[static_cast<std::size_t>(g.column_component()[static_cast<std::size_t>(c)])] =
                m.column_component()[static_cast<std::size_t>(n - 1 - c)];
        }
        for (int a = 0; a < g.components(); ++a)
            for (int b = a + 1; b < g.components(); ++b)
                CHECK(grid::linking_number(m, label[static_cast<std::size_t>(a)], label[static_cast<std::size_t>(b)]) ==
                      -grid::linking_number(g, a, b));
    }
}

TEST_CASE("the unknot grid is its own mirror up to relabeling") {
    const auto g = grid::parse_grid("2\n0 1\n1 0\n");
    CHECK(grid::mirror(g).components() == 1);
    CHECK(grid::writhe(g) == 0);
}

}  // TEST_SUITE
