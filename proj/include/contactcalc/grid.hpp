#pragma once

// Toroidal grid diagrams: an N x N grid with one O and one X in every row
// and column. Column c carries its O in row o(c) and its X in row x(c).
//
// Text format:
//     N
//     o(0) ... o(N-1)
//     x(0) ... x(N-1)
// '#' starts a comment; blank lines and trailing whitespace are ignored.

#include <compare>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace contactcalc {

// Exact element of (1/2)Z, stored as twice its value.
struct HalfInteger {
    std::int64_t twice = 0;

    static HalfInteger from_int(std::int64_t v) { return {2 * v}; }
    bool is_integer() const { return twice % 2 == 0; }
    // Caller checks is_integer().
    std::int64_t to_int() const { return twice / 2; }
    std::string str() const;

    friend HalfInteger operator+(HalfInteger a, HalfInteger b) { return {a.twice + b.twice}; }
    friend HalfInteger operator-(HalfInteger a, HalfInteger b) { return {a.twice - b.twice}; }
    friend HalfInteger operator-(HalfInteger a) { return {-a.twice}; }
    friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
};

class GridDiagram {
public:
    // Throws DataError unless o and x are permutations that never share a cell.
    GridDiagram(std::vector<int> o, std::vector<int> x);

    int size() const { return static_cast<int>(o_.size()); }
    int o(int column) const { return o_[static_cast<std::size_t>(column)]; }
    int x(int column) const { return x_[static_cast<std::size_t>(column)]; }
    const std::vector<int>& o_perm() const { return o_; }
    const std::vector<int>& x_perm() const { return x_; }

    // Number of link components.
    int components() const { return components_; }
    // Component index (0-based, in order of first appearance) of the strand
    // through each column.
    const std::vector<int>& column_component() const { return column_component_; }

    friend bool operator==(const GridDiagram& a, const GridDiagram& b) { return a.o_ == b.o_ && a.x_ == b.x_; }

private:
    std::vector<int> o_;
    std::vector<int> x_;
    int components_ = 0;
    std::vector<int> column_component_;
};

namespace grid {

GridDiagram parse_grid(std::string_view text, const std::string& source = "<grid>");
GridDiagram load_grid(const std::filesystem::path& path);
std::string to_text(const GridDiagram& g);

// Reflection through a vertical axis, column c -> N-1-c. Vertical strands stay
// over horizontal ones, so this draws the mirror image.
GridDiagram mirror(const GridDiagram& g);

struct Crossing {
    int column;
    int row;
    int sign;                // +1 or -1
    int over_component;      // vertical strand
    int under_component;     // horizontal strand
};

// Crossings of the planar projection, oriented horizontally from O to X and
// vertically from X to O, with vertical strands on top.
std::vector<Crossing> crossings(const GridDiagram& g);
std::int64_t linking_number(const GridDiagram& g, int a, int b);
std::int64_t writhe(const GridDiagram& g);

}  // namespace grid
}  // namespace contactcalc
