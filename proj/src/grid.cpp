#include "contactcalc/grid.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "contactcalc/errors.hpp"

namespace contactcalc {

std::string HalfInteger::str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

GridDiagram::GridDiagram(std::vector<int> o, std::vector<int> x) : o_(std::move(o)), x_(std::move(x)) {
    const std::size_t n = o_.size();
    if (n < 2) throw DataError("grid size must be at least 2");
    if (x_.size() != n) throw DataError("O and X permutations have different lengths");
    auto check_perm = [n](const std::vector<int>& p, const char* which) {
        std::vector<bool> seen(n, false);
        for (int v : p) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) {
                throw DataError(std::string(which) + " entry " + std::to_string(v) + " out of range");
            }
            if (seen[static_cast<std::size_t>(v)]) {
                throw DataError(std::string(which) + " is not a permutation (row " + std::to_string(v) + " repeats)");
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    };
    check_perm(o_, "O");
    check_perm(x_, "X");
    for (std::size_t c = 0; c < n; ++c) {
        if (o_[c] == x_[c]) throw DataError("column " + std::to_string(c) + " has O and X in the same cell");
    }

    std::vector<int> x_inverse(n);
    for (std::size_t c = 0; c < n; ++c) x_inverse[static_cast<std::size_t>(x_[c])] = static_cast<int>(c);
    column_component_.assign(n, -1);
    for (std::size_t start = 0; start < n; ++start) {
        if (column_component_[start] >= 0) continue;
        // Follow vertical X->O in column c, then horizontal O->X to the next column.
        std::size_t c = start;
        while (column_component_[c] < 0) {
            column_component_[c] = components_;
            c = static_cast<std::size_t>(x_inverse[static_cast<std::size_t>(o_[c])]);
        }
        ++components_;
    }
}

namespace grid {

namespace {

std::vector<int> parse_ints(std::string_view line, const std::string& source, int lineno) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
        if (pos == line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
        int value = 0;
        const char* first = line.data() + pos;
        const char* last = line.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) {
            throw ParseError(source, lineno, "not an integer: '" + std::string(first, last) + "'");
        }
        out.push_back(value);
        pos = end;
    }
    return out;
}

}  // namespace

GridDiagram parse_grid(std::string_view text, const std::string& source) {
    std::vector<std::pair<int, std::vector<int>>> lines;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto values = parse_ints(line, source, lineno);
        if (!values.empty()) lines.emplace_back(lineno, std::move(values));
        if (end == text.size()) break;
        pos = end + 1;
    }

    if (lines.empty()) throw ParseError(source, lineno, "empty grid file");
    if (lines[0].second.size() != 1) throw ParseError(source, lines[0].first, "first line must hold the grid size only");
    const int n = lines[0].second[0];
    if (n < 2) throw ParseError(source, lines[0].first, "grid size must be at least 2");
    if (lines.size() < 3) throw ParseError(source, lineno, "expected O and X permutation lines");
    if (lines.size() > 3) throw ParseError(source, lines[3].first, "unexpected data after the X permutation");
    for (int k = 1; k <= 2; ++k) {
        if (static_cast<int>(lines[static_cast<std::size_t>(k)].second.size()) != n) {
            throw ParseError(source, lines[static_cast<std::size_t>(k)].first,
                             std::string(k == 1 ? "O" : "X") + " line needs " + std::to_string(n) + " entries");
        }
    }
    try {
        return GridDiagram(lines[1].second, lines[2].second);
    } catch (const DataError& e) {
        throw ParseError(source, lines[1].first, e.what());
    }
}

GridDiagram load_grid(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open grid file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_grid(buf.str(), path.string());
}

std::string to_text(const GridDiagram& g) {
    std::ostringstream os;
    os << g.size() << '\n';
    for (int c = 0; c < g.size(); ++c) os << (c ? " " : "") << g.o(c);
    os << '\n';
    for (int c = 0; c < g.size(); ++c) os << (c ? " " : "") << g.x(c);
    os << '\n';
    return os.str();
}

GridDiagram mirror(const GridDiagram& g) {
    const int n = g.size();
    std::vector<int> o(static_cast<std::size_t>(n));
    std::vector<int> x(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        o[static_cast<std::size_t>(n - 1 - c)] = g.o(c);
        x[static_cast<std::size_t>(n - 1 - c)] = g.x(c);
    }
    return GridDiagram(std::move(o), std::move(x));
}

std::vector<Crossing> crossings(const GridDiagram& g) {
    const int n = g.size();
    std::vector<int> o_inv(static_cast<std::size_t>(n));
    std::vector<int> x_inv(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        o_inv[static_cast<std::size_t>(g.o(c))] = c;
        x_inv[static_cast<std::size_t>(g.x(c))] = c;
    }
    std::vector<Crossing> out;
    for (int c = 0; c < n; ++c) {
        const int lo = std::min(g.o(c), g.x(c));
        const int hi = std::max(g.o(c), g.x(c));
        const int up = g.o(c) > g.x(c) ? 1 : -1;  // X -> O
        for (int r = lo + 1; r < hi; ++r) {
            const int from = o_inv[static_cast<std::size_t>(r)];
            const int to = x_inv[static_cast<std::size_t>(r)];
            if (c <= std::min(from, to) || c >= std::max(from, to)) continue;
            const int right = to > from ? 1 : -1;  // O -> X
            // Sign of over x under for over = (0, up), under = (right, 0).
            const int sign = -up * right;
            out.push_back({c, r, sign, g.column_component()[static_cast<std::size_t>(c)],
                           g.column_component()[static_cast<std::size_t>(from)]});
        }
    }
    return out;
}

std::int64_t linking_number(const GridDiagram& g, int a, int b) {
    std::int64_t sum = 0;
    for (const auto& x : crossings(g)) {
        if ((x.over_component == a && x.under_component == b) || (x.over_component == b && x.under_component == a)) {
            sum += x.sign;
        }
    }
    return sum / 2;
}

std::int64_t writhe(const GridDiagram& g) {
    std::int64_t sum = 0;
    for (const auto& x : crossings(g)) sum += x.sign;
    return sum;
}

}  // namespace grid
}  // namespace contactcalc
