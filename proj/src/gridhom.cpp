#include "contactcalc/gridhom.hpp"

#include <set>
#include <sstream>

#include "contactcalc/errors.hpp"

namespace contactcalc {

void BigradedRanks::add(GridGrading at, std::int64_t rank) {
    if (rank < 0) {
        throw InternalConsistencyError("negative rank at (" + at.maslov.str() + "," + at.alexander.str() + ")");
    }
    if (rank == 0) return;
    ranks_[at] += rank;
}

std::int64_t BigradedRanks::rank(GridGrading at) const {
    auto it = ranks_.find(at);
    return it == ranks_.end() ? 0 : it->second;
}

std::int64_t BigradedRanks::total() const {
    std::int64_t sum = 0;
    for (const auto& [at, r] : ranks_) sum += r;
    return sum;
}

std::string BigradedRanks::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [at, r] : ranks_) {
        os << (first ? "" : ", ") << '(' << at.maslov.str() << ',' << at.alexander.str() << "):" << r;
        first = false;
    }
    os << '}';
    return os.str();
}

namespace gridhom {

namespace {

const HalfInteger kOne = HalfInteger::from_int(1);

// Divides the Poincare polynomial by (1 + m^-1 a^-1) once.
BigradedRanks divide_once(const BigradedRanks& p) {
    std::map<GridGrading, std::int64_t> q;
    for (auto it = p.support().rbegin(); it != p.support().rend(); ++it) {
        const GridGrading at = it->first;
        const GridGrading up{at.maslov + kOne, at.alexander + kOne};
        auto above = q.find(up);
        q[at] = it->second - (above == q.end() ? 0 : above->second);
    }

    BigradedRanks out;
    BigradedRanks back;
    for (const auto& [at, r] : q) {
        if (r < 0) throw InternalConsistencyError("tilde homology is not divisible by W: negative quotient");
        out.add(at, r);
        back.add(at, r);
        back.add({at.maslov - kOne, at.alexander - kOne}, r);
    }
    if (!(back == p)) throw InternalConsistencyError("tilde homology is not divisible by W");
    return out;
}

}  // namespace

GridGrading grade_generator(const GridDiagram& g, std::span<const int> x) {
    if (static_cast<int>(x.size()) != g.size()) throw DataError("generator length differs from the grid size");
    std::vector<std::uint8_t> packed;
    std::vector<bool> seen(x.size(), false);
    for (int v : x) {
        if (v < 0 || v >= g.size() || seen[static_cast<std::size_t>(v)]) throw DataError("generator is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
        packed.push_back(static_cast<std::uint8_t>(v));
    }
    return kernels::grade_all(g, packed).front();
}

BigradedRanks tilde_differential_rank(const GridDiagram& g) {
    return kernels::homology(kernels::build_tilde_complex(g));
}

BigradedRanks deduce_hfl_hat(const BigradedRanks& tilde, const GridDiagram& g) {
    BigradedRanks h = tilde;
    for (int k = 0; k < g.size() - g.components(); ++k) h = divide_once(h);
    return h;
}

std::int64_t thickness(const BigradedRanks& h) {
    if (h.empty()) throw DataError("thickness of empty homology");
    std::set<HalfInteger> deltas;
    for (const auto& [at, r] : h.support()) deltas.insert(at.alexander - at.maslov);
    return static_cast<std::int64_t>(deltas.size()) - 1;
}

Bigrading top_class(const BigradedRanks& h) {
    if (h.empty()) throw DataError("top class of empty homology");
    HalfInteger top = h.support().begin()->first.alexander;
    for (const auto& [at, r] : h.support()) top = std::max(top, at.alexander);
    std::int64_t rank = 0;
    GridGrading where{};
    for (const auto& [at, r] : h.support()) {
        if (at.alexander == top) {
            rank += r;
            where = at;
        }
    }
    if (rank != 1) {
        throw NonUniqueTopError("top Alexander grading " + top.str() + " has rank " + std::to_string(rank));
    }
    if (!where.maslov.is_integer() || !where.alexander.is_integer()) {
        throw DataError("top class sits in a half-integral grading");
    }
    return {where.maslov.to_int(), where.alexander.to_int()};
}

std::map<std::int64_t, std::int64_t> euler_characteristic(const BigradedRanks& h) {
    std::map<std::int64_t, std::int64_t> chi;
    for (const auto& [at, r] : h.support()) {
        if (!at.maslov.is_integer() || !at.alexander.is_integer()) {
            throw DataError("Euler characteristic needs integral gradings");
        }
        chi[at.alexander.to_int()] += (at.maslov.to_int() % 2 == 0 ? r : -r);
    }
    std::erase_if(chi, [](const auto& kv) { return kv.second == 0; });
    return chi;
}

bool euler_char_oracle(const BigradedRanks& h, const SmoothLinkRecord& record) {
    if (record.n != 1) throw ApplicabilityError(record.name + ": the Euler-characteristic check is for knots");
    const auto& poly = require(record.alexander_poly, "alexanderPoly", record.name);
    auto expected = poly;
    std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
    return euler_characteristic(h) == expected;
}

bool is_symmetric(const BigradedRanks& h) {
    for (const auto& [at, r] : h.support()) {
        const GridGrading partner{at.maslov - at.alexander - at.alexander, -at.alexander};
        if (h.rank(partner) != r) return false;
    }
    return true;
}

}  // namespace gridhom
}  // namespace contactcalc
