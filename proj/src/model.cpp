#include "contactcalc/model.hpp"

#include <string>

namespace contactcalc {

LegendrianLinkData::LegendrianLinkData(std::string name, std::vector<std::int64_t> tb,
                                       std::vector<std::int64_t> rot,
                                       std::vector<std::vector<std::int64_t>> lk)
    : name_(std::move(name)), tb_(std::move(tb)), rot_(std::move(rot)), lk_(std::move(lk)) {
    const std::size_t n = tb_.size();
    if (n == 0) throw DataError(name_ + ": a link needs at least one component");
    if (rot_.size() != n) throw DimensionError(name_ + ": tb and rot lengths differ");
    if (lk_.size() != n) throw DimensionError(name_ + ": lk must be " + std::to_string(n) + "x" + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (lk_[i].size() != n) throw DimensionError(name_ + ": lk row " + std::to_string(i) + " has wrong length");
        if (lk_[i][i] != 0) throw DataError(name_ + ": lk diagonal must be zero");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (lk_[i][j] != lk_[j][i]) throw DataError(name_ + ": lk must be symmetric");
        }
    }
    const std::int64_t parity = total_tb(*this) - total_rot(*this) + static_cast<std::int64_t>(n);
    if (parity % 2 != 0) {
        throw ParityError(name_ + ": tb - rot + n = " + std::to_string(parity) +
                          " is odd, data cannot come from a null-homologous link");
    }
}

LegendrianLinkData LegendrianLinkData::knot(std::string name, std::int64_t tb, std::int64_t rot) {
    return LegendrianLinkData(std::move(name), {tb}, {rot}, {{0}});
}

LegendrianLinkData LegendrianLinkData::sublink(std::span<const std::size_t> indices) const {
    std::vector<std::int64_t> tb;
    std::vector<std::int64_t> rot;
    std::vector<std::vector<std::int64_t>> lk;
    for (std::size_t i : indices) {
        if (i >= components()) throw DimensionError(name_ + ": component index out of range");
        tb.push_back(tb_[i]);
        rot.push_back(rot_[i]);
        std::vector<std::int64_t> row;
        for (std::size_t j : indices) row.push_back(lk_[i][j]);
        lk.push_back(std::move(row));
    }
    std::string label = name_ + "{";
    for (std::size_t k = 0; k < indices.size(); ++k) label += (k ? "," : "") + std::to_string(indices[k] + 1);
    label += "}";
    return LegendrianLinkData(std::move(label), std::move(tb), std::move(rot), std::move(lk));
}

std::int64_t total_tb(const LegendrianLinkData& link) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < link.components(); ++i) {
        sum += link.tb(i);
        for (std::size_t j = i + 1; j < link.components(); ++j) sum += 2 * link.lk(i, j);
    }
    return sum;
}

std::int64_t total_rot(const LegendrianLinkData& link) {
    std::int64_t sum = 0;
    for (std::int64_t r : link.rot_values()) sum += r;
    return sum;
}

std::int64_t self_linking(const LegendrianLinkData& link) { return total_tb(link) - total_rot(link); }

const KnownD3* SmoothLinkRecord::find_known(const std::string& label) const {
    for (const auto& k : known_d3) {
        if (k.label == label) return &k;
    }
    return nullptr;
}

void validate(const SmoothLinkRecord& r) {
    auto fail = [&](const std::string& what) { throw DataError(r.name + ": " + what); };
    if (r.name.empty()) throw DataError("record without a name");
    if (r.n < 1) fail("component count must be positive");
    if (r.n == 1 && r.tau_star && *r.tau_star != r.tau) fail("a knot must have tau = tau*");
    if (r.thurston_norm && *r.thurston_norm < 0) fail("Thurston norm is negative");
    if (r.thickness && *r.thickness < 0) fail("thickness is negative");
    if (r.genus3 && *r.genus3 < 0) fail("genus is negative");
    if (r.alexander_poly && r.n != 1) fail("Alexander polynomials are stored for knots only");
    if (r.fibered && r.top_class && r.genus3) {
        if (r.top_class->alexander != *r.genus3 + r.n - 1) {
            fail("fibered top class Atop = " + std::to_string(r.top_class->alexander) +
                 " but g3 + n - 1 = " + std::to_string(*r.genus3 + r.n - 1));
        }
        if (r.strongly_quasi_positive && r.top_class->maslov != 2 * *r.genus3 + r.n - 1) {
            fail("strongly quasi-positive fibered top class Mtop = " +
                 std::to_string(r.top_class->maslov) + " but 2 g3 + n - 1 = " +
                 std::to_string(2 * *r.genus3 + r.n - 1));
        }
    }
    if (r.max_self_linking && *r.max_self_linking > 2 * r.tau - r.n) {
        fail("maximal self-linking " + std::to_string(*r.max_self_linking) + " exceeds 2 tau - n");
    }
    if (r.strongly_quasi_positive && !r.quasi_positive) fail("strongly quasi-positive implies quasi-positive");
}

}  // namespace contactcalc
