#include "contactcalc/surgery.hpp"

#include <numeric>
#include <vector>

#include "contactcalc/errors.hpp"

namespace contactcalc::surgery {

namespace {

std::vector<std::size_t> doubled_components(const LegendrianLinkData& link, std::size_t index) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < link.components(); ++j) {
        if (j != index) others.push_back(j);
    }
    return others;
}

Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

void require_index(const LegendrianLinkData& link, std::size_t index) {
    if (link.components() < 2) {
        throw UnderflowError(link.name() + ": a knot has no other components to double");
    }
    if (index >= link.components()) {
        throw DimensionError(link.name() + ": component index " + std::to_string(index) + " out of range");
    }
}

}  // namespace

SurgeryMatrices build_matrices(const LegendrianLinkData& link, std::size_t index) {
    require_index(link, index);
    const auto others = doubled_components(link, index);
    const std::size_t dim = 2 * others.size();

    IntMatrix m(dim, dim);
    for (std::size_t a = 0; a < others.size(); ++a) {
        const std::size_t ja = others[a];
        for (std::size_t b = 0; b < others.size(); ++b) {
            const std::size_t jb = others[b];
            for (std::size_t r = 0; r < 2; ++r) {
                for (std::size_t c = 0; c < 2; ++c) {
                    Integer v;
                    if (a == b) {
                        // [[t+1, t], [t, t-1]]
                        const std::int64_t t = link.tb(ja);
                        v = to_integer(r == 0 && c == 0 ? t + 1 : (r == 1 && c == 1 ? t - 1 : t));
                    } else {
                        v = to_integer(link.lk(ja, jb));
                    }
                    m(2 * a + r, 2 * b + c) = v;
                }
            }
        }
    }

    IntMatrix m0(dim + 1, dim + 1);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) m0(r, c) = m(r, c);
    }
    for (std::size_t a = 0; a < others.size(); ++a) {
        const Integer l = to_integer(link.lk(others[a], index));
        for (std::size_t r = 0; r < 2; ++r) {
            m0(2 * a + r, dim) = l;
            m0(dim, 2 * a + r) = l;
        }
    }
    return {std::move(m), std::move(m0)};
}

Rational surgered_tb(const LegendrianLinkData& link, std::size_t index) {
    const auto [m, m0] = build_matrices(link, index);
    const Integer det_m = exact::det(m);
    if (det_m == 0) {
        throw SingularMatrixError(link.name() + ": det(M) = 0, the surgered manifold is not a rational homology sphere");
    }
    return Rational(link.tb(index)) + Rational(exact::det(m0), det_m);
}

Rational surgered_rot(const LegendrianLinkData& link, std::size_t index) {
    const auto [m, m0] = build_matrices(link, index);
    const auto others = doubled_components(link, index);
    std::vector<Integer> rhs;
    std::vector<Integer> pairing;
    for (std::size_t j : others) {
        rhs.push_back(to_integer(link.rot(j)));
        rhs.push_back(to_integer(link.rot(j) - 2));
        pairing.push_back(to_integer(link.lk(j, index)));
        pairing.push_back(to_integer(link.lk(j, index)));
    }
    const auto x = exact::solve(m, rhs);
    return Rational(link.rot(index)) - exact::inner_product(pairing, x);
}

ContactDescriptor half_torsion_d3_shift(const LegendrianLinkData& link, const ContactDescriptor& ambient) {
    // The Lutz twist keeps the spin-c structure of a null-homologous link.
    return {ambient.d3 - Rational(total_tb(link)) + Rational(total_rot(link)), ambient.spinc_label};
}

ContactDescriptor inductive_d3_shift(const LegendrianLinkData& link, const ContactDescriptor& ambient) {
    Rational d3 = ambient.d3 - Rational(link.tb(0)) + Rational(link.rot(0));
    for (std::size_t k = 1; k < link.components(); ++k) {
        std::vector<std::size_t> prefix(k + 1);
        std::iota(prefix.begin(), prefix.end(), std::size_t{0});
        const auto stage = link.sublink(prefix);
        d3 -= surgered_tb(stage, k);
        d3 += surgered_rot(stage, k);
    }
    return {d3, ambient.spinc_label};
}

ContactDescriptor verified_d3_shift(const LegendrianLinkData& link, const ContactDescriptor& ambient) {
    const auto closed = half_torsion_d3_shift(link, ambient);
    const auto matrix = inductive_d3_shift(link, ambient);
    if (closed != matrix) {
        throw InternalConsistencyError(link.name() + ": matrix path gives d3 = " + matrix.d3.str() +
                                       " but the closed form gives " + closed.d3.str());
    }
    return closed;
}

ContactDescriptor torsion_layers_d3_shift(const LegendrianLinkData& link, const ContactDescriptor& ambient,
                                          unsigned layers) {
    if (layers % 2 == 0) return ambient;
    return half_torsion_d3_shift(link, ambient);
}

}  // namespace contactcalc::surgery
