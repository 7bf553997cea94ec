#pragma once

/*
 * Linking-matrix description of a Lutz twist along a Legendrian link.
 *
 * Adding half Giroux torsion along the components of a link other than L_i is
 * presented by doubling each of those components into two surgery curves with
 * framings t_j + 1 and t_j - 1. M is the linking matrix of the doubled curves;
 * M0 borders it with the linking numbers of L_i and a zero corner. From these
 * the classical invariants of L_i inside the twisted structure follow:
 *
 *     tb'' = tb_i + det(M0) / det(M)
 *     rot'' = rot_i - < (l_ji, l_ji)_j , M^{-1} (r_j, r_j - 2)_j >
 *
 * Iterating component by component gives the d3 shift; the closed form is
 * d3' = d3 - tb(L) + rot(L).
 */

#include <cstddef>

#include "contactcalc/exact.hpp"
#include "contactcalc/model.hpp"

namespace contactcalc {

struct SurgeryMatrices {
    IntMatrix m;   // 2(n-1) x 2(n-1)
    IntMatrix m0;  // (2n-1) x (2n-1)
};

namespace surgery {

// Component `index` (0-based) plays the role of the last component; the others
// keep their stored order. Throws UnderflowError for a knot.
SurgeryMatrices build_matrices(const LegendrianLinkData& link, std::size_t index);

Rational surgered_tb(const LegendrianLinkData& link, std::size_t index);
Rational surgered_rot(const LegendrianLinkData& link, std::size_t index);

ContactDescriptor half_torsion_d3_shift(const LegendrianLinkData& link, const ContactDescriptor& ambient);

// Lutz twists added one component at a time through the matrix formulas.
ContactDescriptor inductive_d3_shift(const LegendrianLinkData& link, const ContactDescriptor& ambient);

// Closed form, after checking it against the matrix path; a disagreement
// throws InternalConsistencyError.
ContactDescriptor verified_d3_shift(const LegendrianLinkData& link, const ContactDescriptor& ambient);

// k stacked half-torsion layers along every component: even k leaves d3
// unchanged, odd k shifts it like a single layer.
ContactDescriptor torsion_layers_d3_shift(const LegendrianLinkData& link, const ContactDescriptor& ambient,
                                          unsigned layers);

}  // namespace surgery
}  // namespace contactcalc
