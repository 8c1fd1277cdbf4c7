#pragma once

#include <string>

#include "pzmap/fixed_points.hpp"
#include "pzmap/model.hpp"

namespace pzmap {

// Characteristic polynomial F(lambda) = lambda^2 + B lambda + C of the
// Jacobian at a positive fixed point: B = -p(u), C = q(u).
struct CharPoly {
    double B;
    double C;

    double at_one() const { return 1.0 + B + C; }
    double at_minus_one() const { return 1.0 - B + C; }
};

// Root location of a real quadratic relative to the unit circle. The tags
// follow the case split on F(1) and F(-1):
//   F(1) > 0: both_inside, root_at_minus_one, one_outside_other_inside
//             (the outside root lies below -1), both_outside,
//             on_unit_circle_complex, double_minus_one
//   F(1) = 0: root_at_plus_one
//   F(1) < 0: one root above +1; the other is <= -1
//             (one_outside_other_leq_minus_one) or inside (saddle_split)
enum class RootLocation {
    both_inside,
    both_outside,
    saddle_split,
    on_unit_circle_complex,
    root_at_minus_one,
    double_minus_one,
    root_at_plus_one,
    one_outside_other_inside,
    one_outside_other_leq_minus_one,
};

std::string to_string(RootLocation t);

// Characteristic polynomial at the positive fixed point u_star; requires
// beta = Psi(u_star) to hold within 1e-8 (enforced by jacobian_at_fixed).
CharPoly char_poly_at(const Params& p, double u_star);

// Equality subcases (F(+-1) = 0, C = 1, B = 2) are taken with a 1e-9 band
// so the classifier is total in floating point.
RootLocation jury_classify(const CharPoly& cp);

// Stability kind of a positive fixed point. E1 is typed by q(u) against 1
// (band 1e-9); E2 must come out a saddle, anything else throws, because a
// non-saddle E2 means the solver or the classifier is broken.
Kind classify_E(const Params& p, const FixedPointRecord& fp);

}  // namespace pzmap
