#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace pzmap::roots {

// Bracketed bisection. f(lo) and f(hi) must have opposite signs (or one of
// them be zero). Shrinks the bracket until its width drops below `width`
// relative to the magnitude of the endpoints, then returns the midpoint.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double width = 1e-13);

// Bisection followed by a few Newton steps. A Newton step that would leave
// the current bracket is rejected; the bisection result already has near
// full precision, Newton just sharpens the last digits.
double bisect_newton(const std::function<double(double)>& f,
                     const std::function<double(double)>& df, double lo,
                     double hi, double width = 1e-13, int polish = 5);

// Scan [lo, hi] with n equal subdivisions and bisect every sign change.
// Returns the roots in increasing order. Roots landing exactly on a grid
// node are taken as-is.
std::vector<double> scan_roots(const std::function<double(double)>& f,
                               double lo, double hi, int n);

// Cauchy bound for the real roots of a polynomial given by coefficients in
// decreasing degree order: 1 + max|c_i|/|c_0|.
double cauchy_bound(const std::vector<double>& coeffs);

// Real roots of a*x^3 + b*x^2 + c*x + d, increasing order. Degenerate
// leading coefficients fall back to the quadratic/linear case. Roots are
// isolated by a sign scan over the Cauchy interval (1e4 subdivisions) and
// polished by bisection; near-tangent pairs that the scan misses are
// recovered from the critical points of the cubic.
std::vector<double> cubic_real_roots(double a, double b, double c, double d);

// Discriminant of the cubic (used for diagnostics when root extraction
// disagrees with the expected count).
double cubic_discriminant(double a, double b, double c, double d);

}  // namespace pzmap::roots
