#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pzmap/model.hpp"

namespace pzmap {

enum class Region { R1, R2, R3, R4, R5 };

std::string to_string(Region r);

// Region tag plus the threshold values the decision actually compared against.
struct RegionLabel {
    Region tag;
    double gamma_lo;                        // sqrt(2) - 1
    double gamma_hi;                        // sqrt(7) - 2
    std::optional<double> theta_lo;         // 4 r g (1+g) / (3 - 4g - g^2)
    std::optional<double> theta_hi;         // 2 r g (1+g)^2 / (1 - 2g - g^2)
};

enum class Branch { origin, boundary, E1, E2 };
enum class Kind { attracting, repelling, saddle, nonhyperbolic };

std::string to_string(Branch b);
std::string to_string(Kind k);

struct FixedPointRecord {
    double u = 0.0;
    double v = 0.0;
    Branch branch = Branch::E1;
    Kind kind = Kind::attracting;
    bool tangency = false;  // set when beta sits on the Psi(u_hat) double root
};

// Unique positive root of h. Bracketed on (0, Cauchy bound), bisected, then
// Newton-polished; h'(u_hat) > 0 always holds there.
double u_hat(const Params& p);

// Region classification. The open gap the region table leaves at
// theta == theta_hi (for gamma < sqrt(2)-1) is resolved downward into R3,
// matching the case split used to derive the table.
RegionLabel classify_region(const Params& p);

// All positive fixed points (0, 1, or 2), sorted by u and labeled E1/E2,
// with stability kinds filled in. Solves Psi(u) = beta on the monotone
// pieces of Psi split at u_hat.
std::vector<FixedPointRecord> positive_fixed_points(const Params& p);

// Classification of the boundary fixed points (0,0) and (1,0).
std::pair<Kind, Kind> boundary_classification(const Params& p);

// Eigenvalue of the (1,0) Jacobian along the v-direction,
// 1 - r + beta/(1+g^2) - theta/(1+g); the u-direction eigenvalue is 0.
double boundary_lambda2(const Params& p);

}  // namespace pzmap
