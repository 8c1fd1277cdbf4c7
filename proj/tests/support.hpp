#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

// Deterministic RNG for property tests (splitmix64). No libc rand, no seeds
// from the clock: failures must reproduce bit-for-bit.
struct SplitMix {
    std::uint64_t s;

    explicit SplitMix(std::uint64_t seed) : s(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double unit() {  // [0,1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
};

inline bool close_abs(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
}

inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// central first derivative
inline double fd1(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// f(x+h) - 2f(x) + f(x-h) over h^2
inline double fd2(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// third derivative: (f(2h) - 2f(h) + 2f(-h) - f(-2h)) / (2 h^3)
inline double fd3(const std::function<double(double)>& f, double x, double h) {
    return (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) /
           (2.0 * h * h * h);
}

// mixed d^2/dxdy via the four-corner stencil
inline double fd_xy(const std::function<double(double, double)>& f, double x,
                    double y, double h, double k) {
    return (f(x + h, y + k) - f(x + h, y - k) - f(x - h, y + k) + f(x - h, y - k)) /
           (4.0 * h * k);
}

// mixed d^3/dx^2 dy
inline double fd_xxy(const std::function<double(double, double)>& f, double x,
                     double y, double h, double k) {
    const double top = f(x + h, y + k) - 2.0 * f(x, y + k) + f(x - h, y + k);
    const double bot = f(x + h, y - k) - 2.0 * f(x, y - k) + f(x - h, y - k);
    return (top - bot) / (2.0 * h * h * k);
}
