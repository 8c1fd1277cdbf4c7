#include "pzmap/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pzmap::roots {

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double width) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi))
        throw std::invalid_argument("bisect: endpoints do not bracket a root");
    // cap well above the ~60 iterations needed for doubles
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo < width * std::max(1.0, std::abs(mid))) return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (std::signbit(fm) == std::signbit(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double bisect_newton(const std::function<double(double)>& f,
                     const std::function<double(double)>& df, double lo,
                     double hi, double width, int polish) {
    double x = bisect(f, lo, hi, width);
    for (int i = 0; i < polish; ++i) {
        const double d = df(x);
        if (d == 0.0 || !std::isfinite(d)) break;
        const double x2 = x - f(x) / d;
        if (!(x2 >= lo && x2 <= hi)) break;  // reject steps leaving the bracket
        if (x2 == x) break;
        x = x2;
    }
    return x;
}

std::vector<double> scan_roots(const std::function<double(double)>& f,
                               double lo, double hi, int n) {
    std::vector<double> out;
    if (!(hi > lo) || n < 1) return out;
    double xprev = lo;
    double fprev = f(lo);
    if (fprev == 0.0) out.push_back(lo);
    for (int i = 1; i <= n; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / n;
        const double fx = f(x);
        if (fx == 0.0) {
            out.push_back(x);
        } else if (fprev != 0.0 && std::signbit(fx) != std::signbit(fprev)) {
            out.push_back(bisect(f, xprev, x));
        }
        xprev = x;
        fprev = fx;
    }
    return out;
}

double cauchy_bound(const std::vector<double>& coeffs) {
    if (coeffs.empty() || coeffs.front() == 0.0)
        throw std::invalid_argument("cauchy_bound: zero leading coefficient");
    double m = 0.0;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        m = std::max(m, std::abs(coeffs[i]));
    return 1.0 + m / std::abs(coeffs.front());
}

double cubic_discriminant(double a, double b, double c, double d) {
    return 18.0 * a * b * c * d - 4.0 * b * b * b * d + b * b * c * c -
           4.0 * a * c * c * c - 27.0 * a * a * d * d;
}

namespace {

std::vector<double> quadratic_real_roots(double a, double b, double c) {
    std::vector<double> out;
    if (a == 0.0) {
        if (b != 0.0) out.push_back(-c / b);
        return out;
    }
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return out;
    // the numerically stable pairing: bigger-magnitude root first
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (b + std::copysign(sq, b));
    if (q == 0.0) {
        out.push_back(0.0);
        if (disc > 0.0) out.push_back(-b / a);
    } else {
        out.push_back(q / a);
        out.push_back(c / q);
    }
    std::sort(out.begin(), out.end());
    if (out.size() == 2 && out[0] == out[1]) out.pop_back();
    return out;
}

}  // namespace

std::vector<double> cubic_real_roots(double a, double b, double c, double d) {
    constexpr double kLeadEps = 1e-14;
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (scale == 0.0) return {};
    if (std::abs(a) < kLeadEps * scale) return quadratic_real_roots(b, c, d);

    auto f = [=](double x) { return ((a * x + b) * x + c) * x + d; };
    const double bound = cauchy_bound({a, b, c, d});
    std::vector<double> out = scan_roots(f, -bound, bound, 10000);

    if (out.size() < 3) {
        // a close root pair can hide inside one subdivision; the critical
        // points split the axis into monotone pieces where brackets are exact
        std::vector<double> crit = quadratic_real_roots(3.0 * a, 2.0 * b, c);
        std::vector<double> nodes{-bound};
        for (double t : crit)
            if (t > -bound && t < bound) nodes.push_back(t);
        nodes.push_back(bound);
        std::vector<double> refined;
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            const double flo = f(nodes[i]);
            const double fhi = f(nodes[i + 1]);
            if (flo == 0.0) {
                refined.push_back(nodes[i]);
            } else if (fhi != 0.0 && std::signbit(flo) != std::signbit(fhi)) {
                refined.push_back(bisect(f, nodes[i], nodes[i + 1]));
            }
        }
        if (f(bound) == 0.0) refined.push_back(bound);
        if (refined.size() > out.size()) out = std::move(refined);
    }

    std::sort(out.begin(), out.end());
    // collapse duplicates the two passes may both have found
    const double tol = 1e-9 * std::max(1.0, bound);
    out.erase(std::unique(out.begin(), out.end(),
                          [tol](double x, double y) { return std::abs(x - y) < tol; }),
              out.end());
    return out;
}

}  // namespace pzmap::roots
