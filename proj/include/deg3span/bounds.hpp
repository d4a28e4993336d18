#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace deg3span {

// f(x, alpha) = (1 - x + alpha) / sqrt((x sin a)^2 + (1 - x cos a)^2),
// the path-over-distance bound for the near-endpoint chain configuration.
// Certified maximum over 0 < x <= 1, 0 < alpha <= pi/3:
// sqrt(1 + (3+2pi)^2/27) ~= 2.047378897.
inline double eval_f(double x, double alpha) {
    double a = x * std::sin(alpha);
    double b = 1.0 - x * std::cos(alpha);
    double den = std::sqrt(a * a + b * b);
    if (den == 0.0) throw domain_error("f undefined: denominator vanishes");
    return (1.0 - x + alpha) / den;
}

// g(x, alpha) = (2(alpha + cos a) - (x + pi/3)) / same denominator, for
// pi/3 <= alpha <= pi/2, 0 < x <= 2 cos alpha. Certified maximum 2*pi/3,
// approached in the x -> 0, alpha -> pi/2 corner.
inline double eval_g(double x, double alpha) {
    double a = x * std::sin(alpha);
    double b = 1.0 - x * std::cos(alpha);
    double den = std::sqrt(a * a + b * b);
    if (den == 0.0) throw domain_error("g undefined: denominator vanishes");
    return (2.0 * (alpha + std::cos(alpha)) - (x + std::numbers::pi / 3.0)) / den;
}

inline double f_bound() {
    double c = 3.0 + 2.0 * std::numbers::pi;
    return std::sqrt(1.0 + c * c / 27.0);
}

inline double g_bound() { return 2.0 * std::numbers::pi / 3.0; }

enum class BoundFunction { F, G };

// Scan box. Lower edges of both axes are open (sampled from the first interior
// grid node); for G the per-alpha x range is additionally capped by 2 cos alpha
// and sampled no lower than delta = 1e-9 (the x = 0 corner is a limit point of
// the domain, not a member).
struct BoundDomain {
    BoundFunction function = BoundFunction::F;
    double x_lo = 0.0, x_hi = 1.0;
    bool x_lo_open = true;
    double alpha_lo = 0.0, alpha_hi = std::numbers::pi / 3.0;
    bool alpha_lo_open = true;
    int steps = 2000;
};

inline BoundDomain domain_f(int steps = 2000) { return BoundDomain{BoundFunction::F, 0.0, 1.0, true, 0.0, std::numbers::pi / 3.0, true, steps}; }

inline BoundDomain domain_g(int steps = 2000) {
    return BoundDomain{BoundFunction::G, 0.0, 2.0, true, std::numbers::pi / 3.0, std::numbers::pi / 2.0, false, steps};
}

struct ScanResult {
    double max_value = -std::numeric_limits<double>::infinity();
    double arg_x = 0.0;
    double arg_alpha = 0.0;
    double bound = 0.0;
    bool satisfied = false;
};

namespace detail {

inline constexpr double kBoundsDelta = 1e-9;

inline void scan_window(const BoundDomain& d, double xl, double xh, double al, double ah,
                        bool open_x, bool open_a, int steps, ScanResult& r) {
    bool is_g = d.function == BoundFunction::G;
    for (int i = open_a ? 1 : 0; i <= steps; ++i) {
        double alpha = al + (ah - al) * (double)i / (double)steps;
        double x_cap = xh;
        if (is_g) x_cap = std::min(x_cap, 2.0 * std::cos(alpha));
        double x_floor = std::max(xl, is_g ? kBoundsDelta : xl);
        if (x_cap < x_floor) continue;
        for (int j = open_x ? 1 : 0; j <= steps; ++j) {
            double x = x_floor + (x_cap - x_floor) * (double)j / (double)steps;
            if (x <= 0.0) continue;
            double v = is_g ? eval_g(x, alpha) : eval_f(x, alpha);
            if (v > r.max_value) {
                r.max_value = v;
                r.arg_x = x;
                r.arg_alpha = alpha;
            }
        }
    }
}

} // namespace detail

// Dense grid scan of the whole box followed by three rounds of subdivision in
// a shrinking window around the running argmax. Reports whether the maximum
// stays under the certified bound (+1e-9).
inline ScanResult scan_max(const BoundDomain& d) {
    if (d.steps < 2) throw input_error("scan_max needs steps >= 2");
    ScanResult r;
    r.bound = d.function == BoundFunction::F ? f_bound() : g_bound();
    detail::scan_window(d, d.x_lo, d.x_hi, d.alpha_lo, d.alpha_hi, d.x_lo_open, d.alpha_lo_open,
                        d.steps, r);
    double wx = (d.x_hi - d.x_lo) / (double)d.steps;
    double wa = (d.alpha_hi - d.alpha_lo) / (double)d.steps;
    int refine_steps = std::max(64, d.steps / 10);
    for (int round = 0; round < 3; ++round) {
        double xl = std::max(d.x_lo, r.arg_x - 2.0 * wx);
        double xh = std::min(d.x_hi, r.arg_x + 2.0 * wx);
        double al = std::max(d.alpha_lo, r.arg_alpha - 2.0 * wa);
        double ah = std::min(d.alpha_hi, r.arg_alpha + 2.0 * wa);
        detail::scan_window(d, xl, xh, al, ah, xl > d.x_lo ? false : d.x_lo_open,
                            al > d.alpha_lo ? false : d.alpha_lo_open, refine_steps, r);
        wx = (xh - xl) / (double)refine_steps;
        wa = (ah - al) / (double)refine_steps;
    }
    r.satisfied = r.max_value <= r.bound + 1e-9;
    return r;
}

inline std::string bound_function_name(BoundFunction f) { return f == BoundFunction::F ? "f" : "g"; }

} // namespace deg3span
