#pragma once

// Alexander polynomial of the knot family, its unit-circle root function
// F(theta), and certified bisection for the distinguished root theta_n.

#include <cmath>
#include <complex>

#include "pretzel/charvariety.hpp"
#include "pretzel/errors.hpp"

namespace pretzel {

// (t^{2n+5} - t^{2n+3} + t^{2n+2} + t^3 - t^2 + 1) / (t + 1)
inline cplx alexander_eval(int n, cplx t) {
    if (std::abs(t + 1.0) < 1e-14)
        throw PoleError("alexander_eval: pole at t = -1");
    const cplx num = std::pow(t, 2 * n + 5) - std::pow(t, 2 * n + 3) + std::pow(t, 2 * n + 2)
                   + t * t * t - t * t + 1.0;
    return num / (t + 1.0);
}

// F(theta) = 2 cos((n+1)theta) cos(3theta/2) - cos((2n+1)theta/2);
// F = 0 picks out unit-circle roots t = e^{i theta} of the Alexander polynomial.
inline double f_theta(int n, double theta) {
    return 2.0 * std::cos((n + 1) * theta) * std::cos(1.5 * theta)
         - std::cos((2.0 * n + 1.0) * theta / 2.0);
}

struct ThetaRoot {
    int n = 0;
    double theta_n = 0.0;
    double residual_f = 0.0;     // |F(theta_n)|
    double residual_delta = 0.0; // |Delta(e^{i theta_n})|
    double lo = 0.0, hi = 0.0;   // final bracket
};

// Bisection on [alpha_n, gamma_n]. The root can sit exactly at alpha_n
// (n = 5), so the lower end of the initial bracket is nudged slightly below.
inline ThetaRoot find_theta_n(int n, double tol = 1e-14) {
    if (tol < 1e-14) tol = 1e-14;
    const KnotParams kp = knot_params(n);
    double lo = kp.alpha - 1e-9 * (kp.beta - kp.alpha);
    double hi = kp.gamma;
    double flo = f_theta(n, lo);
    double fhi = f_theta(n, hi);
    if (flo * fhi > 0.0)
        throw BracketError("find_theta_n: no sign change on [alpha_n, gamma_n]");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fmid = f_theta(n, mid);
        if (flo * fmid <= 0.0) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    ThetaRoot root;
    root.n = n;
    root.lo = lo;
    root.hi = hi;
    root.theta_n = (std::abs(flo) <= std::abs(fhi)) ? lo : hi;
    if (root.theta_n < kp.alpha) root.theta_n = kp.alpha;
    root.residual_f = std::abs(f_theta(n, root.theta_n));
    root.residual_delta = std::abs(alexander_eval(n, std::polar(1.0, root.theta_n)));
    return root;
}

} // namespace pretzel
