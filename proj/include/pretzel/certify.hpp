#pragma once

// Per-slope certification: find theta* with m phi + l varphi = 0 on the
// representation path and verify rho(mu^m lambda^l) = I by matrix products.

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "pretzel/alexander.hpp"
#include "pretzel/charvariety.hpp"
#include "pretzel/errors.hpp"
#include "pretzel/holonomy.hpp"
#include "pretzel/replift.hpp"

namespace pretzel {

inline double slope_value(int n, double theta, Branch branch, UnwrapState& state) {
    const double varphi = unwrap_advance(state, theta);
    const double phi = clamped_acos(solve_coords(n, theta, branch).x / 2.0);
    return -varphi / phi;
}

inline double slope_value(int n, double theta, Branch branch) {
    UnwrapState st = unwrap_init(n, branch);
    return slope_value(n, theta, branch, st);
}

struct SlopeCertificate {
    int n = 0;
    long m = 0;
    long l = 1;
    Branch branch = Branch::plus;
    double theta_star = 0.0;
    double h_residual = 0.0;      // |m phi + l varphi| at theta*
    double matrix_residual = 0.0; // max-entry norm of rho(mu^m lambda^l) - I
    double tolerance = 1e-12;
};

namespace detail {

inline double h_value(long m, long l, int n, Branch branch, UnwrapState& st, double theta) {
    const double varphi = unwrap_advance(st, theta);
    const double phi = clamped_acos(solve_coords(n, theta, branch).x / 2.0);
    return static_cast<double>(m) * phi + static_cast<double>(l) * varphi;
}

} // namespace detail

inline SlopeCertificate certify_slope(int n, long m, long l, double tol = 1e-12,
                                      bool force = false) {
    if (n < 3) throw std::invalid_argument("certify_slope: n must be >= 3");
    if (l == 0) throw std::invalid_argument("certify_slope: l must be nonzero");
    if (l < 0) { m = -m; l = -l; }
    const long g = std::gcd(std::abs(m), l);
    if (g > 1) { m /= g; l /= g; }
    if (m == 0) throw ZeroSlopeError("certify_slope: slope 0 is handled without representations");
    const KnotParams kp = knot_params(n);
    const double slope = static_cast<double>(m) / static_cast<double>(l);
    if (slope >= kp.certified_bound)
        throw OutOfRangeError("certify_slope: slope not below 2*floor((2n+4)/3)");
    if (kp.excluded && !force)
        throw ExcludedError("certify_slope: n = 4 is outside the certified family (use force)");

    const Branch branch = (m < 0) ? Branch::minus : Branch::plus;
    const ThetaRoot root = find_theta_n(n);
    const double delta = 1e-7;
    const double lo0 = root.theta_n + delta;
    const double hi0 = kp.beta - delta;

    // scan a grid for the first sign change of h, threading the unwrap state
    const int grid = 2048;
    UnwrapState st = unwrap_init(n, branch);
    double a = lo0;
    UnwrapState st_a = st;
    double ha = detail::h_value(m, l, n, branch, st_a, a);
    double b = a;
    double hb = ha;
    bool bracketed = false;
    for (int i = 1; i <= grid; ++i) {
        const double t = lo0 + (hi0 - lo0) * static_cast<double>(i) / grid;
        UnwrapState st_t = st_a;
        const double ht = detail::h_value(m, l, n, branch, st_t, t);
        if (ha == 0.0 || ha * ht <= 0.0) {
            b = t;
            hb = ht;
            bracketed = true;
            break;
        }
        a = t;
        ha = ht;
        st_a = st_t;
    }
    if (!bracketed)
        throw BracketError("certify_slope: no sign change of m*phi + l*varphi on the path");

    for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        UnwrapState st_mid = st_a;
        const double hm = detail::h_value(m, l, n, branch, st_mid, mid);
        if (ha * hm <= 0.0) {
            b = mid;
            hb = hm;
        } else {
            a = mid;
            ha = hm;
            st_a = st_mid;
        }
    }

    SlopeCertificate cert;
    cert.n = n;
    cert.m = m;
    cert.l = l;
    cert.branch = branch;
    cert.theta_star = (std::abs(ha) <= std::abs(hb)) ? a : b;
    {
        UnwrapState st_star = st_a;
        cert.h_residual = std::abs(detail::h_value(m, l, n, branch, st_star, cert.theta_star));
    }
    const RepPair rep = build_rep(solve_coords(n, cert.theta_star, branch));
    GroupWord word;
    word.append('a', m).append(word_pow(word_lambda(n), l));
    cert.matrix_residual = max_entry_dist(eval_word(rep, word), Mat2::identity());
    cert.tolerance = tol;
    return cert;
}

// Recompute the matrix residual of a certificate from scratch.
inline double verify_certificate(const SlopeCertificate& cert) {
    const RepPair rep = build_rep(solve_coords(cert.n, cert.theta_star, cert.branch));
    GroupWord word;
    word.append('a', cert.m).append(word_pow(word_lambda(cert.n), cert.l));
    return max_entry_dist(eval_word(rep, word), Mat2::identity());
}

inline std::vector<HolonomyPoint> sweep(int n, Branch branch, int samples) {
    if (samples < 2) throw std::invalid_argument("sweep: samples must be >= 2");
    const ThetaRoot root = find_theta_n(n);
    const KnotParams kp = knot_params(n);
    const double delta = 1e-7;
    const double lo = root.theta_n + delta;
    const double hi = kp.beta - delta;
    UnwrapState st = unwrap_init(n, branch);
    std::vector<HolonomyPoint> points;
    points.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) / (samples - 1);
        points.push_back(holonomy_point(n, t, branch, st));
    }
    return points;
}

struct CoverageReport {
    int n = 0;
    int certified_bound = 0; // certified interval is (-inf, 2N)
    int lspace_bound = 0;    // conjectured interval is (-inf, 2n+3)
    double plus_slope_min = 0.0, plus_slope_max = 0.0;
    double minus_slope_min = 0.0, minus_slope_max = 0.0;
};

inline CoverageReport coverage_report(int n, int samples) {
    CoverageReport rep;
    const KnotParams kp = knot_params(n);
    rep.n = n;
    rep.certified_bound = kp.certified_bound;
    rep.lspace_bound = kp.lspace_bound;
    auto minmax = [&](Branch branch, double& mn, double& mx) {
        const auto points = sweep(n, branch, samples);
        mn = points.front().slope;
        mx = mn;
        for (const auto& p : points) {
            mn = std::min(mn, p.slope);
            mx = std::max(mx, p.slope);
        }
    };
    minmax(Branch::plus, rep.plus_slope_min, rep.plus_slope_max);
    minmax(Branch::minus, rep.minus_slope_min, rep.minus_slope_max);
    return rep;
}

} // namespace pretzel
