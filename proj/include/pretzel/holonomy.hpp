#pragma once

// Longitude holonomy along the representation path: C, D, the eigenvalue L
// (closed form and matrix route), meridian/longitude rotation angles with
// continuous unwrapping, and the obstruction function G.

#include <cmath>
#include <complex>
#include <tuple>

#include "pretzel/alexander.hpp"
#include "pretzel/charvariety.hpp"
#include "pretzel/cheb.hpp"
#include "pretzel/errors.hpp"
#include "pretzel/replift.hpp"

namespace pretzel {

// C = x^2 z - x y - z, D = x z - y - 1
inline std::pair<double, double> cd_values(const TraceCoords& c) {
    return {c.x * c.x * c.z - c.x * c.y - c.z, c.x * c.z - c.y - 1.0};
}

struct LongitudeIntermediates {
    double s1 = 0.0; // tr rho(bc) = y
    double s2 = 0.0; // tr rho(ac) = x^2 - 2 - s
    double s3 = 0.0; // tr rho(a b^-1) = y s2 - (xz - y)
    double sigma = 0.0;
    double xi = 0.0;
};

inline LongitudeIntermediates longitude_intermediates(const TraceCoords& c) {
    LongitudeIntermediates li;
    li.s1 = c.y;
    li.s2 = c.x * c.x - 2.0 - c.s;
    li.s3 = c.y * li.s2 - (c.x * c.z - c.y);
    li.sigma = li.s1 + li.s2 + li.s3;
    if (std::abs(li.s2 + 1.0) > 1e-12) {
        li.xi = li.sigma / (li.s2 + 1.0) + li.s2;
    } else {
        if (std::abs(li.s3) < 1e-12)
            throw DegenerateError("longitude_intermediates: s2 = -1 and s3 = 0");
        li.xi = -li.s3 + 2.0 + 2.0 / li.s3;
    }
    return li;
}

inline cplx meridian_eigenvalue(const TraceCoords& c) {
    return std::polar(1.0, clamped_acos(c.x / 2.0));
}

// L = M^{-(4n+9)} (C M - D) / (D M - C), with M = e^{i arccos(x/2)}
inline cplx l_formula(int n, const TraceCoords& c) {
    const auto [C, D] = cd_values(c);
    const double phi = clamped_acos(c.x / 2.0);
    const cplx M = std::polar(1.0, phi);
    const cplx denom = D * M - C;
    // relative test: at beta_n the rounded x keeps |DM - C| around 1e-7, so an
    // absolute 1e-12 cutoff would never fire in double precision
    if (std::abs(denom) < 1e-6 * (std::abs(C) + std::abs(D)))
        throw IndeterminateError("l_formula: 0/0 form at beta_n");
    return std::polar(1.0, -(4.0 * n + 9.0) * phi) * (C * M - D) / denom;
}

// Eigenvalue of rho(lambda) at the fixed point shared with rho(a): the (1,1)
// entry in the canonical triangular model.
inline cplx l_matrix(int n, const RepPair& rep) {
    return eval_word(rep, word_lambda(n)).a11;
}

inline double g_function_poly(int n, double theta) {
    const double y = 2.0 * std::cos(theta);
    const double sn1 = cheb_s(n - 1, y);
    const double sn2 = cheb_s(n - 2, y);
    return sn1 * sn1 + (sn1 - sn2) * sn2 * sn2 * sn2;
}

inline double g_function_trig(int n, double theta) {
    const double st = std::sin(theta);
    const double num = std::sin(n * theta) * std::sin(n * theta) * st * st
                     + 2.0 * std::sin(theta / 2.0) * std::cos((n - 0.5) * theta)
                           * std::pow(std::sin((n - 1) * theta), 3);
    return num / (st * st * st * st);
}

// Polynomial and trigonometric forms of the same function, cross-checked.
inline double g_function(int n, double theta) {
    const double gp = g_function_poly(n, theta);
    const double gt = g_function_trig(n, theta);
    const double scale = std::max({1.0, std::abs(gp), std::abs(gt)});
    if (std::abs(gp - gt) > 1e-8 * scale)
        throw std::logic_error("g_function: polynomial/trig forms disagree");
    return gp;
}

// Continuous-argument tracking of L along a (n, branch) path, anchored at
// theta_n with varphi = 0. Advance only in increasing theta.
struct UnwrapState {
    int n = 0;
    Branch branch = Branch::plus;
    double theta = 0.0;
    cplx L{1.0, 0.0};
    double varphi = 0.0;
    double max_step = 1e-3; // base grid spacing; aliasing guard
};

inline UnwrapState unwrap_init(int n, Branch branch) {
    UnwrapState st;
    st.n = n;
    st.branch = branch;
    st.theta = find_theta_n(n).theta_n;
    st.L = l_formula(n, solve_coords(n, st.theta, branch));
    st.varphi = 0.0;
    const KnotParams kp = knot_params(n);
    st.max_step = (kp.beta - st.theta) / 512.0;
    return st;
}

// Steps from st.theta to theta. A step is accepted only if arg L moves by
// less than pi/2 on both half-steps and the half-step sum matches the full
// step (catches whole-turn aliasing); otherwise the step is halved.
inline double unwrap_advance(UnwrapState& st, double theta) {
    if (theta < st.theta)
        throw UnwrapError("unwrap_advance: theta must be non-decreasing along a path");
    const double half_pi = 0.5 * std::acos(-1.0);
    while (st.theta < theta) {
        double step = std::min(theta - st.theta, st.max_step);
        for (;;) {
            const cplx Lmid = l_formula(st.n, solve_coords(st.n, st.theta + 0.5 * step, st.branch));
            const cplx Lnew = l_formula(st.n, solve_coords(st.n, st.theta + step, st.branch));
            const double d1 = std::arg(Lmid / st.L);
            const double d2 = std::arg(Lnew / Lmid);
            const double d = std::arg(Lnew / st.L);
            if (std::abs(d1) < half_pi && std::abs(d2) < half_pi
                && std::abs(d1 + d2 - d) < 1e-6) {
                st.varphi += d1 + d2;
                st.theta += step;
                st.L = Lnew;
                break;
            }
            step /= 2.0;
            if (step < 1e-13)
                throw UnwrapError("unwrap_advance: step underflow (discontinuous arg L)");
        }
    }
    return st.varphi;
}

struct Angles {
    double phi = 0.0;    // arccos(x/2) in (0, pi)
    double varphi = 0.0; // unwrapped argument of L
};

inline Angles angles(int n, double theta, Branch branch, UnwrapState& state) {
    (void)n;
    Angles a;
    a.varphi = unwrap_advance(state, theta);
    a.phi = clamped_acos(solve_coords(state.n, theta, branch).x / 2.0);
    return a;
}

// Closed-form varphi via the arccos expression; valid where
// Im((CM - D)/(DM - C)) > 0. Test oracle for the unwrapped angle.
inline double varphi_closed_form(int n, const TraceCoords& c) {
    const double pi = std::acos(-1.0);
    const auto [C, D] = cd_values(c);
    const double phi = clamped_acos(c.x / 2.0);
    const double num = 2.0 * C * D - (C * C + D * D) * std::cos(phi);
    const double den = C * C + D * D - 2.0 * C * D * std::cos(phi);
    double ratio = num / den;
    if (ratio > 1.0) ratio = 1.0;
    if (ratio < -1.0) ratio = -1.0;
    const int N = knot_params(n).floor_term;
    const double offset = (c.branch == Branch::minus)
                              ? 2.0 * N * pi
                              : (4.0 * n + 8.0) * pi - 2.0 * N * pi;
    return offset - (4.0 * n + 9.0) * phi + std::acos(ratio);
}

struct HolonomyPoint {
    double theta = 0.0;
    Branch branch = Branch::plus;
    TraceCoords coords;
    cplx M{1.0, 0.0};
    cplx L_formula{1.0, 0.0};
    cplx L_matrix{1.0, 0.0};
    double phi = 0.0;
    double varphi = 0.0;
    double C = 0.0, D = 0.0;
    double d2c2 = 0.0; // D^2 - C^2
    double G = 0.0;
    double slope = 0.0; // -varphi / phi
    double l_route_gap = 0.0; // |L_formula - L_matrix|
    bool excluded = false;
};

// Assemble all diagnostics at one path point; the unwrap state must belong
// to the same (n, branch) path and be at theta' <= theta.
inline HolonomyPoint holonomy_point(int n, double theta, Branch branch, UnwrapState& state) {
    HolonomyPoint hp;
    hp.theta = theta;
    hp.branch = branch;
    hp.coords = solve_coords(n, theta, branch);
    hp.M = meridian_eigenvalue(hp.coords);
    hp.varphi = unwrap_advance(state, theta);
    hp.L_formula = state.L;
    hp.phi = clamped_acos(hp.coords.x / 2.0);
    std::tie(hp.C, hp.D) = cd_values(hp.coords);
    hp.d2c2 = hp.D * hp.D - hp.C * hp.C;
    hp.G = g_function(n, theta);
    hp.slope = -hp.varphi / hp.phi;
    hp.excluded = (n == 4);
    try {
        hp.L_matrix = l_matrix(n, build_rep(hp.coords));
        hp.l_route_gap = std::abs(hp.L_formula - hp.L_matrix);
    } catch (const DegenerateError&) {
        hp.L_matrix = cplx{1.0, 0.0}; // reducible point, L = 1
        hp.l_route_gap = std::abs(hp.L_formula - hp.L_matrix);
    }
    return hp;
}

} // namespace pretzel
