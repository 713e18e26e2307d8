#pragma once

// Trace-coordinate description of representations of the two-generator
// pretzel knot group presentation <a, w | w^n u = v w^n>: the polynomials
// Q and R_n cutting out the representation variety, and the closed-form
// one-parameter solution family (x(theta), y(theta), z(theta)).

#include <cmath>
#include <stdexcept>

#include "pretzel/cheb.hpp"
#include "pretzel/errors.hpp"

namespace pretzel {

enum class Branch { plus, minus };

inline const char* branch_name(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

struct KnotParams {
    int n = 0;
    int residue = 0;        // n mod 3
    double alpha = 0.0;     // lower endpoint of the theta bracket
    double beta = 0.0;      // algebraic endpoint where x = -+2
    double gamma = 0.0;     // interior split point; theta_n lies in [alpha, gamma)
    int floor_term = 0;     // N = floor((2n+4)/3)
    int lspace_bound = 0;   // 2n+3
    int certified_bound = 0;// 2N
    bool excluded = false;  // n = 4 is outside the certified family
};

inline KnotParams knot_params(int n) {
    if (n < 3) throw std::invalid_argument("knot_params: n must be >= 3");
    const double pi = std::acos(-1.0);
    KnotParams kp;
    kp.n = n;
    kp.residue = n % 3;
    const double base = 2.0 * pi / 3.0;
    switch (kp.residue) {
        case 0:
            kp.alpha = base - pi / (6.0 * n + 15.0);
            kp.beta = base + pi / (6.0 * n + 3.0);
            kp.gamma = base;
            break;
        case 1:
            kp.alpha = base + pi / (6.0 * n - 3.0);
            kp.beta = base + pi / (2.0 * n + 1.0);
            kp.gamma = base + 4.0 * pi / (12.0 * n + 9.0);
            break;
        default:
            kp.alpha = base - pi / (2.0 * n + 5.0);
            kp.beta = base - pi / (6.0 * n + 3.0);
            kp.gamma = base - 4.0 * pi / (12.0 * n + 9.0);
            break;
    }
    kp.floor_term = (2 * n + 4) / 3;
    kp.lspace_bound = 2 * n + 3;
    kp.certified_bound = 2 * kp.floor_term;
    kp.excluded = (n == 4);
    return kp;
}

struct TraceCoords {
    double x = 0.0;   // tr rho(a)
    double y = 0.0;   // tr rho(w)
    double z = 0.0;   // tr rho(aw)
    double r = 0.0;   // auxiliary root, r - 1/r = S_{n-2}(y)
    double s = 0.0;   // x^2 + y^2 + z^2 - xyz - 4
    Branch branch = Branch::plus;
};

inline double riley_q(double x, double y, double z) {
    return x - x * y + (x * x + y * y + z * z - x * y * z - 3.0) * z;
}

inline double riley_rn(int n, double x, double y, double z) {
    const double sn2 = cheb_s(n - 2, y);
    const double sn3 = cheb_s(n - 3, y);
    return (y + 2.0 - x * z - x * x - z * z + x * y * z) * sn2
         - (y * y + y - 2.0 + z * z - x * y * z) * sn3;
}

struct SolverIntermediates {
    double p = 0.0;
    double q = 0.0;
    double S = 0.0;
    double T = 0.0;
    // |S_{n-2}(y) Q + z R_n - (-p x + q z)|
    double lincomb_residual = 0.0;
};

inline SolverIntermediates intermediates(int n, double x, double y, double z) {
    const double sn2 = cheb_s(n - 2, y);
    const double sn3 = cheb_s(n - 3, y);
    const double z2 = z * z;
    SolverIntermediates si;
    si.p = (y - 1.0) * sn2 + z2 * (sn2 - y * sn3);
    si.q = (y * y + y - 1.0) * sn2 - (y * y + y - 2.0) * sn3 - z2 * sn3;
    si.S = z2 * si.q * si.q - (y * z2 + y - 1.0) * si.p * si.q
         + (y * y + z2 - 3.0) * si.p * si.p;
    const double diff = sn2 - sn3;
    si.T = (z2 - 1.0) * (z2 - 1.0) - sn2 * diff * (z2 - 1.0) - diff * diff;
    si.lincomb_residual = std::abs(sn2 * riley_q(x, y, z) + z * riley_rn(n, x, y, z)
                                   - (-si.p * x + si.q * z));
    return si;
}

// The one-parameter family: y = 2 cos theta, r the |r| > 1 root of
// r^2 - S_{n-2}(y) r - 1 = 0 (branch fixed by n mod 3), z the signed square
// root of 1 + r (S_{n-2} - S_{n-3}), x determined linearly. Satisfies
// Q = R_n = 0 identically.
inline TraceCoords solve_coords(int n, double theta, Branch branch) {
    if (n < 3) throw std::invalid_argument("solve_coords: n must be >= 3");
    TraceCoords tc;
    tc.branch = branch;
    tc.y = 2.0 * std::cos(theta);
    const double sn2 = cheb_s(n - 2, tc.y);
    const double sn3 = cheb_s(n - 3, tc.y);
    if (std::abs(sn2) < 1e-12)
        throw DegenerateError("solve_coords: S_{n-2}(y) vanishes");
    const double disc = std::sqrt(sn2 * sn2 + 4.0);
    tc.r = (n % 3 == 0) ? (sn2 - disc) / 2.0 : (sn2 + disc) / 2.0;
    double radicand = 1.0 + tc.r * (sn2 - sn3);
    if (radicand < 0.0) {
        if (radicand < -1e-12)
            throw DomainError("solve_coords: negative z^2 radicand (theta outside bracket)");
        radicand = 0.0; // endpoint rounding at beta_n
    }
    const double zmag = std::sqrt(radicand);
    tc.z = (branch == Branch::plus) ? zmag : -zmag;
    tc.x = tc.z * (tc.y + 1.0 - (sn3 + tc.r) / sn2);
    tc.s = tc.x * tc.x + tc.y * tc.y + tc.z * tc.z - tc.x * tc.y * tc.z - 4.0;
    return tc;
}

} // namespace pretzel
