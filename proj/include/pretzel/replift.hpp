#pragma once

// Explicit 2x2 matrix models realizing given trace coordinates, group word
// evaluation, and numerical checks of the defining relation and ellipticity.

#include <cmath>
#include <complex>
#include <numeric>
#include <utility>
#include <vector>

#include "pretzel/charvariety.hpp"
#include "pretzel/cheb.hpp"
#include "pretzel/errors.hpp"

namespace pretzel {

struct RepPair {
    Mat2 A; // image of a
    Mat2 W; // image of w
    TraceCoords coords;
};

// Canonical model: A upper triangular with eigenvalue M = e^{i arccos(x/2)},
// W lower triangular with eigenvalue N = e^{i theta}. The coupling entry
// w21 = z - MN - 1/(MN) vanishes exactly at the reducible point theta_n.
inline RepPair build_rep(const TraceCoords& coords) {
    const double phi = clamped_acos(coords.x / 2.0);
    const double theta = clamped_acos(coords.y / 2.0);
    const cplx M = std::polar(1.0, phi);
    const cplx N = std::polar(1.0, theta);
    const cplx w21 = coords.z - M * N - 1.0 / (M * N);
    if (std::abs(w21) < 1e-10)
        throw DegenerateError("build_rep: reducible trace coordinates (w21 ~ 0)");
    RepPair rep;
    rep.A = Mat2{M, 1.0, 0.0, 1.0 / M};
    rep.W = Mat2{N, 0.0, w21, 1.0 / N};
    rep.coords = coords;
    return rep;
}

struct GroupWord {
    // (generator, exponent), generator is 'a' or 'w', exponents nonzero
    std::vector<std::pair<char, long>> letters;

    GroupWord& append(char g, long e) {
        if (e == 0) return *this;
        if (!letters.empty() && letters.back().first == g) {
            letters.back().second += e;
            if (letters.back().second == 0) letters.pop_back();
        } else {
            letters.emplace_back(g, e);
        }
        return *this;
    }
    GroupWord& append(const GroupWord& o) {
        for (auto [g, e] : o.letters) append(g, e);
        return *this;
    }
};

inline GroupWord word_pow(const GroupWord& w, long k) {
    GroupWord out;
    if (k >= 0) {
        for (long i = 0; i < k; ++i) out.append(w);
    } else {
        for (long i = 0; i < -k; ++i)
            for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
                out.append(it->first, -it->second);
    }
    return out;
}

// u = a w a^-1 w^-1 a^-1
inline GroupWord word_u() {
    GroupWord w;
    w.append('a', 1).append('w', 1).append('a', -1).append('w', -1).append('a', -1);
    return w;
}

// v = a^-1 w^-1 a w a w^-1
inline GroupWord word_v() {
    GroupWord w;
    w.append('a', -1).append('w', -1).append('a', 1).append('w', 1).append('a', 1).append('w', -1);
    return w;
}

// meridian mu = a
inline GroupWord word_mu() {
    GroupWord w;
    w.append('a', 1);
    return w;
}

// longitude lambda = a^-(4n+7) w a w^n a w^n a w
inline GroupWord word_lambda(int n) {
    GroupWord w;
    w.append('a', -(4L * n + 7)).append('w', 1).append('a', 1).append('w', n)
     .append('a', 1).append('w', n).append('a', 1).append('w', 1);
    return w;
}

inline Mat2 eval_word(const RepPair& rep, const GroupWord& word) {
    Mat2 out = Mat2::identity();
    for (auto [g, e] : word.letters)
        out = out * mat_power(g == 'a' ? rep.A : rep.W, e);
    return out;
}

// max-entry norm of rho(w^n u) - rho(v w^n)
inline double relation_residual(int n, const RepPair& rep) {
    GroupWord lhs;
    lhs.append('w', n).append(word_u());
    GroupWord rhs = word_v();
    rhs.append('w', n);
    return max_entry_dist(eval_word(rep, lhs), eval_word(rep, rhs));
}

enum class EllipticityClass { elliptic_sl2r, su2_like, parabolic };

inline const char* ellipticity_name(EllipticityClass c) {
    switch (c) {
        case EllipticityClass::elliptic_sl2r: return "elliptic_sl2r";
        case EllipticityClass::su2_like: return "su2_like";
        default: return "parabolic";
    }
}

// tr rho([a,w]) = s + 2 discriminates the SL2(R) conjugacy class from the
// SU(2)-like one; s = 0 is the parabolic/reducible boundary.
inline EllipticityClass ellipticity_check(const RepPair& rep) {
    const Mat2 comm = rep.A * rep.W * rep.A.inverse_sl2() * rep.W.inverse_sl2();
    const double ctr = comm.trace().real();
    const double x = rep.coords.x;
    const double y = rep.coords.y;
    if (ctr > 2.0 + 1e-10 && std::abs(x) < 2.0 && std::abs(y) < 2.0)
        return EllipticityClass::elliptic_sl2r;
    if (ctr < 2.0 - 1e-10 && std::abs(x) < 2.0 && std::abs(y) < 2.0
        && std::abs(rep.coords.z) < 2.0)
        return EllipticityClass::su2_like;
    return EllipticityClass::parabolic;
}

} // namespace pretzel
