#pragma once

// Chebyshev polynomials of the second kind S_k and the 2x2 matrix machinery
// built on them (Cayley-Hamilton powers of SL2 elements).

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pretzel/errors.hpp"

namespace pretzel {

using cplx = std::complex<double>;

// S_k(y) with S_0 = 1, S_1 = y, S_k = y S_{k-1} - S_{k-2}, extended to
// negative indices by running the recursion backwards (S_{-1} = 0, S_{-2} = -1).
template <typename T>
T cheb_s(long k, T y) {
    if (k >= 0) {
        T prev = T(0);  // S_{-1}
        T cur = T(1);   // S_0
        for (long i = 0; i < k; ++i) {
            T next = y * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    T next = T(1);  // S_0
    T cur = T(0);   // S_{-1}
    for (long i = -1; i > k; --i) {
        T prev = y * cur - next;
        next = cur;
        cur = prev;
    }
    return cur;
}

inline double cheb_s(long k, double y) { return cheb_s<double>(k, y); }

// |S_k^2 + S_{k-1}^2 - y S_k S_{k-1} - 1|
inline double cheb_identity_residual(long k, double y) {
    const double sk = cheb_s(k, y);
    const double skm = cheb_s(k - 1, y);
    return std::abs(sk * sk + skm * skm - y * sk * skm - 1.0);
}

// arccos with the argument clamped to [-1, 1]; trace/2 values can round
// just past the endpoints at the algebraic ends of the path
inline double clamped_acos(double v) {
    return std::acos(std::min(1.0, std::max(-1.0, v)));
}

enum class ChebVariant { S, SMinusPrev };

// Roots of S_k (variant S) or of S_k - S_{k-1} (variant SMinusPrev),
// in decreasing order of the cosine argument index j = 1..k.
inline std::vector<double> cheb_product_roots(long k, ChebVariant variant) {
    if (k < 1) throw std::invalid_argument("cheb_product_roots: k must be >= 1");
    const double pi = std::acos(-1.0);
    std::vector<double> roots;
    roots.reserve(static_cast<std::size_t>(k));
    for (long j = 1; j <= k; ++j) {
        const double arg = (variant == ChebVariant::S)
                               ? static_cast<double>(j) * pi / static_cast<double>(k + 1)
                               : static_cast<double>(2 * j - 1) * pi / static_cast<double>(2 * k + 1);
        roots.push_back(2.0 * std::cos(arg));
    }
    return roots;
}

struct Mat2 {
    cplx a11{1.0}, a12{0.0}, a21{0.0}, a22{1.0};

    static Mat2 identity() { return Mat2{}; }
    static Mat2 zero() { return Mat2{0.0, 0.0, 0.0, 0.0}; }

    cplx det() const { return a11 * a22 - a12 * a21; }
    cplx trace() const { return a11 + a22; }

    // adjugate; equals the inverse when det = 1
    Mat2 inverse_sl2() const { return Mat2{a22, -a12, -a21, a11}; }

    Mat2 operator*(const Mat2& o) const {
        return Mat2{a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                    a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    Mat2 operator-(const Mat2& o) const {
        return Mat2{a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }
    Mat2 operator+(const Mat2& o) const {
        return Mat2{a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
    }
    friend Mat2 operator*(cplx s, const Mat2& m) {
        return Mat2{s * m.a11, s * m.a12, s * m.a21, s * m.a22};
    }

    double max_abs() const {
        return std::max(std::max(std::abs(a11), std::abs(a12)),
                        std::max(std::abs(a21), std::abs(a22)));
    }
};

inline double max_entry_dist(const Mat2& a, const Mat2& b) { return (a - b).max_abs(); }

// A^k = S_{k-1}(tr A) A - S_{k-2}(tr A) I, valid for all integer k when det A = 1.
inline Mat2 mat_power(const Mat2& A, long k) {
    if (std::abs(A.det() - 1.0) > 1e-8)
        throw DomainError("mat_power: matrix is not in SL2 (|det - 1| > 1e-8)");
    const cplx t = A.trace();
    return cheb_s<cplx>(k - 1, t) * A - cheb_s<cplx>(k - 2, t) * Mat2::identity();
}

} // namespace pretzel
