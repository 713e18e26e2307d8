#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "pretzel/alexander.hpp"
#include "pretzel/cheb.hpp"

using namespace pretzel;

TEST_CASE("polynomial evaluation basics") {
    for (int n : {3, 4, 9})
        CHECK(std::abs(alexander_eval(n, cplx{1.0, 0.0}) - 1.0) < 1e-14);
    CHECK_THROWS_AS(alexander_eval(5, cplx{-1.0, 0.0}), PoleError);
}

TEST_CASE("palindromic symmetry on the unit circle") {
    // deg = 2n+4 after dividing out t+1; |t^deg Delta(1/t)| = |Delta(t)|
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    for (int n : {3, 7}) {
        const int deg = 2 * n + 4;
        for (int i = 0; i < 10; ++i) {
            const cplx t = std::polar(1.0, u(rng));
            const double lhs = std::abs(std::pow(t, deg) * alexander_eval(n, 1.0 / t));
            const double rhs = std::abs(alexander_eval(n, t));
            CHECK(lhs == Catch::Approx(rhs).margin(1e-9));
        }
    }
}

TEST_CASE("unit-circle root function") {
    for (int n : {3, 5, 8})
        CHECK(f_theta(n, 0.0) == Catch::Approx(1.0));
    CHECK(std::abs(f_theta(4, 2.2728)) < 1e-3);
}

TEST_CASE("root function tracks the polynomial on the bracket") {
    // |Delta(e^{i theta})| and |F(theta)| vanish together; compare on a grid
    for (int n : {3, 6, 11}) {
        const KnotParams kp = knot_params(n);
        double ratio_lo = 1e300, ratio_hi = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double th = kp.alpha + (kp.beta - kp.alpha) * i / 1000.0;
            const double f = std::abs(f_theta(n, th));
            const double d = std::abs(alexander_eval(n, std::polar(1.0, th)));
            if (f > 1e-10) {
                ratio_lo = std::min(ratio_lo, d / f);
                ratio_hi = std::max(ratio_hi, d / f);
            } else {
                CHECK(d < 1e-8);
            }
        }
        CHECK(ratio_lo > 1e-3);
        CHECK(ratio_hi < 1e3);
    }
}

TEST_CASE("distinguished root regression values") {
    const ThetaRoot t4 = find_theta_n(4);
    CHECK(t4.theta_n == Catch::Approx(2.2728).margin(5e-4));
    const ThetaRoot t7 = find_theta_n(7);
    CHECK(t7.theta_n == Catch::Approx(2.20391).margin(5e-5));
    CHECK(2.0 * std::cos(t7.theta_n) == Catch::Approx(-1.18332).margin(5e-5));

    const ThetaRoot t3 = find_theta_n(3);
    const KnotParams k3 = knot_params(3);
    CHECK(t3.theta_n > k3.alpha - 1e-12);
    CHECK(t3.theta_n < k3.gamma);
    CHECK(t3.residual_f < 1e-12);
}

TEST_CASE("root properties across the family") {
    for (int n = 3; n <= 30; ++n) {
        const ThetaRoot root = find_theta_n(n);
        const KnotParams kp = knot_params(n);
        CHECK(root.theta_n >= kp.alpha - 1e-12);
        CHECK(root.theta_n < kp.gamma);
        CHECK(root.residual_f < 1e-12);
        CHECK(root.residual_delta < 1e-9);
        CHECK(root.hi - root.lo <= 1.1e-14);

        int sign_changes = 0;
        double prev = f_theta(n, kp.alpha);
        for (int i = 1; i <= 2000; ++i) {
            const double th = kp.alpha + (kp.beta - kp.alpha) * i / 2000.0;
            const double cur = f_theta(n, th);
            if (prev * cur < 0.0) ++sign_changes;
            prev = cur;
        }
        CHECK(sign_changes == 1);

        // Chebyshev combination vanishing at the reducible point
        const double y = 2.0 * std::cos(root.theta_n);
        CHECK(std::abs((y - 1.0) * (y * y - 3.0) * cheb_s(n - 1, y)
                       - (y * y - y - 1.0) * cheb_s(n - 2, y)) < 1e-8);
    }
}

TEST_CASE("requested tolerance narrows the bracket") {
    const ThetaRoot root = find_theta_n(12, 1e-13);
    CHECK(root.hi - root.lo <= 1e-13);
}
