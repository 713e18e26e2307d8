#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "pretzel/alexander.hpp"
#include "pretzel/charvariety.hpp"

using namespace pretzel;

namespace {
const double pi = std::acos(-1.0);
}

TEST_CASE("interval constants per residue class") {
    const KnotParams k3 = knot_params(3);
    CHECK(k3.alpha == Catch::Approx(2.0 * pi / 3.0 - pi / 33.0));
    CHECK(k3.beta == Catch::Approx(2.0 * pi / 3.0 + pi / 21.0));
    CHECK(k3.gamma == Catch::Approx(2.0 * pi / 3.0));
    CHECK(k3.floor_term == 3);
    CHECK(k3.certified_bound == 6);
    CHECK(k3.lspace_bound == 9);
    CHECK_FALSE(k3.excluded);

    const KnotParams k4 = knot_params(4);
    CHECK(k4.beta == Catch::Approx(2.0 * pi / 3.0 + pi / 9.0));
    CHECK(k4.beta == Catch::Approx(2.44346).margin(5e-5));
    CHECK(k4.excluded);

    const KnotParams k5 = knot_params(5);
    CHECK(k5.alpha == Catch::Approx(2.0 * pi / 3.0 - pi / 15.0));
    CHECK(k5.beta == Catch::Approx(2.0 * pi / 3.0 - pi / 33.0));
    CHECK(k5.gamma == Catch::Approx(2.0 * pi / 3.0 - 4.0 * pi / 69.0));

    for (int n = 3; n <= 40; ++n) {
        const KnotParams kp = knot_params(n);
        CHECK(kp.alpha < kp.gamma);
        CHECK(kp.gamma < kp.beta);
        CHECK(kp.alpha > pi / 2.0);
        CHECK(kp.beta < pi);
    }
    CHECK_THROWS_AS(knot_params(2), std::invalid_argument);
}

TEST_CASE("trace polynomials at hand-checked points") {
    CHECK(riley_q(0.0, 0.0, 0.0) == 0.0);
    CHECK(riley_q(2.0, 2.0, 2.0) == 0.0);
    CHECK(riley_rn(5, 2.0, 2.0, 2.0) == 0.0);
    CHECK(riley_rn(3, 0.0, 0.0, 1.0) == Catch::Approx(1.0));
}

TEST_CASE("intermediate identities hold off the solution set") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-2.5, 2.5);
    for (int n : {3, 4, 7, 11})
        for (int t = 0; t < 50; ++t) {
            const double x = u(rng), y = u(rng), z = u(rng);
            const SolverIntermediates si = intermediates(n, x, y, z);
            const double expected_s = (z * z - y * y * y + 3.0 * y - 2.0) * si.T;
            CHECK(std::abs(si.S - expected_s) <= 1e-8 * std::max(1.0, std::abs(si.S)));
            CHECK(si.lincomb_residual < 1e-8);
        }
}

TEST_CASE("closed-form family solves the trace equations") {
    for (int n = 3; n <= 30; ++n) {
        const double theta_n = find_theta_n(n).theta_n;
        const KnotParams kp = knot_params(n);
        for (auto branch : {Branch::plus, Branch::minus})
            for (int i = 0; i <= 199; ++i) {
                const double th = theta_n + (kp.beta - theta_n) * i / 199.0;
                const TraceCoords c = solve_coords(n, th, branch);
                CHECK(std::abs(riley_q(c.x, c.y, c.z)) < 1e-9);
                CHECK(std::abs(riley_rn(n, c.x, c.y, c.z)) < 1e-9);
                CHECK(std::abs(intermediates(n, c.x, c.y, c.z).T) < 1e-9);
                CHECK(std::abs(c.r) > 1.0);
                const double sn2 = cheb_s(n - 2, c.y);
                const double sn3 = cheb_s(n - 3, c.y);
                CHECK(std::abs(c.z * c.z - 1.0 - c.r * (sn2 - sn3)) < 1e-10);
                CHECK(std::abs(c.x * sn2 - c.z * ((c.y + 1.0) * sn2 - sn3 - c.r)) < 1e-10);
            }
    }
}

TEST_CASE("family endpoint values") {
    for (int n : {3, 4, 5, 6, 7, 10, 16}) {
        const KnotParams kp = knot_params(n);
        const TraceCoords at_beta = solve_coords(n, kp.beta, Branch::plus);
        CHECK(at_beta.x == Catch::Approx(-2.0).margin(1e-9));
        CHECK(at_beta.z == Catch::Approx(1.0 - at_beta.y).margin(1e-9));

        const double theta_n = find_theta_n(n).theta_n;
        const TraceCoords at_root = solve_coords(n, theta_n, Branch::minus);
        CHECK(at_root.x == Catch::Approx(2.0 * std::cos(theta_n / 2.0)).margin(1e-9));
        CHECK(std::abs(at_root.s) < 1e-8);
    }
    // reference point inside the excluded case
    CHECK(solve_coords(4, 2.3, Branch::plus).y == Catch::Approx(-1.33255).margin(1e-4));
}

TEST_CASE("path-wide sign and range facts") {
    for (int n = 3; n <= 30; ++n) {
        const double theta_n = find_theta_n(n).theta_n;
        const KnotParams kp = knot_params(n);
        const double expect = (n % 3 == 0) ? -1.0 : 1.0;
        for (int i = 0; i <= 200; ++i) {
            const double th = theta_n + (kp.beta - theta_n) * i / 200.0;
            const TraceCoords cp = solve_coords(n, th, Branch::plus);
            const TraceCoords cm = solve_coords(n, th, Branch::minus);
            if (th > theta_n + 1e-6) {
                CHECK(cp.s > 0.0);
                CHECK(cp.s + 2.0 > 2.0);
                CHECK(std::abs(cp.z) > 1.0);
            }
            if (th < kp.beta - 1e-6) {
                CHECK((cp.x > -2.0 && cp.x < 0.0));
                CHECK((cm.x > 0.0 && cm.x < 2.0));
            }
            const double sn2 = cheb_s(n - 2, cp.y);
            const double sn3 = cheb_s(n - 3, cp.y);
            CHECK(sn2 * expect > 0.0);
            CHECK((sn2 - sn3) * expect > 0.0);
        }
    }
}

TEST_CASE("near-degree difference vanishes only at the far endpoint") {
    for (int n : {3, 5, 6, 7, 16}) {
        const double theta_n = find_theta_n(n).theta_n;
        const KnotParams kp = knot_params(n);
        for (int i = 0; i <= 300; ++i) {
            const double th = theta_n + (kp.beta - 1e-6 - theta_n) * i / 300.0;
            const double y = 2.0 * std::cos(th);
            CHECK(cheb_s(n, y) - cheb_s(n - 1, y) != 0.0);
        }
        for (int i = 0; i <= 300; ++i) {
            const double th = theta_n + (kp.beta - theta_n) * i / 300.0;
            const double y = 2.0 * std::cos(th);
            CHECK(std::abs(cheb_s(n, y) + cheb_s(n - 1, y)) > 1e-6);
        }
        const double yb = 2.0 * std::cos(kp.beta);
        CHECK(std::abs(cheb_s(n, yb) - cheb_s(n - 1, yb)) < 1e-6);
    }
}

TEST_CASE("solver rejects bad inputs") {
    CHECK_THROWS_AS(solve_coords(2, 2.2, Branch::plus), std::invalid_argument);
    // far outside the bracket the z^2 radicand goes genuinely negative
    CHECK_THROWS_AS(solve_coords(5, 2.9, Branch::plus), DomainError);
}
