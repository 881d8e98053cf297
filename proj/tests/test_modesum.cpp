#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "chiy/genus.hpp"
#include "chiy/modesum.hpp"
#include "chiy/verify.hpp"

using namespace chiy;

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

}  // namespace

TEST_CASE("closed-form factor: limits and values") {
    // removable singularity: value 1 + y with y = -e^{i delta}
    CHECK(std::abs(closed_form_factor(0.0, kPi) - Complex(2.0, 0.0)) < 1e-15);
    CHECK(std::abs(closed_form_factor(0.0, 0.0)) < 1e-15);
    CHECK(std::abs(closed_form_factor(0.0, kPi / 2.0) - Complex(1.0, -1.0)) < 1e-15);

    // delta = pi means y = 1: the factor is (omega/2pi) coth(omega/4pi)
    const double x = 1.0 / (4.0 * kPi);
    const double coth_form = (1.0 / (2.0 * kPi)) * std::cosh(x) / std::sinh(x);
    CHECK(std::abs(closed_form_factor(1.0, kPi) - Complex(coth_form, 0.0)) < 1e-14);
    CHECK(coth_form == doctest::Approx(2.0042).epsilon(1e-4));

    // y = -1 cancellation: the factor collapses to omega/2pi
    CHECK(std::abs(closed_form_factor(1.0, 0.0) - Complex(1.0 / (2.0 * kPi), 0.0)) < 1e-15);
}

TEST_CASE("truncated factor: degenerate cases are exact") {
    // delta = 0 cancels every mode factor, at any truncation
    for (long n : {1L, 10L, 1000L})
        CHECK(std::abs(truncated_factor(1.0, 0.0, n) - Complex(1.0 / (2.0 * kPi), 0.0)) < 1e-12);

    // omega = 0, delta = 0: zero prefactor
    for (long n : {1L, 100L}) CHECK(std::abs(truncated_factor(0.0, 0.0, n)) == 0.0);

    CHECK_THROWS_AS(truncated_factor(11.0, 0.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(truncated_factor(1.0, 0.0, 0), std::invalid_argument);
}

TEST_CASE("truncated factor converges to the closed form") {
    // omega = 0, delta = pi: limit is 2, within 1e-3 relative at N = 1000
    CHECK(std::abs(truncated_factor(0.0, kPi, 1000) - Complex(2.0, 0.0)) / 2.0 < 1e-3);

    // interior grid point: 1/N decay of the error
    const Complex closed = closed_form_factor(1.0, kPi / 2.0);
    const double e1 = std::abs(truncated_factor(1.0, kPi / 2.0, 1000) - closed);
    const double e2 = std::abs(truncated_factor(1.0, kPi / 2.0, 2000) - closed);
    CHECK(e1 / e2 > 1.7);
    CHECK(e1 / e2 < 2.3);
    CHECK(e1 / std::abs(closed) < 1e-3);
}

TEST_CASE("omega = 0 truncation is the partial sin product") {
    for (double delta : {kPi / 2.0, kPi, 3.0 * kPi / 2.0}) {
        for (long n : {10L, 500L}) {
            const Complex got = truncated_factor(0.0, delta, n);
            const Complex sin_form = Complex(0.0, -2.0) *
                                     std::exp(Complex(0.0, delta / 2.0)) *
                                     sin_partial_product(delta / 2.0, n);
            CHECK(std::abs(got - sin_form) < 1e-12);
        }
        const Complex limit = 1.0 - std::exp(Complex(0.0, delta));
        CHECK(std::abs(truncated_factor(0.0, delta, 20000) - limit) < 1e-3);
    }
}

TEST_CASE("sinh partial product") {
    for (long n : {1L, 10L, 100L}) CHECK(sinh_partial_product(0.0, n) == 0.0);

    const double target = std::sinh(1.0);
    CHECK(std::abs(sinh_partial_product(1.0, 10000) / target - 1.0) <= 1e-4);

    // monotone nondecreasing in N for x > 0, always below sinh
    double prev = 0.0;
    for (long n : {1L, 2L, 5L, 10L, 100L, 1000L}) {
        const double v = sinh_partial_product(1.0, n);
        CHECK(v >= prev);
        CHECK(v < target);
        prev = v;
    }

    // 1/N tail
    const double err_a = std::abs(sinh_partial_product(1.0, 1000) / target - 1.0);
    const double err_b = std::abs(sinh_partial_product(1.0, 2000) / target - 1.0);
    CHECK(err_a / err_b > 1.8);
    CHECK(err_a / err_b < 2.2);

    CHECK_THROWS_AS(sinh_partial_product(1.0, 0), std::invalid_argument);
}

TEST_CASE("sin partial product tends to sin") {
    CHECK(std::abs(sin_partial_product(kPi / 2.0, 100000) - 1.0) < 1e-4);
    CHECK(sin_partial_product(0.0, 10) == 0.0);
}

TEST_CASE("convergence report") {
    ModeSumConfig cfg;
    cfg.delta = kPi;
    cfg.n_max = 1000;

    SUBCASE("empty eigenvalue list gives the empty product") {
        const ConvergenceReport r = convergence_report(cfg);
        CHECK(r.factors.empty());
        CHECK(r.product.truncated_n == Complex(1.0, 0.0));
        CHECK(r.product.abs_err_n == 0.0);
    }

    SUBCASE("repeated eigenvalues square the factor and the error bound") {
        cfg.omegas = {1.0, 1.0};
        const ConvergenceReport r = convergence_report(cfg);
        REQUIRE(r.factors.size() == 2);
        const Complex single = r.factors[0].truncated_n;
        CHECK(std::abs(r.product.truncated_n - single * single) < 1e-12);
        CHECK(r.product.rel_err_n <= 2.5 * r.factors[0].rel_err_n);
        CHECK(r.product.rel_err_n > r.factors[0].rel_err_n);
        CHECK(r.n_max == 1000);
    }

    SUBCASE("error ratio is meaningful away from exact cases") {
        cfg.omegas = {1.0};
        const ConvergenceReport r = convergence_report(cfg);
        CHECK(r.factors[0].ratio_meaningful);
        CHECK(r.factors[0].err_ratio == doctest::Approx(2.0).epsilon(0.15));
    }

    SUBCASE("delta = 0 truncation is exact, ratio flagged meaningless") {
        cfg.delta = 0.0;
        cfg.omegas = {1.0};
        const ConvergenceReport r = convergence_report(cfg);
        CHECK(!r.factors[0].ratio_meaningful);
        CHECK(r.factors[0].rel_err_n < 1e-12);
    }

    SUBCASE("invalid configurations are rejected") {
        cfg.n_max = 0;
        CHECK_THROWS_AS(convergence_report(cfg), std::invalid_argument);
        cfg.n_max = 10;
        cfg.delta = -0.1;
        CHECK_THROWS_AS(convergence_report(cfg), std::invalid_argument);
        cfg.delta = 2.0 * kPi;
        CHECK_THROWS_AS(convergence_report(cfg), std::invalid_argument);
        cfg.delta = 0.0;
        cfg.omegas = {12.0};
        CHECK_THROWS_AS(convergence_report(cfg), std::invalid_argument);
    }
}

TEST_CASE("chi_factor coefficients match finite differences of the closed form") {
    // second-order central differences in u = omega/2pi
    const double h = 1e-3;
    const USeries factor = chi_factor(2);
    for (double delta : {kPi / 2.0, kPi}) {
        const Complex y = -std::exp(Complex(0.0, delta));
        const Complex f0 = closed_form_factor(0.0, delta);
        const Complex fp = closed_form_factor(2.0 * kPi * h, delta);
        const Complex fm = closed_form_factor(-2.0 * kPi * h, delta);
        const Complex fd[3] = {f0, (fp - fm) / (2.0 * h), (fp - 2.0 * f0 + fm) / (2.0 * h * h)};
        for (int k = 0; k <= 2; ++k)
            CHECK(std::abs(eval_ypoly(factor.coeff(k), y) - fd[k]) < 1e-6);
    }
}

TEST_CASE("verify suites pass end to end") {
    CHECK(all_pass(run_symbolic_suite()));
    CHECK(all_pass(run_modesum_suite(2000)));
}
