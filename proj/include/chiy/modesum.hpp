#pragma once

#include <complex>
#include <vector>

namespace chiy {

inline constexpr double kDefaultOmegaCap = 10.0;

// Eigenvalues, twist angle and truncation for the determinant-product check.
struct ModeSumConfig {
    std::vector<double> omegas;        // real eigenvalue parameters
    double delta = 0.0;                // twist angle in [0, 2*pi)
    long n_max = 1;                    // mode truncation N
    double omega_cap = kDefaultOmegaCap;

    void validate() const;
};

// Per-eigenvalue comparison of the truncated mode product against the
// closed form, at N and 2N.
struct FactorReport {
    double omega = 0.0;
    std::complex<double> truncated_n;
    std::complex<double> truncated_2n;
    std::complex<double> closed;
    double abs_err_n = 0.0;
    double rel_err_n = 0.0;   // falls back to absolute when closed == 0
    double abs_err_2n = 0.0;
    double rel_err_2n = 0.0;
    double err_ratio = 0.0;   // abs_err_n / abs_err_2n
    bool ratio_meaningful = false;  // false when the error is at machine floor
};

struct ConvergenceReport {
    long n_max = 0;
    std::vector<FactorReport> factors;
    FactorReport product;  // omega field unused
};

// Closed-form per-eigenvalue integrand with y = -e^{i delta}:
// (omega/2pi)/sinh(omega/4pi) * (e^{omega/4pi} + y e^{-omega/4pi})/2.
// The removable singularity at omega = 0 is filled with the limit 1+y.
std::complex<double> closed_form_factor(double omega, double delta);

// Truncation of the per-eigenvalue determinant product at N modes:
// e^{i delta/2} (omega/2pi - i delta) *
//   prod_{n=1..N} [1 + (omega/4pi - i delta/2)^2/(n pi)^2]
//               / [1 + (omega/4pi)^2/(n pi)^2].
// Factors accumulate as sums of logarithms; |omega| above the cap is rejected.
std::complex<double> truncated_factor(double omega, double delta, long n_max,
                                      double omega_cap = kDefaultOmegaCap);

// x * prod_{n=1..N} (1 + (x/n pi)^2); tends to sinh x from below for x > 0.
double sinh_partial_product(double x, long n_max);

// x * prod_{n=1..N} (1 - (x/n pi)^2); tends to sin x. Companion used by the
// omega = 0 cross-check.
double sin_partial_product(double x, long n_max);

ConvergenceReport convergence_report(const ModeSumConfig& cfg);

}  // namespace chiy
