#include "chiy/modesum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chiy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroOmega = 1e-12;   // threshold for the removable singularity
constexpr double kMachineFloor = 1e-13;

using Complex = std::complex<double>;

void check_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace

void ModeSumConfig::validate() const {
    if (n_max < 1) throw std::invalid_argument("ModeSumConfig: n_max must be >= 1");
    check_finite(delta, "ModeSumConfig: delta");
    if (delta < 0.0 || delta >= 2.0 * kPi)
        throw std::invalid_argument("ModeSumConfig: delta must lie in [0, 2*pi)");
    for (double w : omegas) {
        check_finite(w, "ModeSumConfig: omega");
        if (std::abs(w) > omega_cap)
            throw std::invalid_argument("ModeSumConfig: |omega| exceeds the cap");
    }
}

Complex closed_form_factor(double omega, double delta) {
    check_finite(omega, "closed_form_factor: omega");
    check_finite(delta, "closed_form_factor: delta");
    const Complex y = -std::exp(Complex(0.0, delta));
    if (std::abs(omega) < kZeroOmega) return 1.0 + y;  // limit of the flat factor
    const double x = omega / (4.0 * kPi);
    const Complex deformed = (std::exp(x) + y * std::exp(-x)) / 2.0;
    return (omega / (2.0 * kPi)) / std::sinh(x) * deformed;
}

Complex truncated_factor(double omega, double delta, long n_max, double omega_cap) {
    check_finite(omega, "truncated_factor: omega");
    check_finite(delta, "truncated_factor: delta");
    if (n_max < 1) throw std::invalid_argument("truncated_factor: n_max must be >= 1");
    if (std::abs(omega) > omega_cap)
        throw std::invalid_argument("truncated_factor: |omega| exceeds the cap");

    const Complex prefactor =
        std::exp(Complex(0.0, delta / 2.0)) * Complex(omega / (2.0 * kPi), -delta);
    const Complex shifted = Complex(omega / (4.0 * kPi), -delta / 2.0);
    const double plain = omega / (4.0 * kPi);

    Complex log_sum = 0.0;
    for (long n = 1; n <= n_max; ++n) {
        const double npi = static_cast<double>(n) * kPi;
        const Complex num = 1.0 + (shifted / npi) * (shifted / npi);
        const Complex den = 1.0 + Complex((plain / npi) * (plain / npi), 0.0);
        log_sum += std::log(num) - std::log(den);
    }
    return prefactor * std::exp(log_sum);
}

double sinh_partial_product(double x, long n_max) {
    check_finite(x, "sinh_partial_product: x");
    if (n_max < 1) throw std::invalid_argument("sinh_partial_product: n_max must be >= 1");
    double log_sum = 0.0;
    for (long n = 1; n <= n_max; ++n) {
        const double t = x / (static_cast<double>(n) * kPi);
        log_sum += std::log1p(t * t);
    }
    return x * std::exp(log_sum);
}

double sin_partial_product(double x, long n_max) {
    check_finite(x, "sin_partial_product: x");
    if (n_max < 1) throw std::invalid_argument("sin_partial_product: n_max must be >= 1");
    double value = x;
    for (long n = 1; n <= n_max; ++n) {
        const double t = x / (static_cast<double>(n) * kPi);
        value *= 1.0 - t * t;
    }
    return value;
}

namespace {

void fill_errors(FactorReport& r) {
    r.abs_err_n = std::abs(r.truncated_n - r.closed);
    r.abs_err_2n = std::abs(r.truncated_2n - r.closed);
    const double scale = std::abs(r.closed);
    r.rel_err_n = scale > 0.0 ? r.abs_err_n / scale : r.abs_err_n;
    r.rel_err_2n = scale > 0.0 ? r.abs_err_2n / scale : r.abs_err_2n;
    // Ratios are only meaningful above the double-precision noise floor;
    // delta = 0 makes the truncation exact, for instance.
    r.ratio_meaningful = r.abs_err_2n > kMachineFloor * std::max(1.0, scale);
    r.err_ratio = r.ratio_meaningful ? r.abs_err_n / r.abs_err_2n : 0.0;
}

}  // namespace

ConvergenceReport convergence_report(const ModeSumConfig& cfg) {
    cfg.validate();
    ConvergenceReport report;
    report.n_max = cfg.n_max;

    Complex prod_n = 1.0, prod_2n = 1.0, prod_closed = 1.0;
    for (double w : cfg.omegas) {
        FactorReport r;
        r.omega = w;
        r.truncated_n = truncated_factor(w, cfg.delta, cfg.n_max, cfg.omega_cap);
        r.truncated_2n = truncated_factor(w, cfg.delta, 2 * cfg.n_max, cfg.omega_cap);
        r.closed = closed_form_factor(w, cfg.delta);
        fill_errors(r);
        prod_n *= r.truncated_n;
        prod_2n *= r.truncated_2n;
        prod_closed *= r.closed;
        report.factors.push_back(r);
    }

    report.product.truncated_n = prod_n;
    report.product.truncated_2n = prod_2n;
    report.product.closed = prod_closed;
    fill_errors(report.product);
    return report;
}

}  // namespace chiy
