#include "chiy/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "chiy/catalog.hpp"
#include "chiy/symfunc.hpp"

namespace chiy {

namespace {

constexpr double kPi = std::numbers::pi;

CheckResult pass(std::string name, std::string detail = "") {
    return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

GenusPoly projective_expected(int n) {
    GenusPoly g(n);
    for (int j = 0; j <= n; ++j) g.set_coeff(j, Rat(j % 2 == 0 ? 1 : -1));
    return g;
}

}  // namespace

std::complex<double> eval_ypoly(const YPoly& p, std::complex<double> y0) {
    std::complex<double> r = 0.0;
    for (int j = p.degree(); j >= 0; --j) r = r * y0 + p.coeff(j).to_double();
    return r;
}

ChernData random_chern_data(int dim, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> entry(-50, 50);
    ChernData data(dim);
    for (const Partition& p : partitions_of(dim)) data.set_number(p, entry(rng));
    return data;
}

std::vector<CheckResult> run_symbolic_suite(unsigned seed) {
    std::vector<CheckResult> out;

    // genus_class against the splitting-principle oracle, d = 1..4.
    {
        bool ok = true;
        std::string detail;
        for (int d = 1; d <= 4 && ok; ++d) {
            if (genus_class(d) != brute_force_class(chi_factor(d), d)) {
                ok = false;
                detail = "mismatch at d=" + std::to_string(d);
            }
        }
        out.push_back(ok ? pass("genus-class vs brute-force oracle (d=1..4)")
                         : fail("genus-class vs brute-force oracle (d=1..4)", detail));
    }

    // Projective spaces against the Hodge oracle, n = 0..6.
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= 6 && ok; ++n) {
            const ManifoldSpec spec = spec_projective(n);
            const GenusPoly g = chi_y(projective_space(n));
            if (g != projective_expected(n)) {
                ok = false;
                detail = "chi_y(cp:" + std::to_string(n) + ") != sum (-y)^j";
                break;
            }
            const auto table = hodge_table_for(spec);
            if (!table || g != chi_from_hodge(*table)) {
                ok = false;
                detail = "Hodge oracle mismatch at cp:" + std::to_string(n);
            }
        }
        out.push_back(ok ? pass("projective spaces match the Hodge oracle (n=0..6)")
                         : fail("projective spaces match the Hodge oracle (n=0..6)", detail));
    }

    // K3 as the quartic surface.
    {
        const GenusPoly g = chi_y(hypersurface(2, 4));
        const GenusPoly expected(2, {Rat(2), Rat(-20), Rat(2)});
        const bool ok = g == expected && specialize(g, Specialization::euler) == Rat(24) &&
                        specialize(g, Specialization::signature) == Rat(-16) &&
                        specialize(g, Specialization::todd) == Rat(2);
        out.push_back(ok ? pass("K3 (hyp:2:4): chi_y = 2 - 20y + 2y^2, e=24, sig=-16, td=2")
                         : fail("K3 (hyp:2:4): chi_y = 2 - 20y + 2y^2, e=24, sig=-16, td=2",
                                "got " + g.str()));
    }

    // Degree-1 hypersurfaces are hyperplanes.
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= 6 && ok; ++n) {
            if (!(hypersurface(n, 1) == projective_space(n))) {
                ok = false;
                detail = "n=" + std::to_string(n);
            }
        }
        out.push_back(ok ? pass("hyp:n:1 reproduces cp:n Chern numbers (n=0..6)")
                         : fail("hyp:n:1 reproduces cp:n Chern numbers (n=0..6)", detail));
    }

    // Quadric surface = CP^1 x CP^1.
    {
        const GenusPoly quadric = chi_y(hypersurface(2, 2));
        const GenusPoly torus = chi_y(product(projective_space(1), projective_space(1)));
        const GenusPoly expected(2, {Rat(1), Rat(-2), Rat(1)});
        const bool ok = quadric == torus && quadric == expected;
        out.push_back(ok ? pass("chi_y(hyp:2:2) = chi_y(prod:cp:1:cp:1) = (1-y)^2")
                         : fail("chi_y(hyp:2:2) = chi_y(prod:cp:1:cp:1) = (1-y)^2",
                                "quadric " + quadric.str() + ", product " + torus.str()));
    }

    // Euler numbers of surfaces in CP^3.
    {
        bool ok = true;
        std::string detail;
        for (long long k = 1; k <= 6 && ok; ++k) {
            const Rat euler = specialize(chi_y(hypersurface(2, int(k))), Specialization::euler);
            const Rat expected(k * k * k - 4 * k * k + 6 * k);
            if (euler != expected) {
                ok = false;
                detail = "k=" + std::to_string(k) + ": got " + euler.str() + ", want " +
                         expected.str();
            }
        }
        out.push_back(ok ? pass("euler(hyp:2:k) = k^3 - 4k^2 + 6k (k=1..6)")
                         : fail("euler(hyp:2:k) = k^3 - 4k^2 + 6k (k=1..6)", detail));
    }

    // Polynomial identities on random Chern data.
    {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> dim_dist(0, 4);
        bool ok = true;
        std::string detail;
        for (int trial = 0; trial < 100 && ok; ++trial) {
            const int da = dim_dist(rng), db = dim_dist(rng);
            const ChernData a = random_chern_data(da, rng());
            const ChernData b = random_chern_data(db, rng());
            const GenusPoly ga = chi_y(a);
            if (specialize(ga, Specialization::euler) !=
                Rat(a.number(top_chern_partition(a.dim())))) {
                ok = false;
                detail = "euler != top Chern number at trial " + std::to_string(trial);
                break;
            }
            if (!serre_symmetry_defect(ga).is_zero()) {
                ok = false;
                detail = "nonzero Serre defect at trial " + std::to_string(trial);
                break;
            }
            if (!(chi_y(product(a, b)) == ga * chi_y(b))) {
                ok = false;
                detail = "multiplicativity failed at trial " + std::to_string(trial);
            }
        }
        out.push_back(ok ? pass("random Chern data: euler = c_d, Serre defect 0, multiplicativity "
                                "(100 trials, d <= 4)")
                         : fail("random Chern data: euler = c_d, Serre defect 0, multiplicativity "
                                "(100 trials, d <= 4)",
                                detail));
    }

    // Newton round-trip: reconstruct e_k from the power sums, d <= 6.
    {
        bool ok = true;
        std::string detail;
        for (int d = 1; d <= 6 && ok; ++d) {
            std::vector<GradedPoly> e;
            e.push_back(GradedPoly::one(d));
            for (int k = 1; k <= d && ok; ++k) {
                GradedPoly acc(d);
                for (int i = 1; i <= k; ++i) {
                    const Rat sign(i % 2 == 1 ? 1 : -1);
                    acc += e[k - i] * power_sum_in_chern(i, d) * sign;
                }
                acc = acc * Rat(BigInt(1), BigInt(k));
                if (!(acc == chern_monomial(k, d))) {
                    ok = false;
                    detail = "e_" + std::to_string(k) + " at d=" + std::to_string(d);
                }
                e.push_back(std::move(acc));
            }
        }
        out.push_back(ok ? pass("Newton round-trip reconstructs c_k from power sums (d <= 6)")
                         : fail("Newton round-trip reconstructs c_k from power sums (d <= 6)",
                                detail));
    }

    return out;
}

namespace {

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

}  // namespace

std::vector<CheckResult> run_modesum_suite(long n_max) {
    std::vector<CheckResult> out;
    const std::vector<double> omegas = {0.0, 0.5, 1.0, 2.0};
    const std::vector<double> deltas = {0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0};

    // Truncated product converges to the closed form on the grid.
    {
        bool ok = true;
        std::string detail;
        for (double delta : deltas) {
            for (double omega : omegas) {
                ModeSumConfig cfg;
                cfg.omegas = {omega};
                cfg.delta = delta;
                cfg.n_max = n_max;
                const FactorReport r = convergence_report(cfg).factors.at(0);
                if (r.rel_err_n > 1e-3) {
                    ok = false;
                    detail = "error " + fmt_double(r.rel_err_n) + " at omega=" +
                             std::to_string(omega) + ", delta=" + std::to_string(delta);
                }
            }
        }
        out.push_back(ok ? pass("mode-sum error <= 1e-3 on the grid at N=" + std::to_string(n_max))
                         : fail("mode-sum error <= 1e-3 on the grid at N=" + std::to_string(n_max),
                                detail));
    }

    // Error decays like 1/N: ratio between N and 2N near 2.
    {
        bool ok = true;
        std::string detail;
        for (long n : {500L, 1000L, std::max(n_max, 500L)}) {
            for (double delta : deltas) {
                for (double omega : omegas) {
                    ModeSumConfig cfg;
                    cfg.omegas = {omega};
                    cfg.delta = delta;
                    cfg.n_max = n;
                    const FactorReport r = convergence_report(cfg).factors.at(0);
                    if (!r.ratio_meaningful) continue;  // truncation exact, e.g. delta = 0
                    if (r.err_ratio < 1.7 || r.err_ratio > 2.3) {
                        ok = false;
                        detail = "ratio " + fmt_double(r.err_ratio) + " at omega=" +
                                 std::to_string(omega) + ", delta=" + std::to_string(delta) +
                                 ", N=" + std::to_string(n);
                    }
                }
            }
        }
        out.push_back(ok ? pass("mode-sum error ratio N vs 2N within [1.7, 2.3]")
                         : fail("mode-sum error ratio N vs 2N within [1.7, 2.3]", detail));
    }

    // sinh product identity at x = 1.
    {
        const double target = std::sinh(1.0);
        const double err4 = std::abs(sinh_partial_product(1.0, 10000) / target - 1.0);
        const double err_a = std::abs(sinh_partial_product(1.0, 1000) / target - 1.0);
        const double err_b = std::abs(sinh_partial_product(1.0, 2000) / target - 1.0);
        const double ratio = err_a / err_b;
        const bool ok = err4 <= 1e-4 && ratio >= 1.8 && ratio <= 2.2;
        out.push_back(ok ? pass("sinh partial product: error <= 1e-4 at N=10^4, 1/N decay")
                         : fail("sinh partial product: error <= 1e-4 at N=10^4, 1/N decay",
                                "err=" + fmt_double(err4) + ", ratio=" + fmt_double(ratio)));
    }

    // At omega = 0 the truncation is the partial sin product.
    {
        bool ok = true;
        std::string detail;
        for (double delta : {kPi / 2.0, kPi, 3.0 * kPi / 2.0}) {
            const std::complex<double> got = truncated_factor(0.0, delta, n_max);
            const std::complex<double> sin_form =
                std::complex<double>(0.0, -2.0) *
                std::exp(std::complex<double>(0.0, delta / 2.0)) *
                sin_partial_product(delta / 2.0, n_max);
            const std::complex<double> limit =
                1.0 - std::exp(std::complex<double>(0.0, delta));
            if (std::abs(got - sin_form) > 1e-10 || std::abs(got - limit) > 1e-3) {
                ok = false;
                detail = "delta=" + std::to_string(delta);
            }
        }
        out.push_back(ok ? pass("omega=0 truncation equals -2i e^{i delta/2} sin-partial, "
                                "limit 1 - e^{i delta}")
                         : fail("omega=0 truncation equals -2i e^{i delta/2} sin-partial, "
                                "limit 1 - e^{i delta}",
                                detail));
    }

    // Symbolic-numeric link: chi_factor coefficients at y = -e^{i delta}
    // against finite differences of the closed form in u = omega/2pi.
    {
        const USeries factor = chi_factor(2);
        const double h = 1e-3;
        bool ok = true;
        std::string detail;
        for (double delta : {kPi / 2.0, kPi}) {
            const std::complex<double> y = -std::exp(std::complex<double>(0.0, delta));
            const auto f = [delta](double u) {
                return closed_form_factor(2.0 * kPi * u, delta);
            };
            const std::complex<double> f0 = f(0.0), fp = f(h), fm = f(-h);
            const std::complex<double> fd[3] = {f0, (fp - fm) / (2.0 * h),
                                                (fp - 2.0 * f0 + fm) / (2.0 * h * h)};
            for (int k = 0; k <= 2; ++k) {
                const std::complex<double> sym = eval_ypoly(factor.coeff(k), y);
                if (std::abs(sym - fd[k]) > 1e-6) {
                    ok = false;
                    detail = "coefficient x^" + std::to_string(k) + " at delta=" +
                             std::to_string(delta) + ", diff=" +
                             fmt_double(std::abs(sym - fd[k]));
                }
            }
        }
        out.push_back(ok ? pass("chi_factor coefficients match finite differences of the "
                                "closed form (delta = pi/2, pi)")
                         : fail("chi_factor coefficients match finite differences of the "
                                "closed form (delta = pi/2, pi)",
                                detail));
    }

    return out;
}

}  // namespace chiy
