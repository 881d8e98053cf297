#pragma once

#include <complex>
#include <string>
#include <vector>

#include "chiy/genus.hpp"
#include "chiy/modesum.hpp"

namespace chiy {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // non-empty on failure, optional context on success
};

inline bool all_pass(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

// Floating-point evaluation of a y-polynomial at a complex point.
std::complex<double> eval_ypoly(const YPoly& p, std::complex<double> y0);

// Random Chern data with integer entries in [-50, 50]; deterministic in seed.
ChernData random_chern_data(int dim, unsigned seed);

// Exact identities of the genus engine and the catalog.
std::vector<CheckResult> run_symbolic_suite(unsigned seed = 20240901);

// Convergence of the truncated determinant product and the sinh identity.
std::vector<CheckResult> run_modesum_suite(long n_max = 10000);

}  // namespace chiy
