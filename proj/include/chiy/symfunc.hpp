#pragma once

#include "chiy/graded.hpp"
#include "chiy/series.hpp"

namespace chiy {

// The oracle is exponential in d; anything above this is rejected.
inline constexpr int kBruteForceMaxDim = 6;

// Power sum p_k of the Chern roots written in c_1..c_d via the Newton
// recurrence p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... + (-1)^{k-1} k c_k,
// with c_i = 0 for i > d. Requires 1 <= k <= d.
GradedPoly power_sum_in_chern(int k, int d);

// Splitting-principle oracle: expand prod_{i=1..d} factor(x_i) in d symbolic
// roots, keep total degree <= d, and rewrite each symmetric homogeneous
// component in the elementary symmetric polynomials e_1..e_d = c_1..c_d by
// iterated leading-term elimination. Requires factor.order() >= d and
// d <= kBruteForceMaxDim.
GradedPoly brute_force_class(const USeries& factor, int d);

}  // namespace chiy
