#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "chiy/series.hpp"

namespace chiy::testutil {

inline Rat rq(long long n, long long d = 1) { return Rat(n, d); }

inline YPoly yp(std::initializer_list<Rat> cs) { return YPoly(std::vector<Rat>(cs)); }

// Series of the given coefficients; order = count - 1.
inline USeries us(std::initializer_list<YPoly> cs) {
    std::vector<YPoly> v(cs);
    const int order = static_cast<int>(v.size()) - 1;
    return USeries(order, std::move(v));
}

inline Rat random_rat(std::mt19937& rng, int span = 20) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, span);
    return Rat(num(rng), den(rng));
}

inline YPoly random_ypoly(std::mt19937& rng, int max_deg = 3) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Rat> cs(deg(rng) + 1);
    for (auto& c : cs) c = random_rat(rng);
    return YPoly(std::move(cs));
}

inline USeries random_useries(std::mt19937& rng, int order) {
    USeries s(order);
    for (int k = 0; k <= order; ++k) s.set_coeff(k, random_ypoly(rng));
    return s;
}

}  // namespace chiy::testutil
