#include "chiy/symfunc.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace chiy {

GradedPoly power_sum_in_chern(int k, int d) {
    if (k < 1 || k > d)
        throw std::invalid_argument("power_sum_in_chern: k out of range");
    std::vector<GradedPoly> p;
    p.reserve(k + 1);
    p.emplace_back(d);  // p_0 unused
    for (int m = 1; m <= k; ++m) {
        GradedPoly pm(d);
        for (int i = 1; i < m; ++i) {
            const Rat sign(i % 2 == 1 ? 1 : -1);
            pm += chern_monomial(i, d) * p[m - i] * sign;
        }
        if (m <= d) {
            const Rat sign(m % 2 == 1 ? 1 : -1);
            pm += chern_monomial(m, d) * (sign * Rat(m));
        }
        p.push_back(std::move(pm));
    }
    return p[k];
}

namespace {

// Dense-exponent polynomial in the roots x_1..x_d; keys are exponent
// vectors of length d, compared lexicographically by std::map.
using Exponents = std::vector<int>;
using MultiPoly = std::map<Exponents, YPoly>;

int total_degree(const Exponents& e) {
    int t = 0;
    for (int v : e) t += v;
    return t;
}

void add_to(MultiPoly& p, const Exponents& e, const YPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = p.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

MultiPoly mul_trunc(const MultiPoly& a, const MultiPoly& b, int cap) {
    MultiPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            if (total_degree(e) > cap) continue;
            add_to(r, e, ca * cb);
        }
    return r;
}

// Elementary symmetric polynomial e_k in d variables, as sum over k-subsets.
MultiPoly elementary_symmetric(int k, int d) {
    MultiPoly r;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Exponents e(d, 0);
        for (int i : idx) e[i] = 1;
        add_to(r, e, YPoly::one());
        int j = k - 1;
        while (j >= 0 && idx[j] == d - k + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int i = j + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return r;
}

}  // namespace

GradedPoly brute_force_class(const USeries& factor, int d) {
    if (d < 0 || d > kBruteForceMaxDim)
        throw std::invalid_argument("brute_force_class: dimension out of range");
    if (factor.order() < d)
        throw std::invalid_argument("brute_force_class: factor order below dimension");

    if (d == 0) return GradedPoly::one(0);  // empty product over zero roots

    // prod_{i=1..d} factor(x_i), truncated at total degree d.
    MultiPoly prod{{Exponents(d, 0), YPoly::one()}};
    for (int i = 0; i < d; ++i) {
        MultiPoly fi;
        for (int k = 0; k <= d; ++k) {
            Exponents e(d, 0);
            e[i] = k;
            add_to(fi, e, factor.coeff(k));
        }
        prod = mul_trunc(prod, fi, d);
    }

    std::vector<MultiPoly> elem(d + 1);
    for (int k = 1; k <= d; ++k) elem[k] = elementary_symmetric(k, d);

    // Gauss's algorithm: cancel the lex-leading monomial with the matching
    // product of elementary symmetric polynomials until nothing is left.
    GradedPoly out(d);
    while (!prod.empty()) {
        const auto lead = std::prev(prod.end());
        const Exponents alpha = lead->first;
        const YPoly coeff = lead->second;
        for (size_t j = 0; j + 1 < alpha.size(); ++j)
            if (alpha[j] < alpha[j + 1])
                throw std::logic_error("brute_force_class: non-symmetric intermediate");

        std::vector<int> parts;
        MultiPoly emono{{Exponents(d, 0), YPoly::one()}};
        for (int j = 0; j < d; ++j) {
            const int mult = alpha[j] - (j + 1 < d ? alpha[j + 1] : 0);
            for (int m = 0; m < mult; ++m) {
                parts.push_back(j + 1);
                emono = mul_trunc(emono, elem[j + 1], d);
            }
        }
        out.add_term(Partition(parts), coeff);
        for (const auto& [e, c] : emono) add_to(prod, e, -(c * coeff));
    }
    return out;
}

}  // namespace chiy
