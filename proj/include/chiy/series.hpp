#pragma once

#include <stdexcept>
#include <vector>

#include "chiy/ypoly.hpp"

namespace chiy {

// Univariate power series in x truncated at a fixed order D: exactly the
// coefficients of x^0..x^D are kept and every operation truncates back to D.
// Operands must share the same order; there is no silent extension.
template <class C>
class TruncSeries {
public:
    explicit TruncSeries(int order) : coeffs_(check_order(order) + 1) {}
    TruncSeries(int order, std::vector<C> cs) : coeffs_(std::move(cs)) {
        coeffs_.resize(check_order(order) + 1);
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const C& coeff(int k) const { return coeffs_.at(k); }
    void set_coeff(int k, C v) { coeffs_.at(k) = std::move(v); }

    TruncSeries operator-() const {
        TruncSeries r(order());
        for (int k = 0; k <= order(); ++k) r.coeffs_[k] = -coeffs_[k];
        return r;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        require_same_order(a, b);
        TruncSeries r(a.order());
        for (int k = 0; k <= a.order(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        return a + (-b);
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        require_same_order(a, b);
        TruncSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; i + j <= a.order(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const C& s) {
        TruncSeries r(a.order());
        for (int k = 0; k <= a.order(); ++k) r.coeffs_[k] = a.coeffs_[k] * s;
        return r;
    }

    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
        return order;
    }
    static void require_same_order(const TruncSeries& a, const TruncSeries& b) {
        if (a.order() != b.order())
            throw std::invalid_argument("TruncSeries: order mismatch");
    }
    C& mutable_coeff(int k) { return coeffs_.at(k); }

    std::vector<C> coeffs_;
};

using USeries = TruncSeries<YPoly>;

// Multiplicative inverse to the stated order. The constant term must be a
// nonzero rational constant (y-degree 0); anything else is rejected.
inline USeries reciprocal(const USeries& a) {
    const YPoly& c0 = a.coeff(0);
    if (c0.is_zero() || !c0.is_constant())
        throw std::invalid_argument("reciprocal: constant term is not a unit");
    const Rat inv0 = c0.coeff(0).inverse();
    USeries r(a.order());
    r.set_coeff(0, YPoly(inv0));
    for (int k = 1; k <= a.order(); ++k) {
        YPoly acc;
        for (int i = 1; i <= k; ++i) acc += a.coeff(i) * r.coeff(k - i);
        r.set_coeff(k, -acc * inv0);
    }
    return r;
}

// Taylor series of e^{-x}: coefficient of x^k is (-1)^k / k!.
inline USeries exp_neg_x(int order) {
    USeries r(order);
    for (int k = 0; k <= order; ++k) {
        Rat c(BigInt(k % 2 == 0 ? 1 : -1), factorial(k));
        r.set_coeff(k, YPoly(c));
    }
    return r;
}

}  // namespace chiy
