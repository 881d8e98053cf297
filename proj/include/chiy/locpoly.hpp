#pragma once

#include <optional>
#include <stdexcept>

#include "chiy/rat.hpp"
#include "chiy/ypoly.hpp"

namespace chiy {

// Exact division by (1+y); nullopt when the remainder is nonzero.
inline std::optional<YPoly> divide_by_one_plus_y(const YPoly& p) {
    if (p.is_zero()) return YPoly::zero();
    const int n = p.degree();
    std::vector<Rat> q(n);  // quotient has degree n-1
    Rat carry = p.coeff(n);
    for (int k = n - 1; k >= 0; --k) {
        q[k] = carry;
        carry = p.coeff(k) - carry;
    }
    if (!carry.is_zero()) return std::nullopt;
    return YPoly(std::move(q));
}

// Element of the ring of y-polynomials localized at (1+y): num / (1+y)^k,
// kept normalized with (1+y) divided out of num as far as it goes.
class LocPoly {
public:
    LocPoly() = default;
    explicit LocPoly(const Rat& c) : num_(YPoly(c)) {}
    explicit LocPoly(YPoly num, int denom_pow = 0)
        : num_(std::move(num)), pow_(denom_pow) {
        if (denom_pow < 0) throw std::invalid_argument("LocPoly: negative power");
        normalize();
    }

    const YPoly& num() const { return num_; }
    int denom_pow() const { return pow_; }
    bool is_zero() const { return num_.is_zero(); }

    // The value as a plain polynomial; a leftover (1+y) denominator is an
    // internal consistency failure at every call site.
    YPoly to_ypoly() const {
        if (pow_ != 0)
            throw std::logic_error("LocPoly: residual (1+y) denominator, expected a polynomial");
        return num_;
    }

    LocPoly operator-() const {
        LocPoly r;
        r.num_ = -num_;
        r.pow_ = pow_;
        return r;
    }

    friend LocPoly operator+(const LocPoly& a, const LocPoly& b) {
        const int p = std::max(a.pow_, b.pow_);
        return LocPoly(a.lifted_num(p) + b.lifted_num(p), p);
    }
    friend LocPoly operator-(const LocPoly& a, const LocPoly& b) { return a + (-b); }
    friend LocPoly operator*(const LocPoly& a, const LocPoly& b) {
        return LocPoly(a.num_ * b.num_, a.pow_ + b.pow_);
    }
    friend LocPoly operator*(const LocPoly& a, const Rat& s) {
        return LocPoly(a.num_ * s, a.pow_);
    }
    friend LocPoly operator*(const LocPoly& a, const YPoly& s) {
        return LocPoly(a.num_ * s, a.pow_);
    }

    LocPoly& operator+=(const LocPoly& o) { return *this = *this + o; }
    LocPoly& operator*=(const LocPoly& o) { return *this = *this * o; }

    friend bool operator==(const LocPoly& a, const LocPoly& b) {
        // Normal forms are unique, so componentwise comparison is exact.
        return a.pow_ == b.pow_ && a.num_ == b.num_;
    }

private:
    YPoly lifted_num(int target_pow) const {
        YPoly r = num_;
        for (int i = pow_; i < target_pow; ++i) r *= YPoly{Rat(1), Rat(1)};
        return r;
    }

    void normalize() {
        if (num_.is_zero()) {
            pow_ = 0;
            return;
        }
        while (pow_ > 0) {
            auto q = divide_by_one_plus_y(num_);
            if (!q) break;
            num_ = std::move(*q);
            --pow_;
        }
    }

    YPoly num_;
    int pow_ = 0;
};

}  // namespace chiy
