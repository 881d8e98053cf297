#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "chiy/partition.hpp"
#include "chiy/rat.hpp"
#include "chiy/ypoly.hpp"

namespace chiy {

// Polynomial in the Chern classes c_1..c_d, graded by weight and truncated
// at weight d: every stored key is a partition of weight <= d with parts
// <= d, and products drop all higher-weight terms. Zero coefficients are
// never stored.
template <class C>
class GradedPolyT {
public:
    explicit GradedPolyT(int dim) : dim_(check_dim(dim)) {}

    static GradedPolyT one(int dim) {
        GradedPolyT r(dim);
        r.add_term(Partition(), C(Rat(1)));
        return r;
    }

    int dim() const { return dim_; }
    const std::map<Partition, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C coeff(const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? C() : it->second;
    }

    void add_term(const Partition& p, const C& c) {
        if (p.weight() > dim_ || p.max_part() > dim_)
            throw std::invalid_argument("GradedPoly: term exceeds grading bound");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(p, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GradedPolyT operator-() const {
        GradedPolyT r(dim_);
        for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
        return r;
    }

    friend GradedPolyT operator+(const GradedPolyT& a, const GradedPolyT& b) {
        require_same_dim(a, b);
        GradedPolyT r = a;
        for (const auto& [p, c] : b.terms_) r.add_term(p, c);
        return r;
    }
    friend GradedPolyT operator-(const GradedPolyT& a, const GradedPolyT& b) {
        return a + (-b);
    }
    friend GradedPolyT operator*(const GradedPolyT& a, const GradedPolyT& b) {
        require_same_dim(a, b);
        GradedPolyT r(a.dim_);
        for (const auto& [pa, ca] : a.terms_)
            for (const auto& [pb, cb] : b.terms_) {
                if (pa.weight() + pb.weight() > a.dim_) continue;
                r.add_term(pa.merged(pb), ca * cb);
            }
        return r;
    }
    friend GradedPolyT operator*(const GradedPolyT& a, const C& s) {
        GradedPolyT r(a.dim_);
        for (const auto& [p, c] : a.terms_) r.add_term(p, c * s);
        return r;
    }
    friend GradedPolyT operator*(const GradedPolyT& a, const Rat& s) {
        GradedPolyT r(a.dim_);
        for (const auto& [p, c] : a.terms_) r.add_term(p, c * s);
        return r;
    }

    GradedPolyT& operator+=(const GradedPolyT& o) { return *this = *this + o; }
    GradedPolyT& operator-=(const GradedPolyT& o) { return *this = *this - o; }
    GradedPolyT& operator*=(const GradedPolyT& o) { return *this = *this * o; }

    friend bool operator==(const GradedPolyT&, const GradedPolyT&) = default;

private:
    static int check_dim(int dim) {
        if (dim < 0) throw std::invalid_argument("GradedPoly: negative dimension");
        return dim;
    }
    static void require_same_dim(const GradedPolyT& a, const GradedPolyT& b) {
        if (a.dim_ != b.dim_)
            throw std::invalid_argument("GradedPoly: dimension mismatch");
    }

    int dim_;
    std::map<Partition, C> terms_;
};

using GradedPoly = GradedPolyT<YPoly>;

// The monomial c_k in dimension d.
inline GradedPoly chern_monomial(int k, int d) {
    GradedPoly r(d);
    r.add_term(Partition({k}), YPoly::one());
    return r;
}

// exp(a) = sum_{k=0..d} a^k / k!, truncated at weight d.
// a must have no weight-0 term.
template <class C>
GradedPolyT<C> graded_exp(const GradedPolyT<C>& a) {
    if (!a.coeff(Partition()).is_zero())
        throw std::invalid_argument("graded_exp: nonzero constant term");
    GradedPolyT<C> result = GradedPolyT<C>::one(a.dim());
    GradedPolyT<C> term = GradedPolyT<C>::one(a.dim());
    for (int k = 1; k <= a.dim(); ++k) {
        term = term * a;
        if (term.is_zero()) break;
        term = term * Rat(BigInt(1), BigInt(k));
        result += term;
    }
    return result;
}

// log(a) = sum_{k=1..d} (-1)^{k+1} (a-1)^k / k, truncated at weight d.
// a must have weight-0 term exactly 1.
template <class C>
GradedPolyT<C> graded_log(const GradedPolyT<C>& a) {
    if (!(a.coeff(Partition()) == C(Rat(1))))
        throw std::invalid_argument("graded_log: constant term is not 1");
    const GradedPolyT<C> b = a - GradedPolyT<C>::one(a.dim());
    GradedPolyT<C> result(a.dim());
    GradedPolyT<C> power = GradedPolyT<C>::one(a.dim());
    for (int k = 1; k <= a.dim(); ++k) {
        power = power * b;
        if (power.is_zero()) break;
        result += power * Rat(BigInt(k % 2 == 1 ? 1 : -1), BigInt(k));
    }
    return result;
}

}  // namespace chiy
