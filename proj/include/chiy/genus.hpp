#pragma once

#include <map>
#include <string>
#include <vector>

#include "chiy/graded.hpp"
#include "chiy/partition.hpp"
#include "chiy/rat.hpp"
#include "chiy/series.hpp"

namespace chiy {

// A manifold's complex dimension together with its Chern numbers, keyed by
// partitions of weight exactly dim. Missing keys mean 0.
class ChernData {
public:
    explicit ChernData(int dim) : dim_(check_dim(dim)) {}

    int dim() const { return dim_; }
    const std::map<Partition, BigInt>& numbers() const { return numbers_; }

    void set_number(const Partition& p, BigInt value) {
        if (p.weight() != dim_)
            throw std::invalid_argument("ChernData: partition weight " +
                                        std::to_string(p.weight()) + " != dim " +
                                        std::to_string(dim_));
        if (value == 0)
            numbers_.erase(p);
        else
            numbers_[p] = std::move(value);
    }

    BigInt number(const Partition& p) const {
        auto it = numbers_.find(p);
        return it == numbers_.end() ? BigInt(0) : it->second;
    }

    friend bool operator==(const ChernData&, const ChernData&) = default;

private:
    static int check_dim(int dim) {
        if (dim < 0) throw std::invalid_argument("ChernData: negative dimension");
        return dim;
    }

    int dim_;
    std::map<Partition, BigInt> numbers_;
};

// Table of Hodge numbers b_{i,j}, 0 <= i,j <= dim.
class HodgeTable {
public:
    explicit HodgeTable(int dim)
        : dim_(dim), b_((dim + 1) * (dim + 1), 0) {
        if (dim < 0) throw std::invalid_argument("HodgeTable: negative dimension");
    }

    int dim() const { return dim_; }
    long long b(int i, int j) const { return b_.at(idx(i, j)); }
    void set_b(int i, int j, long long v) {
        if (v < 0) throw std::invalid_argument("HodgeTable: negative Hodge number");
        b_.at(idx(i, j)) = v;
    }

    // b_{i,j} = b_{j,i} and b_{i,j} = b_{d-i,d-j}; holds for Kahler manifolds.
    bool is_kahler_symmetric() const {
        for (int i = 0; i <= dim_; ++i)
            for (int j = 0; j <= dim_; ++j)
                if (b(i, j) != b(j, i) || b(i, j) != b(dim_ - i, dim_ - j)) return false;
        return true;
    }

private:
    size_t idx(int i, int j) const {
        if (i < 0 || i > dim_ || j < 0 || j > dim_)
            throw std::invalid_argument("HodgeTable: index out of range");
        return static_cast<size_t>(i) * (dim_ + 1) + j;
    }

    int dim_;
    std::vector<long long> b_;
};

// chi_y of a d-dimensional manifold: coefficients a_0..a_d of the powers
// of y, stored at fixed length d+1 (trailing zeros kept).
class GenusPoly {
public:
    explicit GenusPoly(int dim) : coeffs_(check_dim(dim) + 1) {}
    GenusPoly(int dim, std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(check_dim(dim) + 1);
    }

    int dim() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& coeff(int j) const { return coeffs_.at(j); }
    void set_coeff(int j, Rat v) { coeffs_.at(j) = std::move(v); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const Rat& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    Rat eval(const Rat& y0) const {
        Rat r(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * y0 + *it;
        return r;
    }

    std::string str() const;

    friend GenusPoly operator*(const GenusPoly& a, const GenusPoly& b) {
        GenusPoly r(a.dim() + b.dim());
        for (int i = 0; i <= a.dim(); ++i)
            for (int j = 0; j <= b.dim(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return r;
    }

    friend bool operator==(const GenusPoly&, const GenusPoly&) = default;

private:
    static int check_dim(int dim) {
        if (dim < 0) throw std::invalid_argument("GenusPoly: negative dimension");
        return dim;
    }

    std::vector<Rat> coeffs_;
};

enum class Specialization { todd, euler, signature };

// Per-root factor of the genus, as a truncated series in the Chern root
// x with y-polynomial coefficients: x (1 + y e^{-x}) / (1 - e^{-x}).
// Constant term is (1+y).
USeries chi_factor(int order);

// prod_{i=1..d} chi_factor(x_i) reduced to a polynomial in c_1..c_d,
// truncated at weight d. Memoized per d; thread-safe.
GradedPoly genus_class(int d);

// Pair the weight-d part of genus_class(d) with the Chern numbers.
GenusPoly chi_y(const ChernData& data);

// Direct Hodge-table evaluation: a_j = sum_i (-1)^i b_{i,j}.
GenusPoly chi_from_hodge(const HodgeTable& h);

Rat specialize(const GenusPoly& g, Specialization which);
Rat specialize_at(const GenusPoly& g, const Rat& y0);

// Coefficient-wise defect a_j - (-1)^d a_{d-j}; identically zero for every
// output of chi_y.
GenusPoly serre_symmetry_defect(const GenusPoly& g);

// Partition [d] whose Chern number is the Euler number; empty for d = 0.
inline Partition top_chern_partition(int d) {
    return d == 0 ? Partition() : Partition({d});
}

}  // namespace chiy
