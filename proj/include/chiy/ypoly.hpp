#pragma once

#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chiy/rat.hpp"

namespace chiy {

// Polynomial in the formal variable y over Rat. Coefficients are stored
// ascending by power with trailing zeros trimmed; the zero polynomial
// keeps an empty coefficient vector and reports degree -1.
class YPoly {
public:
    YPoly() = default;
    YPoly(std::initializer_list<Rat> cs) : coeffs_(cs) { trim(); }
    explicit YPoly(std::vector<Rat> cs) : coeffs_(std::move(cs)) { trim(); }
    explicit YPoly(const Rat& c) : coeffs_{c} { trim(); }

    static YPoly zero() { return YPoly(); }
    static YPoly one() { return YPoly(Rat(1)); }
    static YPoly y() { return YPoly{Rat(0), Rat(1)}; }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    Rat coeff(int j) const {
        if (j < 0 || j >= static_cast<int>(coeffs_.size())) return Rat(0);
        return coeffs_[j];
    }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    YPoly operator-() const {
        std::vector<Rat> r(coeffs_.size());
        for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = -coeffs_[i];
        return YPoly(std::move(r));
    }

    friend YPoly operator+(const YPoly& a, const YPoly& b) {
        std::vector<Rat> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(int(i)) + b.coeff(int(i));
        return YPoly(std::move(r));
    }
    friend YPoly operator-(const YPoly& a, const YPoly& b) { return a + (-b); }
    friend YPoly operator*(const YPoly& a, const YPoly& b) {
        if (a.is_zero() || b.is_zero()) return YPoly();
        std::vector<Rat> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return YPoly(std::move(r));
    }
    friend YPoly operator*(const YPoly& a, const Rat& s) {
        std::vector<Rat> r(a.coeffs_.size());
        for (size_t i = 0; i < a.coeffs_.size(); ++i) r[i] = a.coeffs_[i] * s;
        return YPoly(std::move(r));
    }
    friend YPoly operator*(const Rat& s, const YPoly& a) { return a * s; }
    friend YPoly operator/(const YPoly& a, const Rat& s) { return a * s.inverse(); }

    YPoly& operator+=(const YPoly& o) { return *this = *this + o; }
    YPoly& operator-=(const YPoly& o) { return *this = *this - o; }
    YPoly& operator*=(const YPoly& o) { return *this = *this * o; }

    friend bool operator==(const YPoly& a, const YPoly& b) = default;

    // Horner evaluation at an exact rational point.
    Rat eval(const Rat& y0) const {
        Rat r(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * y0 + *it;
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t j = 0; j < coeffs_.size(); ++j) {
            const Rat& c = coeffs_[j];
            if (c.is_zero()) continue;
            if (first) {
                if (c.sign() < 0) os << "-";
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            const Rat mag = c.sign() < 0 ? -c : c;
            const bool unit = mag == Rat(1) && j > 0;
            if (!unit) os << mag.str();
            if (j > 0) {
                if (!unit) os << "*";
                os << "y";
                if (j > 1) os << "^" << j;
            }
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

inline Rat ypoly_eval(const YPoly& p, const Rat& y0) { return p.eval(y0); }

inline YPoly pow(const YPoly& base, int e) {
    YPoly r = YPoly::one();
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace chiy
