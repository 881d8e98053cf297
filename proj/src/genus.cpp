#include "chiy/genus.hpp"

#include <mutex>
#include <sstream>

#include "chiy/locpoly.hpp"
#include "chiy/symfunc.hpp"

namespace chiy {

std::string GenusPoly::str() const {
    std::vector<Rat> cs = coeffs_;
    while (cs.size() > 1 && cs.back().is_zero()) cs.pop_back();
    return YPoly(std::move(cs)).str();
}

USeries chi_factor(int order) {
    // (1 - e^{-x})/x has x^k coefficient (-1)^k/(k+1)!.
    USeries denom(order);
    for (int k = 0; k <= order; ++k)
        denom.set_coeff(k, YPoly(Rat(BigInt(k % 2 == 0 ? 1 : -1), factorial(k + 1))));
    // 1 + y e^{-x}
    USeries numer(order);
    numer.set_coeff(0, YPoly{Rat(1), Rat(1)});
    for (int k = 1; k <= order; ++k)
        numer.set_coeff(k, YPoly{Rat(0), Rat(BigInt(k % 2 == 0 ? 1 : -1), factorial(k))});
    return reciprocal(denom) * numer;
}

namespace {

using LocGraded = GradedPolyT<LocPoly>;

LocGraded lift(const GradedPoly& a) {
    LocGraded r(a.dim());
    for (const auto& [p, c] : a.terms()) r.add_term(p, LocPoly(c));
    return r;
}

// The factor's constant term is the unit (1+y), which is not invertible
// among y-polynomials. Work with Qhat = Q/(1+y) in the ring localized at
// (1+y), take its log there, exponentiate the power-sum combination, and
// restore the (1+y)^d prefactor; the localization must cancel completely
// in the result.
GradedPoly compute_genus_class(int d) {
    if (d == 0) return GradedPoly::one(0);
    const USeries factor = chi_factor(d);

    TruncSeries<LocPoly> u(d);  // Qhat - 1
    for (int k = 1; k <= d; ++k) u.set_coeff(k, LocPoly(factor.coeff(k), 1));

    // log(1 + u) coefficient by coefficient up to x^d.
    TruncSeries<LocPoly> log_qhat(d);
    TruncSeries<LocPoly> upow = u;
    for (int m = 1; m <= d; ++m) {
        log_qhat += upow * LocPoly(Rat(BigInt(m % 2 == 1 ? 1 : -1), BigInt(m)));
        if (m < d) upow *= u;
    }

    LocGraded exponent(d);
    for (int k = 1; k <= d; ++k)
        exponent += lift(power_sum_in_chern(k, d)) * log_qhat.coeff(k);

    const LocGraded expanded = graded_exp(exponent);
    const YPoly unit_power = pow(YPoly{Rat(1), Rat(1)}, d);
    GradedPoly out(d);
    for (const auto& [p, c] : expanded.terms())
        out.add_term(p, (c * unit_power).to_ypoly());
    return out;
}

}  // namespace

GradedPoly genus_class(int d) {
    if (d < 0) throw std::invalid_argument("genus_class: negative dimension");
    static std::mutex mu;
    static std::map<int, GradedPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    GradedPoly result = compute_genus_class(d);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(d, std::move(result)).first->second;
}

GenusPoly chi_y(const ChernData& data) {
    const int d = data.dim();
    const GradedPoly cls = genus_class(d);
    YPoly total;
    for (const auto& [p, value] : data.numbers()) {
        if (p.weight() != d)
            throw std::invalid_argument("chi_y: partition key of wrong weight");
        total += cls.coeff(p) * Rat(value);
    }
    if (total.degree() > d)
        throw std::logic_error("chi_y: y-degree exceeds dimension");
    GenusPoly g(d);
    for (int j = 0; j <= d; ++j) g.set_coeff(j, total.coeff(j));
    return g;
}

GenusPoly chi_from_hodge(const HodgeTable& h) {
    GenusPoly g(h.dim());
    for (int j = 0; j <= h.dim(); ++j) {
        Rat a(0);
        for (int i = 0; i <= h.dim(); ++i)
            a += Rat(i % 2 == 0 ? 1 : -1) * Rat(h.b(i, j));
        g.set_coeff(j, a);
    }
    return g;
}

Rat specialize(const GenusPoly& g, Specialization which) {
    switch (which) {
        case Specialization::todd: return g.coeff(0);
        case Specialization::euler: return g.eval(Rat(-1));
        case Specialization::signature: return g.eval(Rat(1));
    }
    throw std::invalid_argument("specialize: unknown specialization");
}

Rat specialize_at(const GenusPoly& g, const Rat& y0) { return g.eval(y0); }

GenusPoly serre_symmetry_defect(const GenusPoly& g) {
    const int d = g.dim();
    GenusPoly defect(d);
    const Rat sign(d % 2 == 0 ? 1 : -1);
    for (int j = 0; j <= d; ++j)
        defect.set_coeff(j, g.coeff(j) - sign * g.coeff(d - j));
    return defect;
}

}  // namespace chiy
