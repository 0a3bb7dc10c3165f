#ifndef K3LAT_POLY_HPP
#define K3LAT_POLY_HPP

#include <utility>
#include <vector>

#include "k3lat/quad_field.hpp"
#include "k3lat/rational.hpp"

namespace k3lat {

// Dense univariate polynomial over a field K (Rat or QuadExt). Coefficients
// ascending, trailing zeros trimmed; the zero polynomial has no coefficients
// and degree -1.
template <typename K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(const K& constant) : c_{constant} { trim(); }  // NOLINT

    static Polynomial monomial(const K& coeff, std::size_t power) {
        std::vector<K> c(power + 1);
        c[power] = coeff;
        return Polynomial(std::move(c));
    }
    static Polynomial variable() { return monomial(K(1), 1); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    K leading() const { return is_zero() ? K(0) : c_.back(); }

    K eval(const K& t) const {
        K acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<K> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(static_cast<int>(i));
        return Polynomial(std::move(d));
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<K> c(a.c_);
        for (auto& x : c) x = -x;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const K& s, const Polynomial& a) {
        std::vector<K> c(a.c_);
        for (auto& x : c) x = x * s;
        return Polynomial(std::move(c));
    }

    Polynomial pow(unsigned e) const {
        Polynomial r(K(1)), base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    // Euclidean division; K is a field.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        Polynomial r = a;
        std::vector<K> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, K(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            K f = r.leading() / b.leading();
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            q[shift] = q[shift] + f;
            r = r - monomial(f, shift) * b;
        }
        return {Polynomial(std::move(q)), r};
    }

    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw DomainError("inexact polynomial division");
        return q;
    }

    bool divides(const Polynomial& a) const { return divmod(a, *this).second.is_zero(); }

    Polynomial monic() const {
        if (is_zero()) return {};
        return (K(1) / leading()) * *this;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
    std::vector<K> c_;
};

using PolyQ = Polynomial<Rat>;
using PolyE = Polynomial<QuadExt>;

template <typename K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
    while (!b.is_zero()) {
        auto r = Polynomial<K>::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// multiplicity of the factor f in p (f nonconstant)
template <typename K>
int multiplicity(Polynomial<K> p, const Polynomial<K>& f) {
    if (p.is_zero()) throw DomainError("valuation of the zero polynomial");
    int v = 0;
    for (;;) {
        auto [q, r] = Polynomial<K>::divmod(p, f);
        if (!r.is_zero()) return v;
        ++v;
        p = std::move(q);
    }
}

// Yun's squarefree decomposition: p = prod parts[i].first ^ parts[i].second
// with the parts pairwise coprime and squarefree (char 0).
std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& p);

// all rational roots of p (each listed once)
std::vector<Rat> rational_roots(const PolyQ& p);

// scale to integer coefficients with content 1 and positive leading term
PolyQ primitive_integer_form(const PolyQ& p);

// order of vanishing at a rational point
int order_at(const PolyQ& p, const Rat& t0);

PolyE embed(const PolyQ& p, long d);

} // namespace k3lat

#endif
