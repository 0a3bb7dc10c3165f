#include "k3lat/poly.hpp"

#include <algorithm>

namespace k3lat {

std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& p) {
    std::vector<std::pair<PolyQ, int>> out;
    if (p.degree() < 1) return out;
    PolyQ f = p.monic();
    PolyQ g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) {
        out.push_back({f, 1});
        return out;
    }
    PolyQ c = f / g;
    PolyQ d = f.derivative() / g - c.derivative();
    for (int i = 1; !c.is_zero() && c.degree() > 0; ++i) {
        PolyQ a = poly_gcd(c, d);
        if (a.degree() > 0) out.push_back({a, i});
        c = c / a;
        d = d / a - c.derivative();
    }
    return out;
}

namespace {

// divisors of |n| from trial division. If a cofactor beyond the trial bound
// remains it is treated as prime, which is adequate for the coefficient sizes
// handled here.
std::vector<Int> divisors(Int n) {
    n = abs(n);
    std::vector<std::pair<Int, int>> fac;
    for (Int p = 2; p * p <= n && p < 10000000; ++p)
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            fac.push_back({p, e});
        }
    if (n > 1) fac.push_back({n, 1});
    std::vector<Int> out{1};
    for (const auto& [p, e] : fac) {
        std::size_t sz = out.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// primitive integer coefficients of a rational polynomial
std::vector<Int> primitive_integer_coeffs(const PolyQ& p) {
    Int den = 1;
    for (const Rat& c : p.coeffs()) den = lcm(den, c.get_den());
    std::vector<Int> out;
    Int content = 0;
    for (const Rat& c : p.coeffs()) {
        Rat v = c * Rat(den);
        out.push_back(v.get_num());
        content = gcd(content, out.back());
    }
    if (content > 1)
        for (Int& x : out) x /= content;
    return out;
}

} // namespace

std::vector<Rat> rational_roots(const PolyQ& p) {
    std::vector<Rat> roots;
    if (p.degree() < 1) return roots;
    std::vector<Int> c = primitive_integer_coeffs(p);
    std::size_t low = 0;
    while (c[low] == 0) ++low;
    if (low > 0) roots.push_back(Rat(0));
    Int a0 = c[low];
    Int an = c.back();
    for (const Int& num : divisors(a0))
        for (const Int& den : divisors(an)) {
            if (gcd(num, den) != 1) continue;
            for (int sign : {1, -1}) {
                Rat r = make_rat(sign * num, den);
                if (p.eval(r) == 0) roots.push_back(r);
            }
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

PolyQ primitive_integer_form(const PolyQ& p) {
    if (p.is_zero()) return p;
    std::vector<Int> c = primitive_integer_coeffs(p);
    std::vector<Rat> out;
    out.reserve(c.size());
    bool flip = c.back() < 0;
    for (const Int& x : c) out.push_back(Rat(flip ? -x : x));
    return PolyQ(std::move(out));
}

int order_at(const PolyQ& p, const Rat& t0) {
    if (p.is_zero()) throw DomainError("valuation of the zero polynomial");
    PolyQ lin(std::vector<Rat>{-t0, Rat(1)});
    return multiplicity(p, lin);
}

PolyE embed(const PolyQ& p, long d) {
    std::vector<QuadExt> c;
    c.reserve(p.coeffs().size());
    for (const Rat& x : p.coeffs()) c.push_back(QuadExt{x, Rat(0), d});
    return PolyE(std::move(c));
}

} // namespace k3lat
