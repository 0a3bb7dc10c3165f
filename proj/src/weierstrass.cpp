#include "k3lat/weierstrass.hpp"

#include <algorithm>
#include <map>

namespace k3lat {

void WeierstrassModel::validate() const {
    const PolyQ* as[] = {&a1, &a2, &a3, &a4, &a6};
    const long bound[] = {2, 4, 6, 8, 12};
    for (int i = 0; i < 5; ++i)
        if (as[i]->degree() > bound[i])
            throw DomainError("coefficient degree exceeds the K3 bound");
    c_invariants(*this);  // rejects disc == 0
}

CInvariants c_invariants(const WeierstrassModel& w) {
    PolyQ b2 = w.a1 * w.a1 + Rat(4) * w.a2;
    PolyQ b4 = Rat(2) * w.a4 + w.a1 * w.a3;
    PolyQ b6 = w.a3 * w.a3 + Rat(4) * w.a6;
    PolyQ b8 = w.a1 * w.a1 * w.a6 + Rat(4) * w.a2 * w.a6 - w.a1 * w.a3 * w.a4 +
               w.a2 * w.a3 * w.a3 - w.a4 * w.a4;
    CInvariants c;
    c.c4 = b2 * b2 - Rat(24) * b4;
    c.c6 = -(b2 * b2 * b2) + Rat(36) * b2 * b4 - Rat(216) * b6;
    c.disc = -(b2 * b2) * b8 - Rat(8) * (b4 * b4 * b4) - Rat(27) * (b6 * b6) +
             Rat(9) * b2 * b4 * b6;
    if (!(Rat(1728) * c.disc - c.c4 * c.c4 * c.c4 + c.c6 * c.c6).is_zero())
        throw DomainError("c-invariant identity failed");
    if (c.disc.is_zero()) throw DomainError("discriminant vanishes identically");
    return c;
}

std::string Place::str() const {
    switch (kind) {
        case Kind::Rational: return format_rat(root);
        case Kind::Infinity: return "inf";
        case Kind::Factor: {
            std::string s;
            for (long j = factor.degree(); j >= 0; --j) {
                Rat c = factor.coeff(static_cast<std::size_t>(j));
                if (c == 0) continue;
                if (!s.empty()) {
                    s += c > 0 ? "+" : "-";
                    c = abs(c);
                } else if (c < 0 && j > 0) {
                    s += "-";
                    c = abs(c);
                }
                if (j == 0) {
                    s += format_rat(c);
                } else {
                    if (c != 1) s += format_rat(c) + "*";
                    s += j == 1 ? "t" : "t^" + std::to_string(j);
                }
            }
            return s;
        }
    }
    return "?";
}

namespace {

bool place_less(const Place& a, const Place& b) {
    auto key = [](const Place& p) { return static_cast<int>(p.kind); };
    if (key(a) != key(b)) return key(a) < key(b);
    if (a.kind == Place::Kind::Rational) return a.root < b.root;
    if (a.kind == Place::Kind::Factor) {
        if (a.factor.degree() != b.factor.degree())
            return a.factor.degree() < b.factor.degree();
        return a.factor.coeffs() < b.factor.coeffs();
    }
    return false;
}

// split each factor against h by gcd until stable, so valuations of h are
// uniform across the roots of any surviving factor (true for all corpus data)
void refine_against(std::vector<PolyQ>& factors, const PolyQ& h) {
    if (h.is_zero()) return;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<PolyQ> next;
        for (const PolyQ& f : factors) {
            if (f.degree() < 2) {
                next.push_back(f);
                continue;
            }
            PolyQ g = poly_gcd(f, h);
            if (g.degree() > 0 && g.degree() < f.degree()) {
                next.push_back(g);
                next.push_back(f / g);
                changed = true;
            } else {
                next.push_back(f);
            }
        }
        factors = std::move(next);
    }
}

int valuation(const PolyQ& p, const Place& place) {
    constexpr int kInfiniteValuation = 1 << 20;
    if (p.is_zero()) return kInfiniteValuation;
    switch (place.kind) {
        case Place::Kind::Rational: return order_at(p, place.root);
        case Place::Kind::Factor: return multiplicity(p, place.factor);
        case Place::Kind::Infinity:
            throw DomainError("valuation at infinity requires the twisted chart");
    }
    return 0;
}

std::optional<KodairaFiber> classify_from_valuations(int vc4, int vc6, int vd) {
    while (vc4 >= 4 && vc6 >= 6 && vd >= 12) {
        vc4 -= 4;
        vc6 -= 6;
        vd -= 12;
    }
    if (vd == 0) return std::nullopt;
    KodairaFiber f;
    if (vc4 == 0) {
        f.kind = FiberKind::In;
        f.n = vd;
        return f;
    }
    if (vc4 == 2 && vc6 == 3 && vd >= 6) {
        f.kind = FiberKind::InStar;
        f.n = vd - 6;
        return f;
    }
    switch (vd) {
        case 2: f.kind = FiberKind::II; return f;
        case 3: f.kind = FiberKind::III; return f;
        case 4: f.kind = FiberKind::IV; return f;
        case 6: f.kind = FiberKind::InStar; f.n = 0; return f;
        case 8: f.kind = FiberKind::IVStar; return f;
        case 9: f.kind = FiberKind::IIIStar; return f;
        case 10: f.kind = FiberKind::IIStar; return f;
        default:
            throw DomainError("valuations match no Kodaira type");
    }
}

} // namespace

std::vector<std::pair<Place, int>> places_of(const PolyQ& disc) {
    if (disc.is_zero()) throw DomainError("zero discriminant has no places");
    std::vector<std::pair<Place, int>> out;
    for (const auto& [part, mult] : squarefree_decomposition(disc)) {
        PolyQ residual = part;
        for (const Rat& r : rational_roots(part)) {
            out.push_back({Place::rational(r), mult});
            residual = residual / PolyQ(std::vector<Rat>{-r, Rat(1)});
        }
        if (residual.degree() >= 1)
            out.push_back({Place::poly_factor(residual.monic()), mult});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return place_less(a.first, b.first); });
    return out;
}

std::optional<KodairaFiber> classify_place(const WeierstrassModel& w, const Place& place) {
    if (place.kind == Place::Kind::Infinity) {
        WeierstrassModel tw = infinity_chart(w);
        return classify_place(tw, Place::rational(Rat(0)));
    }
    CInvariants c = c_invariants(w);
    int vd = valuation(c.disc, place);
    if (vd == 0) return std::nullopt;
    int vc4 = valuation(c.c4, place);
    int vc6 = valuation(c.c6, place);
    auto f = classify_from_valuations(vc4, vc6, vd);
    if (f) f->place = place.str();
    return f;
}

FiberReport analyze_fibration(const WeierstrassModel& w) {
    w.validate();
    CInvariants c = c_invariants(w);
    std::vector<std::pair<Place, int>> places;
    for (const auto& [part, mult] : squarefree_decomposition(c.disc)) {
        PolyQ residual = part;
        for (const Rat& r : rational_roots(part)) {
            places.push_back({Place::rational(r), mult});
            residual = residual / PolyQ(std::vector<Rat>{-r, Rat(1)});
        }
        if (residual.degree() >= 1) {
            std::vector<PolyQ> factors{residual.monic()};
            refine_against(factors, c.c4);
            refine_against(factors, c.c6);
            for (const PolyQ& f : factors) places.push_back({Place::poly_factor(f), mult});
        }
    }
    std::sort(places.begin(), places.end(),
              [](const auto& a, const auto& b) { return place_less(a.first, b.first); });

    FiberReport report;
    for (const auto& [place, mult] : places) {
        int vc4 = valuation(c.c4, place);
        int vc6 = valuation(c.c6, place);
        auto fiber = classify_from_valuations(vc4, vc6, mult);
        if (!fiber) continue;
        fiber->place = place.str();
        report.entries.push_back({*fiber, place, place.degree()});
        report.euler_sum += fiber->euler_number() * place.degree();
    }
    WeierstrassModel tw = infinity_chart(w);
    CInvariants ci = c_invariants(tw);
    Place zero = Place::rational(Rat(0));
    int vdi = valuation(ci.disc, zero);
    if (vdi > 0) {
        auto fiber = classify_from_valuations(valuation(ci.c4, zero),
                                              valuation(ci.c6, zero), vdi);
        if (fiber) {
            fiber->place = "inf";
            report.entries.push_back({*fiber, Place::infinity(), 1});
            report.euler_sum += fiber->euler_number();
        }
    }
    return report;
}

WeierstrassModel infinity_chart(const WeierstrassModel& w) {
    auto twist = [](const PolyQ& a, long weight) {
        if (a.degree() > weight)
            throw DomainError("degree bound violated; no chart at infinity");
        std::vector<Rat> c(static_cast<std::size_t>(weight) + 1, Rat(0));
        for (long j = 0; j <= weight; ++j)
            c[static_cast<std::size_t>(j)] = a.coeff(static_cast<std::size_t>(weight - j));
        return PolyQ(std::move(c));
    };
    return {twist(w.a1, 2), twist(w.a2, 4), twist(w.a3, 6), twist(w.a4, 8),
            twist(w.a6, 12)};
}

std::string FiberReport::text() const {
    // group equal fiber names at their first occurrence: "2I2(-96,-15)"
    std::vector<std::string> order;
    std::map<std::string, std::pair<int, std::string>> groups;
    for (const auto& e : entries) {
        std::string nm = e.fiber.name();
        auto it = groups.find(nm);
        if (it == groups.end()) {
            order.push_back(nm);
            groups[nm] = {e.place_count, e.place.str()};
        } else {
            it->second.first += e.place_count;
            it->second.second += "," + e.place.str();
        }
    }
    std::string out;
    for (const std::string& nm : order) {
        const auto& [count, places] = groups[nm];
        if (!out.empty()) out += " ";
        if (count > 1) out += std::to_string(count);
        out += nm + "(" + places + ")";
    }
    return out;
}

std::vector<std::string> FiberReport::signature() const {
    std::vector<std::string> out;
    for (const auto& e : entries) {
        std::string s = e.fiber.name() + "@" + e.place.str();
        if (e.place_count > 1) s += " (x" + std::to_string(e.place_count) + ")";
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PolyQ BiPoly::eval_k(const Rat& k) const {
    std::vector<Rat> c;
    c.reserve(tc.size());
    for (const PolyQ& p : tc) c.push_back(p.eval(k));
    return PolyQ(std::move(c));
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    r.tc.resize(std::max(a.tc.size(), b.tc.size()));
    for (std::size_t i = 0; i < r.tc.size(); ++i) {
        if (i < a.tc.size()) r.tc[i] = r.tc[i] + a.tc[i];
        if (i < b.tc.size()) r.tc[i] = r.tc[i] + b.tc[i];
    }
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    if (a.tc.empty() || b.tc.empty()) return r;
    r.tc.resize(a.tc.size() + b.tc.size() - 1);
    for (std::size_t i = 0; i < a.tc.size(); ++i)
        for (std::size_t j = 0; j < b.tc.size(); ++j) r.tc[i + j] = r.tc[i + j] + a.tc[i] * b.tc[j];
    return r;
}

BiPoly BiPoly::t_power(const PolyQ& kpoly, std::size_t j) {
    BiPoly r;
    r.tc.resize(j + 1);
    r.tc[j] = kpoly;
    return r;
}

WeierstrassModel specialize(const ParametricModel& family, const Rat& k) {
    WeierstrassModel w{family.a1.eval_k(k), family.a2.eval_k(k), family.a3.eval_k(k),
                       family.a4.eval_k(k), family.a6.eval_k(k)};
    return w;
}

namespace {

PolyQ kp(std::initializer_list<Rat> asc) { return PolyQ(std::vector<Rat>(asc)); }

} // namespace

ParametricModel fk_family() {
    // y^2 = x^3 + ((k^2-24)t^2 + 2(k-2)(k+4)^2 t + k(k+4)^3) x^2 - 16 t^4 (t+k+3) x
    PolyQ K = PolyQ::variable();  // the parameter k
    PolyQ k4 = K + kp({4});
    ParametricModel m;
    m.name = "F_k";
    m.a2 = BiPoly::t_power(K * K - kp({24}), 2) +
           BiPoly::t_power(kp({2}) * (K - kp({2})) * k4 * k4, 1) +
           BiPoly::t_power(K * k4 * k4 * k4, 0);
    m.a4 = BiPoly::t_power(kp({-16}), 5) + BiPoly::t_power(kp({-16}) * (K + kp({3})), 4);
    return m;
}

ParametricModel jk_family() {
    // y^2 = x^3 + k^2 t^2 x^2 + 16 k(k+4) t^3 (t-1) x + 64 (k+4)^2 t^5 (t-1)^2
    PolyQ K = PolyQ::variable();
    PolyQ k4 = K + kp({4});
    ParametricModel m;
    m.name = "J_k";
    m.a2 = BiPoly::t_power(K * K, 2);
    m.a4 = BiPoly::t_power(kp({16}) * K * k4, 4) + BiPoly::t_power(kp({-16}) * K * k4, 3);
    PolyQ c = kp({64}) * k4 * k4;
    m.a6 = BiPoly::t_power(c, 7) + BiPoly::t_power(kp({-2}) * c, 6) + BiPoly::t_power(c, 5);
    return m;
}

ParametricModel first_fibration_family() {
    // y^2 + (t^2 - kt + 3) xy - (t+1)^2 (kt - (t-1)^2) y = x^3
    PolyQ K = PolyQ::variable();
    ParametricModel m;
    m.name = "first";
    m.a1 = BiPoly::t_power(kp({1}), 2) + BiPoly::t_power(-K, 1) + BiPoly::t_power(kp({3}), 0);
    BiPoly tp1sq = BiPoly::t_power(kp({1}), 2) + BiPoly::t_power(kp({2}), 1) +
                   BiPoly::t_power(kp({1}), 0);
    BiPoly inner = BiPoly::t_power(K + kp({2}), 1) + BiPoly::t_power(kp({-1}), 2) +
                   BiPoly::t_power(kp({-1}), 0);  // kt - (t-1)^2
    BiPoly a3 = tp1sq * inner;
    for (auto& p : a3.tc) p = kp({-1}) * p;
    m.a3 = a3;
    return m;
}

namespace {

struct FracE {
    PolyE n, d;

    friend FracE operator+(const FracE& a, const FracE& b) {
        return {a.n * b.d + b.n * a.d, a.d * b.d};
    }
    friend FracE operator-(const FracE& a, const FracE& b) {
        return {a.n * b.d - b.n * a.d, a.d * b.d};
    }
    friend FracE operator*(const FracE& a, const FracE& b) { return {a.n * b.n, a.d * b.d}; }
};

} // namespace

bool verify_point(const WeierstrassModel& w, long d, const RatFunc& x, const RatFunc& y) {
    if (x.den.is_zero() || y.den.is_zero()) throw DomainError("zero denominator polynomial");
    FracE X{x.num, x.den}, Y{y.num, y.den};
    auto P = [&](const PolyQ& p) { return FracE{embed(p, d), PolyE(QuadExt(1))}; };
    FracE lhs = Y * Y + P(w.a1) * X * Y + P(w.a3) * Y;
    FracE rhs = X * X * X + P(w.a2) * X * X + P(w.a4) * X + P(w.a6);
    FracE diff = lhs - rhs;
    return diff.n.is_zero();
}

} // namespace k3lat
