#ifndef K3LAT_WEIERSTRASS_HPP
#define K3LAT_WEIERSTRASS_HPP

#include <optional>
#include <string>
#include <vector>

#include "k3lat/fibration.hpp"
#include "k3lat/poly.hpp"

namespace k3lat {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q[t], with the K3 degree
// bounds deg a_i <= 2i.
struct WeierstrassModel {
    PolyQ a1, a2, a3, a4, a6;

    void validate() const;  // degree bounds and nonzero discriminant
    bool operator==(const WeierstrassModel& o) const {
        return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 && a6 == o.a6;
    }
};

struct CInvariants {
    PolyQ c4, c6, disc;
};

// Standard b-invariant formulas; checks 1728*disc == c4^3 - c6^2 on every
// call and rejects disc == 0.
CInvariants c_invariants(const WeierstrassModel& w);

// A place of P^1: a rational point, the root locus of a squarefree
// polynomial factor of degree >= 2, or infinity.
struct Place {
    enum class Kind { Rational, Factor, Infinity } kind = Kind::Rational;
    Rat root;
    PolyQ factor;

    static Place rational(Rat r) { return {Kind::Rational, std::move(r), {}}; }
    static Place poly_factor(PolyQ f) { return {Kind::Factor, Rat(0), std::move(f)}; }
    static Place infinity() { return {Kind::Infinity, Rat(0), {}}; }

    int degree() const {
        return kind == Kind::Factor ? static_cast<int>(factor.degree()) : 1;
    }
    std::string str() const;
};

// Finite places of the discriminant: squarefree decomposition, rational-root
// extraction, residual factors kept whole (refined against c4/c6 so conjugate
// roots in one factor share the fiber type). Multiplicity = order of
// vanishing of disc.
std::vector<std::pair<Place, int>> places_of(const PolyQ& disc);

// Kodaira type at a place of the discriminant (or infinity); nullopt for a
// smooth place. Applies the characteristic-zero (v(c4), v(c6), v(disc)) table
// after rescaling non-minimal places.
std::optional<KodairaFiber> classify_place(const WeierstrassModel& w, const Place& p);

struct FiberEntry {
    KodairaFiber fiber;
    Place place;
    int place_count = 1;  // degree of the factor; conjugate places share a type
};

struct FiberReport {
    std::vector<FiberEntry> entries;
    int euler_sum = 0;

    bool euler_ok() const { return euler_sum == 24; }
    std::string text() const;  // "I8(0) I3(-16) 2I2(-96,-15) III*(inf)"
    // multiset view "I8@0", "I1@64t^2+33t+9 (x2)" used by comparisons
    std::vector<std::string> signature() const;
};

FiberReport analyze_fibration(const WeierstrassModel& w);

// chart at infinity: a_i(t) -> s^(2i) a_i(1/s)
WeierstrassModel infinity_chart(const WeierstrassModel& w);

// ---- parametric families ----

// polynomial in t whose coefficients are polynomials in the family parameter
struct BiPoly {
    std::vector<PolyQ> tc;  // tc[j] = coefficient of t^j as a polynomial in k

    PolyQ eval_k(const Rat& k) const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    static BiPoly constant(const PolyQ& kpoly) { return {{kpoly}}; }
    static BiPoly t_power(const PolyQ& kpoly, std::size_t j);
};

struct ParametricModel {
    std::string name;
    BiPoly a1, a2, a3, a4, a6;
};

WeierstrassModel specialize(const ParametricModel& family, const Rat& k);

ParametricModel fk_family();            // rank-0 fibration of Z_k, 2-torsion
ParametricModel jk_family();            // Jacobian family J_k
ParametricModel first_fibration_family();  // rank-1 fibration with 6-torsion

// ---- point verification over Q(sqrt d) ----

struct RatFunc {
    PolyE num, den;

    static RatFunc poly(PolyE p) { return {std::move(p), PolyE(QuadExt(1))}; }
};

// exact check of the Weierstrass identity for X, Y rational functions in t
bool verify_point(const WeierstrassModel& w, long d, const RatFunc& x, const RatFunc& y);

} // namespace k3lat

#endif
