#ifndef K3LAT_QUAD_FIELD_HPP
#define K3LAT_QUAD_FIELD_HPP

#include <string>

#include "k3lat/rational.hpp"

namespace k3lat {

// Element x + y*sqrt(d) of Q(sqrt(d)) for a fixed squarefree integer d.
// d == 0 marks a plain rational; elements with y == 0 normalize to d == 0 so
// rationals mix freely with any extension.
struct QuadExt {
    Rat x, y;
    long d = 0;

    QuadExt() = default;
    QuadExt(int v) : x(v) {}                       // NOLINT(google-explicit-constructor)
    QuadExt(const Rat& v) : x(v) {}                // NOLINT(google-explicit-constructor)
    QuadExt(Rat xv, Rat yv, long dv) : x(std::move(xv)), y(std::move(yv)), d(dv) {
        normalize();
    }

    void normalize() {
        if (y == 0) d = 0;
        if (d == 0 && y != 0) throw DomainError("sqrt coefficient without a field");
    }
    bool is_zero() const { return x == 0 && y == 0; }
    bool is_rational() const { return y == 0; }

    QuadExt conjugate() const { return {x, -y, d}; }
    Rat norm() const { return x * x - Rat(d) * y * y; }

    std::string str() const;
};

long merge_field(long d1, long d2);  // throws on incompatible extensions

QuadExt operator+(const QuadExt& a, const QuadExt& b);
QuadExt operator-(const QuadExt& a, const QuadExt& b);
QuadExt operator-(const QuadExt& a);
QuadExt operator*(const QuadExt& a, const QuadExt& b);
QuadExt operator/(const QuadExt& a, const QuadExt& b);
bool operator==(const QuadExt& a, const QuadExt& b);
inline bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

} // namespace k3lat

#endif
