#include "k3lat/quad_field.hpp"

namespace k3lat {

long merge_field(long d1, long d2) {
    if (d1 == 0) return d2;
    if (d2 == 0 || d1 == d2) return d1;
    throw DomainError("mixing elements of different quadratic fields");
}

QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    return {a.x + b.x, a.y + b.y, merge_field(a.d, b.d)};
}

QuadExt operator-(const QuadExt& a, const QuadExt& b) {
    return {a.x - b.x, a.y - b.y, merge_field(a.d, b.d)};
}

QuadExt operator-(const QuadExt& a) { return {-a.x, -a.y, a.d}; }

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    long d = merge_field(a.d, b.d);
    return {a.x * b.x + Rat(d) * a.y * b.y, a.x * b.y + a.y * b.x, d};
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    if (b.is_rational()) return {a.x / b.x, a.y / b.x, a.d};
    QuadExt num = a * b.conjugate();
    Rat n = b.norm();
    return {num.x / n, num.y / n, num.d};
}

bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.x == b.x && a.y == b.y && (a.y == 0 || a.d == b.d);
}

std::string QuadExt::str() const {
    if (y == 0) return format_rat(x);
    std::string s;
    if (x != 0) s = format_rat(x);
    if (y > 0 && !s.empty()) s += "+";
    if (y == -1) s += "-";
    else if (y != 1) s += format_rat(y) + "*";
    s += "sqrt(" + std::to_string(d) + ")";
    return s;
}

} // namespace k3lat
