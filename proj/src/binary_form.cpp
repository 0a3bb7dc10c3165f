#include "k3lat/binary_form.hpp"

#include <algorithm>

namespace k3lat {

BinaryQuadraticForm reduce_form(const BinaryQuadraticForm& f) {
    if (!f.is_positive_definite()) throw DomainError("form is not positive definite");
    if (!f.is_even()) throw DomainError("form has odd diagonal");
    Int a = f.a, b = f.b, c = f.c;
    for (;;) {
        if (a > c) {
            // (x, y) -> (y, -x)
            std::swap(a, c);
            b = -b;
            continue;
        }
        if (-a < 2 * b && 2 * b <= a) break;
        // e2 -> e2 + k e1 with b + k a in (-a/2, a/2]
        Int k;
        Int num = a - 2 * b;
        Int den = 2 * a;
        mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        c += 2 * k * b + k * k * a;
        b += k * a;
    }
    if (b < 0) b = -b;  // e2 -> -e2
    return {a, b, c};
}

std::vector<BinaryQuadraticForm> enumerate_even_forms(const Int& det) {
    if (det < 1) throw DomainError("determinant must be positive");
    std::vector<BinaryQuadraticForm> out;
    for (Int a = 2; 3 * a * a <= 4 * det; a += 2) {
        for (Int b = 0; 2 * b <= a; ++b) {
            Int num = det + b * b;
            if (num % a != 0) continue;
            Int c = num / a;
            if (c % 2 == 0 && c >= a) out.push_back({a, b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace k3lat
