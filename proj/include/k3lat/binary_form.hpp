#ifndef K3LAT_BINARY_FORM_HPP
#define K3LAT_BINARY_FORM_HPP

#include <vector>

#include "k3lat/int_matrix.hpp"
#include "k3lat/rational.hpp"

namespace k3lat {

// Even positive-definite rank-2 form [a b c] with Gram [[a,b],[b,c]].
// The reduced representative satisfies 0 <= 2b <= a <= c.
struct BinaryQuadraticForm {
    Int a, b, c;

    Int determinant() const { return a * c - b * b; }
    bool is_even() const { return a % 2 == 0 && c % 2 == 0; }
    bool is_positive_definite() const { return a > 0 && determinant() > 0; }
    bool is_reduced() const { return 0 <= b && 2 * b <= a && a <= c; }
    IntMatrix gram() const { return IntMatrix{{a, b}, {b, c}}; }

    bool operator==(const BinaryQuadraticForm& o) const {
        return a == o.a && b == o.b && c == o.c;
    }
    bool operator<(const BinaryQuadraticForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

// Gauss reduction; preserves GL2(Z)-equivalence and the determinant.
BinaryQuadraticForm reduce_form(const BinaryQuadraticForm& f);

// All reduced even positive-definite forms of the given determinant,
// exhaustively from the bound 3a^2 <= 4 det, sorted.
std::vector<BinaryQuadraticForm> enumerate_even_forms(const Int& det);

} // namespace k3lat

#endif
