#ifndef K3LAT_LATTICE_HPP
#define K3LAT_LATTICE_HPP

#include <string>
#include <vector>

#include "k3lat/binary_form.hpp"
#include "k3lat/int_matrix.hpp"

namespace k3lat {

// Even lattice given by its Gram matrix. Evenness (even diagonal) and symmetry
// are enforced at construction.
class Lattice {
public:
    explicit Lattice(IntMatrix gram);
    const IntMatrix& gram() const { return gram_; }
    std::size_t rank() const { return gram_.rows(); }
    Int determinant() const { return det(gram_); }

private:
    IntMatrix gram_;
};

// Finite quadratic form (G, q) with G = (+) Z/d_i, q into Q/2Z and the
// associated pairing b into Q/Z. Generators, when present, are rows in the
// dual basis of the source lattice.
struct DiscriminantForm {
    std::vector<Int> orders;                   // d_i > 1, divisibility-sorted
    std::vector<std::vector<Rat>> generators;  // may be empty for literal forms
    std::vector<Rat> q;                        // values in [0, 2)
    RatMatrix b;                               // values in [0, 1), b[i][i] == q[i] mod 1

    // literal constructor for forms given by their (orders, q, b) data
    static DiscriminantForm literal(std::vector<Int> orders, std::vector<Rat> q,
                                    RatMatrix b);

    Int group_order() const;
    bool consistent() const;  // q(gi+gj) = q(gi)+q(gj)+2b(gi,gj) mod 2, b diag matches q
};

// Shimada's lemma: SNF of the Gram matrix; generator i is row i of V^{-1} in
// the dual basis, q(g) = g A^{-1} g^t mod 2, b = pairings mod 1.
DiscriminantForm discriminant_form(const Lattice& l);

// v A^{-1} v^t mod 2 for a dual-basis (rational) row vector.
Rat qvalue(const Lattice& l, const std::vector<Rat>& v);
Rat bvalue(const Lattice& l, const std::vector<Rat>& v, const std::vector<Rat>& w);

DiscriminantForm negate_form(const DiscriminantForm& f);

// Exhaustive isomorphism search over generator images. Group order capped at
// 10^4; larger inputs throw TooLargeError.
bool disc_forms_isomorphic(const DiscriminantForm& f1, const DiscriminantForm& f2);

// Primitive (saturated) orthogonal complement of a primitive vector v in L.
Lattice orthogonal_complement(const Lattice& l, const std::vector<Int>& v);

// All even positive-definite rank-2 forms of determinant |det NS| whose
// discriminant form is the negation of NS's. NS must have rank 20 and
// negative determinant.
std::vector<BinaryQuadraticForm> transcendental_candidates(const Lattice& ns);

struct TranscendentalCheck {
    bool ok = false;
    enum class Reason { match, det_mismatch, form_mismatch } reason = Reason::match;
    std::string describe() const;
};

// |det NS| == |det T| and discform(T) isomorphic to -discform(NS).
TranscendentalCheck check_transcendental(const Lattice& ns, const Lattice& t);

} // namespace k3lat

#endif
