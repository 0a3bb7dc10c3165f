#ifndef K3LAT_FAMILIES_HPP
#define K3LAT_FAMILIES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "k3lat/binary_form.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

// Minimal equation A tau^2 + B tau + C = 0 of an imaginary quadratic tau.
struct TauEquation {
    Int a, b, c;

    void validate() const;  // a > 0, gcd 1, negative discriminant
};

// One of the three K3 pencils: the generic transcendental lattice in the
// basis (g1, g2, g3) and the period-condition coefficients (c2, c1, c0) of
// c2*p*tau^2 + c1*q*tau + c0*r = 0.
struct FamilySpec {
    std::string name;
    Lattice generic_t;
    std::array<Int, 3> period_coeffs;
};

FamilySpec verrill_family();      // X_k: U + <6>,  (-3, 6, 1)
FamilySpec apery_fermi_family();  // Y_k: U + <12>, (-6, 12, 1)
FamilySpec zk_family();           // Z_k: U + <24>, no period condition used

// Primitive (p, q, r) with (c2 p, c1 q, c0 r) proportional to (A, B, C).
std::array<Int, 3> algebraic_vector(const FamilySpec& f, const TauEquation& e);

// Reduced Gram of the orthogonal complement of p g1 + q g2 + r g3.
BinaryQuadraticForm singular_transcendental(const FamilySpec& f, const TauEquation& e);

struct KeumOption {
    Int l;
    Int det_j;
};

struct KeumResult {
    std::vector<KeumOption> options;  // det_s = l^2 det_j, l ascending
    bool squarefree = false;          // |det_s| squarefree forces l = 1
};

KeumResult keum_options(const Int& det_s);

// Ground-truth table of transcendental lattices for the singular members.
struct DatasetEntry {
    std::string family;  // "X", "Y", "Z", "J"
    std::string label;   // "-36", "2sqrt5", ...
    std::optional<TauEquation> tau;
    std::optional<BinaryQuadraticForm> form;
    bool conjectural = false;
    std::string marker;  // "?12a^2" style discriminant guess for conjecturals
};

const std::vector<DatasetEntry>& paper_dataset();
const DatasetEntry* dataset_lookup(const std::string& family, const std::string& label);

} // namespace k3lat

#endif
