#ifndef K3LAT_FIBRATION_HPP
#define K3LAT_FIBRATION_HPP

#include <map>
#include <string>
#include <vector>

#include "k3lat/int_matrix.hpp"
#include "k3lat/rational.hpp"

namespace k3lat {

enum class FiberKind { In, InStar, II, III, IV, IVStar, IIIStar, IIStar };

// A Kodaira fiber at some place of P^1. For In / In* the index n is carried
// alongside. `tag` names the fiber for incidence references and component
// labels; it defaults to the kind name.
struct KodairaFiber {
    FiberKind kind = FiberKind::In;
    int n = 1;           // only for In (n >= 1) and In* (n >= 0)
    std::string place;   // label: rational value, polynomial text, or "inf"
    std::string tag;

    int component_count() const;         // m_v
    int euler_number() const;            // e_v
    int simple_component_count() const;  // order of the fiber's component group
    int root_rank() const { return component_count() - 1; }
    std::string name() const;            // "I8", "I2*", "III*", ...
    std::string tag_or_name() const { return tag.empty() ? name() : tag; }

    static KodairaFiber parse(const std::string& name);
};

struct SectionIncidence {
    std::string name;
    Int meets_zero = 0;                      // (P . O)
    std::map<std::string, int> hits;         // fiber tag -> component index >= 1
    std::map<std::string, Int> meets;        // other section name -> intersection
};

struct TorsionSection {
    std::string name;
    int order = 2;
};

struct FibrationSpec {
    std::vector<KodairaFiber> fibers;
    int mw_rank = 0;
    std::vector<TorsionSection> torsion;
    std::vector<SectionIncidence> sections;
    // Optional explicit basis (labels "O", "f", section names, "<tag>:<i>").
    // When empty the basis is O, f, sections, components in order, with one
    // unit-coefficient component dropped per torsion relation.
    std::vector<std::string> basis;

    int euler_sum() const;
};

// Negative-definite root lattice on the non-identity components:
// In -> A_{n-1}, III -> A_1, IV -> A_2, In* -> D_{n+4}, IV* -> E_6,
// III* -> E_7, II* -> E_8. I_1 and II contribute nothing and are rejected.
IntMatrix ade_block(const KodairaFiber& f);

// Gram matrix of NS over the chosen basis per Shioda's description of the
// generators, after validating the torsion relations (integrality and
// numerical triviality on the full generator set).
IntMatrix build_ns_gram(const FibrationSpec& spec);

// Checks the printed-style relation coefficients for the first torsion
// section: coeffs (one rational per non-identity component, fibers in order)
// must equal Cartan_v^{-1} * incidence column, and the induced relation must
// pair to zero against every divisor other than the torsion section itself.
bool verify_torsion_relation(const FibrationSpec& spec, const std::vector<Rat>& coeffs);

// rho = 2 + sum (m_v - 1) + mw_rank
int shioda_tate_rank(const FibrationSpec& spec);

// Rank-0 shortcut: prod(simple component counts) / |torsion|^2.
Int shioda_tate_discriminant(const FibrationSpec& spec);

} // namespace k3lat

#endif
