#ifndef K3LAT_RATIONAL_HPP
#define K3LAT_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace k3lat {

// Exact scalars. All arithmetic in this library is over Z or Q; there is no
// floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// floor(x) as an integer
inline Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

// representative of x mod m in [0, m), m > 0
inline Rat reduce_mod(const Rat& x, const Int& m) {
    Rat r = x - Rat(m) * Rat(rat_floor(x / Rat(m)));
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rat& x) { return x.get_den() == 1; }

inline std::string format_int(const Int& v) { return v.get_str(); }

inline std::string format_rat(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline Int parse_int(const std::string& s) {
    Int v;
    if (v.set_str(s, 10) != 0) throw DomainError("bad integer literal: " + s);
    return v;
}

// accepts "p", "p/q", "-p/q"
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

} // namespace k3lat

#endif
