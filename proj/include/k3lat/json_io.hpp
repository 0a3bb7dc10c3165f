#ifndef K3LAT_JSON_IO_HPP
#define K3LAT_JSON_IO_HPP

#include <json.hpp>

#include "k3lat/families.hpp"
#include "k3lat/fibration.hpp"
#include "k3lat/lattice.hpp"
#include "k3lat/weierstrass.hpp"

namespace k3lat {

using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers up to 2^53 and as decimal strings
// beyond; both forms are accepted on input.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json rat_to_json(const Rat& v);
Rat rat_from_json(const Json& j);

Json matrix_to_json(const IntMatrix& m);  // {"rows","cols","entries"}
IntMatrix matrix_from_json(const Json& j);
IntMatrix gram_from_json(const Json& j);  // {"gram": [[..]]} or bare entries/matrix
Json gram_to_json(const IntMatrix& m);

Json snf_to_json(const SnfResult& r);

Json form_to_json(const BinaryQuadraticForm& f);
BinaryQuadraticForm form_from_json(const Json& j);

Json discform_to_json(const DiscriminantForm& f);

Json fibration_to_json(const FibrationSpec& s);
FibrationSpec fibration_from_json(const Json& j);

Json weierstrass_to_json(const WeierstrassModel& w, long d = 0);
std::pair<WeierstrassModel, long> weierstrass_from_json(const Json& j);

QuadExt quadext_from_json(const Json& j, long d);
Json quadext_to_json(const QuadExt& v);
RatFunc ratfunc_from_json(const Json& j, long d);

Json report_to_json(const FiberReport& r);

Json dataset_to_json();

} // namespace k3lat

#endif
