#ifndef K3LAT_VERIFY_PAPER_HPP
#define K3LAT_VERIFY_PAPER_HPP

#include <string>
#include <vector>

#include "k3lat/json_io.hpp"

namespace k3lat {

enum class ClaimStatus { pass, fail, erratum_candidate, conjectural_skipped };

std::string to_string(ClaimStatus s);

struct ClaimRecord {
    std::string id;        // stable, e.g. "period/X/-36"
    std::string paper;     // source location, e.g. "section 4.1"
    std::string expected;  // the claimed value (printed form when erratum)
    std::string computed;  // what the engine produced
    ClaimStatus status = ClaimStatus::pass;
};

struct VerificationReport {
    std::vector<ClaimRecord> records;  // sorted by id

    int count(ClaimStatus s) const;
    bool ok() const { return count(ClaimStatus::fail) == 0; }
};

struct VerifyOptions {
    std::string only_prefix;  // run only claims whose id starts with this
    bool fail_fast = false;
};

// Runs every reproduction check against the embedded dataset: the 20
// period-condition lattices, the four NS matrices, the fiber tables, the
// Shioda-Tate cross-checks, the Keum relations, and the explicit sections.
VerificationReport verify_paper(const VerifyOptions& opt = {});

Json verification_report_to_json(const VerificationReport& r);
std::string verification_report_text(const VerificationReport& r);

} // namespace k3lat

#endif
