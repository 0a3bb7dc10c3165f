#include "k3lat/verify_paper.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "k3lat/families.hpp"
#include "k3lat/paper_data.hpp"
#include "k3lat/verify_paper.hpp"

namespace k3lat {

std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::erratum_candidate: return "erratum-candidate";
        case ClaimStatus::conjectural_skipped: return "conjectural-skipped";
    }
    return "?";
}

int VerificationReport::count(ClaimStatus s) const {
    int n = 0;
    for (const auto& r : records)
        if (r.status == s) ++n;
    return n;
}

namespace {

struct Runner {
    const VerifyOptions& opt;
    std::vector<ClaimRecord> records;
    bool stopped = false;

    // a claim runs when its id starts with the filter prefix; a group guard
    // also runs when the filter digs below it
    bool wanted(const std::string& id) const {
        return opt.only_prefix.empty() || id.rfind(opt.only_prefix, 0) == 0 ||
               opt.only_prefix.rfind(id, 0) == 0;
    }

    void add(const std::string& id, const std::string& paper, const std::string& expected,
             const std::string& computed, ClaimStatus status) {
        records.push_back({id, paper, expected, computed, status});
        if (opt.fail_fast && status == ClaimStatus::fail) stopped = true;
    }

    // plain equality claim
    void claim(const std::string& id, const std::string& paper, const std::string& expected,
               const std::string& computed) {
        if (stopped || !wanted(id)) return;
        add(id, paper, expected, computed,
            expected == computed ? ClaimStatus::pass : ClaimStatus::fail);
    }

    void claim_bool(const std::string& id, const std::string& paper, bool holds,
                    const std::string& statement) {
        if (stopped || !wanted(id)) return;
        add(id, paper, statement, holds ? statement : "NOT(" + statement + ")",
            holds ? ClaimStatus::pass : ClaimStatus::fail);
    }

    // documented paper erratum: the run fails unless the engine reproduces
    // the corrected value; status reports erratum-candidate against the
    // printed value
    void erratum(const std::string& id, const std::string& paper, const std::string& printed,
                 const std::string& corrected, const std::string& computed) {
        if (stopped || !wanted(id)) return;
        add(id, paper, "printed: " + printed + "; computed: " + corrected, computed,
            computed == corrected ? ClaimStatus::erratum_candidate : ClaimStatus::fail);
    }

    void skip(const std::string& id, const std::string& paper, const std::string& marker) {
        if (stopped || !wanted(id)) return;
        add(id, paper, marker, "not testable", ClaimStatus::conjectural_skipped);
    }

    void guarded(const std::string& id, const std::string& paper,
                 const std::function<void()>& body) {
        if (stopped || !wanted(id)) return;
        try {
            body();
        } catch (const std::exception& e) {
            add(id, paper, "no exception", std::string("exception: ") + e.what(),
                ClaimStatus::fail);
        }
    }
};

std::string form_str(const BinaryQuadraticForm& f) {
    return "[" + format_int(f.a) + " " + format_int(f.b) + " " + format_int(f.c) + "]";
}

std::string divisors_str(const std::vector<Int>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += format_int(d[i]);
    }
    return s + ")";
}

std::string signature_str(const std::vector<std::string>& sig) {
    std::string out;
    for (const auto& s : sig) {
        if (!out.empty()) out += " ";
        out += s;
    }
    return out;
}

std::vector<std::string> sorted_sig(std::vector<std::string> sig) {
    std::sort(sig.begin(), sig.end());
    return sig;
}

// ---------------- section groups ----------------

void run_period_claims(Runner& r) {
    for (const auto& e : paper_dataset()) {
        if (!e.tau || !e.form || (e.family != "X" && e.family != "Y")) continue;
        std::string id = "period/" + e.family + "/" + e.label;
        std::string loc = e.family == "X" ? "section 4 table + section 8" : "section 5 table + section 8";
        r.guarded(id, loc, [&] {
            FamilySpec fam = e.family == "X" ? verrill_family() : apery_fermi_family();
            BinaryQuadraticForm got = singular_transcendental(fam, *e.tau);
            r.claim(id, loc, form_str(*e.form), form_str(got));
        });
    }
    // the section 4.4 text prints 24tau^2+6tau+1 while its (p,q,r)=(-8,-1,1)
    // and the section 4 table demand 24tau^2-6tau+1
    r.guarded("period/X/-3/tau-sign", "section 4.4 vs section 4 table", [&] {
        auto v = algebraic_vector(verrill_family(), {24, -6, 1});
        std::string got =
            format_int(v[0]) + "," + format_int(v[1]) + "," + format_int(v[2]);
        auto v2 = algebraic_vector(verrill_family(), {24, 6, 1});
        std::string text_version =
            format_int(v2[0]) + "," + format_int(v2[1]) + "," + format_int(v2[2]);
        r.erratum("period/X/-3/tau-sign", "section 4.4 vs section 4 table",
                  "text equation 24tau^2+6tau+1 gives (" + text_version + ")",
                  "-8,-1,1", got);
    });
}

void run_ns_matrix_claims(Runner& r) {
    struct Case {
        std::string name;
        std::string loc;
        const IntMatrix& printed;
        const IntMatrix& truth;
        FibrationSpec spec;
        Int det_expect;
        std::vector<Int> divisors;
        std::vector<std::pair<std::vector<Rat>, Rat>> qvalues;  // vector, q mod 2
        std::optional<Rat> pairing;                             // b of the two vectors
        std::optional<BinaryQuadraticForm> matched;
    };
    std::vector<Case> cases;
    cases.push_back({"generic", "section 3", paper::printed_generic_ns(), paper::generic_ns(),
                     paper::generic_zk_spec(), 24, {24},
                     {{paper::generic_b_vector(), reduce_mod(Rat(-745, 24), 2)}},
                     std::nullopt, std::nullopt});
    cases.push_back({"Z-6", "section 6.4", paper::printed_zm6_ns(), paper::zm6_ns(),
                     paper::zm6_spec(), -48, {4, 12},
                     {{paper::zm6_b4_vector(), reduce_mod(Rat(-1, 2), 2)},
                      {paper::zm6_b12_vector(), reduce_mod(Rat(-7, 6), 2)}},
                     Rat(1, 4), BinaryQuadraticForm{8, 4, 8}});
    cases.push_back({"Z4", "section 6.5", paper::printed_z4_ns(), paper::z4_ns(),
                     paper::z4_spec(), -32, {2, 16},
                     {{paper::z4_b2_vector(), reduce_mod(Rat(-1, 2), 2)},
                      {paper::z4_b16_vector(), reduce_mod(Rat(-1, 16), 2)}},
                     reduce_mod(Rat(1, 2), 1), BinaryQuadraticForm{2, 0, 16}});
    cases.push_back({"Z-12", "section 6.6", paper::printed_zm12_ns(), paper::zm12_ns(),
                     paper::zm12_spec(), -96, {2, 48},
                     {{paper::zm12_b2_vector(), reduce_mod(Rat(-1, 2), 2)},
                      {paper::zm12_b48_vector(), reduce_mod(Rat(-29, 48), 2)}},
                     reduce_mod(Rat(-171, 2), 1), BinaryQuadraticForm{10, 2, 10}});

    for (const auto& c : cases) {
        std::string base = "ns/" + c.name;
        r.guarded(base, c.loc, [&] {
            IntMatrix built = build_ns_gram(c.spec);
            // builder vs printed matrix, entrywise; the documented typo slots
            // are the diffs between ground truth and the transcription
            auto diff_str = [&](const IntMatrix& m) {
                std::string s;
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (std::size_t j = 0; j < m.cols(); ++j)
                        if (m.at(i, j) != c.printed.at(i, j))
                            s += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 ")=" + format_int(m.at(i, j)) + " vs printed " +
                                 format_int(c.printed.at(i, j)) + "; ";
                return s.empty() ? std::string("none") : s;
            };
            if (built == c.printed) {
                r.claim(base + "/printed-matrix", c.loc, "entrywise equal", "entrywise equal");
            } else {
                r.erratum(base + "/printed-matrix", c.loc, "printed matrix as transcribed",
                          diff_str(c.truth), diff_str(built));
            }
            // the built matrix must equal the corrected ground truth exactly
            r.claim_bool(base + "/built-matrix", c.loc, built == c.truth,
                         "builder reproduces the corrected matrix");

            Lattice ns(c.truth);
            r.claim(base + "/det", c.loc, format_int(c.det_expect), format_int(ns.determinant()));
            DiscriminantForm f = discriminant_form(ns);
            r.claim(base + "/divisors", c.loc, divisors_str(c.divisors), divisors_str(f.orders));
            for (std::size_t i = 0; i < c.qvalues.size(); ++i)
                r.claim(base + "/qvalue" + std::to_string(i + 1), c.loc,
                        format_rat(c.qvalues[i].second),
                        format_rat(qvalue(ns, c.qvalues[i].first)));
            if (c.pairing)
                r.claim(base + "/pairing", c.loc, format_rat(*c.pairing),
                        format_rat(bvalue(ns, c.qvalues[0].first, c.qvalues[1].first)));
            if (c.matched) {
                auto cands = transcendental_candidates(ns);
                std::string got;
                for (const auto& cf : cands) got += form_str(cf);
                r.claim(base + "/transcendental", c.loc, form_str(*c.matched), got);
            }
        });
    }

    // generic-only claims
    r.guarded("ns/generic/discform", "section 3", [&] {
        Lattice ns(paper::generic_ns());
        DiscriminantForm f = discriminant_form(ns);
        RatMatrix b(1, 1);
        b.at(0, 0) = reduce_mod(Rat(-25, 24), 1);
        DiscriminantForm target =
            DiscriminantForm::literal({24}, {reduce_mod(Rat(-25, 24), 2)}, b);
        r.claim_bool("ns/generic/discform", "section 3", disc_forms_isomorphic(f, target),
                     "discform(NS) = (Z/24, -25/24)");
    });
    r.guarded("ns/generic/transcendental", "section 3", [&] {
        Lattice ns(paper::generic_ns());
        Lattice t24(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 24}});
        r.claim_bool("ns/generic/transcendental", "section 3",
                     check_transcendental(ns, t24).ok, "T(Z_k) = U + <24>");
    });
    r.guarded("ns/generic/torsion-relation", "section 3", [&] {
        r.claim_bool("ns/generic/torsion-relation", "section 3",
                     verify_torsion_relation(paper::generic_zk_spec(),
                                             paper::generic_relation_coefficients()),
                     "printed relation coefficients verify");
    });
}

void run_fiber_claims(Runner& r) {
    // printed specializations; three lists carry the documented 2I1 omission
    struct Extra {
        std::string name;
        std::vector<std::string> missing;
    };
    std::vector<Extra> omitted = {
        {"F-6", {"I1@-6", "I1@3/4"}},
        {"F4", {"I1@t^2-16*t+128 (x2)"}},
        {"F-12", {"I1@t^2+240*t-1152 (x2)"}},
    };
    for (const auto& m : paper::printed_models()) {
        std::string id = "fibers/" + m.name;
        std::string loc = m.name[0] == 'J' ? "section 7" : "section 6";
        if (m.name == "F12") loc = "section 6.3";
        r.guarded(id, loc, [&] {
            FiberReport rep = analyze_fibration(m.model);
            r.claim(id + "/euler", loc, "24", std::to_string(rep.euler_sum));
            auto got = sorted_sig(rep.signature());
            auto printed = sorted_sig(m.printed_signature);
            if (m.name == "J12") {
                // printed I2(-1); the 2I1 quadratic degenerates to (t+4)^2
                auto corrected = printed;
                for (auto& s : corrected)
                    if (s == "I2@-1") s = "I2@-4";
                std::sort(corrected.begin(), corrected.end());
                r.erratum(id + "/config", loc, signature_str(printed),
                          signature_str(corrected), signature_str(got));
                return;
            }
            auto it = std::find_if(omitted.begin(), omitted.end(),
                                   [&](const Extra& e) { return e.name == m.name; });
            if (it != omitted.end()) {
                auto completed = printed;
                completed.insert(completed.end(), it->missing.begin(), it->missing.end());
                std::sort(completed.begin(), completed.end());
                r.erratum(id + "/config", loc,
                          signature_str(printed) + " (Euler " +
                              std::to_string(m.printed_euler) + ")",
                          signature_str(completed), signature_str(got));
            } else {
                r.claim(id + "/config", loc, signature_str(printed), signature_str(got));
            }
        });
    }

    // printed equations versus exact specialization of (F_k) and (J_k)
    r.guarded("fibers/specialize", "sections 6-7", [&] {
        ParametricModel fk = fk_family(), jk = jk_family();
        r.claim_bool("fibers/specialize/F-3", "section 6.1",
                     specialize(fk, Rat(-3)) == paper::printed_model("F-3").model,
                     "(F_k)|k=-3 equals the printed equation");
        r.claim_bool("fibers/specialize/F0", "section 6.2",
                     specialize(fk, Rat(0)) == paper::printed_model("F0").model,
                     "(F_k)|k=0 equals the printed equation");
        r.claim_bool("fibers/specialize/F12", "section 6.3",
                     specialize(fk, Rat(12)) == paper::printed_model("F12").model,
                     "(F_k)|k=12 equals the printed equation");
        r.claim_bool("fibers/specialize/F4", "section 6.5",
                     specialize(fk, Rat(4)) == paper::printed_model("F4").model,
                     "(F_k)|k=4 equals the printed equation");
        for (long k : {12, -6, 4, 0}) {
            std::string nm = "J" + std::to_string(k);
            r.claim_bool("fibers/specialize/" + nm, "section 7",
                         specialize(jk, Rat(k)) == paper::printed_model(nm).model,
                         "(J_k)|k=" + std::to_string(k) + " equals the printed equation");
        }
        // the printed F-6 / F-12 equations are the u=2 rescale of the
        // specialization (a2/4, a4/16); both classify identically
        for (long k : {-6, -12}) {
            std::string nm = "F" + std::to_string(k);
            WeierstrassModel raw = specialize(fk, Rat(k));
            const WeierstrassModel& printed = paper::printed_model(nm).model;
            bool rescale = raw.a2 == Rat(4) * printed.a2 && raw.a4 == Rat(16) * printed.a4 &&
                           raw.a1.is_zero() && raw.a3.is_zero() && raw.a6.is_zero();
            r.claim_bool("fibers/specialize/" + nm, "section 6",
                         rescale && analyze_fibration(raw).signature() ==
                                        analyze_fibration(printed).signature(),
                         "(F_k)|k=" + std::to_string(k) +
                             " is the u=2 rescale of the printed equation");
        }
    });

    // generic members at sample k (checked at k = 1, 5, 7)
    for (long k : {1, 5, 7}) {
        std::string suffix = "@k=" + std::to_string(k);
        r.guarded("fibers/generic/Fk" + suffix, "lemma 3.1", [&] {
            FiberReport rep = analyze_fibration(specialize(fk_family(), Rat(k)));
            bool shape = rep.euler_sum == 24;
            int i8 = 0, i3 = 0, i2 = 0, i1 = 0, iii = 0;
            for (const auto& e : rep.entries) {
                std::string nm = e.fiber.name();
                if (nm == "I8") i8 += e.place_count;
                else if (nm == "I3") i3 += e.place_count;
                else if (nm == "I2") i2 += e.place_count;
                else if (nm == "I1") i1 += e.place_count;
                else if (nm == "III*") iii += e.place_count;
                else shape = false;
            }
            r.claim("fibers/generic/Fk" + suffix, "lemma 3.1", "III* I8 I3 I2 2I1",
                    shape && i8 == 1 && i3 == 1 && i2 == 1 && i1 == 2 && iii == 1
                        ? "III* I8 I3 I2 2I1"
                        : rep.text());
        });
        r.guarded("fibers/generic/Jk" + suffix, "section 3 proof", [&] {
            FiberReport rep = analyze_fibration(specialize(jk_family(), Rat(k)));
            auto sig = sorted_sig(rep.signature());
            bool ok = rep.euler_sum == 24 && sig.size() == 4;
            bool base = false, i3 = false, ii = false, quad = false;
            for (const auto& e : rep.entries) {
                if (e.fiber.name() == "III*" && e.place.str() == "0") base = true;
                if (e.fiber.name() == "I3" && e.place.str() == "1") i3 = true;
                if (e.fiber.name() == "II*" && e.place.str() == "inf") ii = true;
                if (e.fiber.name() == "I1" && e.place_count == 2) quad = true;
            }
            r.claim("fibers/generic/Jk" + suffix, "section 3 proof",
                    "III*(0) I3(1) 2I1(quadratic) II*(inf)",
                    ok && base && i3 && ii && quad ? "III*(0) I3(1) 2I1(quadratic) II*(inf)"
                                                   : rep.text());
        });
        r.guarded("fibers/generic/first" + suffix, "lemma 3.1 proof", [&] {
            FiberReport rep =
                analyze_fibration(specialize(first_fibration_family(), Rat(k)));
            bool ok = rep.euler_sum == 24;
            bool i6m1 = false, i6inf = false, i20 = false, i2k3 = false;
            int i3 = 0, i1 = 0;
            for (const auto& e : rep.entries) {
                std::string nm = e.fiber.name();
                if (nm == "I6" && e.place.str() == "-1") i6m1 = true;
                if (nm == "I6" && e.place.str() == "inf") i6inf = true;
                if (nm == "I2" && e.place.str() == "0") i20 = true;
                if (nm == "I2" && e.place.str() == std::to_string(k + 3)) i2k3 = true;
                if (nm == "I3") i3 += e.place_count;
                if (nm == "I1") i1 += e.place_count;
            }
            r.claim("fibers/generic/first" + suffix, "lemma 3.1 proof",
                    "I6(-1) 2I3 2I2(k+3,0) 2I1 I6(inf)",
                    ok && i6m1 && i6inf && i20 && i2k3 && i3 == 2 && i1 == 2
                        ? "I6(-1) 2I3 2I2(k+3,0) 2I1 I6(inf)"
                        : rep.text());
        });
    }
}

void run_shioda_claims(Runner& r) {
    r.guarded("shioda", "sections 3, 6, 7", [&] {
        r.claim("shioda/generic/disc", "section 3 (2*8*3*2/4)", "24",
                format_int(shioda_tate_discriminant(paper::generic_zk_spec())));
        r.claim("shioda/generic/rank", "section 1", "19",
                std::to_string(shioda_tate_rank(paper::generic_zk_spec())));
        r.claim("shioda/Z-6/rank", "section 6.4", "20",
                std::to_string(shioda_tate_rank(paper::zm6_spec())));
        struct Row {
            std::string id;
            FibrationSpec spec;
            Int det;
            std::string what;
        };
        std::vector<Row> rows;
        rows.push_back({"shioda/J12", paper::j12_spec(), 12, "|det T(J_12)| = |det [2 0 6]|"});
        rows.push_back({"shioda/J-6", paper::jm6_spec(), 12, "|det T(J_-6)|"});
        rows.push_back({"shioda/J4", paper::j4_spec(), 8, "|det T(J_4)| = |det [2 0 4]|"});
        rows.push_back({"shioda/J0", paper::j0_spec(), 3, "|det T(J_0)| = |det [2 1 2]|"});
        rows.push_back({"shioda/X0", paper::f0_spec(), 12, "|det T(X_0)| = |det T(Z_0)|"});
        rows.push_back({"shioda/Z-3", paper::zm3_spec(), 15, "|det T(Z_-3)| = |det [4 1 4]|"});
        for (const auto& row : rows)
            r.claim(row.id, "section 7 (" + row.what + ")", format_int(row.det),
                    format_int(shioda_tate_discriminant(row.spec)));
        // the discriminants above match the determinants of the dataset forms
        auto det_of = [](const char* fam, const char* label) {
            const DatasetEntry* e = dataset_lookup(fam, label);
            return e && e->form ? abs(e->form->determinant()) : Int(-1);
        };
        r.claim("shioda/J12/form-det", "section 7", "12", format_int(det_of("J", "12")));
        r.claim("shioda/J4/form-det", "section 7", "8", format_int(det_of("J", "4")));
        r.claim("shioda/J0/form-det", "section 7", "3", format_int(det_of("J", "0")));
        r.claim("shioda/Z-3/form-det", "section 6.1", "15", format_int(det_of("Z", "-3")));
        r.claim("shioda/X0/form-det", "section 4.5", "12", format_int(det_of("X", "0")));
    });
}

void run_keum_claims(Runner& r) {
    r.guarded("keum", "section 7", [&] {
        KeumResult r15 = keum_options(15);
        r.claim_bool("keum/Z-3", "section 7", r15.squarefree && r15.options.size() == 1 &&
                                                  r15.options[0].l == 1,
                     "det 15 squarefree forces l=1 (Z_-3 = J_-3)");
        r.claim_bool("keum/Z-3/forms-agree", "section 7",
                     *dataset_lookup("Z", "-3")->form == *dataset_lookup("J", "-3")->form,
                     "T(Z_-3) = T(J_-3) = [4 1 4]");
        KeumResult r96 = keum_options(96);
        bool has_2_24 = false;
        for (const auto& o : r96.options)
            if (o.l == 2 && o.det_j == 24) has_2_24 = true;
        r.claim_bool("keum/Z-12", "section 7", has_2_24,
                     "96 = 2^2 * 24 admits det(Pic J_-12) = 24");
        r.claim("keum/J-12/form-det", "section 7", "24",
                format_int(abs(dataset_lookup("J", "-12")->form->determinant())));
        // the Z_k -> J_k relation at the generic member: 24 = 2^2 * 6
        KeumResult r24 = keum_options(24);
        bool has_2_6 = false;
        for (const auto& o : r24.options)
            if (o.l == 2 && o.det_j == 6) has_2_6 = true;
        r.claim_bool("keum/generic", "section 8 remarks", has_2_6,
                     "disc 24 of Z_k is 2^2 * disc 6 of the Jacobian X family");
    });
}

void run_point_claims(Runner& r) {
    for (const auto& pt : paper::printed_points()) {
        std::string id = "point/" + pt.model;
        std::string loc = pt.model == "F-6" ? "section 6.4" : "section 6.6";
        r.guarded(id, loc, [&] {
            const WeierstrassModel& w = paper::printed_model(pt.model).model;
            r.claim_bool(id, loc, verify_point(w, pt.d, pt.x, pt.y),
                         "printed section satisfies the Weierstrass equation over Q(sqrt(" +
                             std::to_string(pt.d) + "))");
        });
    }
}

void run_conjectural_claims(Runner& r) {
    for (const auto& e : paper_dataset()) {
        if (!e.conjectural) continue;
        r.skip("conjectural/" + e.family + "/" + e.label, "theorem 1.2 table / section 7",
               e.marker);
    }
}

} // namespace

VerificationReport verify_paper(const VerifyOptions& opt) {
    Runner r{opt, {}, false};
    run_period_claims(r);
    run_ns_matrix_claims(r);
    run_fiber_claims(r);
    run_shioda_claims(r);
    run_keum_claims(r);
    run_point_claims(r);
    run_conjectural_claims(r);
    VerificationReport report;
    report.records = std::move(r.records);
    std::sort(report.records.begin(), report.records.end(),
              [](const ClaimRecord& a, const ClaimRecord& b) { return a.id < b.id; });
    return report;
}

Json verification_report_to_json(const VerificationReport& r) {
    Json claims = Json::array();
    for (const auto& c : r.records)
        claims.push_back(Json{{"id", c.id},
                              {"paper", c.paper},
                              {"expected", c.expected},
                              {"computed", c.computed},
                              {"status", to_string(c.status)}});
    Json summary{{"pass", r.count(ClaimStatus::pass)},
                 {"fail", r.count(ClaimStatus::fail)},
                 {"erratum-candidate", r.count(ClaimStatus::erratum_candidate)},
                 {"conjectural-skipped", r.count(ClaimStatus::conjectural_skipped)},
                 {"total", r.records.size()}};
    return Json{{"claims", std::move(claims)}, {"summary", std::move(summary)}};
}

std::string verification_report_text(const VerificationReport& r) {
    std::ostringstream out;
    for (const auto& c : r.records) {
        out << to_string(c.status) << "  " << c.id << "  [" << c.paper << "]";
        if (c.status == ClaimStatus::fail)
            out << "\n    expected: " << c.expected << "\n    computed: " << c.computed;
        if (c.status == ClaimStatus::erratum_candidate) out << "  {" << c.expected << "}";
        out << "\n";
    }
    out << "summary: " << r.count(ClaimStatus::pass) << " pass, " << r.count(ClaimStatus::fail)
        << " fail, " << r.count(ClaimStatus::erratum_candidate) << " erratum-candidate, "
        << r.count(ClaimStatus::conjectural_skipped) << " conjectural-skipped\n";
    return out.str();
}

} // namespace k3lat
