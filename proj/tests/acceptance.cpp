// Acceptance suite: one line per criterion, exact equality everywhere.
#include <iostream>
#include <random>
#include <sstream>

#include "k3lat/families.hpp"
#include "k3lat/paper_data.hpp"
#include "k3lat/verify_paper.hpp"

using namespace k3lat;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name;
    if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

std::string form_str(const BinaryQuadraticForm& f) {
    return "[" + format_int(f.a) + " " + format_int(f.b) + " " + format_int(f.c) + "]";
}

// 1. all 20 period-table entries reproduce exactly
void criterion_period_tables() {
    std::ostringstream detail;
    int matched = 0, total = 0;
    for (const auto& e : paper_dataset()) {
        if (!e.tau || !e.form) continue;
        ++total;
        FamilySpec fam = e.family == "X" ? verrill_family() : apery_fermi_family();
        BinaryQuadraticForm got = singular_transcendental(fam, *e.tau);
        if (got == *e.form) ++matched;
        else detail << e.family << "_" << e.label << ": " << form_str(got) << " != "
                    << form_str(*e.form) << "; ";
    }
    report(1, "20/20 period-table transcendental lattices", matched == 20 && total == 20,
           detail.str());
}

// 2. generic Z_k: det 24, disc form (Z/24, -25/24), T = U+<24>, q(B) = -745/24
void criterion_generic_zk() {
    bool ok = true;
    std::ostringstream detail;
    Lattice ns(paper::generic_ns());
    if (ns.determinant() != 24) {
        ok = false;
        detail << "det " << format_int(ns.determinant()) << "; ";
    }
    RatMatrix b(1, 1);
    b.at(0, 0) = reduce_mod(Rat(-25, 24), 1);
    DiscriminantForm target = DiscriminantForm::literal({24}, {reduce_mod(Rat(-25, 24), 2)}, b);
    if (!disc_forms_isomorphic(discriminant_form(ns), target)) {
        ok = false;
        detail << "disc form mismatch; ";
    }
    Lattice t24(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 24}});
    if (!check_transcendental(ns, t24).ok) {
        ok = false;
        detail << "U+<24> rejected; ";
    }
    Rat q = qvalue(ns, paper::generic_b_vector());
    if (q != reduce_mod(Rat(-745, 24), 2)) {
        ok = false;
        detail << "q(B) = " << format_rat(q) << "; ";
    }
    report(2, "generic Z_k lattice data", ok, detail.str());
}

// 3. singular Z surfaces: determinant, divisors, unique matched form
void criterion_singular_z() {
    struct Case {
        const char* name;
        const IntMatrix& ns;
        long det;
        std::vector<Int> divisors;
        BinaryQuadraticForm form;
    };
    std::vector<Case> cases = {
        {"Z-6", paper::zm6_ns(), -48, {4, 12}, {8, 4, 8}},
        {"Z4", paper::z4_ns(), -32, {2, 16}, {2, 0, 16}},
        {"Z-12", paper::zm12_ns(), -96, {2, 48}, {10, 2, 10}},
    };
    bool ok = true;
    std::ostringstream detail;
    for (const auto& c : cases) {
        Lattice ns(c.ns);
        if (ns.determinant() != c.det) {
            ok = false;
            detail << c.name << " det; ";
        }
        if (discriminant_form(ns).orders != c.divisors) {
            ok = false;
            detail << c.name << " divisors; ";
        }
        auto cands = transcendental_candidates(ns);
        if (cands.size() != 1 || !(cands[0] == c.form)) {
            ok = false;
            detail << c.name << " candidates: " << cands.size() << "; ";
        }
    }
    report(3, "Z_-6 / Z_4 / Z_-12 transcendental lattices", ok, detail.str());
}

// 4. fiber configurations, Euler 24 everywhere, documented errata honored
void criterion_fiber_configurations() {
    VerifyOptions opt;
    opt.only_prefix = "fibers/";
    VerificationReport r = verify_paper(opt);
    bool ok = r.ok() && !r.records.empty();
    std::ostringstream detail;
    for (const auto& c : r.records)
        if (c.status == ClaimStatus::fail) detail << c.id << "; ";
    report(4, "fiber configurations of all printed and sampled models", ok, detail.str());
}

// 5. rank-0 Shioda-Tate discriminants against the table determinants
void criterion_shioda_tate() {
    bool ok = true;
    std::ostringstream detail;
    auto check = [&](const char* name, const FibrationSpec& s, long expect) {
        Int d = shioda_tate_discriminant(s);
        if (d != expect) {
            ok = false;
            detail << name << " = " << format_int(d) << " != " << expect << "; ";
        }
    };
    check("generic", paper::generic_zk_spec(), 24);
    check("J12", paper::j12_spec(), 12);
    check("J-6", paper::jm6_spec(), 12);
    check("J4", paper::j4_spec(), 8);
    check("J0", paper::j0_spec(), 3);
    check("X0", paper::f0_spec(), 12);
    check("Z-3", paper::zm3_spec(), 15);
    report(5, "Shioda-Tate rank-0 discriminant cross-checks", ok, detail.str());
}

// 6. the explicit sections satisfy their equations exactly
void criterion_points() {
    bool ok = true;
    std::ostringstream detail;
    for (const auto& pt : paper::printed_points()) {
        const WeierstrassModel& w = paper::printed_model(pt.model).model;
        if (!verify_point(w, pt.d, pt.x, pt.y)) {
            ok = false;
            detail << pt.model << "; ";
        }
    }
    report(6, "explicit Mordell-Weil sections verify over Q(sqrt d)", ok, detail.str());
}

// 7. property suites: 500 random even lattices, 200 form round-trips,
//    enumerate(48) has exactly 4 forms
void criterion_properties() {
    bool ok = true;
    std::ostringstream detail;
    std::mt19937_64 rng(0x5eedu);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> dim(1, 4);
    int lattices = 0;
    while (lattices < 500) {
        std::size_t n = dim(rng);
        IntMatrix g(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                g.at(i, j) = coef(rng);
                g.at(j, i) = g.at(i, j);
            }
            g.at(i, i) = 2 * coef(rng);
        }
        if (det(g) == 0) continue;
        ++lattices;
        SnfResult s = snf(g);
        if (!(s.u * g * s.v == s.d)) {
            ok = false;
            detail << "UAV != D; ";
            break;
        }
        Int prod = 1;
        for (const Int& x : s.diagonal()) prod *= x;
        if (prod != abs(det(g)) || det_via_snf(g) != det(g)) {
            ok = false;
            detail << "det routes disagree; ";
            break;
        }
        DiscriminantForm f = discriminant_form(Lattice(g));
        if (!f.consistent()) {
            ok = false;
            detail << "disc form inconsistent; ";
            break;
        }
        Int order = 1;
        for (const Int& x : f.orders) order *= x;
        if (order != abs(det(g))) {
            ok = false;
            detail << "group order != |det|; ";
            break;
        }
    }
    std::uniform_int_distribution<int> small(-3, 3);
    int forms = 0;
    std::vector<BinaryQuadraticForm> pool;
    for (Int d : {Int(3), Int(4), Int(12), Int(15), Int(24), Int(32), Int(48), Int(96)})
        for (const auto& f : enumerate_even_forms(d)) pool.push_back(f);
    while (forms < 200 && ok) {
        const BinaryQuadraticForm& f = pool[forms % pool.size()];
        Int p, q, r, s;
        do {
            p = small(rng);
            q = small(rng);
            r = small(rng);
            s = small(rng);
        } while (abs(p * s - q * r) != 1);
        BinaryQuadraticForm g{f.a * p * p + 2 * f.b * p * r + f.c * r * r,
                              f.a * p * q + f.b * (p * s + q * r) + f.c * r * s,
                              f.a * q * q + 2 * f.b * q * s + f.c * s * s};
        if (!(reduce_form(g) == f)) {
            ok = false;
            detail << "round-trip failed for " << form_str(f) << "; ";
            break;
        }
        ++forms;
    }
    if (enumerate_even_forms(48).size() != 4) {
        ok = false;
        detail << "enumerate(48) != 4 forms; ";
    }
    report(7, "property suites (500 lattices, 200 form round-trips, enumerate(48))", ok,
           detail.str());
}

// 8. Keum relations
void criterion_keum() {
    bool ok = true;
    std::ostringstream detail;
    KeumResult r15 = keum_options(15);
    if (!(r15.squarefree && r15.options.size() == 1 && r15.options[0].l == 1)) {
        ok = false;
        detail << "det 15; ";
    }
    KeumResult r96 = keum_options(96);
    bool has = false;
    for (const auto& o : r96.options)
        if (o.l == 2 && o.det_j == 24) has = true;
    if (!has) {
        ok = false;
        detail << "96 misses (2,24); ";
    }
    const DatasetEntry* jm12 = dataset_lookup("J", "-12");
    if (!jm12 || !jm12->form || abs(jm12->form->determinant()) != 24) {
        ok = false;
        detail << "T(J_-12) det; ";
    }
    report(8, "Keum determinant relations", ok, detail.str());
}

} // namespace

int main() {
    criterion_period_tables();
    criterion_generic_zk();
    criterion_singular_z();
    criterion_fiber_configurations();
    criterion_shioda_tate();
    criterion_points();
    criterion_properties();
    criterion_keum();
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
