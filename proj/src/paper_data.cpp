#include "k3lat/paper_data.hpp"

namespace k3lat::paper {

namespace {

// verbatim transcriptions of the printed matrices
const IntMatrix kPrintedGeneric{
    {-2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, -2, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, -2, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -2, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2}};

const IntMatrix kPrintedZm6{
    {-2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    {0, 1, -2, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, -2, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -2, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 1, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -2}};

const IntMatrix kPrintedZ4{
    {-2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    {0, 1, -2, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, -2, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -2, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 1, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 1},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 1, -2}};

const IntMatrix kPrintedZm12{
    {-2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    {0, 1, -2, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1},
    {0, 0, 0, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -2, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0},
    {1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2}};

} // namespace

namespace {

IntMatrix corrected_generic() {
    IntMatrix m = kPrintedGeneric;
    m.at(8, 15) = 0;  // distinct fibers are orthogonal; (16,9) is printed 0
    return m;
}

IntMatrix corrected_zm6() {
    IntMatrix m = kPrintedZm6;
    m.at(8, 15) = 0;
    // the text says P cuts eta1 and beta1; the printed matrix has alpha1
    // instead, which breaks the torsion relation and the stated determinant
    m.at(16, 19) = 0;
    m.at(19, 16) = 0;
    m.at(18, 19) = 1;
    m.at(19, 18) = 1;
    return m;
}

IntMatrix corrected_z4() {
    IntMatrix m = kPrintedZ4;
    m.at(8, 15) = 0;
    return m;
}

std::vector<std::string> paper_basis(bool with_p) {
    std::vector<std::string> b{"O", "f", "s2"};
    for (int i = 2; i <= 7; ++i) b.push_back("theta:" + std::to_string(i));
    for (int i = 1; i <= 7; ++i) b.push_back("eta:" + std::to_string(i));
    b.push_back("alpha:1");
    b.push_back("alpha:2");
    b.push_back("beta:1");
    if (with_p) b.push_back("P");
    return b;
}

FibrationSpec base_zk_spec() {
    FibrationSpec s;
    auto fiber = [](const std::string& kind, const std::string& place, const std::string& tag) {
        KodairaFiber f = KodairaFiber::parse(kind);
        f.place = place;
        f.tag = tag;
        return f;
    };
    s.fibers = {fiber("I8", "0", "theta"), fiber("III*", "inf", "eta"),
                fiber("I3", "", "alpha"), fiber("I2", "", "beta"),
                fiber("I1", "", "nu1"), fiber("I1", "", "nu2")};
    s.torsion = {{"s2", 2}};
    SectionIncidence s2;
    s2.name = "s2";
    s2.meets_zero = 0;
    s2.hits = {{"theta", 4}, {"eta", 1}, {"beta", 1}};
    s.sections = {s2};
    return s;
}

std::vector<Rat> rats(std::initializer_list<long> nums, long den) {
    std::vector<Rat> out;
    for (long n : nums) out.push_back(make_rat(n, den));
    return out;
}

} // namespace

const IntMatrix& printed_generic_ns() { return kPrintedGeneric; }
const IntMatrix& printed_zm6_ns() { return kPrintedZm6; }
const IntMatrix& printed_z4_ns() { return kPrintedZ4; }
const IntMatrix& printed_zm12_ns() { return kPrintedZm12; }

const IntMatrix& generic_ns() {
    static const IntMatrix m = corrected_generic();
    return m;
}
const IntMatrix& zm6_ns() {
    static const IntMatrix m = corrected_zm6();
    return m;
}
const IntMatrix& z4_ns() {
    static const IntMatrix m = corrected_z4();
    return m;
}
const IntMatrix& zm12_ns() { return kPrintedZm12; }

FibrationSpec generic_zk_spec() {
    FibrationSpec s = base_zk_spec();
    s.mw_rank = 0;
    s.basis = paper_basis(false);
    return s;
}

FibrationSpec zm6_spec() {
    FibrationSpec s = base_zk_spec();
    s.mw_rank = 1;
    SectionIncidence p;
    p.name = "P";
    p.meets_zero = 0;
    p.hits = {{"eta", 1}, {"beta", 1}};
    s.sections.push_back(p);
    s.basis = paper_basis(true);
    return s;
}

FibrationSpec z4_spec() {
    FibrationSpec s = base_zk_spec();
    s.mw_rank = 1;
    SectionIncidence p;
    p.name = "P";
    p.meets_zero = 0;
    p.hits = {{"eta", 1}, {"alpha", 1}, {"beta", 1}};
    s.sections.push_back(p);
    s.basis = paper_basis(true);
    return s;
}

FibrationSpec zm12_spec() {
    FibrationSpec s = base_zk_spec();
    s.mw_rank = 1;
    SectionIncidence p;
    p.name = "P";
    p.meets_zero = 1;
    p.hits = {{"theta", 4}};
    p.meets = {{"s2", Int(1)}};
    s.sections.push_back(p);
    s.basis = paper_basis(true);
    return s;
}

namespace {

FibrationSpec fibers_only(std::initializer_list<std::string> kinds, int torsion_order) {
    FibrationSpec s;
    for (const auto& k : kinds) s.fibers.push_back(KodairaFiber::parse(k));
    if (torsion_order > 1) {
        s.torsion = {{"s2", torsion_order}};
        SectionIncidence s2;
        s2.name = "s2";
        s.sections = {s2};
    }
    return s;
}

} // namespace

FibrationSpec j12_spec() { return fibers_only({"III*", "I3", "I2", "II*"}, 1); }
FibrationSpec jm6_spec() { return fibers_only({"III*", "I3", "I2", "II*"}, 1); }
FibrationSpec j4_spec() { return fibers_only({"III*", "I4", "I1", "II*"}, 1); }
FibrationSpec j0_spec() { return fibers_only({"II*", "IV", "II*"}, 1); }
FibrationSpec f0_spec() { return fibers_only({"I4*", "I3", "I2", "III*"}, 2); }
FibrationSpec zm3_spec() { return fibers_only({"I10", "I3", "I1", "I1", "III*"}, 2); }

std::vector<Rat> generic_relation_coefficients() {
    // theta: 1/2,1,3/2,2,3/2,1,1/2; eta: 3/2,2,5/2,3,2,1,3/2; alpha: 0,0; beta: 1/2
    std::vector<Rat> c = rats({1, 2, 3, 4, 3, 2, 1}, 2);
    for (const Rat& x : rats({3, 4, 5, 6, 4, 2, 3}, 2)) c.push_back(x);
    c.push_back(Rat(0));
    c.push_back(Rat(0));
    c.push_back(make_rat(1, 2));
    // I1 fibers contribute no components
    return c;
}

std::vector<Rat> generic_b_vector() {
    return rats({-3, 0, 0, 0, 0, -3, 3, 0, 0, 0, 3, -6, 3, 0, 0, 0, -1, 1, -3}, 1);
}
std::vector<Rat> zm6_b4_vector() {
    return rats({-3, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, -3, 3, -3, 3, 0, -3, 3, -2, 3}, 1);
}
std::vector<Rat> zm6_b12_vector() {
    return rats({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 1, -1, 0, 1, -1, 1, -1}, 1);
}
std::vector<Rat> z4_b2_vector() {
    return rats({0, 0, -1, 0, 0, 0, 1, -1, 1, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 1}, 1);
}
std::vector<Rat> z4_b16_vector() {
    return rats({-1, 0, -1, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, -2}, 1);
}
std::vector<Rat> zm12_b2_vector() {
    return rats({2, -9, 11, 0, 0, -7, -2, 0, 0, -11, 11, -9, -2, 2, 9, 0, 3, -3, 0, -2}, 1);
}
std::vector<Rat> zm12_b48_vector() {
    return rats({1, -3, 4, 0, 0, -2, -1, 0, 0, -4, 4, -3, -1, 1, 3, 0, 1, -1, 0, -1}, 1);
}

namespace {

PolyQ tpoly(std::initializer_list<long> asc) {
    std::vector<Rat> c;
    for (long x : asc) c.push_back(Rat(x));
    return PolyQ(std::move(c));
}

std::vector<PaperModel> build_models() {
    std::vector<PaperModel> out;
    auto model = [](PolyQ a2, PolyQ a4, PolyQ a6) {
        WeierstrassModel w;
        w.a2 = std::move(a2);
        w.a4 = std::move(a4);
        w.a6 = std::move(a6);
        return w;
    };
    out.push_back({"F-3",
                   model(tpoly({-3, -10, -15}), tpoly({0, 0, 0, 0, 0, -16}), {}),
                   {"I10@0", "I3@-1", "I1@64*t^2+33*t+9 (x2)", "III*@inf"},
                   24});
    out.push_back({"F0",
                   model(tpoly({0, -64, -24}), tpoly({0, 0, 0, 0, -48, -16}), {}),
                   {"I4*@0", "I3@-4", "I2@-3", "III*@inf"},
                   24});
    out.push_back({"F12",
                   model(tpoly({49152, 5120, 120}), tpoly({0, 0, 0, 0, -240, -16}), {}),
                   {"I8@0", "I3@-16", "I2@-15", "I2@-96", "III*@inf"},
                   24});
    out.push_back({"F-6",
                   model(tpoly({12, -16, 3}), tpoly({0, 0, 0, 0, 3, -1}), {}),
                   {"I8@0", "I3@2", "I2@3", "III*@inf"},
                   22});
    out.push_back({"F4",
                   model(tpoly({2048, 256, -8}), tpoly({0, 0, 0, 0, -112, -16}), {}),
                   {"I8@0", "I3@-8", "I2@-7", "III*@inf"},
                   22});
    out.push_back({"F-12",
                   model(tpoly({1536, -448, 30}), tpoly({0, 0, 0, 0, 9, -1}), {}),
                   {"I8@0", "I3@8", "I2@9", "III*@inf"},
                   22});
    out.push_back({"J12",
                   model(tpoly({0, 0, 144}), tpoly({0, 0, 0, -3072, 3072}),
                         tpoly({0, 0, 0, 0, 0, 16384, -32768, 16384})),
                   {"III*@0", "I3@1", "I2@-1", "II*@inf"},
                   24});
    out.push_back({"J-6",
                   model(tpoly({0, 0, 36}), tpoly({0, 0, 0, -192, 192}),
                         tpoly({0, 0, 0, 0, 0, 256, -512, 256})),
                   {"III*@0", "I3@1", "I2@-4", "II*@inf"},
                   24});
    out.push_back({"J4",
                   model(tpoly({0, 0, 16}), tpoly({0, 0, 0, -512, 512}),
                         tpoly({0, 0, 0, 0, 0, 4096, -8192, 4096})),
                   {"III*@0", "I4@1", "I1@32/27", "II*@inf"},
                   24});
    out.push_back({"J0", model({}, {}, tpoly({0, 0, 0, 0, 0, 1024, -2048, 1024})),
                   {"II*@0", "IV@1", "II*@inf"},
                   24});
    return out;
}

PolyE epoly(std::initializer_list<long> asc) {
    std::vector<QuadExt> c;
    for (long x : asc) c.push_back(QuadExt(Rat(x)));
    return PolyE(std::move(c));
}

std::vector<PaperPoint> build_points() {
    std::vector<PaperPoint> out;
    {
        // F-6 over Q(i): P = [16(t-3), 4i(t-3)(t^2-24)]
        PaperPoint p;
        p.model = "F-6";
        p.d = -1;
        p.x = RatFunc::poly(epoly({-48, 16}));
        // 4i * (t-3) * (t^2-24)
        PolyE f1 = epoly({-3, 1});
        PolyE f2 = epoly({-24, 0, 1});
        PolyE fouri(std::vector<QuadExt>{QuadExt(Rat(0), Rat(4), -1)});
        p.y = RatFunc::poly(fouri * f1 * f2);
        out.push_back(std::move(p));
    }
    {
        // F-12 over Q(sqrt(-3)):
        // P = [-t^4(t+72)^2 / (1728 (t-24)^2),
        //      sqrt(-3) t^4 (t+72)(t^4+144t^3-20736t^2+138240t+995328)
        //        / (124416 (t-24)^3)]
        PaperPoint p;
        p.model = "F-12";
        p.d = -3;
        PolyE t4 = PolyE::monomial(QuadExt(1), 4);
        PolyE tp72 = epoly({72, 1});
        PolyE tm24 = epoly({-24, 1});
        p.x.num = -(t4 * tp72 * tp72);
        p.x.den = PolyE(QuadExt(Rat(1728))) * tm24 * tm24;
        PolyE quart = epoly({995328, 138240, -20736, 144, 1});
        PolyE sqrt3(std::vector<QuadExt>{QuadExt(Rat(0), Rat(1), -3)});
        p.y.num = sqrt3 * t4 * tp72 * quart;
        p.y.den = PolyE(QuadExt(Rat(124416))) * tm24 * tm24 * tm24;
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

const std::vector<PaperModel>& printed_models() {
    static const std::vector<PaperModel> models = build_models();
    return models;
}

const PaperModel& printed_model(const std::string& name) {
    for (const auto& m : printed_models())
        if (m.name == name) return m;
    throw DomainError("no printed model named " + name);
}

const std::vector<PaperPoint>& printed_points() {
    static const std::vector<PaperPoint> points = build_points();
    return points;
}

} // namespace k3lat::paper
