#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "k3lat/json_io.hpp"
#include "k3lat/verify_paper.hpp"

using namespace k3lat;

namespace {

struct OutputOptions {
    std::string format = "json";
    std::string out_file;
};

void add_output_flags(CLI::App* cmd, OutputOptions& o) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", o.out_file, "write output to FILE instead of stdout");
}

void emit(const OutputOptions& o, const Json& j, const std::string& text) {
    std::ostream* os = &std::cout;
    std::ofstream f;
    if (!o.out_file.empty()) {
        f.open(o.out_file);
        if (!f) throw DomainError("cannot open output file " + o.out_file);
        os = &f;
    }
    if (o.format == "json")
        *os << j.dump(2) << "\n";
    else
        *os << text << "\n";
}

Json read_input(const std::string& path) {
    if (path.empty() || path == "-") return Json::parse(std::cin);
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open input file " + path);
    return Json::parse(f);
}

std::string matrix_text(const IntMatrix& m) {
    std::ostringstream s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s << " ";
            s << m.at(i, j).get_str();
        }
        s << "\n";
    }
    return s.str();
}

std::string form_text(const BinaryQuadraticForm& f) {
    return "[" + format_int(f.a) + " " + format_int(f.b) + " " + format_int(f.c) + "]";
}

std::string discform_text(const DiscriminantForm& f) {
    std::ostringstream s;
    for (std::size_t i = 0; i < f.orders.size(); ++i) {
        if (i) s << " + ";
        s << "Z/" << format_int(f.orders[i]);
    }
    s << "; q = (";
    for (std::size_t i = 0; i < f.q.size(); ++i) {
        if (i) s << ", ";
        s << format_rat(f.q[i]);
    }
    s << ")";
    if (f.orders.size() > 1) s << "; b(g1,g2) = " << format_rat(f.b.at(0, 1));
    return s.str();
}

std::vector<Rat> flatten_coeffs(const FibrationSpec& spec, const Json& j) {
    std::vector<Rat> out;
    for (const auto& fiber : spec.fibers) {
        const int m = fiber.root_rank();
        std::string tag = fiber.tag_or_name();
        if (j.contains(tag)) {
            const Json& arr = j.at(tag);
            if (static_cast<int>(arr.size()) != m)
                throw DomainError("coefficient list for " + tag + " must have " +
                                  std::to_string(m) + " entries");
            for (const auto& x : arr) out.push_back(rat_from_json(x));
        } else {
            for (int i = 0; i < m; ++i) out.push_back(Rat(0));
        }
    }
    return out;
}

ParametricModel family_by_name(const std::string& name) {
    if (name == "fk" || name == "F_k") return fk_family();
    if (name == "jk" || name == "J_k") return jk_family();
    if (name == "first") return first_fibration_family();
    throw DomainError("unknown parametric family: " + name);
}

int run(int argc, char** argv) {
    CLI::App app{"exact lattice computations for elliptic K3 surfaces"};
    app.require_subcommand(1);

    OutputOptions out;
    std::string input_path;

    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf_cmd->add_option("input", input_path, "matrix JSON file (default stdin)");
    add_output_flags(snf_cmd, out);
    snf_cmd->callback([&] {
        IntMatrix a = gram_from_json(read_input(input_path));
        SnfResult r = snf(a);
        std::string text;
        for (const Int& d : r.diagonal()) text += format_int(d) + " ";
        emit(out, snf_to_json(r), "diagonal: " + text);
    });

    auto* det_cmd = app.add_subcommand("det", "exact determinant");
    det_cmd->add_option("input", input_path, "matrix JSON file (default stdin)");
    add_output_flags(det_cmd, out);
    det_cmd->callback([&] {
        Int d = det(gram_from_json(read_input(input_path)));
        emit(out, Json{{"det", int_to_json(d)}}, format_int(d));
    });

    auto* disc_cmd = app.add_subcommand("discform", "discriminant form of an even lattice");
    disc_cmd->add_option("input", input_path, "lattice JSON file (default stdin)");
    add_output_flags(disc_cmd, out);
    disc_cmd->callback([&] {
        DiscriminantForm f = discriminant_form(Lattice(gram_from_json(read_input(input_path))));
        emit(out, discform_to_json(f), discform_text(f));
    });

    auto* red_cmd = app.add_subcommand("reduce", "Gauss-reduce an even positive binary form");
    std::vector<std::string> form_args;
    red_cmd->add_option("abc", form_args, "a b c (or JSON via stdin when omitted)")
        ->expected(0, 3);
    add_output_flags(red_cmd, out);
    red_cmd->callback([&] {
        BinaryQuadraticForm f{};
        if (form_args.size() == 3)
            f = {parse_int(form_args[0]), parse_int(form_args[1]), parse_int(form_args[2])};
        else if (form_args.empty())
            f = form_from_json(read_input(""));
        else
            throw DomainError("reduce needs exactly three values");
        BinaryQuadraticForm r = reduce_form(f);
        emit(out, form_to_json(r), form_text(r));
    });

    auto* enum_cmd = app.add_subcommand("enumerate", "all reduced even forms of a determinant");
    std::string det_arg;
    enum_cmd->add_option("det", det_arg, "positive determinant")->required();
    add_output_flags(enum_cmd, out);
    enum_cmd->callback([&] {
        auto forms = enumerate_even_forms(parse_int(det_arg));
        Json jf = Json::array();
        std::string text;
        for (const auto& f : forms) {
            jf.push_back(form_to_json(f));
            text += form_text(f) + " ";
        }
        emit(out, Json{{"forms", std::move(jf)}}, text);
    });

    auto* comp_cmd = app.add_subcommand("complement", "primitive orthogonal complement");
    comp_cmd->add_option("input", input_path, "JSON {\"gram\": [[..]], \"v\": [..]}");
    add_output_flags(comp_cmd, out);
    comp_cmd->callback([&] {
        Json j = read_input(input_path);
        Lattice l(gram_from_json(j));
        std::vector<Int> v;
        for (const auto& x : j.at("v")) v.push_back(int_from_json(x));
        Lattice c = orthogonal_complement(l, v);
        Json res = gram_to_json(c.gram());
        std::string text = matrix_text(c.gram());
        if (c.rank() == 2) {
            BinaryQuadraticForm f =
                reduce_form({c.gram().at(0, 0), c.gram().at(0, 1), c.gram().at(1, 1)});
            res["reduced_form"] = form_to_json(f);
            text += "reduced: " + form_text(f);
        }
        emit(out, res, text);
    });

    auto* match_cmd = app.add_subcommand(
        "match", "transcendental lattice candidates of a rank-20 NS lattice");
    match_cmd->add_option("input", input_path,
                          "NS lattice JSON, or {\"ns\":.., \"t\":..} to check a pair");
    add_output_flags(match_cmd, out);
    match_cmd->callback([&] {
        Json j = read_input(input_path);
        if (j.is_object() && j.contains("ns") && j.contains("t")) {
            Lattice ns(gram_from_json(j.at("ns")));
            Lattice t(gram_from_json(j.at("t")));
            TranscendentalCheck c = check_transcendental(ns, t);
            emit(out, Json{{"ok", c.ok}, {"reason", c.describe()}},
                 c.ok ? "match" : c.describe());
            return;
        }
        auto cands = transcendental_candidates(Lattice(gram_from_json(j)));
        Json jf = Json::array();
        std::string text;
        for (const auto& f : cands) {
            jf.push_back(form_to_json(f));
            text += form_text(f) + " ";
        }
        emit(out, Json{{"candidates", std::move(jf)}}, text);
    });

    auto* ns_cmd = app.add_subcommand("ns-build", "Neron-Severi Gram from a fibration spec");
    ns_cmd->add_option("input", input_path, "fibration spec JSON");
    add_output_flags(ns_cmd, out);
    ns_cmd->callback([&] {
        FibrationSpec spec = fibration_from_json(read_input(input_path));
        IntMatrix g = build_ns_gram(spec);
        Json res = gram_to_json(g);
        res["det"] = int_to_json(det(g));
        res["rank"] = rank(g);
        emit(out, res, matrix_text(g) + "det " + format_int(det(g)));
    });

    auto* tor_cmd = app.add_subcommand("ns-verify-torsion",
                                       "check printed torsion-relation coefficients");
    tor_cmd->add_option("input", input_path,
                        "JSON {spec fields..., \"coeffs\": {tag: [..], ...}}");
    add_output_flags(tor_cmd, out);
    tor_cmd->callback([&] {
        Json j = read_input(input_path);
        FibrationSpec spec = fibration_from_json(j);
        std::vector<Rat> coeffs = flatten_coeffs(spec, j.at("coeffs"));
        bool ok = verify_torsion_relation(spec, coeffs);
        emit(out, Json{{"ok", ok}}, ok ? "relation verified" : "relation rejected");
    });

    auto* fib_cmd = app.add_subcommand("fibers", "Kodaira fiber configuration of a model");
    fib_cmd->add_option("input", input_path, "Weierstrass JSON");
    add_output_flags(fib_cmd, out);
    fib_cmd->callback([&] {
        auto [w, d] = weierstrass_from_json(read_input(input_path));
        (void)d;
        FiberReport r = analyze_fibration(w);
        emit(out, report_to_json(r),
             r.text() + (r.euler_ok() ? "" : "  [warning: Euler sum " +
                                                 std::to_string(r.euler_sum) + "]"));
    });

    auto* spec_cmd = app.add_subcommand("specialize", "specialize a parametric family");
    std::string family_name, k_value;
    spec_cmd->add_option("--family", family_name, "fk | jk | first")->required();
    spec_cmd->add_option("--k", k_value, "rational parameter value")->required();
    add_output_flags(spec_cmd, out);
    spec_cmd->callback([&] {
        WeierstrassModel w = specialize(family_by_name(family_name), parse_rat(k_value));
        emit(out, weierstrass_to_json(w), "specialized " + family_name + " at k=" + k_value);
    });

    auto* pt_cmd = app.add_subcommand("verify-point", "check a section on a model exactly");
    pt_cmd->add_option("input", input_path,
                       "JSON {\"model\": {...}, \"d\": n, \"x\": {...}, \"y\": {...}}");
    add_output_flags(pt_cmd, out);
    pt_cmd->callback([&] {
        Json j = read_input(input_path);
        auto [w, d_model] = weierstrass_from_json(j.contains("model") ? j.at("model") : j);
        long d = j.contains("d") ? j.at("d").get<long>() : d_model;
        RatFunc x = ratfunc_from_json(j.at("x"), d);
        RatFunc y = ratfunc_from_json(j.at("y"), d);
        bool ok = verify_point(w, d, x, y);
        emit(out, Json{{"ok", ok}}, ok ? "point verifies" : "point fails");
    });

    auto* per_cmd = app.add_subcommand("period", "transcendental lattice from a tau equation");
    std::string period_family;
    std::vector<std::string> tau_args;
    per_cmd->add_option("--family", period_family, "verrill | apery-fermi")->required();
    per_cmd->add_option("--tau", tau_args, "A B C of A tau^2 + B tau + C = 0")
        ->expected(3)
        ->required();
    add_output_flags(per_cmd, out);
    per_cmd->callback([&] {
        FamilySpec fam = period_family == "verrill"      ? verrill_family()
                         : period_family == "apery-fermi" ? apery_fermi_family()
                                                          : throw DomainError(
                                                                "unknown family: " +
                                                                period_family);
        TauEquation e{parse_int(tau_args[0]), parse_int(tau_args[1]), parse_int(tau_args[2])};
        auto pqr = algebraic_vector(fam, e);
        BinaryQuadraticForm f = singular_transcendental(fam, e);
        Json j{{"pqr", Json::array({int_to_json(pqr[0]), int_to_json(pqr[1]),
                                    int_to_json(pqr[2])})},
               {"form", form_to_json(f)}};
        emit(out, j,
             "pqr = (" + format_int(pqr[0]) + "," + format_int(pqr[1]) + "," +
                 format_int(pqr[2]) + ")  T = " + form_text(f));
    });

    auto* keum_cmd = app.add_subcommand("keum", "factorizations det = l^2 det'");
    std::string keum_det;
    keum_cmd->add_option("det", keum_det, "Picard determinant")->required();
    add_output_flags(keum_cmd, out);
    keum_cmd->callback([&] {
        KeumResult r = keum_options(parse_int(keum_det));
        Json jo = Json::array();
        std::string text;
        for (const auto& o : r.options) {
            jo.push_back(Json{{"l", int_to_json(o.l)}, {"det_j", int_to_json(o.det_j)}});
            text += "(" + format_int(o.l) + "," + format_int(o.det_j) + ") ";
        }
        if (r.squarefree) text += "[squarefree: every elliptic fibration is Jacobian]";
        emit(out, Json{{"options", std::move(jo)}, {"squarefree", r.squarefree}}, text);
    });

    auto* data_cmd = app.add_subcommand("dataset", "embedded table of the singular members");
    add_output_flags(data_cmd, out);
    data_cmd->callback([&] {
        Json j = dataset_to_json();
        std::string text;
        for (const auto& e : paper_dataset()) {
            text += e.family + "_" + e.label + ": ";
            text += e.form ? form_text(*e.form) : e.marker;
            if (e.conjectural) text += " (conjectural)";
            text += "\n";
        }
        emit(out, j, text);
    });

    auto* vp_cmd = app.add_subcommand("verify-paper", "run the full reproduction harness");
    VerifyOptions vopt;
    bool as_json = false;
    vp_cmd->add_option("--only", vopt.only_prefix, "run only claims with this id prefix");
    vp_cmd->add_flag("--fail-fast", vopt.fail_fast, "stop at the first failure");
    vp_cmd->add_flag("--json", as_json, "shorthand for --format json");
    add_output_flags(vp_cmd, out);
    vp_cmd->callback([&] {
        VerificationReport r = verify_paper(vopt);
        if (as_json) out.format = "json";
        emit(out, verification_report_to_json(r), verification_report_text(r));
        if (!r.ok()) throw DomainError("verification failures present");
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Json::parse_error& e) {
        std::cerr << Json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump(2) << "\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << Json{{"error", {{"kind", "dimension"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return 1;
    } catch (const SingularMatrixError& e) {
        std::cerr << Json{{"error", {{"kind", "singular"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return 1;
    } catch (const TooLargeError& e) {
        std::cerr << Json{{"error", {{"kind", "too-large"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << Json{{"error", {{"kind", "domain"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return 1;
    } catch (const Json::exception& e) {
        std::cerr << Json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return 1;
    }
}
