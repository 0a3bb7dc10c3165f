#include "k3lat/json_io.hpp"

namespace k3lat {

namespace {

const Int kJsonNumberCap = Int(1) << 53;

} // namespace

Json int_to_json(const Int& v) {
    if (abs(v) < kJsonNumberCap) return Json(v.get_si());
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw DomainError("expected integer (number or decimal string)");
}

Json rat_to_json(const Rat& v) {
    if (v.get_den() == 1) return int_to_json(v.get_num());
    return Json(format_rat(v));
}

Rat rat_from_json(const Json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    return Rat(int_from_json(j));
}

Json matrix_to_json(const IntMatrix& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

namespace {

IntMatrix entries_from_json(const Json& rows) {
    if (!rows.is_array()) throw DomainError("matrix entries must be an array of rows");
    std::vector<std::vector<Int>> data;
    for (const auto& r : rows) {
        std::vector<Int> row;
        for (const auto& x : r) row.push_back(int_from_json(x));
        data.push_back(std::move(row));
    }
    return IntMatrix::from_rows(data);
}

} // namespace

IntMatrix matrix_from_json(const Json& j) {
    if (j.is_array()) return entries_from_json(j);
    if (!j.contains("entries")) throw DomainError("matrix JSON needs an \"entries\" field");
    IntMatrix m = entries_from_json(j.at("entries"));
    if (j.contains("rows") && j.at("rows").get<std::size_t>() != m.rows())
        throw DomainError("row count mismatch");
    if (j.contains("cols") && j.at("cols").get<std::size_t>() != m.cols())
        throw DomainError("column count mismatch");
    return m;
}

IntMatrix gram_from_json(const Json& j) {
    if (j.is_object() && j.contains("gram")) return entries_from_json(j.at("gram"));
    return matrix_from_json(j);
}

Json gram_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"gram", std::move(rows)}};
}

Json snf_to_json(const SnfResult& r) {
    Json diag = Json::array();
    for (const Int& d : r.diagonal()) diag.push_back(int_to_json(d));
    return Json{{"diagonal", std::move(diag)},
                {"d", matrix_to_json(r.d)},
                {"u", matrix_to_json(r.u)},
                {"v", matrix_to_json(r.v)}};
}

Json form_to_json(const BinaryQuadraticForm& f) {
    return Json{{"a", int_to_json(f.a)}, {"b", int_to_json(f.b)}, {"c", int_to_json(f.c)}};
}

BinaryQuadraticForm form_from_json(const Json& j) {
    if (j.is_array() && j.size() == 3)
        return {int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2])};
    return {int_from_json(j.at("a")), int_from_json(j.at("b")), int_from_json(j.at("c"))};
}

Json discform_to_json(const DiscriminantForm& f) {
    Json orders = Json::array(), q = Json::array(), b = Json::array(), gens = Json::array();
    for (const Int& d : f.orders) orders.push_back(int_to_json(d));
    for (const Rat& x : f.q) q.push_back(rat_to_json(x));
    for (std::size_t i = 0; i < f.orders.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < f.orders.size(); ++j) row.push_back(rat_to_json(f.b.at(i, j)));
        b.push_back(std::move(row));
    }
    for (const auto& g : f.generators) {
        Json row = Json::array();
        for (const Rat& x : g) row.push_back(rat_to_json(x));
        gens.push_back(std::move(row));
    }
    return Json{{"orders", std::move(orders)},
                {"q", std::move(q)},
                {"b", std::move(b)},
                {"generators", std::move(gens)}};
}

Json fibration_to_json(const FibrationSpec& s) {
    Json fibers = Json::array();
    for (const auto& f : s.fibers) {
        Json jf{{"kind", f.name()}, {"place", f.place}};
        if (!f.tag.empty()) jf["tag"] = f.tag;
        fibers.push_back(std::move(jf));
    }
    Json torsion = Json::array();
    for (const auto& t : s.torsion) torsion.push_back(Json{{"name", t.name}, {"order", t.order}});
    Json sections = Json::array();
    for (const auto& sec : s.sections) {
        Json js{{"name", sec.name}, {"meets_zero", int_to_json(sec.meets_zero)}};
        Json hits = Json::object();
        for (const auto& [tag, comp] : sec.hits) hits[tag] = comp;
        js["hits"] = std::move(hits);
        if (!sec.meets.empty()) {
            Json meets = Json::object();
            for (const auto& [nm, v] : sec.meets) meets[nm] = int_to_json(v);
            js["meets"] = std::move(meets);
        }
        sections.push_back(std::move(js));
    }
    Json out{{"fibers", std::move(fibers)},
             {"mw_rank", s.mw_rank},
             {"torsion", std::move(torsion)},
             {"sections", std::move(sections)}};
    if (!s.basis.empty()) out["basis"] = s.basis;
    return out;
}

FibrationSpec fibration_from_json(const Json& j) {
    FibrationSpec s;
    for (const auto& jf : j.at("fibers")) {
        KodairaFiber f = KodairaFiber::parse(jf.at("kind").get<std::string>());
        if (jf.contains("place")) f.place = jf.at("place").get<std::string>();
        if (jf.contains("tag")) f.tag = jf.at("tag").get<std::string>();
        s.fibers.push_back(std::move(f));
    }
    if (j.contains("mw_rank")) s.mw_rank = j.at("mw_rank").get<int>();
    if (j.contains("torsion"))
        for (const auto& jt : j.at("torsion"))
            s.torsion.push_back({jt.at("name").get<std::string>(), jt.at("order").get<int>()});
    if (j.contains("sections"))
        for (const auto& js : j.at("sections")) {
            SectionIncidence sec;
            sec.name = js.at("name").get<std::string>();
            if (js.contains("meets_zero")) sec.meets_zero = int_from_json(js.at("meets_zero"));
            if (js.contains("hits"))
                for (const auto& [tag, comp] : js.at("hits").items())
                    sec.hits[tag] = comp.get<int>();
            if (js.contains("meets"))
                for (const auto& [nm, v] : js.at("meets").items())
                    sec.meets[nm] = int_from_json(v);
            s.sections.push_back(std::move(sec));
        }
    if (j.contains("basis"))
        for (const auto& b : j.at("basis")) s.basis.push_back(b.get<std::string>());
    return s;
}

namespace {

Json poly_to_json(const PolyQ& p) {
    Json out = Json::array();
    for (const Rat& c : p.coeffs()) out.push_back(rat_to_json(c));
    return out;
}

PolyQ poly_from_json(const Json& j) {
    std::vector<Rat> c;
    for (const auto& x : j) {
        if (x.is_array())
            throw DomainError("model coefficients must be rational; [x,y] pairs are for points");
        c.push_back(rat_from_json(x));
    }
    return PolyQ(std::move(c));
}

} // namespace

Json weierstrass_to_json(const WeierstrassModel& w, long d) {
    Json a{{"a1", poly_to_json(w.a1)},
           {"a2", poly_to_json(w.a2)},
           {"a3", poly_to_json(w.a3)},
           {"a4", poly_to_json(w.a4)},
           {"a6", poly_to_json(w.a6)}};
    return Json{{"d", d}, {"a", std::move(a)}};
}

std::pair<WeierstrassModel, long> weierstrass_from_json(const Json& j) {
    const Json& a = j.contains("a") ? j.at("a") : j;
    WeierstrassModel w;
    if (a.contains("a1")) w.a1 = poly_from_json(a.at("a1"));
    if (a.contains("a2")) w.a2 = poly_from_json(a.at("a2"));
    if (a.contains("a3")) w.a3 = poly_from_json(a.at("a3"));
    if (a.contains("a4")) w.a4 = poly_from_json(a.at("a4"));
    if (a.contains("a6")) w.a6 = poly_from_json(a.at("a6"));
    long d = j.contains("d") ? j.at("d").get<long>() : 0;
    return {std::move(w), d};
}

QuadExt quadext_from_json(const Json& j, long d) {
    if (j.is_array()) {
        if (j.size() != 2) throw DomainError("[x,y] coefficient needs two entries");
        Rat y = rat_from_json(j[1]);
        return QuadExt{rat_from_json(j[0]), y, y == 0 ? 0 : d};
    }
    return QuadExt{rat_from_json(j)};
}

Json quadext_to_json(const QuadExt& v) {
    if (v.is_rational()) return rat_to_json(v.x);
    return Json::array({rat_to_json(v.x), rat_to_json(v.y)});
}

RatFunc ratfunc_from_json(const Json& j, long d) {
    auto parse_poly = [&](const Json& arr) {
        std::vector<QuadExt> c;
        for (const auto& x : arr) c.push_back(quadext_from_json(x, d));
        return PolyE(std::move(c));
    };
    if (j.is_array()) return RatFunc::poly(parse_poly(j));
    RatFunc f;
    f.num = parse_poly(j.at("num"));
    f.den = j.contains("den") ? parse_poly(j.at("den")) : PolyE(QuadExt(1));
    return f;
}

Json report_to_json(const FiberReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        entries.push_back(Json{{"kind", e.fiber.name()},
                               {"place", e.place.str()},
                               {"count", e.place_count}});
    }
    return Json{{"entries", std::move(entries)},
                {"euler_sum", r.euler_sum},
                {"euler_ok", r.euler_ok()},
                {"text", r.text()}};
}

Json dataset_to_json() {
    Json out = Json::array();
    for (const auto& e : paper_dataset()) {
        Json je{{"family", e.family}, {"label", e.label}};
        if (e.tau)
            je["tau"] = Json::array({int_to_json(e.tau->a), int_to_json(e.tau->b),
                                     int_to_json(e.tau->c)});
        if (e.form) je["form"] = form_to_json(*e.form);
        je["conjectural"] = e.conjectural;
        if (!e.marker.empty()) je["marker"] = e.marker;
        out.push_back(std::move(je));
    }
    return out;
}

} // namespace k3lat
