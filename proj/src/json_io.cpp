#include "json_io.hpp"

#include "polyinv/error.hpp"

#include <limits>

namespace polyinv::json_io {

namespace mp = boost::multiprecision;

Json parse_text(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InputError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::int64_t small_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw InputError(std::string(what) + " must be an integer");
    }
    return j.get<std::int64_t>();
}

LatticePoint point_from_json(const Json& j) {
    if (!j.is_array()) {
        throw InputError("lattice point must be an array of integers");
    }
    IntVector coords;
    for (const auto& c : j) {
        coords.push_back(integer_from_json(c));
    }
    return LatticePoint(std::move(coords));
}

Json point_to_json(const LatticePoint& p) {
    Json out = Json::array();
    for (const auto& c : p.coords()) {
        out.push_back(integer_json(c));
    }
    return out;
}

std::vector<LatticePoint> points_from_json(const Json& j) {
    if (!j.is_array()) {
        throw InputError("points must be an array");
    }
    std::vector<LatticePoint> pts;
    for (const auto& p : j) {
        pts.push_back(point_from_json(p));
    }
    return pts;
}

std::string rational_text(const Rational& r) { return to_string(r); }

}  // namespace

Json integer_json(const Integer& v) {
    static const Integer limit = Integer(1) << 53;
    if (abs(v) < limit) {
        return v.convert_to<std::int64_t>();
    }
    return to_string(v);
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
            throw InputError("not an integer: '" + j.get<std::string>() + "'");
        }
    }
    throw InputError("expected an integer");
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return Rational(integer_from_json(j));
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Rational(s);
        } catch (const std::exception&) {
            throw InputError("not a rational number: '" + s + "'");
        }
    }
    throw InputError("expected an integer or a rational string such as \"3/2\"");
}

Complex complex_from_json(const Json& j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    if (j.is_object() && j.contains("re")) {
        return {j.at("re").get<double>(), j.value("im", 0.0)};
    }
    throw InputError("complex number must be a number, [re, im] or {\"re\":..,\"im\":..}");
}

LatticePolytope polytope_from_json(const Json& j) {
    if (j.is_array()) {
        const auto pts = points_from_json(j);
        if (pts.empty()) {
            throw InputError("polytope needs at least one point or an explicit \"dim\"");
        }
        return LatticePolytope::hull(pts, pts.front().dim());
    }
    if (j.is_object() && j.contains("simplex")) {
        const auto d = small_int(j.at("simplex"), "simplex dimension");
        if (d < 1) {
            throw InputError("simplex dimension must be positive");
        }
        const Integer scale = j.contains("scale") ? integer_from_json(j.at("scale")) : Integer(1);
        return dilate(unit_simplex(static_cast<std::size_t>(d)), scale);
    }
    const auto pts = points_from_json(field(j, "points"));
    std::size_t dim = 0;
    if (j.contains("dim")) {
        const auto d = small_int(j.at("dim"), "dim");
        if (d < 0) {
            throw InputError("dim must be nonnegative");
        }
        dim = static_cast<std::size_t>(d);
    } else if (!pts.empty()) {
        dim = pts.front().dim();
    }
    return LatticePolytope::hull(pts, dim);
}

Json polytope_to_json(const LatticePolytope& p) {
    Json out;
    out["dim"] = p.ambient_dim();
    out["affine_dim"] = p.affine_dim();
    Json verts = Json::array();
    for (const auto& v : p.vertices()) {
        verts.push_back(point_to_json(v));
    }
    out["vertices"] = std::move(verts);
    return out;
}

std::vector<LatticePolytope> polytope_list_from_json(const Json& j) {
    const Json& list = j.is_object() ? field(j, "polytopes") : j;
    if (!list.is_array()) {
        throw InputError("expected an array of polytopes");
    }
    std::vector<LatticePolytope> out;
    for (const auto& p : list) {
        out.push_back(polytope_from_json(p));
    }
    return out;
}

Json polynomial_to_json(const LaurentPolynomial& p) {
    Json out;
    out["nvars"] = p.num_vars();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        t["num"] = to_string(Integer(mp::numerator(c)));
        t["den"] = to_string(Integer(mp::denominator(c)));
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

LaurentPolynomial polynomial_from_json(const Json& j) {
    const auto n = small_int(field(j, "nvars"), "nvars");
    if (n < 0) {
        throw InputError("nvars must be nonnegative");
    }
    LaurentPolynomial p(static_cast<std::size_t>(n));
    for (const auto& t : field(j, "terms")) {
        const Json& e = field(t, "exp");
        if (!e.is_array() || e.size() != static_cast<std::size_t>(n)) {
            throw InputError("term exponent must have nvars entries");
        }
        Exponent exp;
        for (const auto& x : e) {
            exp.push_back(small_int(x, "exponent"));
        }
        const Integer num = integer_from_json(field(t, "num"));
        const Integer den = t.contains("den") ? integer_from_json(t.at("den")) : Integer(1);
        if (den == 0) {
            throw InputError("zero denominator");
        }
        p.add_term(exp, Rational(num, den));
    }
    return p;
}

namespace {

struct DenseSpec {
    std::size_t degree;
    bool homogeneous;
    Rational constant;
};

DenseSpec dense_spec(const Json& d, std::optional<long> param) {
    DenseSpec s{};
    const Json& deg = field(d, "degree");
    long degree = 0;
    if (deg.is_string() && deg.get<std::string>() == "param") {
        if (!param) {
            throw InputError("system uses \"param\" but no parameter was given");
        }
        degree = *param;
    } else {
        degree = small_int(deg, "degree");
    }
    if (degree < 0) {
        throw InputError("dense degree must be nonnegative");
    }
    s.degree = static_cast<std::size_t>(degree);
    s.homogeneous = d.value("homogeneous", false);
    s.constant = d.contains("constant") ? rational_from_json(d.at("constant")) : Rational(0);
    return s;
}

}  // namespace

PolySystem system_from_json(const Json& j, std::optional<long> param) {
    const Json& polys = field(j, "polys");
    if (!polys.is_array()) {
        throw InputError("\"polys\" must be an array");
    }
    std::vector<std::string> names;
    if (j.contains("vars")) {
        for (const auto& v : j.at("vars")) {
            if (!v.is_string()) {
                throw InputError("variable names must be strings");
            }
            names.push_back(v.get<std::string>());
        }
    }
    std::size_t nvars = names.size();
    if (j.contains("nvars")) {
        const auto n = small_int(j.at("nvars"), "nvars");
        if (n < 0 || (!names.empty() && static_cast<std::size_t>(n) != names.size())) {
            throw InputError("nvars disagrees with the variable list");
        }
        nvars = static_cast<std::size_t>(n);
    }
    // Without names the variable count may come from the largest x<k> used.
    if (names.empty()) {
        for (const auto& p : polys) {
            if (p.is_string()) {
                nvars = std::max(nvars, parse(p.get<std::string>(), {}, 0).num_vars());
            } else if (p.is_object() && p.contains("nvars")) {
                nvars = std::max(nvars, static_cast<std::size_t>(small_int(p.at("nvars"), "nvars")));
            }
        }
    }
    std::vector<LaurentPolynomial> out;
    for (const auto& p : polys) {
        if (p.is_string()) {
            out.push_back(parse(p.get<std::string>(), names, nvars));
        } else if (p.is_object() && p.contains("dense")) {
            if (nvars == 0) {
                throw InputError("dense polynomial needs a known variable count");
            }
            const DenseSpec s = dense_spec(p.at("dense"), param);
            out.push_back(dense_polynomial(nvars, s.degree, s.homogeneous, s.constant));
        } else if (p.is_object() && p.contains("terms")) {
            LaurentPolynomial q = polynomial_from_json(p);
            if (q.num_vars() != nvars) {
                throw InputError("polynomial has " + std::to_string(q.num_vars()) + " variables, system has " +
                                 std::to_string(nvars));
            }
            out.push_back(std::move(q));
        } else {
            throw InputError("each polynomial must be a string, a term object or a dense generator");
        }
    }
    return PolySystem(nvars, std::move(out), std::move(names));
}

Json system_to_json(const PolySystem& s) {
    Json out;
    out["vars"] = s.names();
    Json polys = Json::array();
    for (const auto& p : s.polys()) {
        polys.push_back(render(p, s.names()));
    }
    out["polys"] = std::move(polys);
    return out;
}

WeightSet weights_from_json(const Json& j) {
    const Json& list = j.is_object() ? field(j, "weights") : j;
    WeightSet w;
    w.weights = points_from_json(list);
    if (j.is_object() && j.contains("rank")) {
        const auto r = small_int(j.at("rank"), "rank");
        if (r < 1) {
            throw InputError("rank must be positive");
        }
        w.rank = static_cast<std::size_t>(r);
    } else if (!w.weights.empty()) {
        w.rank = w.weights.front().dim();
    }
    validate(w);
    return w;
}

IntersectionData intersection_from_json(const Json& j) {
    IntersectionData data;
    const auto n = small_int(field(j, "n"), "n");
    if (n < 1) {
        throw InputError("n must be positive");
    }
    data.n = static_cast<std::size_t>(n);
    data.deg_top = integer_from_json(field(j, "deg_top"));
    for (const auto& c : field(j, "chern")) {
        data.chern.push_back(rational_from_json(c));
    }
    data.d = integer_from_json(field(j, "d"));
    if (j.contains("h_inf")) {
        data.h_inf = integer_from_json(j.at("h_inf"));
    }
    validate(data);
    return data;
}

Json intersection_to_json(const IntersectionData& data) {
    Json out;
    out["n"] = data.n;
    out["deg_top"] = integer_json(data.deg_top);
    Json chern = Json::array();
    for (const auto& c : data.chern) {
        if (mp::denominator(c) == 1) {
            chern.push_back(integer_json(mp::numerator(c)));
        } else {
            chern.push_back(rational_text(c));
        }
    }
    out["chern"] = std::move(chern);
    out["d"] = integer_json(data.d);
    out["h_inf"] = integer_json(data.h_inf);
    return out;
}

Json affine_chi_to_json(const AffineChi& chi) {
    Json out;
    out["total"] = integer_json(chi.total);
    Json strata = Json::array();
    for (const auto& s : chi.strata) {
        Json e;
        e["stratum"] = s.label;
        e["zero_set"] = s.zero_set;
        e["chi"] = integer_json(s.chi);
        if (!s.reason.empty()) {
            e["empty_because"] = s.reason;
        }
        strata.push_back(std::move(e));
    }
    out["strata"] = std::move(strata);
    return out;
}

Json catalog_entry_to_json(const CatalogEntry& e) {
    Json out;
    out["id"] = e.id;
    out["group_label"] = e.group_label;
    out["params"] = {{"n", e.params.n}, {"m", e.params.m}};
    out["module_dim"] = integer_json(e.module_dim);
    out["orbit_codim"] = integer_json(e.orbit_codim);
    Json degrees = Json::array();
    for (const auto& d : e.invariant_degrees) {
        degrees.push_back(integer_json(d));
    }
    out["invariant_degrees"] = std::move(degrees);
    out["closed_generic_orbits"] = e.closed_generic_orbits;
    out["isotropy"] = e.isotropy_label.empty() ? Json(nullptr) : Json(e.isotropy_label);
    out["reductive_isotropy"] = e.reductive_isotropy;
    out["orbit_chi"] = e.orbit_chi_known ? integer_json(e.orbit_chi) : Json(nullptr);
    return out;
}

Json crit_report_to_json(const CritReport& r) {
    auto cplx = [](const Complex& z) { return Json::array({z.real(), z.imag()}); };
    Json out;
    out["count"] = r.count;
    Json points = Json::array();
    for (const auto& p : r.points) {
        Json pt = Json::array();
        for (const auto& z : p) {
            pt.push_back(cplx(z));
        }
        points.push_back(std::move(pt));
    }
    out["points"] = std::move(points);
    if (!r.multipliers.empty()) {
        Json m = Json::array();
        for (const auto& z : r.multipliers) {
            m.push_back(cplx(z));
        }
        out["multipliers"] = std::move(m);
    }
    out["max_residual"] = r.max_residual;
    out["attempts"] = r.attempts;
    out["passed"] = r.passed;
    return out;
}

}  // namespace polyinv::json_io
