#include "gvm/serialize.hpp"

#include "gvm/errors.hpp"

#include <regex>

namespace gvm {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorKind::InvalidArgument, std::string("missing JSON field '") + key + "'");
    return j.at(key);
}

template <class T, class F>
Json array_of(const std::vector<T>& v, F f) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(f(x));
    return a;
}

std::vector<Rational> rationals_from_json(const Json& j) {
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

Json rationals_json(const std::vector<Rational>& v) {
    return array_of(v, [](const Rational& q) { return to_json(q); });
}

Json strings_json(const std::vector<std::string>& v) { return Json(v); }

std::vector<std::string> strings_from_json(const Json& j) { return j.get<std::vector<std::string>>(); }

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    fail(ErrorKind::InvalidArgument, "rational must be a \"p/q\" string");
}

Json to_json(const Weight& w) { return rationals_json(w.c); }
Weight weight_from_json(const Json& j) { return Weight(rationals_from_json(j)); }

Json to_json(Family f) { return std::string(1, family_letter(f)); }
Family family_from_json(const Json& j) { return parse_family(j.get<std::string>()); }

Json to_json(const NodeSet& s) { return Json(s); }

Json to_json(const HomVerdict& v) {
    return Json{{"exists", v.exists}, {"tset", tset_name(v.tset)}, {"trace", strings_json(v.trace)}};
}

HomVerdict hom_verdict_from_json(const Json& j) {
    HomVerdict v;
    v.exists = field(j, "exists").get<bool>();
    v.tset = parse_tset(field(j, "tset").get<std::string>());
    v.trace = strings_from_json(field(j, "trace"));
    return v;
}

Json to_json(const VerifyReport& r) {
    Json vs = Json::array();
    for (const auto& v : r.violations)
        vs.push_back(Json{{"family", to_json(v.family)},
                          {"rank", v.rank},
                          {"k", v.k},
                          {"t", to_json(v.t)},
                          {"reason", v.reason}});
    return Json{{"cases_checked", r.cases_checked},
                {"cases_skipped", r.cases_skipped},
                {"ok", r.ok()},
                {"violations", vs}};
}

VerifyReport verify_report_from_json(const Json& j) {
    VerifyReport r;
    r.cases_checked = field(j, "cases_checked").get<std::size_t>();
    r.cases_skipped = field(j, "cases_skipped").get<std::size_t>();
    for (const auto& v : field(j, "violations"))
        r.violations.push_back({family_from_json(field(v, "family")), field(v, "rank").get<int>(),
                                field(v, "k").get<int>(), rational_from_json(field(v, "t")),
                                field(v, "reason").get<std::string>()});
    return r;
}

Json to_json(const FormalSum& s) {
    Json a = Json::array();
    for (const auto& [w, c] : s.terms()) a.push_back(Json{{"coeff", c}, {"weight", to_json(w)}});
    return a;
}

FormalSum formal_sum_from_json(const Json& j) {
    FormalSum s;
    for (const auto& t : j) s.add(weight_from_json(field(t, "weight")), field(t, "coeff").get<long>());
    return s;
}

Json to_json(const Partition& p) { return Json(p.parts()); }
Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

Json to_json(const OrbitDatum& o) {
    return Json{{"partition", to_json(o.partition)},
                {"partition_text", o.partition.to_string()},
                {"birational", o.birational},
                {"very_even", o.very_even}};
}

OrbitDatum orbit_datum_from_json(const Json& j) {
    OrbitDatum o;
    o.partition = partition_from_json(field(j, "partition"));
    o.birational = field(j, "birational").get<bool>();
    o.very_even = field(j, "very_even").get<bool>();
    return o;
}

Json to_json(const Symbol& s) { return Json{{"top", s.top}, {"bottom", s.bottom}}; }

Symbol symbol_from_json(const Json& j) {
    Symbol s;
    s.top = field(j, "top").get<std::vector<int>>();
    s.bottom = field(j, "bottom").get<std::vector<int>>();
    return s;
}

Json to_json(const CellReport& r) {
    return Json{{"sequence", rationals_json(r.sequence)},
                {"shape", to_json(r.shape)},
                {"symbol", to_json(r.symbol)},
                {"parabolic_sequence", rationals_json(r.parabolic_sequence)},
                {"parabolic_shape", to_json(r.parabolic_shape)},
                {"parabolic_symbol", to_json(r.parabolic_symbol)},
                {"same_family", r.same_family}};
}

CellReport cell_report_from_json(const Json& j) {
    CellReport r;
    r.sequence = rationals_from_json(field(j, "sequence"));
    r.shape = partition_from_json(field(j, "shape"));
    r.symbol = symbol_from_json(field(j, "symbol"));
    r.parabolic_sequence = rationals_from_json(field(j, "parabolic_sequence"));
    r.parabolic_shape = partition_from_json(field(j, "parabolic_shape"));
    r.parabolic_symbol = symbol_from_json(field(j, "parabolic_symbol"));
    r.same_family = field(j, "same_family").get<bool>();
    return r;
}

Json to_json(const ElementaryVerdict& v) {
    return Json{{"exists", v.exists},
                {"source", to_json(v.source)},
                {"target", to_json(v.target)},
                {"sub_tset", tset_name(v.sub_tset)},
                {"trace", strings_json(v.trace)}};
}

ElementaryVerdict elementary_verdict_from_json(const Json& j) {
    ElementaryVerdict v;
    v.exists = field(j, "exists").get<bool>();
    v.source = weight_from_json(field(j, "source"));
    v.target = weight_from_json(field(j, "target"));
    v.sub_tset = parse_tset(field(j, "sub_tset").get<std::string>());
    v.trace = strings_from_json(field(j, "trace"));
    return v;
}

Json to_json(const CompositionInclusion& c) {
    return Json{{"clause", c.clause},
                {"p", c.p},
                {"q", c.q},
                {"t_source", rationals_json(c.t_source)},
                {"t_target", rationals_json(c.t_target)},
                {"alpha", c.alpha},
                {"verdict", to_json(c.verdict)}};
}

CompositionInclusion composition_inclusion_from_json(const Json& j) {
    CompositionInclusion c;
    c.clause = field(j, "clause").get<int>();
    c.p = field(j, "p").get<int>();
    c.q = field(j, "q").get<int>();
    c.t_source = rationals_from_json(field(j, "t_source"));
    c.t_target = rationals_from_json(field(j, "t_target"));
    c.alpha = field(j, "alpha").get<Root>();
    c.verdict = elementary_verdict_from_json(field(j, "verdict"));
    return c;
}

Json rootdata_json(const ParabolicDatum& pd) {
    return Json{{"family", to_json(pd.rs->family())},
                {"rank", pd.rs->rank()},
                {"k", pd.k},
                {"theta", to_json(pd.theta)},
                {"rho_theta", to_json(pd.rho_theta())},
                {"rho_upper", to_json(pd.rho_upper())},
                {"omega", to_json(pd.omega)},
                {"c", to_json(pd.c)},
                {"d", to_json(pd.d)},
                {"dim_nilradical", dim_nilradical(pd)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

bool is_scalar_leaf(const Json& x) {
    static const std::regex rational(R"(-?[0-9]+(/[0-9]+)?)");
    if (x.is_number() || x.is_boolean()) return true;
    return x.is_string() && std::regex_match(x.get<std::string>(), rational);
}

std::string scalar_text(const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); }

void walk(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        if (j.empty()) out.emplace_back(path, "{}");
        for (auto it = j.begin(); it != j.end(); ++it)
            walk(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    } else if (j.is_array()) {
        bool flat = true;
        for (const auto& x : j) flat = flat && is_scalar_leaf(x);
        if (flat) {
            std::string s = "[";
            for (std::size_t i = 0; i < j.size(); ++i) s += (i ? " " : "") + scalar_text(j[i]);
            out.emplace_back(path, s + "]");
        } else {
            for (std::size_t i = 0; i < j.size(); ++i) walk(j[i], path + "[" + std::to_string(i) + "]", out);
        }
    } else {
        out.emplace_back(path, scalar_text(j));
    }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> flatten(const Json& j) {
    std::vector<std::pair<std::string, std::string>> out;
    walk(j, "", out);
    return out;
}

std::string render_text(const Json& j) {
    std::string s;
    for (const auto& [path, value] : flatten(j)) s += (path.empty() ? "value" : path) + ": " + value + "\n";
    return s;
}

}  // namespace gvm
