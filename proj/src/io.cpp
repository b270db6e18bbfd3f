#include "mfb/io.hpp"

#include "mfb/error.hpp"

#include <fstream>
#include <limits>

namespace mfb {

namespace {

Rational rational_from_json(const Json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw Error(ErrorCode::ParseError, "coefficient must be an integer or a \"p/q\" string");
}

template <typename T>
T field(const Json& j, const char* key) {
    if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad field '") + key + "': " + e.what());
    }
}

Sign parse_sign(const std::string& s) {
    if (s == "+") return Sign::plus;
    if (s == "-") return Sign::minus;
    throw Error(ErrorCode::ParseError, "edge sign must be \"+\" or \"-\"");
}

}  // namespace

ArrangementInput arrangement_from_json(const Json& j) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "arrangement must be a JSON object");
    if (j.contains("lines")) {
        std::vector<ProjLine> lines;
        const Json& arr = j.at("lines");
        if (!arr.is_array()) throw Error(ErrorCode::ParseError, "'lines' must be an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const Json& row = arr[i];
            if (!row.is_array() || row.size() != 3) {
                throw Error(ErrorCode::ParseError, "line " + std::to_string(i) + " needs three coefficients");
            }
            const std::array<Rational, 3> coeffs{rational_from_json(row[0]), rational_from_json(row[1]),
                                                 rational_from_json(row[2])};
            if (coeffs[0] == 0 && coeffs[1] == 0 && coeffs[2] == 0) {
                throw Error(ErrorCode::InvalidInput, "line " + std::to_string(i) + " is the zero form");
            }
            lines.push_back(ProjLine::from_rationals(coeffs, i));
        }
        IncidenceData inc = incidence_from_lines(lines);
        return {std::move(inc), std::move(lines)};
    }
    const auto n = field<long long>(j, "n");
    if (n < 1) throw Error(ErrorCode::InvalidIncidence, "n must be positive");
    std::vector<MultiPoint> points;
    for (const auto& p : field<std::vector<std::vector<long long>>>(j, "points")) {
        MultiPoint mp;
        for (long long i : p) {
            if (i < 0) throw Error(ErrorCode::InvalidIncidence, "negative line index");
            mp.lines.push_back(static_cast<std::size_t>(i));
        }
        points.push_back(std::move(mp));
    }
    return {IncidenceData::validated(static_cast<std::size_t>(n), std::move(points)), std::nullopt};
}

Json incidence_to_json(const IncidenceData& inc) {
    Json points = Json::array();
    for (const auto& p : inc.points) points.push_back(p.lines);
    return Json{{"n", inc.n}, {"points", points}};
}

Json lines_to_json(const std::vector<ProjLine>& lines) {
    Json arr = Json::array();
    for (const auto& l : lines) {
        Json row = Json::array();
        for (const auto& c : l.form.coords) row.push_back(int_to_json(c));
        arr.push_back(row);
    }
    return Json{{"lines", arr}};
}

Json graph_to_json(const PlumbingGraph& g) {
    Json vertices = Json::array();
    for (const auto& v : g.vertices()) {
        Json jv{{"id", v.id}, {"genus", v.genus}, {"kind", kind_name(v.kind)}};
        jv["euler"] = v.euler ? Json(*v.euler) : Json(nullptr);
        jv["mult"] = v.multiplicity ? Json(*v.multiplicity) : Json(nullptr);
        jv["dec"] = v.decoration ? Json::array({v.decoration->m, v.decoration->n, v.decoration->nu})
                                 : Json(nullptr);
        vertices.push_back(std::move(jv));
    }
    Json edges = Json::array();
    for (const auto& e : g.edges()) {
        Json je{{"a", e.a}, {"b", e.b}, {"sign", std::string(1, sign_char(e.sign))}, {"arrow", e.is_arrow}};
        je["type"] = e.type ? Json(*e.type) : Json(nullptr);
        edges.push_back(std::move(je));
    }
    return Json{{"vertices", vertices}, {"edges", edges}};
}

PlumbingGraph graph_from_json(const Json& j) {
    if (!looks_like_graph(j)) throw Error(ErrorCode::ParseError, "graph needs 'vertices' and 'edges'");
    PlumbingGraph g;
    for (const auto& jv : j.at("vertices")) {
        Vertex v;
        v.id = field<std::string>(jv, "id");
        v.genus = jv.value("genus", 0LL);
        if (v.genus < 0) throw Error(ErrorCode::ParseError, "negative genus at '" + v.id + "'");
        if (jv.contains("euler") && !jv["euler"].is_null()) v.euler = jv["euler"].get<long long>();
        if (jv.contains("mult") && !jv["mult"].is_null()) v.multiplicity = jv["mult"].get<long long>();
        v.kind = parse_kind(jv.value("kind", std::string("plain")));
        if (jv.contains("dec") && !jv["dec"].is_null()) {
            const auto d = jv["dec"].get<std::vector<long long>>();
            if (d.size() != 3) throw Error(ErrorCode::ParseError, "'dec' needs three entries");
            v.decoration = Decoration{d[0], d[1], d[2]};
        }
        g.add_vertex(std::move(v));
    }
    for (const auto& je : j.at("edges")) {
        Edge e;
        e.a = field<std::string>(je, "a");
        e.b = field<std::string>(je, "b");
        e.sign = parse_sign(je.value("sign", std::string("+")));
        if (je.contains("type") && !je["type"].is_null()) e.type = je["type"].get<int>();
        g.add_edge(std::move(e));
    }
    g.validate();
    return g;
}

Json script_to_json(const std::vector<MoveSpec>& script) {
    Json arr = Json::array();
    for (const auto& m : script) {
        Json jm{{"move", move_name(m.kind)}, {"vertex", m.target}};
        if (m.neighbor) jm["neighbor"] = *m.neighbor;
        arr.push_back(std::move(jm));
    }
    return arr;
}

std::vector<MoveSpec> script_from_json(const Json& j) {
    const Json& arr = j.is_object() && j.contains("moves") ? j.at("moves") : j;
    if (!arr.is_array()) throw Error(ErrorCode::ParseError, "script must be an array of moves");
    std::vector<MoveSpec> script;
    for (const auto& jm : arr) {
        MoveSpec m;
        m.kind = parse_move(field<std::string>(jm, "move"));
        m.target = field<std::string>(jm, "vertex");
        if (jm.contains("neighbor") && !jm["neighbor"].is_null()) {
            m.neighbor = jm["neighbor"].get<std::string>();
        }
        script.push_back(std::move(m));
    }
    return script;
}

Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
        return Json(static_cast<long long>(v));
    }
    return Json(v.str());
}

Json group_to_json(const AbelianGroup& g) {
    Json factors = Json::array();
    for (const auto& d : g.torsion) factors.push_back(int_to_json(d));
    return Json{{"rank", g.free_rank}, {"factors", factors}};
}

Json string_graph_to_json(const StringGraph& s) {
    return Json{{"a", s.a},
                {"b", s.b},
                {"c", s.c},
                {"sign", std::string(1, sign_char(s.sign))},
                {"lambda", s.lambda},
                {"interior", s.interior},
                {"cf", s.cf_terms},
                {"end_mults", {s.end_mults.first, s.end_mults.second}},
                {"double_arrow", s.is_double_arrow()}};
}

Json conjecture_to_json(const ConjectureReport& r) {
    Json j{{"n", r.n},
           {"h1", r.h1.to_string()},
           {"rank", r.h1.free_rank},
           {"betti_formula", r.betti_formula},
           {"chi", r.chi},
           {"hypothesis_holds", r.hypothesis_holds},
           {"orders_divide_n", r.orders_divide_n},
           {"torsion_free", r.torsion_free},
           {"pencil_or_near_pencil", r.pencil_or_near_pencil},
           {"part3_consistent", r.part3_consistent}};
    j["factors"] = group_to_json(r.h1)["factors"];
    j["torsion_is_zn_chi"] = r.torsion_is_zn_chi ? Json(*r.torsion_is_zn_chi) : Json(nullptr);
    return j;
}

bool looks_like_graph(const Json& j) {
    return j.is_object() && j.contains("vertices") && j.contains("edges");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
    }
}

}  // namespace mfb
