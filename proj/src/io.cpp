#include "solvency/io.hpp"

#include "solvency/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace solvency::io {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(text);
    while (std::getline(in, field, sep)) out.push_back(field);
    if (!text.empty() && text.back() == sep) out.push_back("");
    return out;
}

std::string trimmed(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

long parse_long(const std::string& text, const char* what) {
    const std::string t = trimmed(text);
    try {
        std::size_t pos = 0;
        const long v = std::stol(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected ") + what + ", got \"" + t + "\"");
    }
}

Rat rat_from_json_value(const Json& v) {
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<std::int64_t>()));
    throw ParseError("expected a rational as \"p/q\" string or integer");
}

Json config_set_to_json(const ConfigSet& cs) {
    Json out = Json::array();
    for (const std::vector<int>& c : cs) out.push_back(c);
    return out;
}

Json arcs_to_json(const std::vector<Arc>& arcs) {
    Json out = Json::array();
    for (const Arc& a : arcs) out.push_back(Json::array({a.first + 1, a.second + 1}));
    return out;
}

Json indices_to_json(const std::vector<int>& v) {
    Json out = Json::array();
    for (int x : v) out.push_back(x + 1);
    return out;
}

std::vector<int> indices_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const Json& v : j) {
        if (!v.is_number_integer()) throw ParseError(std::string(what) + " must hold integers");
        out.push_back(v.get<int>() - 1);
    }
    return out;
}

} // namespace

RatVec parse_rational_list(const std::string& text) {
    if (trimmed(text).empty()) throw ParseError("empty rational list");
    RatVec out;
    for (const std::string& f : split(text, ',')) out.push_back(rat_from_string(trimmed(f)));
    return out;
}

std::vector<int> parse_index_list(const std::string& text) {
    if (trimmed(text).empty()) throw ParseError("empty index list");
    std::vector<int> out;
    for (const std::string& f : split(text, ',')) {
        const long v = parse_long(f, "a 1-based index");
        if (v < 1) throw ParseError("indices are 1-based; got " + std::to_string(v));
        out.push_back(static_cast<int>(v - 1));
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    if (trimmed(text).empty()) throw ParseError("empty integer list");
    std::vector<int> out;
    for (const std::string& f : split(text, ',')) {
        out.push_back(static_cast<int>(parse_long(f, "an integer")));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << content;
    if (!out) throw InputError("write failed: " + path);
}

RatMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("pi")) {
        throw ParseError("matrix JSON must be an object with \"d\" and \"pi\"");
    }
    if (!j["d"].is_number_integer()) throw ParseError("\"d\" must be an integer");
    const int d = j["d"].get<int>();
    const Json& pi = j["pi"];
    if (!pi.is_array() || static_cast<int>(pi.size()) != d) {
        throw ParseError("\"pi\" must be an array of d rows");
    }
    RatMatrix m;
    for (const Json& row : pi) {
        if (!row.is_array() || static_cast<int>(row.size()) != d) {
            throw ParseError("every row of \"pi\" must have d entries");
        }
        RatVec r;
        for (const Json& v : row) r.push_back(rat_from_json_value(v));
        m.push_back(std::move(r));
    }
    return m;
}

Json matrix_to_json(const RatMatrix& m) {
    Json pi = Json::array();
    for (const RatVec& row : m) pi.push_back(rat_vec_to_json(row));
    return Json{{"d", m.size()}, {"pi", std::move(pi)}};
}

RatMatrix matrix_from_csv(std::istream& in) {
    RatMatrix m;
    std::string line;
    while (std::getline(in, line)) {
        if (trimmed(line).empty()) continue;
        RatVec row;
        for (const std::string& f : split(line, ',')) row.push_back(rat_from_string(trimmed(f)));
        m.push_back(std::move(row));
    }
    if (m.empty()) throw ParseError("empty CSV matrix");
    return m;
}

std::string matrix_to_csv(const RatMatrix& m) {
    std::ostringstream out;
    for (const RatVec& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ',';
            out << rat_to_string(row[j]);
        }
        out << '\n';
    }
    return out.str();
}

RatMatrix matrix_from_text(const std::string& text) {
    std::size_t k = 0;
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    if (k < text.size() && text[k] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        return matrix_from_json(j);
    }
    std::istringstream in(text);
    return matrix_from_csv(in);
}

RatMatrix load_matrix(const std::string& path) {
    return matrix_from_text(read_file(path));
}

Json rat_vec_to_json(const RatVec& v) {
    Json out = Json::array();
    for (const Rat& x : v) out.push_back(rat_to_string(x));
    return out;
}

RatVec rat_vec_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    RatVec out;
    for (const Json& v : j) out.push_back(rat_from_json_value(v));
    return out;
}

Json axiom_report_to_json(const AxiomReport& r) {
    auto triple = [](const std::optional<IndexTriple>& t) {
        return t ? Json(Json::array({t->i + 1, t->j + 1, t->k + 1})) : Json(nullptr);
    };
    return Json{
        {"holds_1", r.holds_1},
        {"holds_2", r.holds_2},
        {"holds_3", r.holds_3},
        {"holds_4", r.holds_4},
        {"holds_5_strict", r.holds_5_strict},
        {"valid", r.market_valid()},
        {"violation_1", r.violation_1 ? Json(*r.violation_1 + 1) : Json(nullptr)},
        {"violation_2",
         r.violation_2 ? Json(Json::array({r.violation_2->first + 1, r.violation_2->second + 1}))
                       : Json(nullptr)},
        {"violation_3", triple(r.violation_3)},
        {"witness_4", triple(r.witness_4)},
        {"violation_5", triple(r.violation_5)},
    };
}

Json direction_to_json(const ExtremeDirection& dir) {
    return Json{
        {"P", indices_to_json(dir.bp.p())},
        {"N", indices_to_json(dir.bp.n())},
        {"tree", arcs_to_json(dir.tree.arcs)},
        {"y", rat_vec_to_json(dir.y)},
        {"P_config", config_set_to_json(dir.p_configs)},
        {"N_config", config_set_to_json(dir.n_configs)},
    };
}

Json extreme_set_to_json(const ExtremeSet& es) {
    Json out = Json::array();
    for (const ExtremeDirection& dir : es.directions) out.push_back(direction_to_json(dir));
    return out;
}

Json extraction_to_json(const Bipartition& bp, const ExtractionResult& res) {
    const Configuration& pc = res.given.side == Side::P ? res.given : res.complement;
    const Configuration& nc = res.given.side == Side::N ? res.given : res.complement;
    return Json{
        {"P", indices_to_json(bp.p())},
        {"N", indices_to_json(bp.n())},
        {"tree", arcs_to_json(res.tree.arcs)},
        {"y", rat_vec_to_json(res.y.y)},
        {"P_config", pc.values},
        {"N_config", nc.values},
    };
}

Json generator_matrix_to_json(const GeneratorMatrix& m) {
    Json cols = Json::array();
    for (const RatVec& c : m.columns) cols.push_back(rat_vec_to_json(c));
    return Json{{"d", m.d}, {"columns", std::move(cols)}};
}

Json trade_plan_to_json(const TradePlan& plan) {
    Json sols = Json::array();
    for (const TradePlanEntry& e : plan.solutions) {
        sols.push_back(Json{
            {"y", rat_vec_to_json(e.y)},
            {"tree", arcs_to_json(e.tree.arcs)},
            {"contribution", e.contribution},
            {"P_config", config_set_to_json(e.p_configs)},
            {"N_config", config_set_to_json(e.n_configs)},
        });
    }
    return Json{
        {"P", indices_to_json(plan.bp.p())},
        {"N", indices_to_json(plan.bp.n())},
        {"solvent", plan.solvent},
        {"solutions", std::move(sols)},
    };
}

BipartiteDigraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("P") || !j.contains("N") || !j.contains("arcs")) {
        throw ParseError("graph JSON must be an object with \"P\", \"N\" and \"arcs\"");
    }
    Bipartition bp(indices_from_json(j["P"], "\"P\""), indices_from_json(j["N"], "\"N\""));
    if (!j["arcs"].is_array()) throw ParseError("\"arcs\" must be an array");
    std::vector<Arc> arcs;
    for (const Json& a : j["arcs"]) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer()) {
            throw ParseError("every arc must be a pair of integers");
        }
        arcs.emplace_back(a[0].get<int>() - 1, a[1].get<int>() - 1);
    }
    return BipartiteDigraph(std::move(bp), std::move(arcs));
}

Json graph_to_json(const BipartiteDigraph& g) {
    return Json{
        {"P", indices_to_json(g.bp.p())},
        {"N", indices_to_json(g.bp.n())},
        {"arcs", arcs_to_json(g.arcs)},
    };
}

std::string pretty_rat(const Rat& q) {
    std::ostringstream out;
    out << rat_to_string(q);
    if (q.get_den() != 1) out << " (~ " << rat_approx(q) << ")";
    return out.str();
}

} // namespace solvency::io
