#include "solvency/cli.hpp"

#include "solvency/bipartite.hpp"
#include "solvency/dual_cone.hpp"
#include "solvency/errors.hpp"
#include "solvency/extract.hpp"
#include "solvency/io.hpp"
#include "solvency/oracle.hpp"
#include "solvency/prices.hpp"
#include "solvency/randgen.hpp"
#include "solvency/special_case.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace solvency::cli {

namespace {

using io::Json;

struct GlobalOpts {
    std::string format = "json"; // json | csv | pretty
    std::string output;          // empty means stdout
};

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

void emit(const GlobalOpts& g, std::ostream& out, const std::string& text) {
    if (g.output.empty()) {
        out << text;
    } else {
        io::write_file(g.output, text);
    }
}

[[noreturn]] void reject_csv(const std::string& cmd) {
    throw InputError("--format csv is not supported for " + cmd);
}

std::uint64_t env_default_budget() {
    const char* env = std::getenv("SOLVENCY_BUDGET");
    if (env == nullptr) return kDefaultTreeBudget;
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(env, &pos);
        if (pos != std::string(env).size() || v == 0) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("SOLVENCY_BUDGET must be a positive integer, got \"") + env + "\"");
    }
}

EnumerationStrategy strategy_from(const std::string& name) {
    if (name == "auto") return EnumerationStrategy::Auto;
    if (name == "trees") return EnumerationStrategy::Trees;
    return EnumerationStrategy::Algorithmic;
}

std::string fmt_indices(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i] + 1);
    }
    return s + "}";
}

std::string fmt_int_vec(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string fmt_config_set(const ConfigSet& cs) {
    std::string s = "{";
    bool first = true;
    for (const std::vector<int>& c : cs) {
        if (!first) s += ", ";
        first = false;
        s += fmt_int_vec(c);
    }
    return s + "}";
}

std::string fmt_arcs(const std::vector<Arc>& arcs) {
    std::string s;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(arcs[i].first + 1) + "->" + std::to_string(arcs[i].second + 1);
    }
    return s;
}

std::string fmt_rat_vec(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_to_string(v[i]);
    }
    return s + ")";
}

std::string pretty_matrix(const RatMatrix& m) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(m.size(), 0);
    for (const RatVec& row : m) {
        std::vector<std::string> r;
        for (std::size_t j = 0; j < row.size(); ++j) {
            r.push_back(rat_to_string(row[j]));
            width[j] = std::max(width[j], r.back().size());
        }
        cells.push_back(std::move(r));
    }
    std::ostringstream out;
    for (const auto& r : cells) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) out << "  ";
            out << std::string(width[j] - r[j].size(), ' ') << r[j];
        }
        out << '\n';
    }
    return out.str();
}

std::string pretty_report(const AxiomReport& r) {
    std::ostringstream out;
    auto line = [&](const char* name, bool ok, const std::string& detail) {
        out << name << ": " << (ok ? "ok" : "FAIL") << detail << '\n';
    };
    auto triple = [](const std::optional<IndexTriple>& t) {
        return t ? "  (i,j,k) = (" + std::to_string(t->i + 1) + "," + std::to_string(t->j + 1) + "," +
                       std::to_string(t->k + 1) + ")"
                 : std::string{};
    };
    line("(1) unit diagonal     ", r.holds_1,
         r.violation_1 ? "  at asset " + std::to_string(*r.violation_1 + 1) : "");
    line("(2) positive rates    ", r.holds_2,
         r.violation_2 ? "  at (" + std::to_string(r.violation_2->first + 1) + "," +
                             std::to_string(r.violation_2->second + 1) + ")"
                       : "");
    line("(3) triangle          ", r.holds_3, triple(r.violation_3));
    line("(4) some strict triple", r.holds_4, r.witness_4 ? triple(r.witness_4) : "");
    out << "(5) strict everywhere : " << (r.holds_5_strict ? "yes" : "no")
        << (r.violation_5 ? triple(r.violation_5) : "") << '\n';
    out << "market valid: " << (r.market_valid() ? "yes" : "no") << '\n';
    return out.str();
}

std::string pretty_direction(std::size_t idx, const ExtremeDirection& dir) {
    std::ostringstream out;
    out << "#" << (idx + 1) << "  P=" << fmt_indices(dir.bp.p()) << " N=" << fmt_indices(dir.bp.n())
        << '\n';
    out << "    y = (";
    for (std::size_t i = 0; i < dir.y.size(); ++i) {
        if (i) out << ", ";
        out << io::pretty_rat(dir.y[i]);
    }
    out << ")\n";
    out << "    tree: " << fmt_arcs(dir.tree.arcs) << '\n';
    out << "    P-configs: " << fmt_config_set(dir.p_configs)
        << "  N-configs: " << fmt_config_set(dir.n_configs) << '\n';
    return out.str();
}

std::string pretty_extreme_set(const ExtremeSet& es) {
    std::ostringstream out;
    out << es.directions.size() << " extreme direction" << (es.directions.size() == 1 ? "" : "s")
        << " (d = " << es.d << ")\n";
    for (std::size_t i = 0; i < es.directions.size(); ++i) out << pretty_direction(i, es.directions[i]);
    return out.str();
}

std::string csv_extreme_set(const ExtremeSet& es) {
    std::ostringstream out;
    for (const ExtremeDirection& dir : es.directions) {
        for (std::size_t i = 0; i < dir.y.size(); ++i) {
            if (i) out << ',';
            out << rat_to_string(dir.y[i]);
        }
        out << '\n';
    }
    return out.str();
}

bool same_y_sequence(const ExtremeSet& a, const ExtremeSet& b) {
    if (a.directions.size() != b.directions.size()) return false;
    for (std::size_t i = 0; i < a.directions.size(); ++i) {
        if (a.directions[i].y != b.directions[i].y) return false;
    }
    return true;
}

struct Lemma4Row {
    int index = 0;
    int p = 0;
    int n = 0;
    int arcs = 0;
    std::uint64_t left = 0;
    std::uint64_t right = 0;
    bool equal = false;
    bool draconian = false;
};

PriceMatrix load_price_matrix(const std::string& path) {
    return PriceMatrix::checked(io::load_matrix(path));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    int rc = 0;
    GlobalOpts global;

    CLI::App app{"Exact toolkit for solvency cones of exchange markets with proportional transaction costs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    app.add_option("--output", global.output, "Write output to a file instead of stdout");

    std::uint64_t default_budget = kDefaultTreeBudget;
    try {
        default_budget = env_default_budget();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    // validate ------------------------------------------------------------
    struct {
        std::string path;
    } vopt;
    CLI::App* validate = app.add_subcommand("validate", "Check the exchange-rate axioms of a matrix file");
    validate->add_option("matrix", vopt.path, "Matrix file (JSON or CSV)")->required();
    validate->callback([&] {
        const RatMatrix m = io::load_matrix(vopt.path);
        const AxiomReport r = validate_axioms(m);
        if (global.format == "csv") reject_csv("validate");
        emit(global, out, global.format == "json" ? json_text(io::axiom_report_to_json(r)) : pretty_report(r));
        if (!r.market_valid()) rc = 1;
    });

    // gen -----------------------------------------------------------------
    CLI::App* gen = app.add_subcommand("gen", "Generate a price matrix file");
    gen->require_subcommand(1);
    struct {
        int d = 0;
        std::string start = "2";
    } gp;
    CLI::App* gen_prime = gen->add_subcommand("prime", "Rows filled with consecutive primes");
    gen_prime->add_option("--d", gp.d, "Dimension")->required();
    gen_prime->add_option("--start", gp.start, "First prime")->required();
    gen_prime->callback([&] {
        Int start;
        try {
            start = Int(gp.start);
        } catch (const std::invalid_argument&) {
            throw ParseError("--start must be an integer, got \"" + gp.start + "\"");
        }
        const PriceMatrix pm = prime_matrix(gp.d, start);
        if (global.format == "csv") {
            emit(global, out, io::matrix_to_csv(pm.entries()));
        } else if (global.format == "pretty") {
            emit(global, out, pretty_matrix(pm.entries()));
        } else {
            emit(global, out, json_text(io::matrix_to_json(pm.entries())));
        }
    });
    struct {
        std::string a, b;
    } gb;
    CLI::App* gen_bidask = gen->add_subcommand("bidask", "Bid-ask market pi_ij = ask_j / bid_i");
    gen_bidask->add_option("--a", gb.a, "Ask prices, comma-separated rationals")->required();
    gen_bidask->add_option("--b", gb.b, "Bid prices, comma-separated rationals")->required();
    gen_bidask->callback([&] {
        const BidAskQuote q(io::parse_rational_list(gb.a), io::parse_rational_list(gb.b));
        const PriceMatrix pm = from_bid_ask(q);
        if (global.format == "csv") {
            emit(global, out, io::matrix_to_csv(pm.entries()));
        } else if (global.format == "pretty") {
            emit(global, out, pretty_matrix(pm.entries()));
        } else {
            emit(global, out, json_text(io::matrix_to_json(pm.entries())));
        }
    });

    // extract ---------------------------------------------------------------
    struct {
        std::string path, p, config, side = "P";
    } xopt;
    CLI::App* extract = app.add_subcommand(
        "extract", "Find the feasible tree solution realizing a degree configuration");
    extract->add_option("matrix", xopt.path, "Matrix file")->required();
    extract->add_option("--p", xopt.p, "1-based long-side asset list, e.g. 5,6,7")->required();
    extract->add_option("--config", xopt.config, "Degree configuration, e.g. 3,2,4")->required();
    extract->add_option("--side", xopt.side, "Side the configuration belongs to")
        ->check(CLI::IsMember({"P", "N"}))
        ->capture_default_str();
    extract->callback([&] {
        const PriceMatrix pm = load_price_matrix(xopt.path);
        const Bipartition bp = Bipartition::from_p(io::parse_index_list(xopt.p), pm.dim());
        const std::vector<int> config = io::parse_int_list(xopt.config);
        const ExtractionResult res = xopt.side == "P" ? extract_with_p_config(pm, bp, config)
                                                      : extract_with_n_config(pm, bp, config);
        if (global.format == "csv") reject_csv("extract");
        if (global.format == "pretty") {
            std::ostringstream o;
            o << "P=" << fmt_indices(bp.p()) << " N=" << fmt_indices(bp.n()) << '\n';
            o << "y = (";
            for (std::size_t i = 0; i < res.y.y.size(); ++i) {
                if (i) o << ", ";
                o << io::pretty_rat(res.y.y[i]);
            }
            o << ")\ntree: " << fmt_arcs(res.tree.arcs) << '\n';
            const bool given_p = res.given.side == Side::P;
            o << "P-config: " << fmt_int_vec(given_p ? res.given.values : res.complement.values)
              << "  N-config: " << fmt_int_vec(given_p ? res.complement.values : res.given.values)
              << '\n';
            emit(global, out, o.str());
        } else {
            emit(global, out, json_text(io::extraction_to_json(bp, res)));
        }
    });

    // enumerate -------------------------------------------------------------
    struct {
        std::string path;
        std::string strategy = "auto";
        std::string oracle = "none";
        std::uint64_t budget;
        int threads = 1;
    } eopt;
    eopt.budget = default_budget;
    CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate all extreme directions of the dual cone");
    enumerate->add_option("matrix", eopt.path, "Matrix file")->required();
    enumerate->add_option("--strategy", eopt.strategy, "Enumeration strategy")
        ->check(CLI::IsMember({"auto", "trees", "algorithmic"}))
        ->capture_default_str();
    enumerate->add_option("--oracle", eopt.oracle, "Cross-check the result against an oracle")
        ->check(CLI::IsMember({"none", "tree", "dd"}))
        ->capture_default_str();
    enumerate->add_option("--budget", eopt.budget, "Work budget (trees visited)");
    enumerate->add_option("--threads", eopt.threads, "Worker threads");
    enumerate->callback([&] {
        const PriceMatrix pm = load_price_matrix(eopt.path);
        EnumerateOptions opts;
        opts.strategy = strategy_from(eopt.strategy);
        opts.budget = eopt.budget;
        opts.threads = eopt.threads;
        const ExtremeSet es = enumerate_extreme_directions(pm, opts);

        bool agrees = true;
        if (eopt.oracle == "tree") {
            agrees = same_y_sequence(es, brute_force_extremes(pm, eopt.budget));
        } else if (eopt.oracle == "dd") {
            const std::vector<RatVec> rays =
                double_description_extremes(h_representation(pm), eopt.budget);
            std::vector<RatVec> mine;
            for (const ExtremeDirection& dir : es.directions) mine.push_back(dir.y);
            std::sort(mine.begin(), mine.end(), RatVecLess{});
            agrees = mine == rays;
        }

        if (global.format == "csv") {
            emit(global, out, csv_extreme_set(es));
        } else if (global.format == "pretty") {
            std::ostringstream o;
            o << pretty_extreme_set(es);
            if (eopt.oracle != "none") {
                o << "oracle (" << eopt.oracle << "): " << (agrees ? "agrees" : "DISAGREES") << '\n';
            }
            emit(global, out, o.str());
        } else if (eopt.oracle == "none") {
            emit(global, out, json_text(io::extreme_set_to_json(es)));
        } else {
            emit(global, out, json_text(Json{{"count", es.directions.size()},
                                             {"directions", io::extreme_set_to_json(es)},
                                             {"oracle", eopt.oracle},
                                             {"oracle_agrees", agrees}}));
        }
        if (!agrees) rc = 1;
    });

    // count -------------------------------------------------------------------
    struct {
        std::string path;
        int d = 0;
        std::string strategy = "auto";
        std::uint64_t budget;
        int threads = 1;
    } copt;
    copt.budget = default_budget;
    CLI::App* count = app.add_subcommand("count", "Extreme-direction count bounds (and exact count for a matrix)");
    count->add_option("matrix", copt.path, "Matrix file (optional; enables the exact count)");
    count->add_option("--d", copt.d, "Dimension for bounds only");
    count->add_option("--strategy", copt.strategy, "Enumeration strategy")
        ->check(CLI::IsMember({"auto", "trees", "algorithmic"}));
    count->add_option("--budget", copt.budget, "Work budget");
    count->add_option("--threads", copt.threads, "Worker threads");
    count->callback([&] {
        const bool have_file = !copt.path.empty();
        const bool have_d = copt.d != 0;
        if (have_file == have_d) {
            throw ParseError("count needs exactly one of a matrix file or --d");
        }
        int d = copt.d;
        std::size_t exact = 0;
        if (have_file) {
            const PriceMatrix pm = load_price_matrix(copt.path);
            d = pm.dim();
            EnumerateOptions opts;
            opts.strategy = strategy_from(copt.strategy);
            opts.budget = copt.budget;
            opts.threads = copt.threads;
            exact = enumerate_extreme_directions(pm, opts).directions.size();
        }
        const auto [lower, upper] = count_bounds(d);
        if (global.format == "csv") {
            std::string line = std::to_string(d) + "," + lower.get_str() + "," + upper.get_str();
            if (have_file) line += "," + std::to_string(exact);
            emit(global, out, line + "\n");
        } else if (global.format == "pretty") {
            std::ostringstream o;
            o << "d = " << d << '\n'
              << "lower bound  " << lower.get_str() << '\n'
              << "upper bound  " << upper.get_str() << '\n';
            if (have_file) o << "exact count  " << exact << '\n';
            emit(global, out, o.str());
        } else {
            Json j{{"d", d}, {"lower", lower.get_str()}, {"upper", upper.get_str()}};
            if (have_file) j["exact"] = exact;
            emit(global, out, json_text(j));
        }
    });

    // solvent -------------------------------------------------------------
    struct {
        std::string path, x;
        std::string strategy = "auto";
        std::uint64_t budget;
        int threads = 1;
        bool strict = false;
    } sopt;
    sopt.budget = default_budget;
    CLI::App* solvent = app.add_subcommand("solvent", "Decide solvency of a portfolio");
    solvent->add_option("matrix", sopt.path, "Matrix file")->required();
    solvent->add_option("--x", sopt.x, "Portfolio, comma-separated rationals")->required();
    solvent->add_option("--strategy", sopt.strategy, "Enumeration strategy")
        ->check(CLI::IsMember({"auto", "trees", "algorithmic"}));
    solvent->add_option("--budget", sopt.budget, "Work budget");
    solvent->add_option("--threads", sopt.threads, "Worker threads");
    solvent->add_flag("--strict", sopt.strict, "Exit 1 when the portfolio is insolvent");
    solvent->callback([&] {
        const PriceMatrix pm = load_price_matrix(sopt.path);
        const RatVec x = io::parse_rational_list(sopt.x);
        EnumerateOptions opts;
        opts.strategy = strategy_from(sopt.strategy);
        opts.budget = sopt.budget;
        opts.threads = sopt.threads;
        const ExtremeSet es = enumerate_extreme_directions(pm, opts);
        const std::vector<FacetCheck> checks = facet_values(es, x);
        bool ok = true;
        Json violated = Json::array();
        Json tight = Json::array();
        for (const FacetCheck& c : checks) {
            if (c.value < 0) {
                ok = false;
                violated.push_back(Json{{"index", c.index + 1}, {"value", rat_to_string(c.value)}});
            } else if (c.value == 0) {
                tight.push_back(c.index + 1);
            }
        }
        if (global.format == "csv") reject_csv("solvent");
        if (global.format == "pretty") {
            std::ostringstream o;
            o << "portfolio " << fmt_rat_vec(x) << " is " << (ok ? "solvent" : "NOT solvent") << '\n';
            o << "facets checked: " << checks.size() << ", violated: " << violated.size()
              << ", tight: " << tight.size() << '\n';
            for (const Json& v : violated) {
                const std::size_t idx = v["index"].get<std::size_t>() - 1;
                o << "  violated by direction #" << (idx + 1) << "  y = "
                  << fmt_rat_vec(es.directions[idx].y) << "  (value "
                  << v["value"].get<std::string>() << ")\n";
            }
            emit(global, out, o.str());
        } else {
            emit(global, out, json_text(Json{{"solvent", ok},
                                             {"checked", checks.size()},
                                             {"violated", violated},
                                             {"tight", tight}}));
        }
        if (!ok && sopt.strict) rc = 1;
    });

    // tradeplan -----------------------------------------------------------
    struct {
        std::string path, x;
        std::string strategy = "auto";
        std::uint64_t budget;
        int threads = 1;
    } topt;
    topt.budget = default_budget;
    CLI::App* tradeplan = app.add_subcommand("tradeplan", "Exchange plans for liquidating a portfolio");
    tradeplan->add_option("matrix", topt.path, "Matrix file")->required();
    tradeplan->add_option("--x", topt.x, "Portfolio, comma-separated rationals")->required();
    tradeplan->add_option("--strategy", topt.strategy, "Enumeration strategy")
        ->check(CLI::IsMember({"auto", "trees", "algorithmic"}));
    tradeplan->add_option("--budget", topt.budget, "Work budget");
    tradeplan->add_option("--threads", topt.threads, "Worker threads");
    tradeplan->callback([&] {
        const PriceMatrix pm = load_price_matrix(topt.path);
        const RatVec x = io::parse_rational_list(topt.x);
        EnumerateOptions opts;
        opts.strategy = strategy_from(topt.strategy);
        opts.budget = topt.budget;
        opts.threads = topt.threads;
        const ExtremeSet es = enumerate_extreme_directions(pm, opts);
        const TradePlan plan = trade_plan(pm, es, x, topt.budget);
        if (global.format == "csv") reject_csv("tradeplan");
        if (global.format == "pretty") {
            std::ostringstream o;
            o << "portfolio " << fmt_rat_vec(x) << " is " << (plan.solvent ? "solvent" : "NOT solvent")
              << '\n';
            o << "sign bipartition: P=" << fmt_indices(plan.bp.p()) << " N=" << fmt_indices(plan.bp.n())
              << '\n';
            o << plan.solutions.size() << " candidate tree solution"
              << (plan.solutions.size() == 1 ? "" : "s") << '\n';
            for (std::size_t i = 0; i < plan.solutions.size(); ++i) {
                const TradePlanEntry& e = plan.solutions[i];
                o << "#" << (i + 1) << "  y = (";
                for (std::size_t t = 0; t < e.y.size(); ++t) {
                    if (t) o << ", ";
                    o << io::pretty_rat(e.y[t]);
                }
                o << ")\n    tree: " << fmt_arcs(e.tree.arcs)
                  << "\n    contribution on P: " << fmt_int_vec(e.contribution)
                  << "\n    P-configs: " << fmt_config_set(e.p_configs)
                  << "  N-configs: " << fmt_config_set(e.n_configs) << '\n';
            }
            emit(global, out, o.str());
        } else {
            emit(global, out, json_text(io::trade_plan_to_json(plan)));
        }
    });

    // lemma4 --------------------------------------------------------------
    struct {
        std::string path;
        int random = 0;
        int max_arcs = 12;
        std::uint64_t seed = 1;
        std::uint64_t budget;
    } lopt;
    lopt.budget = default_budget;
    CLI::App* lemma4 = app.add_subcommand(
        "lemma4", "Left/right degree-sequence-set cardinalities over all spanning trees");
    lemma4->add_option("graph", lopt.path, "Graph file {\"P\",\"N\",\"arcs\"}");
    lemma4->add_option("--random", lopt.random, "Number of random connected bipartite graphs");
    lemma4->add_option("--max-arcs", lopt.max_arcs, "Arc cap for random graphs")->capture_default_str();
    lemma4->add_option("--seed", lopt.seed, "Random seed (recorded in the output)")->capture_default_str();
    lemma4->add_option("--budget", lopt.budget, "Work budget");
    lemma4->callback([&] {
        const bool have_file = !lopt.path.empty();
        const bool have_random = lopt.random > 0;
        if (have_file == have_random) {
            throw ParseError("lemma4 needs exactly one of a graph file or --random N");
        }
        std::vector<BipartiteDigraph> graphs;
        if (have_file) {
            Json j;
            try {
                j = Json::parse(io::read_file(lopt.path));
            } catch (const Json::parse_error& e) {
                throw ParseError(std::string("invalid JSON: ") + e.what());
            }
            graphs.push_back(io::graph_from_json(j));
            if (!graphs.back().connected()) throw InputError("graph is not connected");
        } else {
            Rng rng(lopt.seed);
            for (int i = 0; i < lopt.random; ++i) {
                graphs.push_back(random_connected_bipartite(rng, lopt.max_arcs));
            }
        }

        std::vector<Lemma4Row> rows;
        bool all_ok = true;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const BipartiteDigraph& g = graphs[i];
            const auto [left, right] = degree_sequence_sets(g, lopt.budget);
            Lemma4Row row;
            row.index = static_cast<int>(i + 1);
            row.p = static_cast<int>(g.bp.p().size());
            row.n = static_cast<int>(g.bp.n().size());
            row.arcs = static_cast<int>(g.arcs.size());
            row.left = left.size();
            row.right = right.size();
            row.equal = left.size() == right.size();
            row.draconian = draconian_equals_degrees(g, lopt.budget);
            all_ok = all_ok && row.equal && row.draconian;
            rows.push_back(row);
        }

        if (global.format == "csv") {
            std::ostringstream o;
            o << "index,p,n,arcs,left,right,equal,draconian\n";
            for (const Lemma4Row& r : rows) {
                o << r.index << ',' << r.p << ',' << r.n << ',' << r.arcs << ',' << r.left << ','
                  << r.right << ',' << (r.equal ? "true" : "false") << ','
                  << (r.draconian ? "true" : "false") << '\n';
            }
            emit(global, out, o.str());
        } else if (global.format == "pretty") {
            std::ostringstream o;
            o << "index  p  n  arcs  left  right  equal  draconian\n";
            for (const Lemma4Row& r : rows) {
                o << r.index << "  " << r.p << "  " << r.n << "  " << r.arcs << "  " << r.left << "  "
                  << r.right << "  " << (r.equal ? "yes" : "NO") << "  "
                  << (r.draconian ? "yes" : "NO") << '\n';
            }
            o << (all_ok ? "all graphs agree\n" : "MISMATCH FOUND\n");
            emit(global, out, o.str());
        } else {
            Json list = Json::array();
            for (const Lemma4Row& r : rows) {
                list.push_back(Json{{"index", r.index},
                                    {"p", r.p},
                                    {"n", r.n},
                                    {"arcs", r.arcs},
                                    {"left", r.left},
                                    {"right", r.right},
                                    {"equal", r.equal},
                                    {"draconian", r.draconian}});
            }
            Json j{{"graphs", list}, {"all_equal", all_ok}};
            if (have_random) {
                j["seed"] = lopt.seed;
                j["max_arcs"] = lopt.max_arcs;
            } else {
                j["file"] = lopt.path;
            }
            emit(global, out, json_text(j));
        }
        if (!all_ok) rc = 1;
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const AxiomError& e) {
        err << "error: " << e.what() << '\n';
        err << json_text(io::axiom_report_to_json(e.report));
        return 1;
    } catch (const ConstructionError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}

} // namespace solvency::cli
