#ifndef SOLVENCY_IO_HPP
#define SOLVENCY_IO_HPP

#include "solvency/bipartite.hpp"
#include "solvency/dual_cone.hpp"
#include "solvency/extract.hpp"
#include "solvency/prices.hpp"
#include "solvency/special_case.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

// Serialization boundary. Everything here speaks the external conventions:
// 1-based asset indices, rationals as "p/q" strings, JSON with sorted keys.
namespace solvency::io {

using Json = nlohmann::json;

// Comma-separated rationals: "5,-1,1/2".
RatVec parse_rational_list(const std::string& text);

// Comma-separated 1-based indices, converted to 0-based: "5,6,7" -> {4,5,6}.
std::vector<int> parse_index_list(const std::string& text);

// Comma-separated plain integers (configuration values, kept as-is).
std::vector<int> parse_int_list(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Matrix files: {"d": d, "pi": [["p/q", ...], ...]} or CSV with one row per
// asset and the same rational encoding. load_matrix sniffs the format by the
// first non-space character ('{' means JSON).
RatMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_csv(std::istream& in);
std::string matrix_to_csv(const RatMatrix& m);
RatMatrix load_matrix(const std::string& path);
RatMatrix matrix_from_text(const std::string& text);

Json rat_vec_to_json(const RatVec& v);
RatVec rat_vec_from_json(const Json& j);

Json axiom_report_to_json(const AxiomReport& r);

// Direction entries: {"P", "N", "tree", "y", "P_config", "N_config"} with the
// configuration sets as arrays of integer arrays. An ExtremeSet serializes as
// the bare list of its entries.
Json direction_to_json(const ExtremeDirection& dir);
Json extreme_set_to_json(const ExtremeSet& es);

Json extraction_to_json(const Bipartition& bp, const ExtractionResult& res);

Json generator_matrix_to_json(const GeneratorMatrix& m);

Json trade_plan_to_json(const TradePlan& plan);

// Graph files: {"P": [...], "N": [...], "arcs": [[i, j], ...]}, 1-based.
BipartiteDigraph graph_from_json(const Json& j);
Json graph_to_json(const BipartiteDigraph& g);

// "p/q (~ 0.75)"; the approximation is display-only.
std::string pretty_rat(const Rat& q);

} // namespace solvency::io

#endif // SOLVENCY_IO_HPP
