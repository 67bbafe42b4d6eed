#ifndef SOLVENCY_DUAL_CONE_HPP
#define SOLVENCY_DUAL_CONE_HPP

#include "solvency/bipartite.hpp"
#include "solvency/prices.hpp"
#include "solvency/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace solvency {

// Strictly positive direction, canonically scaled so max component = 1.
struct DualDirection {
    RatVec y;
    bool canonical = false;
};

DualDirection make_canonical(const RatVec& y);

// Solves the tree equations pi_ij * y_i = y_j along the tree arcs and returns
// the canonically scaled solution. The root only seeds the propagation; the
// canonical result is root-independent. Pass root = -1 for the default
// (smallest vertex).
DualDirection generate_from_tree(const PriceMatrix& pm, const Bipartition& bp,
                                 const SpanningTree& tree, int root = -1);

// Does y > 0 satisfy pi_ij * y_i >= y_j on every arc of P x N?
bool is_feasible(const PriceMatrix& pm, const Bipartition& bp, const RatVec& y);

// Membership in the dual cone: pi_ij * y_i >= y_j for every ordered pair.
bool in_dual_cone(const PriceMatrix& pm, const RatVec& y);

// Arcs of P x N where the feasibility inequality is tight. Requires y feasible.
BipartiteDigraph tight_graph(const PriceMatrix& pm, const Bipartition& bp, const RatVec& y);

// Extreme direction test: y in the cone, nonzero, and the tight constraint
// vectors pi_ij e^i - e^j over ALL ordered pairs span a (d-1)-dimensional
// space. tight_basis lists a maximal independent tight pair set (the
// certificate), chosen greedily in lexicographic pair order.
struct ExtremeCertificate {
    bool extreme = false;
    std::vector<std::pair<int, int>> tight_basis;
};

ExtremeCertificate is_extreme(const PriceMatrix& pm, const RatVec& y);

// One extreme direction with its provenance: the first bipartition (canonical
// order) and first spanning tree (lexicographic order) that generate it, plus
// the degree-sequence sets of its tight graph.
struct ExtremeDirection {
    RatVec y; // canonical
    Bipartition bp;
    SpanningTree tree;
    ConfigSet p_configs;
    ConfigSet n_configs;
};

struct ExtremeSet {
    int d = 0;
    std::vector<ExtremeDirection> directions;
};

enum class EnumerationStrategy {
    Auto,        // Trees for d <= 8, Algorithmic beyond
    Trees,       // every spanning tree of every bipartition (complete)
    Algorithmic, // one extraction call per configuration per bipartition
};

struct EnumerateOptions {
    EnumerationStrategy strategy = EnumerationStrategy::Auto;
    std::uint64_t budget = kDefaultTreeBudget;
    int threads = 1;
};

// All extreme directions of the dual cone, deduplicated up to scaling and
// sorted by (|P|, P lexicographic, canonical y lexicographic).
ExtremeSet enumerate_extreme_directions(const PriceMatrix& pm, const EnumerateOptions& opts = {});

// (2^d - 2, sum_p C(d-2, p-1) * C(d, p)).
std::pair<Int, Int> count_bounds(int d);

// x is solvent iff y . x >= 0 for every extreme direction.
bool is_solvent(const ExtremeSet& extremes, const RatVec& x);

// Per-direction dot products, for reporting violated/tight facets.
struct FacetCheck {
    std::size_t index;
    Rat value;
};
std::vector<FacetCheck> facet_values(const ExtremeSet& extremes, const RatVec& x);

// Exchange plans for liquidating x: the bipartition induced by the signs of x
// (zeros count as long positions) together with every feasible tree solution
// for it, each with a representative tree and its contribution scheme.
struct TradePlanEntry {
    RatVec y; // canonical
    SpanningTree tree;
    std::vector<int> contribution; // deg of the representative tree on P
    ConfigSet p_configs;
    ConfigSet n_configs;
};

struct TradePlan {
    Bipartition bp;
    bool solvent = false;
    std::vector<TradePlanEntry> solutions; // sorted by canonical y
};

TradePlan trade_plan(const PriceMatrix& pm, const ExtremeSet& extremes, const RatVec& x,
                     std::uint64_t budget = kDefaultTreeBudget);

// Degree-sequence sets of the tight graph of a feasible tree solution.
std::pair<ConfigSet, ConfigSet> config_sets(const PriceMatrix& pm, const Bipartition& bp,
                                            const RatVec& y, std::uint64_t budget = kDefaultTreeBudget);

} // namespace solvency

#endif // SOLVENCY_DUAL_CONE_HPP
