#ifndef SOLVENCY_ORACLE_HPP
#define SOLVENCY_ORACLE_HPP

#include "solvency/dual_cone.hpp"
#include "solvency/prices.hpp"
#include "solvency/rational.hpp"

#include <cstdint>
#include <vector>

namespace solvency {

// Inequality description of the dual cone: each row r encodes r . y >= 0.
// Holds the d*d pair rows (coefficient pi_ij at i, -1 at j; the diagonal
// rows are identically zero) followed by the d nonnegativity rows. The
// nonnegativity rows are implied but kept for robustness and pointedness.
struct HRepresentation {
    int d = 0;
    std::vector<RatVec> rows;
};

HRepresentation h_representation(const PriceMatrix& pm);

// Exhaustive reference enumeration: every spanning tree of every bipartition,
// solved and filtered by feasibility, deduplicated canonically. Must equal
// enumerate_extreme_directions. Refuses d > 8.
ExtremeSet brute_force_extremes(const PriceMatrix& pm, std::uint64_t budget = kDefaultTreeBudget);

// Exact rational double description over the rows of h: extreme rays of
// {y : r . y >= 0 for all rows}, canonically scaled (max component 1) and
// sorted lexicographically. Adjacency of rays is decided by the tight-set
// cardinality prefilter plus an exact rank test. Refuses d > 5; the budget
// meters candidate ray pairs.
std::vector<RatVec> double_description_extremes(const HRepresentation& h,
                                                std::uint64_t budget = kDefaultTreeBudget);

// Three independent extremality verdicts for y in the dual cone:
//   extreme_test   dual_cone is_extreme (greedy basis of tight rows),
//   rank_test      full tight-matrix rank equals d-1,
//   spanning_test  the undirected tight graph connects all d vertices.
struct RankCertificate {
    bool extreme_test = false;
    bool rank_test = false;
    bool spanning_test = false;

    bool agree() const { return extreme_test == rank_test && rank_test == spanning_test; }
};

RankCertificate rank_certificate(const PriceMatrix& pm, const RatVec& y);

// The common verdict; throws InternalError if the three tests disagree.
bool rank_certificate_check(const PriceMatrix& pm, const RatVec& y);

} // namespace solvency

#endif // SOLVENCY_ORACLE_HPP
