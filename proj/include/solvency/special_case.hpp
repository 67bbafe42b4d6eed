#ifndef SOLVENCY_SPECIAL_CASE_HPP
#define SOLVENCY_SPECIAL_CASE_HPP

#include "solvency/bipartite.hpp"
#include "solvency/prices.hpp"
#include "solvency/rational.hpp"

#include <vector>

namespace solvency {

// Columns generate the dual cone of the bid-ask market pi_ij = ask_j / bid_i.
// With a strict spread everywhere each column is an extreme direction and no
// two columns are proportional.
struct GeneratorMatrix {
    int d = 0;
    std::vector<RatVec> columns;
};

// The closed-form generator of one bipartition: y_i = bid_i for i in P,
// y_j = ask_j for j in N. Unscaled.
RatVec bid_ask_generator_for(const BidAskQuote& q, const Bipartition& bp);

// All 2^d - 2 generators in the recursive block order
//   Y_2 = [ a_1 b_1 ; b_2 a_2 ],
//   Y_d = [ Y_{d-1}  b-col | Y_{d-1}  a-col ]
// where the left block sits over a row of a_d and the right block over b_d.
GeneratorMatrix bid_ask_generators(const BidAskQuote& q);

// Order-free view: canonically scaled columns, deduplicated (first occurrence
// wins), sorted lexicographically.
std::vector<RatVec> canonical_columns(const GeneratorMatrix& m);

// sum_{i in P} bid_i x_i + sum_{j in N} ask_j x_j >= 0 for every bipartition
// (P, N); equivalent to membership of x in the solvency cone of the bid-ask
// market.
bool halfspace_test(const BidAskQuote& q, const RatVec& x);

// Generators when bid_k = ask_k: one column per subset Q of V \ {k}, with
// y = bid on Q and y = ask elsewhere (asset k sits at its common value).
// Subsets are visited by binary counting, bit t of the counter standing for
// the t-th smallest vertex of V \ {k}; this reproduces the recursive block
// construction. Exact duplicates caused by further bid/ask equalities are
// deleted, keeping the first occurrence.
GeneratorMatrix degenerate_generators(const BidAskQuote& q, int k);

// The 2(d-1) primal generators through k when bid_k = ask_k: first
// ask_k e^i - bid_i e^k for i != k ascending, then ask_j e^k - bid_k e^j for
// j != k ascending. Every omitted generator pi_ij e^i - e^j (i, j != k) is
// verified to split into the two-term combination through k before returning.
std::vector<RatVec> reduced_primal_generators(const BidAskQuote& q, int k);

} // namespace solvency

#endif // SOLVENCY_SPECIAL_CASE_HPP
