#ifndef SOLVENCY_EXTRACT_HPP
#define SOLVENCY_EXTRACT_HPP

#include "solvency/bipartite.hpp"
#include "solvency/dual_cone.hpp"
#include "solvency/prices.hpp"

namespace solvency {

// Output of the configuration-driven extraction: the canonical feasible tree
// solution realizing the requested degree sequence, a tree that realizes it,
// and the degree sequence materialized on the opposite side.
struct ExtractionResult {
    DualDirection y;
    SpanningTree tree;
    Configuration given;
    Configuration complement;
};

// Finds the feasible tree solution whose tree has P-side degrees c (aligned
// with the sorted P list; positive integers summing to d-1).
//
// Recursive scheme: with a single long asset the star solution is immediate;
// otherwise the assets contributing one arc are peeled off, the reduced
// problem solved, and each peeled asset i reattached through the cheapest
// target arg max_j y_j / pi_ij (ties to the smallest index). When no asset
// contributes exactly one arc, the N-side configurations are swept in
// lexicographic order through the mirror routine until the requested c
// reappears.
ExtractionResult extract_with_p_config(const PriceMatrix& pm, const Bipartition& bp,
                                       const std::vector<int>& c);

// Mirror image: b prescribes the N-side degrees; peeled short assets attach
// through arg min_i pi_ij * y_i.
ExtractionResult extract_with_n_config(const PriceMatrix& pm, const Bipartition& bp,
                                       const std::vector<int>& b);

} // namespace solvency

#endif // SOLVENCY_EXTRACT_HPP
