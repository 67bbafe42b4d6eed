#ifndef SOLVENCY_EXACTLA_HPP
#define SOLVENCY_EXACTLA_HPP

#include "solvency/rational.hpp"

#include <cstddef>
#include <vector>

namespace solvency {

// Rank of an integer matrix by fraction-free (Bareiss) elimination: every
// division is exact, so no rational arithmetic is needed.
int rank_bareiss(std::vector<std::vector<Int>> m);

// Clears denominators row by row (multiplying each row by the lcm of its
// denominators), which preserves rank and linear independence.
std::vector<std::vector<Int>> cleared_rows(const std::vector<RatVec>& rows);

// Rank of rational rows via the fraction-free route.
int rank_exact(const std::vector<RatVec>& rows);

// Greedy maximal linearly independent subset, scanning rows in order and
// reducing against an incrementally built rational echelon basis. Returns the
// chosen row indices; their count is the rank.
std::vector<std::size_t> greedy_independent_rows(const std::vector<RatVec>& rows);

} // namespace solvency

#endif // SOLVENCY_EXACTLA_HPP
