#ifndef SOLVENCY_RATIONAL_HPP
#define SOLVENCY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace solvency {

// All core arithmetic is exact. Rat is a canonicalized GMP rational; floating
// point appears only in display code (rat_approx).
using Rat = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rat>;

// Parses "p/q" or "p" (optional sign, base 10). Throws ParseError on anything
// else, including a zero denominator.
Rat rat_from_string(std::string_view text);

// "p" when the (canonical) denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& q);

// Display-only decimal approximation.
double rat_approx(const Rat& q);

Rat frac(long num, long den);
Rat frac(const Int& num, const Int& den);

// Divides by the maximum component so the maximum becomes exactly 1.
// Requires every component strictly positive.
RatVec canonical_scaled(const RatVec& v);

// Divides by the maximum component; requires max > 0 (components may be 0).
RatVec scaled_by_max(const RatVec& v);

// True when a = alpha * b for a single rational alpha > 0.
bool proportional(const RatVec& a, const RatVec& b);

// Lexicographic comparison; returns <0, 0, >0.
int compare_lex(const RatVec& a, const RatVec& b);

struct RatVecLess {
    bool operator()(const RatVec& a, const RatVec& b) const { return compare_lex(a, b) < 0; }
};

std::string vec_to_string(const RatVec& v);

} // namespace solvency

#endif // SOLVENCY_RATIONAL_HPP
