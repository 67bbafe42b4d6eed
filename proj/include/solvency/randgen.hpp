#ifndef SOLVENCY_RANDGEN_HPP
#define SOLVENCY_RANDGEN_HPP

#include "solvency/bipartite.hpp"
#include "solvency/prices.hpp"
#include "solvency/rational.hpp"

#include <cstdint>
#include <random>

namespace solvency {

// Deterministic random source. mt19937_64 has a standardized output sequence
// and the integer draws below avoid std::uniform_int_distribution, whose
// mapping is implementation-defined; identical seeds therefore reproduce
// identical draws on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, n) by rejection sampling; n >= 1.
    std::uint64_t below(std::uint64_t n);

    // Uniform in [lo, hi], inclusive.
    long range(long lo, long hi);

private:
    std::mt19937_64 engine_;
};

// Valid price matrix drawn as pi_ij = (s_j / s_i) * g_ij from random positive
// scales s and random friction factors g >= 1 closed under the multiplicative
// triangle inequality (min-product closure). Every matrix of the valid class
// arises this way; closure ties make non-strict triangles and degenerate
// pairs (pi_ij * pi_ji = 1) appear regularly, which is intentional.
PriceMatrix random_price_matrix(Rng& rng, int d);

// Connected bipartite digraph with at most max_arcs arcs (including the
// spanning tree it is grown from) and no isolated vertices.
BipartiteDigraph random_connected_bipartite(Rng& rng, int max_arcs = 12);

// Rational components with numerators in [-9, 9] and denominators in [1, 5].
RatVec random_portfolio(Rng& rng, int d);

// Quote with a strict spread at every asset.
BidAskQuote random_strict_quote(Rng& rng, int d);

} // namespace solvency

#endif // SOLVENCY_RANDGEN_HPP
