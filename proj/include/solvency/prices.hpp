#ifndef SOLVENCY_PRICES_HPP
#define SOLVENCY_PRICES_HPP

#include "solvency/errors.hpp"
#include "solvency/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace solvency {

// Raw square matrix of rationals. Shape is validated by the consumers; the
// entries carry no axioms until PriceMatrix::checked accepts them.
using RatMatrix = std::vector<RatVec>;

struct IndexTriple {
    int i = 0, j = 0, k = 0; // 0-based
    bool operator==(const IndexTriple&) const = default;
};

// Result of checking the price-matrix axioms:
//   (1) unit diagonal, (2) positivity, (3) triangle inequality
//   pi_ij <= pi_ik * pi_kj, (4) some triple strict, and the strict regime
//   (5) where every triple with k outside {i,j} is strict.
// Witnesses are the first hits in lexicographic (i,j,k) scan order.
struct AxiomReport {
    bool holds_1 = true;
    bool holds_2 = true;
    bool holds_3 = true;
    bool holds_4 = false;
    bool holds_5_strict = false;

    std::optional<int> violation_1;                  // i with pi_ii != 1
    std::optional<std::pair<int, int>> violation_2;  // (i,j) with pi_ij <= 0
    std::optional<IndexTriple> violation_3;          // pi_ij > pi_ik * pi_kj
    std::optional<IndexTriple> witness_4;            // strict triple
    std::optional<IndexTriple> violation_5;          // k not in {i,j}, non-strict

    bool market_valid() const { return holds_1 && holds_2 && holds_3 && holds_4; }
};

// Pure; deterministic witness choice. Throws InputError for a non-square or
// smaller-than-2x2 matrix (malformed data, as opposed to failed axioms).
AxiomReport validate_axioms(const RatMatrix& pi);

class AxiomError : public std::runtime_error {
public:
    AxiomError(std::string what, AxiomReport report)
        : std::runtime_error(std::move(what)), report(std::move(report)) {}
    AxiomReport report;
};

// A matrix of exchange rates that passed axioms (1)-(4). Indices 0-based.
class PriceMatrix {
public:
    // Throws AxiomError (carrying the report) if (1)-(4) do not all hold; a
    // frictionless matrix (Eq. (4) fails) is refused here by design.
    static PriceMatrix checked(RatMatrix pi);

    int dim() const { return d_; }
    const Rat& price(int i, int j) const { return pi_[i][j]; }
    const RatMatrix& entries() const { return pi_; }
    bool strict_triangle() const { return strict_triangle_; } // Eq. (5)

private:
    PriceMatrix(RatMatrix pi, bool strict) : pi_(std::move(pi)), d_(static_cast<int>(pi_.size())), strict_triangle_(strict) {}

    RatMatrix pi_;
    int d_;
    bool strict_triangle_;
};

// One bid/ask pair per asset, in units of a common numeraire.
struct BidAskQuote {
    RatVec ask;
    RatVec bid;

    // Validates 0 < bid_i <= ask_i for all i and bid_k < ask_k for some k.
    BidAskQuote(RatVec ask_in, RatVec bid_in);

    int dim() const { return static_cast<int>(ask.size()); }
    bool strict_spread() const;              // bid_i < ask_i for every i
    std::vector<int> equal_indices() const;  // all k with bid_k == ask_k
};

// pi_ij = ask_j / bid_i (diagonal forced to 1).
PriceMatrix from_bid_ask(const BidAskQuote& q);

// Fills the off-diagonal entries row-wise with consecutive primes starting at
// `start` (itself required prime). Rejects the (d, start) pair with
// ConstructionError unless min_entry^2 > max_entry, which forces the strict
// triangle regime.
PriceMatrix prime_matrix(int d, const Int& start);

} // namespace solvency

#endif // SOLVENCY_PRICES_HPP
