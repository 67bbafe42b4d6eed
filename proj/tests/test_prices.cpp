#include "solvency/errors.hpp"
#include "solvency/prices.hpp"

#include <doctest.h>

using namespace solvency;

namespace {

RatMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    RatMatrix m;
    for (const auto& row : rows) {
        RatVec r;
        for (long v : row) r.push_back(Rat(v));
        m.push_back(std::move(r));
    }
    return m;
}

} // namespace

TEST_CASE("validate_axioms accepts a valid 2x2 market") {
    const AxiomReport r = validate_axioms(mat({{1, 3}, {5, 1}}));
    CHECK(r.holds_1);
    CHECK(r.holds_2);
    CHECK(r.holds_3);
    CHECK(r.holds_4);
    CHECK(r.market_valid());
    // First strict triple in scan order: pi_11 = 1 < pi_12 * pi_21 = 15.
    CHECK(r.witness_4 == IndexTriple{0, 0, 1});
    // With d = 2 no triple has k outside {i, j}; the strict regime is vacuous.
    CHECK(r.holds_5_strict);
}

TEST_CASE("validate_axioms reports a broken diagonal") {
    const AxiomReport r = validate_axioms(mat({{2, 3}, {5, 1}}));
    CHECK_FALSE(r.holds_1);
    CHECK(r.violation_1 == 0);
    CHECK_FALSE(r.market_valid());
}

TEST_CASE("validate_axioms reports non-positive entries") {
    const AxiomReport r = validate_axioms(mat({{1, -3}, {5, 1}}));
    CHECK_FALSE(r.holds_2);
    CHECK(r.violation_2 == std::make_pair(0, 1));

    const AxiomReport z = validate_axioms(mat({{1, 0}, {5, 1}}));
    CHECK_FALSE(z.holds_2);
}

TEST_CASE("validate_axioms reports a triangle violation with its triple") {
    // pi_12 = 5 > pi_13 * pi_32 = 2 * 2.
    const AxiomReport r = validate_axioms(mat({{1, 5, 2}, {1, 1, 1}, {1, 2, 1}}));
    CHECK_FALSE(r.holds_3);
    CHECK(r.violation_3 == IndexTriple{0, 1, 2});
    CHECK_FALSE(r.market_valid());
}

TEST_CASE("validate_axioms flags a frictionless market") {
    // pi_ij = s_j / s_i with s = (1, 2): triangle holds with equality everywhere.
    const RatMatrix pi{{Rat(1), Rat(2)}, {frac(1, 2), Rat(1)}};
    const AxiomReport r = validate_axioms(pi);
    CHECK(r.holds_1);
    CHECK(r.holds_2);
    CHECK(r.holds_3);
    CHECK_FALSE(r.holds_4);
    CHECK_FALSE(r.market_valid());
    CHECK_THROWS_AS(PriceMatrix::checked(pi), AxiomError);
    try {
        PriceMatrix::checked(pi);
    } catch (const AxiomError& e) {
        CHECK_FALSE(e.report.holds_4);
        CHECK(e.report.holds_3);
    }
}

TEST_CASE("validate_axioms rejects malformed shapes") {
    CHECK_THROWS_AS(validate_axioms(RatMatrix{}), InputError);
    CHECK_THROWS_AS(validate_axioms(mat({{1}})), InputError);
    CHECK_THROWS_AS(validate_axioms(mat({{1, 2}, {1, 1}, {1, 1}})), InputError);
    CHECK_THROWS_AS(validate_axioms(RatMatrix{{Rat(1), Rat(2)}, {Rat(1)}}), InputError);
}

TEST_CASE("PriceMatrix::checked keeps entries and dimension") {
    const PriceMatrix pm = PriceMatrix::checked(mat({{1, 3}, {5, 1}}));
    CHECK(pm.dim() == 2);
    CHECK(pm.price(0, 1) == 3);
    CHECK(pm.price(1, 0) == 5);
    CHECK(pm.strict_triangle());
}

TEST_CASE("BidAskQuote validates its vectors") {
    CHECK_NOTHROW(BidAskQuote({Rat(2), Rat(3)}, {Rat(1), Rat(2)}));
    CHECK_THROWS_AS(BidAskQuote({Rat(2)}, {Rat(1)}), InputError);            // one asset
    CHECK_THROWS_AS(BidAskQuote({Rat(2), Rat(3)}, {Rat(1)}), InputError);    // length mismatch
    CHECK_THROWS_AS(BidAskQuote({Rat(2), Rat(3)}, {Rat(0), Rat(2)}), InputError);  // bid 0
    CHECK_THROWS_AS(BidAskQuote({Rat(2), Rat(3)}, {Rat(3), Rat(2)}), InputError);  // bid > ask
    CHECK_THROWS_AS(BidAskQuote({Rat(2), Rat(3)}, {Rat(2), Rat(3)}), InputError);  // no spread
}

TEST_CASE("BidAskQuote spread queries") {
    const BidAskQuote strict({Rat(2), Rat(3), Rat(5)}, {Rat(1), Rat(2), Rat(4)});
    CHECK(strict.strict_spread());
    CHECK(strict.equal_indices().empty());

    const BidAskQuote degen({Rat(2), Rat(3), Rat(5)}, {Rat(1), Rat(3), Rat(4)});
    CHECK_FALSE(degen.strict_spread());
    CHECK(degen.equal_indices() == std::vector<int>{1});
}

TEST_CASE("from_bid_ask fills pi_ij = ask_j / bid_i with a unit diagonal") {
    const BidAskQuote q({Rat(2), Rat(3)}, {Rat(1), Rat(2)});
    const PriceMatrix pm = from_bid_ask(q);
    CHECK(pm.price(0, 0) == 1);
    CHECK(pm.price(1, 1) == 1);
    CHECK(pm.price(0, 1) == 3);        // ask_2 / bid_1
    CHECK(pm.price(1, 0) == 1);        // ask_1 / bid_2 = 2/2
    CHECK(pm.strict_triangle());       // vacuous at d = 2
}

TEST_CASE("bid-ask matrices are strict exactly when every spread is strict") {
    // pi_ik * pi_kj = pi_ij * (ask_k / bid_k), so the triple through k is
    // strict iff asset k has a strict spread.
    const PriceMatrix strict = from_bid_ask(BidAskQuote({Rat(2), Rat(3), Rat(5)}, {Rat(1), Rat(2), Rat(4)}));
    CHECK(strict.strict_triangle());

    const PriceMatrix degen = from_bid_ask(BidAskQuote({Rat(2), Rat(3), Rat(5)}, {Rat(1), Rat(3), Rat(4)}));
    CHECK_FALSE(degen.strict_triangle());
    const AxiomReport r = validate_axioms(degen.entries());
    CHECK(r.market_valid());
    CHECK_FALSE(r.holds_5_strict);
    REQUIRE(r.violation_5.has_value());
    CHECK(r.violation_5->k == 1); // the degenerate asset
}

TEST_CASE("prime_matrix fills rows with consecutive primes") {
    const PriceMatrix pm = prime_matrix(2, 3);
    CHECK(pm.entries() == mat({{1, 3}, {5, 1}}));
    CHECK(pm.strict_triangle());

    const PriceMatrix p3 = prime_matrix(3, 59);
    CHECK(p3.entries() == mat({{1, 59, 61}, {67, 1, 71}, {73, 79, 1}}));
    CHECK(p3.strict_triangle());
}

TEST_CASE("prime_matrix at d = 20 ends at 2713") {
    const PriceMatrix pm = prime_matrix(20, Int(59));
    CHECK(pm.dim() == 20);
    CHECK(pm.price(0, 1) == 59);
    CHECK(pm.price(19, 18) == 2713);
    CHECK(pm.strict_triangle()); // 59^2 = 3481 > 2713
}

TEST_CASE("prime_matrix rejects starts that break the strict regime") {
    // With d = 3 and start 2 the largest entry 13 exceeds 2^2.
    CHECK_THROWS_AS(prime_matrix(3, 2), ConstructionError);
    CHECK_THROWS_AS(prime_matrix(20, 2), ConstructionError);
}

TEST_CASE("prime_matrix rejects non-prime starts and tiny dimensions") {
    CHECK_THROWS_AS(prime_matrix(3, 4), InputError);
    CHECK_THROWS_AS(prime_matrix(3, 1), InputError);
    CHECK_THROWS_AS(prime_matrix(1, 5), InputError);
}
