#include "solvency/errors.hpp"
#include "solvency/rational.hpp"

#include <doctest.h>

using namespace solvency;

TEST_CASE("rat_from_string parses integers and fractions") {
    CHECK(rat_from_string("5") == 5);
    CHECK(rat_from_string("0") == 0);
    CHECK(rat_from_string("-7") == -7);
    CHECK(rat_from_string("+7") == 7);
    CHECK(rat_from_string("3/4") == frac(3, 4));
    CHECK(rat_from_string("-3/4") == frac(-3, 4));
    CHECK(rat_from_string("  22/7 ") == frac(22, 7));
    // Canonicalization happens on parse.
    CHECK(rat_from_string("6/8") == frac(3, 4));
    CHECK(rat_to_string(rat_from_string("6/8")) == "3/4");
}

TEST_CASE("rat_from_string rejects malformed input") {
    CHECK_THROWS_AS(rat_from_string(""), ParseError);
    CHECK_THROWS_AS(rat_from_string("   "), ParseError);
    CHECK_THROWS_AS(rat_from_string("abc"), ParseError);
    CHECK_THROWS_AS(rat_from_string("1.5"), ParseError);
    CHECK_THROWS_AS(rat_from_string("1/2/3"), ParseError);
    CHECK_THROWS_AS(rat_from_string("1/"), ParseError);
    CHECK_THROWS_AS(rat_from_string("/2"), ParseError);
    CHECK_THROWS_AS(rat_from_string("1 / 2"), ParseError);
    CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rat_from_string("0/0"), ParseError);
}

TEST_CASE("rat_to_string hides the unit denominator") {
    CHECK(rat_to_string(frac(10, 2)) == "5");
    CHECK(rat_to_string(frac(-10, 4)) == "-5/2");
    CHECK(rat_to_string(Rat(0)) == "0");
}

TEST_CASE("frac validates the denominator and canonicalizes") {
    CHECK(frac(2, 4) == frac(1, 2));
    CHECK(frac(1, -2) == frac(-1, 2));
    CHECK_THROWS_AS(frac(1, 0), InputError);
    CHECK(frac(Int("123456789123456789"), Int(3)) == Rat("41152263041152263"));
}

TEST_CASE("rat_approx is close") {
    CHECK(rat_approx(frac(3, 4)) == doctest::Approx(0.75));
    CHECK(rat_approx(frac(1, 3)) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("canonical_scaled divides by the maximum") {
    const RatVec v{frac(1, 3), Rat(1), frac(1, 5)};
    const RatVec s = canonical_scaled(v);
    CHECK(s == RatVec{frac(1, 3), Rat(1), frac(1, 5)});

    const RatVec w{Rat(2), Rat(6), Rat(3)};
    CHECK(canonical_scaled(w) == RatVec{frac(1, 3), Rat(1), frac(1, 2)});

    CHECK_THROWS_AS(canonical_scaled(RatVec{}), InputError);
    CHECK_THROWS_AS(canonical_scaled(RatVec{Rat(1), Rat(0)}), InputError);
    CHECK_THROWS_AS(canonical_scaled(RatVec{Rat(1), Rat(-2)}), InputError);
}

TEST_CASE("scaled_by_max allows zeros but needs a positive maximum") {
    CHECK(scaled_by_max(RatVec{Rat(0), Rat(4), Rat(2)}) == RatVec{Rat(0), Rat(1), frac(1, 2)});
    CHECK(scaled_by_max(RatVec{Rat(-2), Rat(4)}) == RatVec{frac(-1, 2), Rat(1)});
    CHECK_THROWS_AS(scaled_by_max(RatVec{Rat(0), Rat(0)}), InputError);
    CHECK_THROWS_AS(scaled_by_max(RatVec{Rat(-1), Rat(-3)}), InputError);
}

TEST_CASE("proportional detects positive scalar multiples") {
    CHECK(proportional(RatVec{Rat(1), Rat(2)}, RatVec{Rat(3), Rat(6)}));
    CHECK(proportional(RatVec{frac(1, 2), frac(1, 3)}, RatVec{Rat(3), Rat(2)}));
    CHECK_FALSE(proportional(RatVec{Rat(1), Rat(2)}, RatVec{Rat(2), Rat(1)}));
    // Negative multiples do not count: these are directions (rays).
    CHECK_FALSE(proportional(RatVec{Rat(1), Rat(2)}, RatVec{Rat(-1), Rat(-2)}));
    CHECK_FALSE(proportional(RatVec{Rat(1), Rat(0)}, RatVec{Rat(1), Rat(1)}));
    CHECK(proportional(RatVec{Rat(0), Rat(0)}, RatVec{Rat(0), Rat(0)}));
    CHECK_FALSE(proportional(RatVec{Rat(1)}, RatVec{Rat(1), Rat(1)}));
    CHECK_FALSE(proportional(RatVec{}, RatVec{}));
}

TEST_CASE("compare_lex orders vectors") {
    CHECK(compare_lex(RatVec{Rat(1), Rat(2)}, RatVec{Rat(1), Rat(3)}) < 0);
    CHECK(compare_lex(RatVec{Rat(2)}, RatVec{Rat(1), Rat(9)}) > 0);
    CHECK(compare_lex(RatVec{Rat(1)}, RatVec{Rat(1), Rat(0)}) < 0);
    CHECK(compare_lex(RatVec{frac(1, 2)}, RatVec{frac(2, 4)}) == 0);
    CHECK(RatVecLess{}(RatVec{Rat(1)}, RatVec{Rat(2)}));
}

TEST_CASE("vec_to_string formats tuples") {
    CHECK(vec_to_string(RatVec{frac(1, 3), Rat(1)}) == "(1/3, 1)");
    CHECK(vec_to_string(RatVec{}) == "()");
}
