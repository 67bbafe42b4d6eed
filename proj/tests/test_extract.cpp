#include "solvency/dual_cone.hpp"
#include "solvency/errors.hpp"
#include "solvency/extract.hpp"
#include "solvency/prices.hpp"

#include <doctest.h>

#include <set>

using namespace solvency;

namespace {

Rat pp(std::initializer_list<long> num, std::initializer_list<long> den) {
    Int n(1), d(1);
    for (long v : num) n *= v;
    for (long v : den) d *= v;
    return frac(n, d);
}

} // namespace

TEST_CASE("extraction at d = 2") {
    const PriceMatrix pm = prime_matrix(2, 3);

    const ExtractionResult a = extract_with_p_config(pm, Bipartition({0}, {1}), {1});
    CHECK(a.y.y == RatVec{frac(1, 3), Rat(1)});
    CHECK(a.tree.arcs == std::vector<Arc>{{0, 1}});
    CHECK(a.given.side == Side::P);
    CHECK(a.given.values == std::vector<int>{1});
    CHECK(a.complement.side == Side::N);
    CHECK(a.complement.values == std::vector<int>{1});

    const ExtractionResult b = extract_with_p_config(pm, Bipartition({1}, {0}), {1});
    CHECK(b.y.y == RatVec{Rat(1), frac(1, 5)});

    const ExtractionResult c = extract_with_n_config(pm, Bipartition({0}, {1}), {1});
    CHECK(c.y.y == RatVec{frac(1, 3), Rat(1)});
    CHECK(c.given.side == Side::N);
}

TEST_CASE("single long asset takes the star solution") {
    const PriceMatrix pm = prime_matrix(3, 59);
    const ExtractionResult r = extract_with_p_config(pm, Bipartition({0}, {1, 2}), {2});
    CHECK(r.y.y == RatVec{frac(1, 61), frac(59, 61), Rat(1)});
    CHECK(r.tree.arcs == std::vector<Arc>{{0, 1}, {0, 2}});
    CHECK(r.complement.values == std::vector<int>{1, 1});
}

TEST_CASE("single short asset takes the mirrored star solution") {
    const PriceMatrix pm = prime_matrix(3, 59);
    const ExtractionResult r = extract_with_n_config(pm, Bipartition({0, 1}, {2}), {2});
    CHECK(r.y.y == RatVec{frac(1, 61), frac(1, 71), Rat(1)});
    CHECK(r.tree.arcs == std::vector<Arc>{{0, 2}, {1, 2}});
    CHECK(r.complement.values == std::vector<int>{1, 1});
}

TEST_CASE("peeling reattaches through the cheapest target") {
    // P = {0,1}, N = {2,3}, c = (2,1): asset 1 is peeled, the star over {0}
    // is solved, and 1 reattaches via arg max y_j / pi_1j, which is j = 3
    // (61/73 < 67/79). The tree degree then lands on b = (1,2).
    const PriceMatrix pm = prime_matrix(4, 59);
    const ExtractionResult r = extract_with_p_config(pm, Bipartition({0, 1}, {2, 3}), {2, 1});
    CHECK(r.tree.arcs == std::vector<Arc>{{0, 2}, {0, 3}, {1, 3}});
    CHECK(r.y.y == RatVec{frac(1, 67), frac(1, 79), frac(61, 67), Rat(1)});
    CHECK(r.given.values == std::vector<int>{2, 1});
    CHECK(r.complement.values == std::vector<int>{1, 2});
}

TEST_CASE("every configuration of every bipartition extracts soundly at d = 4") {
    const PriceMatrix pm = prime_matrix(4, 59);
    const ExtremeSet es = enumerate_extreme_directions(pm);
    std::set<RatVec, RatVecLess> extreme_ys;
    for (const ExtremeDirection& dir : es.directions) extreme_ys.insert(dir.y);

    std::set<RatVec, RatVecLess> produced;
    for_each_bipartition(4, [&](const Bipartition& bp) {
        const int p = static_cast<int>(bp.p().size());
        std::vector<int> c = first_composition(p, 3);
        while (true) {
            const ExtractionResult r = extract_with_p_config(pm, bp, c);
            CHECK(r.y.canonical);
            CHECK(is_feasible(pm, bp, r.y.y));
            CHECK(is_extreme(pm, r.y.y).extreme);
            CHECK(degree_sequence(bp, r.tree, Side::P).values == c);
            CHECK(degree_sequence(bp, r.tree, Side::N).values == r.complement.values);
            produced.insert(r.y.y);

            // The mirrored run on the complement reproduces the same ray and
            // hands back the original configuration.
            const ExtractionResult m = extract_with_n_config(pm, bp, r.complement.values);
            CHECK(m.y.y == r.y.y);
            CHECK(m.complement.values == c);

            if (!next_composition(c)) break;
        }
        return true;
    });
    // The 20 extractions cover the full extreme set.
    CHECK(produced.size() == extreme_ys.size());
    CHECK(std::equal(produced.begin(), produced.end(), extreme_ys.begin()));
}

TEST_CASE("an all-ones configuration sweeps into the mirrored base case") {
    // c = (1,1) leaves nothing to peel; the N-side sweep starts at b = (2),
    // whose mirrored base case already realizes c.
    const PriceMatrix pm = prime_matrix(3, 59);
    const ExtractionResult r = extract_with_p_config(pm, Bipartition({0, 1}, {2}), {1, 1});
    CHECK(r.y.y == RatVec{frac(1, 61), frac(1, 71), Rat(1)});
    CHECK(r.complement.values == std::vector<int>{2});
}

TEST_CASE("the worked d = 20 example extracts exactly") {
    const PriceMatrix pm = prime_matrix(20, 59);
    const Bipartition bp = Bipartition::from_p({4, 5, 6, 7, 8, 9, 10}, 20);
    const ExtractionResult r = extract_with_p_config(pm, bp, {3, 2, 4, 2, 2, 2, 4});

    const RatVec want{
        pp({487, 757}, {503, 859}),
        pp({491, 757}, {503, 859}),
        pp({619, 947, 1367}, {677, 953, 1427}),
        pp({757}, {859}),
        pp({757}, {503, 859}),
        pp({947, 1367}, {677, 953, 1427}),
        pp({1}, {859}),
        pp({1367}, {953, 1427}),
        pp({1}, {1117}),
        pp({839}, {859, 1237}),
        pp({1}, {1427}),
        pp({1327}, {1427}),
        pp({947, 1367}, {953, 1427}),
        pp({1367}, {1427}),
        pp({1373}, {1427}),
        pp({829}, {859}),
        pp({839}, {859}),
        pp({839, 1249}, {859, 1237}),
        pp({1109}, {1117}),
        Rat(1),
    };
    CHECK(r.y.y == want);
    CHECK(r.complement.values == std::vector<int>{1, 1, 1, 2, 1, 2, 2, 1, 1, 2, 1, 1, 3});
    CHECK(is_feasible(pm, bp, r.y.y));
    CHECK(degree_sequence(bp, r.tree, Side::P).values == std::vector<int>{3, 2, 4, 2, 2, 2, 4});

    // Feeding the resulting N-configuration through the mirror recovers the ray.
    const ExtractionResult m = extract_with_n_config(pm, bp, r.complement.values);
    CHECK(m.y.y == want);
    CHECK(m.complement.values == std::vector<int>{3, 2, 4, 2, 2, 2, 4});
}

TEST_CASE("extraction validates its inputs") {
    const PriceMatrix pm = prime_matrix(4, 59);
    const Bipartition bp({0, 1}, {2, 3});
    CHECK_THROWS_AS(extract_with_p_config(pm, bp, {1, 1, 1}), InputError); // length
    CHECK_THROWS_AS(extract_with_p_config(pm, bp, {0, 3}), InputError);    // zero entry
    CHECK_THROWS_AS(extract_with_p_config(pm, bp, {1, 1}), InputError);    // sum != 3
    CHECK_THROWS_AS(extract_with_n_config(pm, bp, {1, 1}), InputError);
    CHECK_THROWS_AS(extract_with_p_config(pm, Bipartition({0}, {1, 2}), {2}), InputError);
}
