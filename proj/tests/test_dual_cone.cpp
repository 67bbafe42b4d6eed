#include "solvency/dual_cone.hpp"
#include "solvency/errors.hpp"
#include "solvency/prices.hpp"

#include <doctest.h>

#include <set>

using namespace solvency;

namespace {

bool same_extreme_sets(const ExtremeSet& a, const ExtremeSet& b) {
    if (a.d != b.d || a.directions.size() != b.directions.size()) return false;
    for (std::size_t i = 0; i < a.directions.size(); ++i) {
        const ExtremeDirection& x = a.directions[i];
        const ExtremeDirection& y = b.directions[i];
        if (x.y != y.y || !(x.bp == y.bp) || !(x.tree == y.tree)) return false;
        if (x.p_configs != y.p_configs || x.n_configs != y.n_configs) return false;
    }
    return true;
}

} // namespace

TEST_CASE("make_canonical scales the maximum to one") {
    const DualDirection dir = make_canonical({Rat(2), Rat(6), Rat(3)});
    CHECK(dir.canonical);
    CHECK(dir.y == RatVec{frac(1, 3), Rat(1), frac(1, 2)});
    CHECK_THROWS_AS(make_canonical({Rat(1), Rat(0)}), InputError);
}

TEST_CASE("generate_from_tree solves the tree equations") {
    const PriceMatrix pm = prime_matrix(2, 3); // [[1,3],[5,1]]
    const Bipartition bp({0}, {1});
    const SpanningTree tree{{{0, 1}}};
    const DualDirection dir = generate_from_tree(pm, bp, tree);
    CHECK(dir.y == RatVec{frac(1, 3), Rat(1)});
    CHECK(dir.canonical);

    // The canonical solution does not depend on the propagation root.
    CHECK(generate_from_tree(pm, bp, tree, 0).y == dir.y);
    CHECK(generate_from_tree(pm, bp, tree, 1).y == dir.y);

    CHECK_THROWS_AS(generate_from_tree(pm, bp, tree, 2), InputError);
    CHECK_THROWS_AS(generate_from_tree(pm, bp, SpanningTree{{{0, 1}, {0, 1}}}, 0), InputError);
    CHECK_THROWS_AS(generate_from_tree(pm, Bipartition({0}, {1, 2}), tree), InputError);
}

TEST_CASE("generate_from_tree at d = 3") {
    const PriceMatrix pm = prime_matrix(3, 59); // [[1,59,61],[67,1,71],[73,79,1]]
    const DualDirection star = generate_from_tree(pm, Bipartition({0}, {1, 2}),
                                                  SpanningTree{{{0, 1}, {0, 2}}});
    CHECK(star.y == RatVec{frac(1, 61), frac(59, 61), Rat(1)});

    const DualDirection sink = generate_from_tree(pm, Bipartition({0, 1}, {2}),
                                                  SpanningTree{{{0, 2}, {1, 2}}});
    CHECK(sink.y == RatVec{frac(1, 61), frac(1, 71), Rat(1)});
}

TEST_CASE("is_feasible checks all P x N inequalities") {
    const PriceMatrix pm = prime_matrix(4, 59);
    const Bipartition bp({0, 1}, {2, 3});
    // Tree solution for {02,03,12}: y = (1, 61/73, 61, 67); arc (1,3) demands
    // 79 * 61/73 >= 67, i.e. 4819 >= 4891, which fails.
    const DualDirection dir = generate_from_tree(pm, bp, SpanningTree{{{0, 2}, {0, 3}, {1, 2}}});
    CHECK_FALSE(is_feasible(pm, bp, dir.y));
    CHECK_FALSE(in_dual_cone(pm, dir.y));

    const DualDirection ok = generate_from_tree(pm, bp, SpanningTree{{{0, 2}, {0, 3}, {1, 3}}});
    CHECK(is_feasible(pm, bp, ok.y));
    CHECK(in_dual_cone(pm, ok.y));
}

TEST_CASE("in_dual_cone membership") {
    const PriceMatrix pm = prime_matrix(2, 3);
    CHECK(in_dual_cone(pm, {Rat(1), Rat(1)}));
    CHECK(in_dual_cone(pm, {frac(1, 3), Rat(1)}));
    CHECK_FALSE(in_dual_cone(pm, {Rat(1), Rat(4)}));
    CHECK_FALSE(in_dual_cone(pm, {Rat(1), Rat(-1)}));
    CHECK_THROWS_AS(in_dual_cone(pm, {Rat(1)}), InputError);
}

TEST_CASE("tight_graph collects the binding arcs") {
    const PriceMatrix pm = prime_matrix(2, 3);
    const Bipartition bp({0}, {1});
    CHECK(tight_graph(pm, bp, {frac(1, 3), Rat(1)}).arcs == std::vector<Arc>{{0, 1}});
    CHECK(tight_graph(pm, bp, {Rat(1), Rat(1)}).arcs.empty());
    CHECK_THROWS_AS(tight_graph(pm, bp, {Rat(1), Rat(4)}), InputError);
}

TEST_CASE("is_extreme certifies rank d-1") {
    const PriceMatrix pm = prime_matrix(2, 3);
    const ExtremeCertificate yes = is_extreme(pm, {frac(1, 3), Rat(1)});
    CHECK(yes.extreme);
    CHECK(yes.tight_basis == std::vector<std::pair<int, int>>{{0, 1}});

    // Interior point: sum of the two extreme directions.
    const ExtremeCertificate no = is_extreme(pm, {frac(4, 3), frac(6, 5)});
    CHECK_FALSE(no.extreme);
    CHECK(no.tight_basis.empty());

    CHECK_FALSE(is_extreme(pm, {Rat(0), Rat(0)}).extreme);
    CHECK_FALSE(is_extreme(pm, {Rat(1), Rat(4)}).extreme); // outside the cone
}

TEST_CASE("enumerate_extreme_directions at d = 2") {
    const ExtremeSet es = enumerate_extreme_directions(prime_matrix(2, 3));
    CHECK(es.d == 2);
    REQUIRE(es.directions.size() == 2);

    CHECK(es.directions[0].y == RatVec{frac(1, 3), Rat(1)});
    CHECK(es.directions[0].bp.p() == std::vector<int>{0});
    CHECK(es.directions[0].tree.arcs == std::vector<Arc>{{0, 1}});
    CHECK(es.directions[0].p_configs == ConfigSet{{1}});
    CHECK(es.directions[0].n_configs == ConfigSet{{1}});

    CHECK(es.directions[1].y == RatVec{Rat(1), frac(1, 5)});
    CHECK(es.directions[1].bp.p() == std::vector<int>{1});
}

TEST_CASE("extreme-direction counts in the strict regime hit the upper bound") {
    CHECK(enumerate_extreme_directions(prime_matrix(3, 59)).directions.size() == 6);
    CHECK(enumerate_extreme_directions(prime_matrix(4, 59)).directions.size() == 20);
    CHECK(enumerate_extreme_directions(prime_matrix(5, 59)).directions.size() == 70);
}

TEST_CASE("enumerated directions are extreme, distinct and canonically ordered") {
    const PriceMatrix pm = prime_matrix(4, 59);
    const ExtremeSet es = enumerate_extreme_directions(pm);
    std::set<RatVec, RatVecLess> seen;
    std::size_t bp_rank = 0;
    std::vector<std::vector<int>> bp_order;
    for_each_bipartition(4, [&](const Bipartition& bp) {
        bp_order.push_back(bp.p());
        return true;
    });
    for (const ExtremeDirection& dir : es.directions) {
        CHECK(is_extreme(pm, dir.y).extreme);
        CHECK(seen.insert(dir.y).second);
        CHECK(is_feasible(pm, dir.bp, dir.y));
        CHECK(is_spanning_tree(dir.bp, dir.tree.arcs));
        CHECK(generate_from_tree(pm, dir.bp, dir.tree).y == dir.y);
        // Directions arrive grouped by the canonical bipartition order.
        while (bp_rank < bp_order.size() && bp_order[bp_rank] != dir.bp.p()) ++bp_rank;
        CHECK(bp_rank < bp_order.size());
        // Strict regime: the tight graph is the tree itself, so the
        // configuration sets are singletons matching the tree degrees.
        CHECK(dir.p_configs == ConfigSet{degree_sequence(dir.bp, dir.tree, Side::P).values});
        CHECK(dir.n_configs == ConfigSet{degree_sequence(dir.bp, dir.tree, Side::N).values});
    }
}

TEST_CASE("tree and algorithmic strategies agree") {
    const PriceMatrix pm = prime_matrix(4, 59);
    EnumerateOptions trees;
    trees.strategy = EnumerationStrategy::Trees;
    EnumerateOptions algo;
    algo.strategy = EnumerationStrategy::Algorithmic;
    CHECK(same_extreme_sets(enumerate_extreme_directions(pm, trees),
                            enumerate_extreme_directions(pm, algo)));
}

TEST_CASE("multi-threaded enumeration is deterministic") {
    const PriceMatrix pm = prime_matrix(4, 59);
    EnumerateOptions serial;
    EnumerateOptions parallel;
    parallel.threads = 4;
    CHECK(same_extreme_sets(enumerate_extreme_directions(pm, serial),
                            enumerate_extreme_directions(pm, parallel)));
}

TEST_CASE("enumeration budgets are enforced") {
    const PriceMatrix pm = prime_matrix(5, 59);
    EnumerateOptions tiny;
    tiny.budget = 10; // fewer than 2^5 - 2 bipartitions: refused upfront
    CHECK_THROWS_AS(enumerate_extreme_directions(pm, tiny), BudgetError);
    EnumerateOptions small;
    small.budget = 32; // passes the upfront check, trips during tree work
    CHECK_THROWS_AS(enumerate_extreme_directions(pm, small), BudgetError);
}

TEST_CASE("degenerate markets deduplicate across bipartitions") {
    // Asset 1 has no spread, so several bipartitions generate the same ray.
    const PriceMatrix pm = from_bid_ask(BidAskQuote({Rat(1), Rat(3), Rat(5)}, {Rat(1), Rat(2), Rat(4)}));
    const ExtremeSet es = enumerate_extreme_directions(pm);
    CHECK(es.directions.size() == 4); // 2^(d-1)
    std::set<RatVec, RatVecLess> seen;
    for (const ExtremeDirection& dir : es.directions) {
        CHECK(seen.insert(dir.y).second);
        CHECK(is_extreme(pm, dir.y).extreme);
    }
}

TEST_CASE("count_bounds") {
    CHECK(count_bounds(2) == std::make_pair(Int(2), Int(2)));
    CHECK(count_bounds(3) == std::make_pair(Int(6), Int(6)));
    CHECK(count_bounds(4) == std::make_pair(Int(14), Int(20)));
    CHECK(count_bounds(5) == std::make_pair(Int(30), Int(70)));
    const auto [lower, upper] = count_bounds(20);
    CHECK(lower == Int(1048574));
    CHECK(upper == Int("35345263800"));
    CHECK_THROWS_AS(count_bounds(1), InputError);
}

TEST_CASE("is_solvent separates the solvency cone") {
    const ExtremeSet es = enumerate_extreme_directions(prime_matrix(2, 3));
    CHECK(is_solvent(es, {Rat(1), Rat(0)}));
    CHECK(is_solvent(es, {Rat(0), Rat(1)}));
    CHECK(is_solvent(es, {Rat(3), Rat(-1)}));  // primal generator, boundary
    CHECK(is_solvent(es, {Rat(-1), Rat(5)}));  // primal generator, boundary
    CHECK_FALSE(is_solvent(es, {Rat(-1), Rat(3)}));
    CHECK_FALSE(is_solvent(es, {Rat(-1), Rat(-1)}));
    CHECK_THROWS_AS(is_solvent(es, {Rat(1)}), InputError);
    CHECK_THROWS_AS(is_solvent(ExtremeSet{}, {Rat(1)}), InputError);
}

TEST_CASE("facet_values reports the dot products in direction order") {
    const ExtremeSet es = enumerate_extreme_directions(prime_matrix(2, 3));
    const auto checks = facet_values(es, {Rat(3), Rat(-1)});
    REQUIRE(checks.size() == 2);
    CHECK(checks[0].index == 0);
    CHECK(checks[0].value == 0);
    CHECK(checks[1].index == 1);
    CHECK(checks[1].value == frac(14, 5));
}

TEST_CASE("trade_plan lists every feasible tree solution of the sign bipartition") {
    const PriceMatrix pm = prime_matrix(5, 59);
    const ExtremeSet es = enumerate_extreme_directions(pm);
    const RatVec x{Rat(5), Rat(-1), Rat(-1), Rat(3), Rat(-2)};
    const TradePlan plan = trade_plan(pm, es, x);
    CHECK(plan.bp.p() == std::vector<int>{0, 3});
    CHECK(plan.bp.n() == std::vector<int>{1, 2, 4});
    REQUIRE(plan.solutions.size() == 3);
    CHECK(plan.solvent == is_solvent(es, x));

    std::set<RatVec, RatVecLess> extreme_ys;
    for (const ExtremeDirection& dir : es.directions) extreme_ys.insert(dir.y);
    const TradePlanEntry* prev = nullptr;
    for (const TradePlanEntry& e : plan.solutions) {
        CHECK(is_feasible(pm, plan.bp, e.y));
        CHECK(extreme_ys.count(e.y) == 1);
        CHECK(is_spanning_tree(plan.bp, e.tree.arcs));
        CHECK(e.contribution == degree_sequence(plan.bp, e.tree, Side::P).values);
        int total = 0;
        for (int c : e.contribution) total += c;
        CHECK(total == 4);
        if (prev) CHECK(compare_lex(prev->y, e.y) < 0);
        prev = &e;
    }
}

TEST_CASE("trade_plan counts zero positions as long") {
    const PriceMatrix pm = prime_matrix(2, 3);
    const ExtremeSet es = enumerate_extreme_directions(pm);
    const TradePlan plan = trade_plan(pm, es, {Rat(0), Rat(-1)});
    CHECK(plan.bp.p() == std::vector<int>{0});
    REQUIRE(plan.solutions.size() == 1);
    CHECK(plan.solutions[0].y == RatVec{frac(1, 3), Rat(1)});
    CHECK(plan.solutions[0].contribution == std::vector<int>{1});
    CHECK_FALSE(plan.solvent);
}

TEST_CASE("trade_plan rejects portfolios without both sides") {
    const PriceMatrix pm = prime_matrix(2, 3);
    const ExtremeSet es = enumerate_extreme_directions(pm);
    CHECK_THROWS_AS(trade_plan(pm, es, {Rat(1), Rat(1)}), InputError);    // nothing to cover
    CHECK_THROWS_AS(trade_plan(pm, es, {Rat(-1), Rat(-1)}), InputError);  // nothing to trade away
    CHECK_THROWS_AS(trade_plan(pm, es, {Rat(1)}), InputError);
}

TEST_CASE("config_sets reads the tight graph") {
    const PriceMatrix p3 = prime_matrix(3, 59);
    const auto [pc, nc] = config_sets(p3, Bipartition({0}, {1, 2}), {frac(1, 61), frac(59, 61), Rat(1)});
    CHECK(pc == ConfigSet{{2}});
    CHECK(nc == ConfigSet{{1, 1}});

    // Bid-ask market: the generator of a bipartition is tight on all of
    // P x N, so the whole complete bipartite graph contributes.
    const PriceMatrix pm = from_bid_ask(BidAskQuote({Rat(2), Rat(3), Rat(5), Rat(7)},
                                                    {Rat(1), Rat(2), Rat(4), Rat(5)}));
    const Bipartition bp({0, 1}, {2, 3});
    const RatVec y{Rat(1), Rat(2), Rat(5), Rat(7)};
    const auto [pk, nk] = config_sets(pm, bp, y);
    CHECK(pk == ConfigSet{{1, 2}, {2, 1}});
    CHECK(nk == ConfigSet{{1, 2}, {2, 1}});
    CHECK_THROWS_AS(config_sets(pm, bp, y, 2), BudgetError);
}
