#include "solvency/randgen.hpp"

#include "solvency/errors.hpp"

#include <algorithm>
#include <set>

namespace solvency {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw InputError("Rng::below needs n >= 1");
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t draw;
    do {
        draw = next();
    } while (draw >= limit);
    return draw % n;
}

long Rng::range(long lo, long hi) {
    if (lo > hi) throw InputError("Rng::range needs lo <= hi");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

PriceMatrix random_price_matrix(Rng& rng, int d) {
    if (d < 2) throw InputError("random price matrix needs d >= 2");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        RatVec s(d);
        for (int i = 0; i < d; ++i) s[i] = frac(rng.range(1, 9), rng.range(1, 9));
        RatMatrix g(d, RatVec(d, Rat(1)));
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                if (i != j) g[i][j] = 1 + frac(rng.range(0, 4), rng.range(1, 6));
            }
        }
        // Min-product closure so g_ij <= g_ik * g_kj holds for every triple.
        for (int k = 0; k < d; ++k) {
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    if (i == j || i == k || j == k) continue;
                    const Rat via = g[i][k] * g[k][j];
                    if (via < g[i][j]) g[i][j] = via;
                }
            }
        }
        RatMatrix pi(d, RatVec(d, Rat(1)));
        bool some_friction = false;
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                if (i == j) continue;
                pi[i][j] = (s[j] / s[i]) * g[i][j];
                if (g[i][j] > 1) some_friction = true;
            }
        }
        if (!some_friction) continue; // frictionless draw, not a valid market
        return PriceMatrix::checked(std::move(pi));
    }
    throw InternalError("random price matrix generation kept failing");
}

BipartiteDigraph random_connected_bipartite(Rng& rng, int max_arcs) {
    if (max_arcs < 1) throw InputError("random bipartite graph needs max_arcs >= 1");
    // Draw side sizes small enough for a spanning tree to fit the arc cap.
    int p = 0, n = 0;
    do {
        p = static_cast<int>(rng.range(1, 5));
        n = static_cast<int>(rng.range(1, 5));
    } while (p + n - 1 > max_arcs);

    std::vector<int> pv, nv;
    for (int v = 0; v < p; ++v) pv.push_back(v);
    for (int v = p; v < p + n; ++v) nv.push_back(v);
    Bipartition bp(pv, nv);

    // Grow a random spanning tree by attaching each fresh vertex to a random
    // already-placed vertex of the opposite side.
    std::set<Arc> arcs;
    std::vector<int> placed_p, placed_n;
    std::vector<int> order;
    for (int v = 0; v < p + n; ++v) order.push_back(v);
    for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[rng.below(i)]);
    }
    // Make sure the first two placed vertices are on opposite sides.
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (bp.in_p(order[i]) != bp.in_p(order[0])) {
            std::swap(order[1], order[i]);
            break;
        }
    }
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        const int v = order[idx];
        auto& own = bp.in_p(v) ? placed_p : placed_n;
        auto& other = bp.in_p(v) ? placed_n : placed_p;
        if (idx > 0) {
            const int w = other[rng.below(other.size())];
            arcs.insert(bp.in_p(v) ? Arc{v, w} : Arc{w, v});
        }
        own.push_back(v);
    }

    const int cap = std::min<int>(max_arcs, p * n);
    const int target = static_cast<int>(arcs.size()) +
                       static_cast<int>(rng.below(static_cast<std::uint64_t>(cap - arcs.size()) + 1));
    while (static_cast<int>(arcs.size()) < target) {
        const int i = pv[rng.below(pv.size())];
        const int j = nv[rng.below(nv.size())];
        arcs.insert(Arc{i, j});
    }
    return BipartiteDigraph(bp, std::vector<Arc>(arcs.begin(), arcs.end()));
}

RatVec random_portfolio(Rng& rng, int d) {
    RatVec x(d);
    for (int i = 0; i < d; ++i) x[i] = frac(rng.range(-9, 9), rng.range(1, 5));
    return x;
}

BidAskQuote random_strict_quote(Rng& rng, int d) {
    RatVec bid(d), ask(d);
    for (int i = 0; i < d; ++i) {
        bid[i] = frac(rng.range(1, 9), rng.range(1, 4));
        ask[i] = bid[i] + frac(rng.range(1, 6), rng.range(1, 4));
    }
    return BidAskQuote(std::move(ask), std::move(bid));
}

} // namespace solvency
