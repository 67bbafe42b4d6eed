#include "solvency/dual_cone.hpp"

#include "solvency/errors.hpp"
#include "solvency/exactla.hpp"
#include "solvency/extract.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>

namespace solvency {

namespace {

std::string p_side_str(const Bipartition& bp) {
    std::string out = "{";
    for (std::size_t i = 0; i < bp.p().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(bp.p()[i] + 1);
    }
    return out + "}";
}

// Tree propagation without validation; arcs must form a spanning tree.
RatVec propagate(const PriceMatrix& pm, const Bipartition& bp, const std::vector<Arc>& arcs, int root) {
    const int d = pm.dim();
    std::vector<std::vector<int>> adj(d); // neighbor lists, arc index recovered by pairing
    for (const Arc& a : arcs) {
        adj[a.first].push_back(a.second);
        adj[a.second].push_back(a.first);
    }
    RatVec y(d, Rat(0));
    std::vector<char> known(d, 0);
    y[root] = 1;
    known[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int w : adj[v]) {
            if (known[w]) continue;
            if (bp.in_p(v)) {
                y[w] = pm.price(v, w) * y[v]; // arc v -> w
            } else {
                y[w] = y[v] / pm.price(w, v); // arc w -> v
            }
            known[w] = 1;
            queue.push_back(w);
        }
    }
    return y;
}

bool feasible_unchecked(const PriceMatrix& pm, const Bipartition& bp, const RatVec& y) {
    for (const Rat& x : y) {
        if (x <= 0) return false;
    }
    for (int i : bp.p()) {
        for (int j : bp.n()) {
            if (pm.price(i, j) * y[i] < y[j]) return false;
        }
    }
    return true;
}

// Shared work meter for one enumeration call.
struct WorkBudget {
    std::atomic<std::uint64_t> used{0};
    std::uint64_t limit;

    explicit WorkBudget(std::uint64_t limit_in) : limit(limit_in) {}
    bool tick() { return used.fetch_add(1, std::memory_order_relaxed) < limit; }
};

std::pair<ConfigSet, ConfigSet> config_sets_metered(const PriceMatrix& pm, const Bipartition& bp,
                                                    const RatVec& y, WorkBudget& budget, bool& exceeded) {
    std::vector<Arc> tight;
    for (int i : bp.p()) {
        for (int j : bp.n()) {
            if (pm.price(i, j) * y[i] == y[j]) tight.emplace_back(i, j);
        }
    }
    BipartiteDigraph h(bp, std::move(tight));
    ConfigSet left, right;
    for_each_spanning_tree(h, [&](const std::vector<Arc>& arcs) {
        if (!budget.tick()) {
            exceeded = true;
            return false;
        }
        std::vector<int> dp(bp.p().size(), 0);
        std::vector<int> dn(bp.n().size(), 0);
        for (const Arc& a : arcs) {
            ++dp[bp.p_index(a.first)];
            ++dn[bp.n_index(a.second)];
        }
        left.insert(std::move(dp));
        right.insert(std::move(dn));
        return true;
    });
    return {std::move(left), std::move(right)};
}

struct BipEntry {
    RatVec y;
    std::vector<Arc> tree;
    ConfigSet p_configs;
    ConfigSet n_configs;
};

// All feasible tree solutions of one bipartition, keyed by canonical y.
std::map<RatVec, std::vector<Arc>, RatVecLess> bipartition_candidates(
    const PriceMatrix& pm, const Bipartition& bp, EnumerationStrategy strategy,
    WorkBudget& budget, bool& exceeded) {
    std::map<RatVec, std::vector<Arc>, RatVecLess> found;
    const int d = pm.dim();
    const int root = 0;

    if (strategy == EnumerationStrategy::Trees) {
        for_each_spanning_tree(complete_bipartite(bp), [&](const std::vector<Arc>& arcs) {
            if (!budget.tick()) {
                exceeded = true;
                return false;
            }
            RatVec y = propagate(pm, bp, arcs, root);
            if (feasible_unchecked(pm, bp, y)) {
                found.try_emplace(canonical_scaled(y), arcs);
            }
            return true;
        });
    } else {
        std::vector<int> c = first_composition(static_cast<int>(bp.p().size()), d - 1);
        while (true) {
            if (!budget.tick()) {
                exceeded = true;
                break;
            }
            ExtractionResult res = extract_with_p_config(pm, bp, c);
            found.try_emplace(res.y.y, res.tree.arcs);
            if (!next_composition(c)) break;
        }
    }
    return found;
}

} // namespace

DualDirection make_canonical(const RatVec& y) {
    return DualDirection{canonical_scaled(y), true};
}

DualDirection generate_from_tree(const PriceMatrix& pm, const Bipartition& bp,
                                 const SpanningTree& tree, int root) {
    if (bp.dim() != pm.dim()) throw InputError("bipartition dimension mismatch");
    if (!is_spanning_tree(bp, tree.arcs)) throw InputError("arc set is not a spanning tree");
    if (root == -1) root = 0;
    if (root < 0 || root >= pm.dim()) throw InputError("root vertex out of range");
    return make_canonical(propagate(pm, bp, tree.arcs, root));
}

bool is_feasible(const PriceMatrix& pm, const Bipartition& bp, const RatVec& y) {
    if (bp.dim() != pm.dim() || static_cast<int>(y.size()) != pm.dim()) {
        throw InputError("dimension mismatch");
    }
    return feasible_unchecked(pm, bp, y);
}

bool in_dual_cone(const PriceMatrix& pm, const RatVec& y) {
    const int d = pm.dim();
    if (static_cast<int>(y.size()) != d) throw InputError("vector dimension mismatch");
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i != j && pm.price(i, j) * y[i] < y[j]) return false;
        }
    }
    return true;
}

BipartiteDigraph tight_graph(const PriceMatrix& pm, const Bipartition& bp, const RatVec& y) {
    if (!is_feasible(pm, bp, y)) {
        throw InputError("tight graph is only defined for feasible y");
    }
    std::vector<Arc> tight;
    for (int i : bp.p()) {
        for (int j : bp.n()) {
            if (pm.price(i, j) * y[i] == y[j]) tight.emplace_back(i, j);
        }
    }
    return BipartiteDigraph(bp, std::move(tight));
}

ExtremeCertificate is_extreme(const PriceMatrix& pm, const RatVec& y) {
    const int d = pm.dim();
    if (static_cast<int>(y.size()) != d) throw InputError("vector dimension mismatch");
    if (!in_dual_cone(pm, y)) return {};
    bool zero = true;
    for (const Rat& x : y) {
        if (x != 0) {
            zero = false;
            break;
        }
    }
    if (zero) return {};

    std::vector<std::pair<int, int>> tight_pairs;
    std::vector<RatVec> rows;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            if (pm.price(i, j) * y[i] == y[j]) {
                tight_pairs.emplace_back(i, j);
                RatVec row(d, Rat(0));
                row[i] = pm.price(i, j);
                row[j] = -1;
                rows.push_back(std::move(row));
            }
        }
    }
    const std::vector<std::size_t> basis = greedy_independent_rows(rows);
    ExtremeCertificate cert;
    cert.extreme = static_cast<int>(basis.size()) == d - 1;
    for (std::size_t idx : basis) cert.tight_basis.push_back(tight_pairs[idx]);
    return cert;
}

ExtremeSet enumerate_extreme_directions(const PriceMatrix& pm, const EnumerateOptions& opts) {
    const int d = pm.dim();
    EnumerationStrategy strategy = opts.strategy;
    if (strategy == EnumerationStrategy::Auto) {
        strategy = d <= 8 ? EnumerationStrategy::Trees : EnumerationStrategy::Algorithmic;
    }
    const int threads = std::max(1, opts.threads);

    // Every bipartition costs at least one unit of work, so refuse upfront
    // when there are more bipartitions than budget.
    if (d >= 63 || ((std::uint64_t{1} << d) - 2) > opts.budget) {
        throw BudgetError("bipartition count 2^" + std::to_string(d) +
                          " - 2 exceeds work budget " + std::to_string(opts.budget));
    }

    std::vector<Bipartition> bipartitions;
    for_each_bipartition(d, [&](const Bipartition& bp) {
        bipartitions.push_back(bp);
        return true;
    });

    WorkBudget budget(opts.budget);
    std::atomic<std::size_t> exceeded_at{bipartitions.size()};

    auto run_rank = [&](std::size_t rank) -> std::vector<BipEntry> {
        const Bipartition& bp = bipartitions[rank];
        bool exceeded = false;
        auto found = bipartition_candidates(pm, bp, strategy, budget, exceeded);
        std::vector<BipEntry> entries;
        for (auto& [y, tree] : found) {
            if (exceeded) break;
            auto [pc, nc] = config_sets_metered(pm, bp, y, budget, exceeded);
            if (exceeded) break;
            entries.push_back(BipEntry{y, tree, std::move(pc), std::move(nc)});
        }
        if (exceeded) {
            std::size_t prev = exceeded_at.load();
            while (rank < prev && !exceeded_at.compare_exchange_weak(prev, rank)) {}
        }
        return entries;
    };

    std::vector<std::vector<BipEntry>> results(bipartitions.size());
    if (threads == 1) {
        for (std::size_t rank = 0; rank < bipartitions.size(); ++rank) {
            results[rank] = run_rank(rank);
            if (exceeded_at.load() != bipartitions.size()) break;
        }
    } else {
        std::vector<std::future<void>> workers;
        workers.reserve(threads);
        for (int w = 0; w < threads; ++w) {
            workers.push_back(std::async(std::launch::async, [&, w]() {
                for (std::size_t rank = w; rank < bipartitions.size();
                     rank += static_cast<std::size_t>(threads)) {
                    if (exceeded_at.load() != bipartitions.size()) return;
                    results[rank] = run_rank(rank);
                }
            }));
        }
        for (auto& f : workers) f.get();
    }

    const std::size_t bad = exceeded_at.load();
    if (bad != bipartitions.size()) {
        throw BudgetError("enumeration work budget " + std::to_string(opts.budget) +
                          " exceeded at bipartition P=" + p_side_str(bipartitions[bad]));
    }

    ExtremeSet out;
    out.d = d;
    std::set<RatVec, RatVecLess> seen;
    for (std::size_t rank = 0; rank < bipartitions.size(); ++rank) {
        for (BipEntry& e : results[rank]) {
            if (!seen.insert(e.y).second) continue;
            out.directions.push_back(ExtremeDirection{std::move(e.y), bipartitions[rank],
                                                      SpanningTree{std::move(e.tree)},
                                                      std::move(e.p_configs), std::move(e.n_configs)});
        }
    }
    return out;
}

std::pair<Int, Int> count_bounds(int d) {
    if (d < 2) throw InputError("count_bounds needs d >= 2");
    Int lower;
    mpz_ui_pow_ui(lower.get_mpz_t(), 2, static_cast<unsigned long>(d));
    lower -= 2;
    Int upper = 0;
    for (int p = 1; p <= d - 1; ++p) {
        Int a, b;
        mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(d - 2), static_cast<unsigned long>(p - 1));
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(p));
        upper += a * b;
    }
    return {lower, upper};
}

bool is_solvent(const ExtremeSet& extremes, const RatVec& x) {
    if (extremes.directions.empty()) throw InputError("extreme set is empty");
    if (static_cast<int>(x.size()) != extremes.d) throw InputError("portfolio dimension mismatch");
    for (const ExtremeDirection& dir : extremes.directions) {
        Rat dot(0);
        for (std::size_t i = 0; i < x.size(); ++i) dot += dir.y[i] * x[i];
        if (dot < 0) return false;
    }
    return true;
}

std::vector<FacetCheck> facet_values(const ExtremeSet& extremes, const RatVec& x) {
    if (static_cast<int>(x.size()) != extremes.d) throw InputError("portfolio dimension mismatch");
    std::vector<FacetCheck> out;
    for (std::size_t idx = 0; idx < extremes.directions.size(); ++idx) {
        Rat dot(0);
        for (std::size_t i = 0; i < x.size(); ++i) dot += extremes.directions[idx].y[i] * x[i];
        out.push_back(FacetCheck{idx, std::move(dot)});
    }
    return out;
}

TradePlan trade_plan(const PriceMatrix& pm, const ExtremeSet& extremes, const RatVec& x,
                     std::uint64_t budget) {
    const int d = pm.dim();
    if (static_cast<int>(x.size()) != d) throw InputError("portfolio dimension mismatch");
    std::vector<int> p, n;
    for (int v = 0; v < d; ++v) {
        (x[v] >= 0 ? p : n).push_back(v); // zero positions count as long
    }
    if (n.empty()) throw InputError("portfolio is already solvent: no short position to cover");
    if (p.empty()) throw InputError("portfolio has no positive position to trade away");

    TradePlan plan{Bipartition(std::move(p), std::move(n)), false, {}};
    plan.solvent = is_solvent(extremes, x);

    WorkBudget meter(budget);
    bool exceeded = false;
    auto found = bipartition_candidates(pm, plan.bp, EnumerationStrategy::Trees, meter, exceeded);
    if (exceeded) {
        throw BudgetError("trade plan enumeration exceeded work budget " + std::to_string(budget));
    }
    for (auto& [y, tree] : found) {
        auto [pc, nc] = config_sets_metered(pm, plan.bp, y, meter, exceeded);
        if (exceeded) {
            throw BudgetError("trade plan enumeration exceeded work budget " + std::to_string(budget));
        }
        SpanningTree st{tree};
        std::vector<int> contribution = degree_sequence(plan.bp, st, Side::P).values;
        plan.solutions.push_back(TradePlanEntry{y, std::move(st), std::move(contribution),
                                                std::move(pc), std::move(nc)});
    }
    return plan;
}

std::pair<ConfigSet, ConfigSet> config_sets(const PriceMatrix& pm, const Bipartition& bp,
                                            const RatVec& y, std::uint64_t budget) {
    return degree_sequence_sets(tight_graph(pm, bp, y), budget);
}

} // namespace solvency
