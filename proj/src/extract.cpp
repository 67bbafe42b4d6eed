#include "solvency/extract.hpp"

#include "solvency/dual_cone.hpp"
#include "solvency/errors.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace solvency {

namespace {

// Recursion state over a pair of shrinking active vertex sets. y is indexed
// positionally, first the active long side in sorted order and then the
// active short side, so reduced subproblems stay compact.
struct SubResult {
    RatVec y;
    std::vector<int> other; // degree sequence materialized on the other side
    std::vector<Arc> tree;  // arcs in global vertex ids
};

struct Extractor {
    const PriceMatrix& pm;
    int depth_limit;

    // The configuration sweeps revisit the same reduced problems for many
    // candidates, and both functions are pure in (active sets, config), so
    // results are cached. The key flattens (side, P, N, config) into one int
    // vector; element references stay valid across later insertions, which
    // lets sweep probes inspect a result without copying it.
    struct KeyHash {
        std::size_t operator()(const std::vector<int>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (int x : v) {
                h ^= static_cast<std::size_t>(x);
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    mutable std::unordered_map<std::vector<int>, SubResult, KeyHash> memo{};

    static std::vector<int> make_key(bool long_side, const std::vector<int>& p,
                                     const std::vector<int>& n, const std::vector<int>& cfg) {
        std::vector<int> key;
        key.reserve(3 + p.size() + n.size() + cfg.size());
        key.push_back(long_side ? 1 : 0);
        key.push_back(static_cast<int>(p.size()));
        key.insert(key.end(), p.begin(), p.end());
        key.push_back(static_cast<int>(n.size()));
        key.insert(key.end(), n.begin(), n.end());
        key.insert(key.end(), cfg.begin(), cfg.end());
        return key;
    }

    const SubResult& getb(const std::vector<int>& p, const std::vector<int>& n,
                          const std::vector<int>& c, int depth) const {
        std::vector<int> key = make_key(true, p, n, c);
        const auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        SubResult res = getb_impl(p, n, c, depth);
        return memo.emplace(std::move(key), std::move(res)).first->second;
    }

    const SubResult& getc(const std::vector<int>& p, const std::vector<int>& n,
                          const std::vector<int>& b, int depth) const {
        std::vector<int> key = make_key(false, p, n, b);
        const auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        SubResult res = getc_impl(p, n, b, depth);
        return memo.emplace(std::move(key), std::move(res)).first->second;
    }

    // A sweep candidate factors through its reduced problem (the entries
    // >= 2); reattaching the peeled degree-one assets only ever increments
    // the opposite-side degrees. A candidate whose reduced result already
    // exceeds the target somewhere therefore cannot be the hit, and the
    // reduced results are shared through the cache, so this test is cheap.
    bool viable_probe(bool long_side, const std::vector<int>& p, const std::vector<int>& n,
                      const std::vector<int>& cand, const std::vector<int>& target,
                      int depth) const {
        const std::vector<int>& own = long_side ? p : n;
        std::vector<int> kept, cfg;
        for (std::size_t l = 0; l < own.size(); ++l) {
            if (cand[l] != 1) {
                kept.push_back(own[l]);
                cfg.push_back(cand[l]);
            }
        }
        if (kept.empty() || kept.size() == own.size()) return true;
        const SubResult& reduced =
            long_side ? getb(kept, n, cfg, depth + 2) : getc(p, kept, cfg, depth + 2);
        for (std::size_t l = 0; l < target.size(); ++l) {
            if (reduced.other[l] > target[l]) return false;
        }
        return true;
    }

    SubResult getb_impl(const std::vector<int>& p, const std::vector<int>& n,
                        const std::vector<int>& c, int depth) const {
        check_depth(depth);

        if (p.size() == 1) {
            // Star from the single long asset.
            const int i = p.front();
            SubResult res;
            res.y.resize(1 + n.size());
            res.y[0] = 1;
            res.other.assign(n.size(), 1);
            res.tree.reserve(n.size());
            for (std::size_t l = 0; l < n.size(); ++l) {
                res.y[1 + l] = pm.price(i, n[l]);
                res.tree.emplace_back(i, n[l]);
            }
            return res;
        }

        std::vector<int> p0, c0;
        for (std::size_t l = 0; l < p.size(); ++l) {
            if (c[l] != 1) {
                p0.push_back(p[l]);
                c0.push_back(c[l]);
            }
        }

        if (!p0.empty() && p0.size() < p.size()) {
            const SubResult& child = getb(p0, n, c0, depth + 1);
            SubResult res;
            res.other = child.other;
            res.tree = child.tree;
            res.tree.reserve(res.tree.size() + (p.size() - p0.size()));
            res.y.resize(p.size() + n.size());
            for (std::size_t l = 0; l < n.size(); ++l) {
                res.y[p.size() + l] = child.y[p0.size() + l];
            }
            std::size_t l0 = 0;
            for (std::size_t l = 0; l < p.size(); ++l) {
                if (c[l] != 1) res.y[l] = child.y[l0++];
            }
            for (std::size_t l = 0; l < p.size(); ++l) {
                if (c[l] != 1) continue;
                const int i = p[l];
                // Attach through the most favorable short asset.
                std::size_t best = 0;
                Rat best_ratio;
                for (std::size_t t = 0; t < n.size(); ++t) {
                    Rat ratio = res.y[p.size() + t] / pm.price(i, n[t]);
                    if (t == 0 || ratio > best_ratio) {
                        best = t;
                        best_ratio = ratio;
                    }
                }
                res.y[l] = best_ratio;
                res.other[best] += 1;
                res.tree.emplace_back(i, n[best]);
            }
            return res;
        }

        // Either every long asset wants one arc (then |N| = 1 and the mirror
        // base case fires immediately) or none does; sweep the opposite
        // configurations until the requested one is materialized.
        const int total = static_cast<int>(p.size() + n.size()) - 1;
        std::vector<int> b = first_composition(static_cast<int>(n.size()), total);
        while (true) {
            if (viable_probe(false, p, n, b, c, depth)) {
                const SubResult& probe = getc(p, n, b, depth + 1);
                if (probe.other == c) {
                    SubResult res = probe;
                    res.other = b;
                    return res;
                }
            }
            if (!next_composition(b)) break;
        }
        throw InternalError("configuration sweep exhausted: no tree materializes the requested "
                            "P-side degrees (degenerate price matrix)");
    }

    SubResult getc_impl(const std::vector<int>& p, const std::vector<int>& n,
                        const std::vector<int>& b, int depth) const {
        check_depth(depth);

        if (n.size() == 1) {
            const int j = n.front();
            SubResult res;
            res.y.resize(p.size() + 1);
            res.y[p.size()] = 1;
            res.other.assign(p.size(), 1);
            res.tree.reserve(p.size());
            for (std::size_t l = 0; l < p.size(); ++l) {
                res.y[l] = Rat(1) / pm.price(p[l], j);
                res.tree.emplace_back(p[l], j);
            }
            return res;
        }

        std::vector<int> n0, b0;
        for (std::size_t l = 0; l < n.size(); ++l) {
            if (b[l] != 1) {
                n0.push_back(n[l]);
                b0.push_back(b[l]);
            }
        }

        if (!n0.empty() && n0.size() < n.size()) {
            const SubResult& child = getc(p, n0, b0, depth + 1);
            SubResult res;
            res.other = child.other;
            res.tree = child.tree;
            res.tree.reserve(res.tree.size() + (n.size() - n0.size()));
            res.y.resize(p.size() + n.size());
            for (std::size_t l = 0; l < p.size(); ++l) res.y[l] = child.y[l];
            std::size_t l0 = 0;
            for (std::size_t l = 0; l < n.size(); ++l) {
                if (b[l] != 1) res.y[p.size() + l] = child.y[p.size() + l0++];
            }
            for (std::size_t l = 0; l < n.size(); ++l) {
                if (b[l] != 1) continue;
                const int j = n[l];
                std::size_t best = 0;
                Rat best_value;
                for (std::size_t t = 0; t < p.size(); ++t) {
                    Rat value = pm.price(p[t], j) * res.y[t];
                    if (t == 0 || value < best_value) {
                        best = t;
                        best_value = value;
                    }
                }
                res.y[p.size() + l] = best_value;
                res.other[best] += 1;
                res.tree.emplace_back(p[best], j);
            }
            return res;
        }

        const int total = static_cast<int>(p.size() + n.size()) - 1;
        std::vector<int> c = first_composition(static_cast<int>(p.size()), total);
        while (true) {
            if (viable_probe(true, p, n, c, b, depth)) {
                const SubResult& probe = getb(p, n, c, depth + 1);
                if (probe.other == b) {
                    SubResult res = probe;
                    res.other = c;
                    return res;
                }
            }
            if (!next_composition(c)) break;
        }
        throw InternalError("configuration sweep exhausted: no tree materializes the requested "
                            "N-side degrees (degenerate price matrix)");
    }

    void check_depth(int depth) const {
        if (depth > depth_limit) {
            throw InternalError("extraction recursion exceeded its depth bound");
        }
    }
};

void validate_config(const Bipartition& bp, const std::vector<int>& config, Side side) {
    const auto& nodes = side == Side::P ? bp.p() : bp.n();
    if (config.size() != nodes.size()) {
        throw InputError("configuration length must match the side it describes");
    }
    long long sum = 0;
    for (int v : config) {
        if (v < 1) throw InputError("configuration entries must be positive integers");
        sum += v;
    }
    if (sum != bp.dim() - 1) {
        throw InputError("configuration entries must sum to d - 1");
    }
}

ExtractionResult finish(const PriceMatrix& pm, const Bipartition& bp, SubResult res,
                        std::vector<int> given_values, Side given_side) {
    std::sort(res.tree.begin(), res.tree.end());
    SpanningTree tree{std::move(res.tree)};

    RatVec full(pm.dim(), Rat(0));
    for (std::size_t l = 0; l < bp.p().size(); ++l) full[bp.p()[l]] = res.y[l];
    for (std::size_t l = 0; l < bp.n().size(); ++l) full[bp.n()[l]] = res.y[bp.p().size() + l];
    DualDirection y = make_canonical(full);
    if (!is_feasible(pm, bp, y.y)) {
        throw InternalError("extraction produced an infeasible tree solution");
    }
    const Side other_side = given_side == Side::P ? Side::N : Side::P;
    ExtractionResult out{std::move(y), std::move(tree),
                         Configuration{given_side, std::move(given_values)},
                         Configuration{other_side, std::move(res.other)}};
    // The materialized tree must realize both degree sequences.
    if (degree_sequence(bp, out.tree, given_side).values != out.given.values ||
        degree_sequence(bp, out.tree, other_side).values != out.complement.values) {
        throw InternalError("extraction tree does not match its degree sequences");
    }
    return out;
}

} // namespace

ExtractionResult extract_with_p_config(const PriceMatrix& pm, const Bipartition& bp,
                                       const std::vector<int>& c) {
    if (bp.dim() != pm.dim()) throw InputError("bipartition dimension mismatch");
    validate_config(bp, c, Side::P);
    Extractor ex{pm, 2 * pm.dim() + 4};
    SubResult res = ex.getb(bp.p(), bp.n(), c, 0);
    return finish(pm, bp, std::move(res), c, Side::P);
}

ExtractionResult extract_with_n_config(const PriceMatrix& pm, const Bipartition& bp,
                                       const std::vector<int>& b) {
    if (bp.dim() != pm.dim()) throw InputError("bipartition dimension mismatch");
    validate_config(bp, b, Side::N);
    Extractor ex{pm, 2 * pm.dim() + 4};
    SubResult res = ex.getc(bp.p(), bp.n(), b, 0);
    return finish(pm, bp, std::move(res), b, Side::N);
}

} // namespace solvency
