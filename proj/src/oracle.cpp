#include "solvency/oracle.hpp"

#include "solvency/bipartite.hpp"
#include "solvency/errors.hpp"
#include "solvency/exactla.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace solvency {

namespace {

// Independent tree-equation solver, kept separate from the main library path
// on purpose: the oracle should not inherit its bugs.
RatVec solve_tree(const PriceMatrix& pm, const Bipartition& bp, const std::vector<Arc>& arcs) {
    const int d = pm.dim();
    std::vector<std::vector<int>> adj(d);
    for (const Arc& a : arcs) {
        adj[a.first].push_back(a.second);
        adj[a.second].push_back(a.first);
    }
    RatVec y(d, Rat(0));
    std::vector<char> known(d, 0);
    std::vector<int> stack{0};
    y[0] = 1;
    known[0] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (known[w]) continue;
            y[w] = bp.in_p(v) ? Rat(pm.price(v, w) * y[v]) : Rat(y[v] / pm.price(w, v));
            known[w] = 1;
            stack.push_back(w);
        }
    }
    return y;
}

bool satisfies_all(const PriceMatrix& pm, const Bipartition& bp, const RatVec& y) {
    for (int i : bp.p()) {
        for (int j : bp.n()) {
            if (pm.price(i, j) * y[i] < y[j]) return false;
        }
    }
    return true;
}

} // namespace

HRepresentation h_representation(const PriceMatrix& pm) {
    const int d = pm.dim();
    HRepresentation h;
    h.d = d;
    h.rows.reserve(static_cast<std::size_t>(d) * d + d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            RatVec row(d, Rat(0));
            if (i != j) {
                row[i] = pm.price(i, j);
                row[j] = -1;
            }
            h.rows.push_back(std::move(row));
        }
    }
    for (int i = 0; i < d; ++i) {
        RatVec row(d, Rat(0));
        row[i] = 1;
        h.rows.push_back(std::move(row));
    }
    return h;
}

ExtremeSet brute_force_extremes(const PriceMatrix& pm, std::uint64_t budget) {
    const int d = pm.dim();
    if (d > 8) throw BudgetError("brute force oracle supports d <= 8, got d = " + std::to_string(d));

    ExtremeSet out;
    out.d = d;
    std::set<RatVec, RatVecLess> seen;
    std::uint64_t used = 0;
    bool exceeded = false;

    for_each_bipartition(d, [&](const Bipartition& bp) {
        std::map<RatVec, std::vector<Arc>, RatVecLess> found;
        for_each_spanning_tree(complete_bipartite(bp), [&](const std::vector<Arc>& arcs) {
            if (used++ >= budget) {
                exceeded = true;
                return false;
            }
            RatVec y = solve_tree(pm, bp, arcs);
            if (satisfies_all(pm, bp, y)) found.try_emplace(canonical_scaled(y), arcs);
            return true;
        });
        if (exceeded) return false;
        for (auto& [y, arcs] : found) {
            if (!seen.insert(y).second) continue;
            auto [pc, nc] = degree_sequence_sets(tight_graph(pm, bp, y), budget);
            out.directions.push_back(ExtremeDirection{y, bp, SpanningTree{std::move(arcs)},
                                                      std::move(pc), std::move(nc)});
        }
        return true;
    });
    if (exceeded) {
        throw BudgetError("brute force oracle exceeded tree budget " + std::to_string(budget));
    }
    return out;
}

std::vector<RatVec> double_description_extremes(const HRepresentation& h, std::uint64_t budget) {
    const int d = h.d;
    if (d < 2) throw InputError("double description needs d >= 2");
    if (d > 5) throw BudgetError("double description oracle supports d <= 5, got d = " + std::to_string(d));
    for (const RatVec& row : h.rows) {
        if (static_cast<int>(row.size()) != d) throw InputError("H-representation row length mismatch");
    }

    struct Ray {
        RatVec y;
        std::vector<char> tight; // aligned with `active`, the processed nonzero rows
    };

    auto dot = [d](const RatVec& r, const RatVec& y) {
        Rat s(0);
        for (int t = 0; t < d; ++t) s += r[t] * y[t];
        return s;
    };

    // Seed with the nonnegativity cone: rays e^i, already tight on every
    // nonnegativity row but their own.
    std::vector<RatVec> active;
    std::vector<Ray> rays;
    for (int i = 0; i < d; ++i) {
        RatVec row(d, Rat(0));
        row[i] = 1;
        active.push_back(std::move(row));
    }
    for (int i = 0; i < d; ++i) {
        RatVec y(d, Rat(0));
        y[i] = 1;
        std::vector<char> tight(d, 1);
        tight[i] = 0;
        rays.push_back(Ray{std::move(y), std::move(tight)});
    }

    std::uint64_t used = 0;
    std::vector<RatVec> pending;
    for (const RatVec& row : h.rows) {
        bool zero = std::all_of(row.begin(), row.end(), [](const Rat& x) { return x == 0; });
        if (zero) continue; // diagonal rows constrain nothing
        bool is_unit_seed = false;
        for (int i = 0; i < d && !is_unit_seed; ++i) {
            is_unit_seed = row == active[i];
        }
        if (is_unit_seed) continue; // already part of the seed cone
        pending.push_back(row);
    }

    for (const RatVec& row : pending) {
        std::vector<std::size_t> plus, minus;
        std::vector<Rat> value(rays.size());
        for (std::size_t k = 0; k < rays.size(); ++k) {
            value[k] = dot(row, rays[k].y);
            if (value[k] > 0) plus.push_back(k);
            if (value[k] < 0) minus.push_back(k);
        }

        std::vector<Ray> fresh_rays;
        for (std::size_t p : plus) {
            for (std::size_t m : minus) {
                if (used++ >= budget) {
                    throw BudgetError("double description exceeded work budget " + std::to_string(budget));
                }
                std::vector<std::size_t> common;
                for (std::size_t t = 0; t < active.size(); ++t) {
                    if (rays[p].tight[t] && rays[m].tight[t]) common.push_back(t);
                }
                if (static_cast<int>(common.size()) < d - 2) continue;
                std::vector<RatVec> sub;
                sub.reserve(common.size());
                for (std::size_t t : common) sub.push_back(active[t]);
                if (rank_exact(sub) != d - 2) continue;

                RatVec w(d, Rat(0));
                for (int t = 0; t < d; ++t) {
                    w[t] = value[p] * rays[m].y[t] - value[m] * rays[p].y[t];
                }
                w = scaled_by_max(w);
                Ray fresh;
                fresh.tight.reserve(active.size() + 1);
                for (const RatVec& r : active) fresh.tight.push_back(dot(r, w) == 0 ? 1 : 0);
                fresh.tight.push_back(1); // tight on the row being inserted
                fresh.y = std::move(w);
                fresh_rays.push_back(std::move(fresh));
            }
        }

        std::vector<Ray> next;
        next.reserve(rays.size() + fresh_rays.size());
        for (std::size_t k = 0; k < rays.size(); ++k) {
            if (value[k] < 0) continue;
            Ray kept = std::move(rays[k]);
            kept.tight.push_back(value[k] == 0 ? 1 : 0);
            next.push_back(std::move(kept));
        }
        for (Ray& r : fresh_rays) next.push_back(std::move(r));

        active.push_back(row);
        rays = std::move(next);
    }

    std::vector<RatVec> out;
    out.reserve(rays.size());
    for (Ray& r : rays) out.push_back(scaled_by_max(r.y));
    std::sort(out.begin(), out.end(), RatVecLess{});
    return out;
}

RankCertificate rank_certificate(const PriceMatrix& pm, const RatVec& y) {
    const int d = pm.dim();
    if (static_cast<int>(y.size()) != d) throw InputError("vector dimension mismatch");
    if (!in_dual_cone(pm, y)) throw InputError("rank certificate requires y in the dual cone");

    RankCertificate cert;
    cert.extreme_test = is_extreme(pm, y).extreme;

    std::vector<RatVec> tight_rows;
    std::vector<int> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int components = d;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            if (pm.price(i, j) * y[i] == y[j]) {
                RatVec row(d, Rat(0));
                row[i] = pm.price(i, j);
                row[j] = -1;
                tight_rows.push_back(std::move(row));
                const int a = find(i), b = find(j);
                if (a != b) {
                    parent[a] = b;
                    --components;
                }
            }
        }
    }
    cert.rank_test = rank_exact(tight_rows) == d - 1;
    cert.spanning_test = components == 1;
    return cert;
}

bool rank_certificate_check(const PriceMatrix& pm, const RatVec& y) {
    const RankCertificate cert = rank_certificate(pm, y);
    if (!cert.agree()) {
        throw InternalError("extremality certificates disagree");
    }
    return cert.extreme_test;
}

} // namespace solvency
