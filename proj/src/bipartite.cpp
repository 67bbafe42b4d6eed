#include "solvency/bipartite.hpp"

#include "solvency/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace solvency {

namespace {

std::string arc_str(const Arc& a) {
    return "(" + std::to_string(a.first + 1) + "," + std::to_string(a.second + 1) + ")";
}

void require_sorted_unique(std::vector<int>& v, const char* what) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
        throw InputError(std::string(what) + " contains a repeated index");
    }
}

// Small union-find on 0..n-1 without path compression so unions can be
// rolled back during tree enumeration.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int v) const {
        while (parent_[v] != v) v = parent_[v];
        return v;
    }

    // Returns true if a merge happened (roots differed).
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        trail_.push_back({b, rank_[a]});
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

    void rollback() {
        const auto [child, old_rank] = trail_.back();
        trail_.pop_back();
        rank_[parent_[child]] = old_rank;
        parent_[child] = child;
    }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    struct Undo { int child; int parent_rank; };
    std::vector<Undo> trail_;
};

} // namespace

Bipartition::Bipartition(std::vector<int> p, std::vector<int> n) : p_(std::move(p)), n_(std::move(n)) {
    if (p_.empty() || n_.empty()) throw InputError("both sides of a bipartition must be nonempty");
    require_sorted_unique(p_, "P");
    require_sorted_unique(n_, "N");
    const int d = dim();
    std::vector<char> seen(d, 0);
    for (int v : p_) {
        if (v < 0 || v >= d) throw InputError("bipartition index out of range");
        seen[v] = 1;
    }
    for (int v : n_) {
        if (v < 0 || v >= d || seen[v]) throw InputError("P and N must partition the asset set");
        seen[v] = 1;
    }
}

Bipartition Bipartition::from_p(std::vector<int> p, int d) {
    require_sorted_unique(p, "P");
    std::vector<char> in_p(d, 0);
    for (int v : p) {
        if (v < 0 || v >= d) throw InputError("bipartition index out of range");
        in_p[v] = 1;
    }
    std::vector<int> n;
    for (int v = 0; v < d; ++v) {
        if (!in_p[v]) n.push_back(v);
    }
    return Bipartition(std::move(p), std::move(n));
}

bool Bipartition::in_p(int v) const {
    return std::binary_search(p_.begin(), p_.end(), v);
}

int Bipartition::p_index(int v) const {
    const auto it = std::lower_bound(p_.begin(), p_.end(), v);
    if (it == p_.end() || *it != v) throw InputError("vertex not on the P side");
    return static_cast<int>(it - p_.begin());
}

int Bipartition::n_index(int v) const {
    const auto it = std::lower_bound(n_.begin(), n_.end(), v);
    if (it == n_.end() || *it != v) throw InputError("vertex not on the N side");
    return static_cast<int>(it - n_.begin());
}

BipartiteDigraph::BipartiteDigraph(Bipartition bp_in, std::vector<Arc> arcs_in)
    : bp(std::move(bp_in)), arcs(std::move(arcs_in)) {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    for (const Arc& a : arcs) {
        if (!bp.in_p(a.first)) throw InputError("arc tail " + arc_str(a) + " is not on the P side");
        const bool head_ok = std::binary_search(bp.n().begin(), bp.n().end(), a.second);
        if (!head_ok) throw InputError("arc head " + arc_str(a) + " is not on the N side");
    }
}

bool BipartiteDigraph::connected() const {
    const int d = bp.dim();
    if (static_cast<int>(arcs.size()) < d - 1) return false;
    UnionFind uf(d);
    int components = d;
    for (const Arc& a : arcs) {
        if (uf.unite(a.first, a.second)) --components;
    }
    return components == 1;
}

BipartiteDigraph complete_bipartite(const Bipartition& bp) {
    std::vector<Arc> arcs;
    arcs.reserve(bp.p().size() * bp.n().size());
    for (int i : bp.p()) {
        for (int j : bp.n()) arcs.emplace_back(i, j);
    }
    return BipartiteDigraph(bp, std::move(arcs));
}

bool is_spanning_tree(const Bipartition& bp, const std::vector<Arc>& arcs) {
    const int d = bp.dim();
    if (static_cast<int>(arcs.size()) != d - 1) return false;
    UnionFind uf(d);
    for (const Arc& a : arcs) {
        if (a.first < 0 || a.first >= d || a.second < 0 || a.second >= d) return false;
        if (!bp.in_p(a.first) || bp.in_p(a.second)) return false;
        if (!uf.unite(a.first, a.second)) return false; // cycle
    }
    return true; // d-1 acyclic edges on d vertices span
}

SpanningTree checked_spanning_tree(const Bipartition& bp, std::vector<Arc> arcs) {
    std::sort(arcs.begin(), arcs.end());
    if (!is_spanning_tree(bp, arcs)) {
        throw InputError("arc set is not a spanning tree of the bipartition");
    }
    return SpanningTree{std::move(arcs)};
}

namespace {

// Recursive include/exclude search over the sorted arc list. The exclude
// branch is pruned when the already-chosen arcs plus the remaining candidates
// can no longer connect everything.
class TreeEnumerator {
public:
    TreeEnumerator(const BipartiteDigraph& g, const std::function<bool(const std::vector<Arc>&)>& visit)
        : arcs_(g.arcs), d_(g.bp.dim()), visit_(visit), uf_(d_) {}

    void run() {
        chosen_.reserve(d_ - 1);
        recurse(0);
    }

private:
    bool recurse(std::size_t idx) {
        if (static_cast<int>(chosen_.size()) == d_ - 1) return visit_(chosen_);
        if (idx >= arcs_.size()) return true;
        if (chosen_.size() + (arcs_.size() - idx) < static_cast<std::size_t>(d_ - 1)) return true;

        const Arc& a = arcs_[idx];
        if (uf_.find(a.first) != uf_.find(a.second)) {
            uf_.unite(a.first, a.second);
            chosen_.push_back(a);
            const bool keep_going = recurse(idx + 1);
            chosen_.pop_back();
            uf_.rollback();
            if (!keep_going) return false;
        }
        if (connectable_without(idx)) {
            return recurse(idx + 1);
        }
        return true;
    }

    // Can chosen + arcs after idx still connect all vertices?
    bool connectable_without(std::size_t idx) const {
        UnionFind probe(d_);
        int components = d_;
        for (const Arc& a : chosen_) {
            if (probe.unite(a.first, a.second)) --components;
        }
        for (std::size_t l = idx + 1; l < arcs_.size() && components > 1; ++l) {
            if (probe.unite(arcs_[l].first, arcs_[l].second)) --components;
        }
        return components == 1;
    }

    const std::vector<Arc>& arcs_;
    int d_;
    const std::function<bool(const std::vector<Arc>&)>& visit_;
    UnionFind uf_;
    std::vector<Arc> chosen_;
};

} // namespace

void for_each_spanning_tree(const BipartiteDigraph& g,
                            const std::function<bool(const std::vector<Arc>&)>& visit) {
    if (!g.connected()) return;
    TreeEnumerator(g, visit).run();
}

std::vector<SpanningTree> enumerate_spanning_trees(const BipartiteDigraph& g, std::uint64_t budget) {
    std::vector<SpanningTree> out;
    bool exceeded = false;
    for_each_spanning_tree(g, [&](const std::vector<Arc>& arcs) {
        if (out.size() == budget) {
            exceeded = true;
            return false;
        }
        out.push_back(SpanningTree{arcs});
        return true;
    });
    if (exceeded) {
        throw BudgetError("spanning-tree enumeration exceeded budget of " + std::to_string(budget));
    }
    return out;
}

Int complete_bipartite_tree_count(int p, int n) {
    if (p < 1 || n < 1) throw InputError("side sizes must be positive");
    Int a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n - 1));
    mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(p - 1));
    return a * b;
}

Configuration degree_sequence(const Bipartition& bp, const SpanningTree& tree, Side side) {
    const auto& nodes = side == Side::P ? bp.p() : bp.n();
    Configuration config;
    config.side = side;
    config.values.assign(nodes.size(), 0);
    for (const Arc& a : tree.arcs) {
        const int v = side == Side::P ? a.first : a.second;
        const int pos = side == Side::P ? bp.p_index(v) : bp.n_index(v);
        ++config.values[pos];
    }
    return config;
}

std::pair<ConfigSet, ConfigSet> degree_sequence_sets(const BipartiteDigraph& h, std::uint64_t budget) {
    ConfigSet left, right;
    std::uint64_t seen = 0;
    bool exceeded = false;
    for_each_spanning_tree(h, [&](const std::vector<Arc>& arcs) {
        if (seen == budget) {
            exceeded = true;
            return false;
        }
        ++seen;
        std::vector<int> dp(h.bp.p().size(), 0);
        std::vector<int> dn(h.bp.n().size(), 0);
        for (const Arc& a : arcs) {
            ++dp[h.bp.p_index(a.first)];
            ++dn[h.bp.n_index(a.second)];
        }
        left.insert(std::move(dp));
        right.insert(std::move(dn));
        return true;
    });
    if (exceeded) {
        throw BudgetError("degree-sequence collection exceeded budget of " + std::to_string(budget));
    }
    return {std::move(left), std::move(right)};
}

AlternatingCycle alternating_cycle(const Bipartition& bp, const SpanningTree& s,
                                   const SpanningTree& t, const Arc& arc) {
    if (!is_spanning_tree(bp, s.arcs) || !is_spanning_tree(bp, t.arcs)) {
        throw InputError("alternating_cycle expects two spanning trees of the bipartition");
    }
    const Configuration ds = degree_sequence(bp, s, Side::P);
    const Configuration dt = degree_sequence(bp, t, Side::P);
    if (ds.values != dt.values) {
        throw InputError("alternating_cycle requires equal left degree sequences");
    }
    const bool in_t = std::binary_search(t.arcs.begin(), t.arcs.end(), arc);
    const bool in_s = std::binary_search(s.arcs.begin(), s.arcs.end(), arc);
    if (!in_t || in_s) {
        throw InputError("requested arc " + arc_str(arc) + " must lie in E(T) \\ E(S)");
    }

    // Auxiliary digraph: S-arcs keep their P -> N direction, T-arcs are
    // reversed. A directed path from the P-endpoint to the N-endpoint of the
    // requested arc closes into the alternating cycle.
    const int d = bp.dim();
    std::vector<std::vector<int>> out(d);
    for (const Arc& a : s.arcs) out[a.first].push_back(a.second);
    for (const Arc& a : t.arcs) out[a.second].push_back(a.first);
    for (auto& nbrs : out) std::sort(nbrs.begin(), nbrs.end());

    const int source = arc.first;
    const int target = arc.second;
    std::vector<int> parent(d, -1);
    std::vector<char> visited(d, 0);
    visited[source] = 1;
    std::vector<int> stack{source};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (v == target) break;
        // Depth-first with ascending neighbors pushed in reverse so the
        // smallest neighbor is explored first.
        for (auto it = out[v].rbegin(); it != out[v].rend(); ++it) {
            if (!visited[*it]) {
                visited[*it] = 1;
                parent[*it] = v;
                stack.push_back(*it);
            }
        }
    }
    if (!visited[target]) {
        throw InternalError("auxiliary digraph is not strongly connected; no alternating cycle found");
    }

    // The parent chain walks target back to source, which is exactly the
    // reverse traversal of the directed cycle. Starting at the source keeps
    // the requested T-arc in front.
    AlternatingCycle cycle;
    cycle.nodes.push_back(source);
    for (int v = target; v != -1; v = parent[v]) cycle.nodes.push_back(v);
    for (std::size_t l = 0; l + 1 < cycle.nodes.size(); ++l) {
        const int u = cycle.nodes[l];
        const int v = cycle.nodes[l + 1];
        cycle.arcs.push_back(bp.in_p(u) ? Arc{u, v} : Arc{v, u});
    }
    return cycle;
}

bool is_valid_alternating_cycle(const Bipartition& bp, const SpanningTree& s,
                                const SpanningTree& t, const Arc& arc,
                                const AlternatingCycle& cycle) {
    const auto& nodes = cycle.nodes;
    const auto& arcs = cycle.arcs;
    if (nodes.size() < 5 || nodes.front() != nodes.back()) return false;
    if (arcs.size() + 1 != nodes.size() || arcs.size() % 2 != 0) return false;
    std::vector<int> interior(nodes.begin(), nodes.end() - 1);
    std::vector<int> sorted = interior;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (arcs.front() != arc) return false;
    for (std::size_t l = 0; l < arcs.size(); ++l) {
        const Arc& a = arcs[l];
        const int u = nodes[l];
        const int v = nodes[l + 1];
        const bool joins = (a.first == u && a.second == v) || (a.first == v && a.second == u);
        if (!joins) return false;
        const auto& tree = (l % 2 == 0) ? t : s;
        if (!std::binary_search(tree.arcs.begin(), tree.arcs.end(), a)) return false;
    }
    (void)bp;
    return true;
}

bool is_draconian(const BipartiteDigraph& h, const std::vector<int>& a) {
    const int p = static_cast<int>(h.bp.p().size());
    const int n = static_cast<int>(h.bp.n().size());
    if (static_cast<int>(a.size()) != p) {
        throw InputError("draconian vector length must equal |P|");
    }
    for (int v : a) {
        if (v < 0) throw InputError("draconian vectors are nonnegative");
    }
    if (p > 30 || n > 62) throw BudgetError("draconian check limited to |P| <= 30, |N| <= 62");

    std::vector<std::uint64_t> nbr(p, 0);
    std::vector<char> n_touched(n, 0);
    for (const Arc& e : h.arcs) {
        const int pi = h.bp.p_index(e.first);
        const int nj = h.bp.n_index(e.second);
        nbr[pi] |= std::uint64_t{1} << nj;
        n_touched[nj] = 1;
    }
    for (int i = 0; i < p; ++i) {
        if (nbr[i] == 0) throw InputError("graph has an isolated P vertex");
    }
    for (int j = 0; j < n; ++j) {
        if (!n_touched[j]) throw InputError("graph has an isolated N vertex");
    }

    long long total = 0;
    for (int v : a) total += v;
    if (total != n - 1) return false;

    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p); ++mask) {
        std::uint64_t uni = 0;
        long long sum = 0;
        for (int i = 0; i < p; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                uni |= nbr[i];
                sum += a[i];
            }
        }
        if (static_cast<long long>(__builtin_popcountll(uni)) < sum + 1) return false;
    }
    return true;
}

bool draconian_equals_degrees(const BipartiteDigraph& h, std::uint64_t budget) {
    if (!h.connected()) throw InputError("draconian_equals_degrees expects a connected graph");
    const int p = static_cast<int>(h.bp.p().size());
    const int n = static_cast<int>(h.bp.n().size());

    ConfigSet draconian;
    std::vector<int> a = first_composition_nonneg(p, n - 1);
    while (true) {
        if (is_draconian(h, a)) draconian.insert(a);
        if (!next_composition_nonneg(a)) break;
    }

    ConfigSet degrees_minus_one;
    auto [left, right] = degree_sequence_sets(h, budget);
    (void)right;
    for (const auto& deg : left) {
        std::vector<int> shifted(deg.size());
        for (std::size_t i = 0; i < deg.size(); ++i) shifted[i] = deg[i] - 1;
        degrees_minus_one.insert(std::move(shifted));
    }
    return draconian == degrees_minus_one;
}

std::vector<int> first_composition(int parts, int total) {
    if (parts < 1 || total < parts) throw InputError("no positive composition exists");
    std::vector<int> v(parts, 1);
    v.back() = total - (parts - 1);
    return v;
}

bool next_composition(std::vector<int>& v) {
    const int parts = static_cast<int>(v.size());
    if (parts <= 1) return false;
    int tail = v[parts - 1];
    for (int i = parts - 2; i >= 0; --i) {
        tail += v[i];
        // Increment position i, reset everything to the right to the
        // lexicographically smallest completion.
        if (v[i] + 1 + (parts - 1 - i) <= tail) {
            v[i] += 1;
            int remaining = tail - v[i];
            for (int l = i + 1; l < parts - 1; ++l) {
                v[l] = 1;
                --remaining;
            }
            v[parts - 1] = remaining;
            return true;
        }
    }
    return false;
}

std::vector<int> first_composition_nonneg(int parts, int total) {
    if (parts < 1 || total < 0) throw InputError("no nonnegative composition exists");
    std::vector<int> v(parts, 0);
    v.back() = total;
    return v;
}

bool next_composition_nonneg(std::vector<int>& v) {
    const int parts = static_cast<int>(v.size());
    if (parts <= 1) return false;
    int tail = v[parts - 1];
    for (int i = parts - 2; i >= 0; --i) {
        tail += v[i];
        if (v[i] + 1 <= tail) {
            v[i] += 1;
            for (int l = i + 1; l < parts - 1; ++l) v[l] = 0;
            v[parts - 1] = tail - v[i];
            return true;
        }
    }
    return false;
}

void for_each_bipartition(int d, const std::function<bool(const Bipartition&)>& visit) {
    if (d < 2) throw InputError("bipartitions need d >= 2");
    for (int size = 1; size < d; ++size) {
        std::vector<int> p(size);
        std::iota(p.begin(), p.end(), 0);
        while (true) {
            if (!visit(Bipartition::from_p(p, d))) return;
            // next lexicographic size-combination of {0..d-1}
            int i = size - 1;
            while (i >= 0 && p[i] == d - size + i) --i;
            if (i < 0) break;
            ++p[i];
            for (int l = i + 1; l < size; ++l) p[l] = p[l - 1] + 1;
        }
    }
}

} // namespace solvency
