#ifndef SOLVENCY_BIPARTITE_HPP
#define SOLVENCY_BIPARTITE_HPP

#include "solvency/rational.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace solvency {

// Arc (i, j): i on the P side, j on the N side. Vertices are 0-based global
// asset indices; external I/O converts to 1-based.
using Arc = std::pair<int, int>;

// Ordered partition of {0, ..., d-1} into nonempty P (long positions) and
// N (short positions).
class Bipartition {
public:
    Bipartition(std::vector<int> p, std::vector<int> n);
    static Bipartition from_p(std::vector<int> p, int d);

    const std::vector<int>& p() const { return p_; }
    const std::vector<int>& n() const { return n_; }
    int dim() const { return static_cast<int>(p_.size() + n_.size()); }
    bool in_p(int v) const;
    int p_index(int v) const; // position of v in the sorted P list
    int n_index(int v) const;

    bool operator==(const Bipartition& other) const { return p_ == other.p_ && n_ == other.n_; }

private:
    std::vector<int> p_;
    std::vector<int> n_;
};

// Directed bipartite graph with all arcs oriented P -> N.
struct BipartiteDigraph {
    Bipartition bp;
    std::vector<Arc> arcs; // sorted, unique, subset of P x N

    BipartiteDigraph(Bipartition bp_in, std::vector<Arc> arcs_in);
    bool connected() const; // as an undirected graph spanning all d vertices
};

BipartiteDigraph complete_bipartite(const Bipartition& bp);

// Spanning tree of some bipartite digraph, stored as its sorted arc list.
struct SpanningTree {
    std::vector<Arc> arcs;
    bool operator==(const SpanningTree&) const = default;
};

bool is_spanning_tree(const Bipartition& bp, const std::vector<Arc>& arcs);
SpanningTree checked_spanning_tree(const Bipartition& bp, std::vector<Arc> arcs);

inline constexpr std::uint64_t kDefaultTreeBudget = 10'000'000;

// Contraction-deletion enumeration over the lexicographic arc order; trees are
// visited in lexicographic order of their arc sets (include-first).
// The visitor returns false to stop early.
void for_each_spanning_tree(const BipartiteDigraph& g,
                            const std::function<bool(const std::vector<Arc>&)>& visit);

// Collecting variant; throws BudgetError when more than `budget` trees exist.
std::vector<SpanningTree> enumerate_spanning_trees(const BipartiteDigraph& g,
                                                   std::uint64_t budget = kDefaultTreeBudget);

// p^(n-1) * n^(p-1), the spanning-tree count of the complete bipartite graph.
Int complete_bipartite_tree_count(int p, int n);

enum class Side { P, N };

// Degree vector of a tree on one side, aligned with the sorted side list.
struct Configuration {
    Side side = Side::P;
    std::vector<int> values;
    bool operator==(const Configuration&) const = default;
};

Configuration degree_sequence(const Bipartition& bp, const SpanningTree& tree, Side side);

using ConfigSet = std::set<std::vector<int>>;

// Left and right degree-sequence sets over all spanning trees of h.
// The two sets always have equal cardinality.
std::pair<ConfigSet, ConfigSet> degree_sequence_sets(const BipartiteDigraph& h,
                                                     std::uint64_t budget = kDefaultTreeBudget);

// Closed walk visiting distinct vertices, alternating between arcs of two
// equal-left-degree spanning trees. nodes.front() == nodes.back();
// arcs[l] joins nodes[l] and nodes[l+1]; even positions hold T-arcs (starting
// with the requested one, traversed tail to head), odd positions S-arcs.
struct AlternatingCycle {
    std::vector<int> nodes;
    std::vector<Arc> arcs;
};

// Requires deg_S(P) == deg_T(P) and arc in E(T) \ E(S).
AlternatingCycle alternating_cycle(const Bipartition& bp, const SpanningTree& s,
                                   const SpanningTree& t, const Arc& arc);

// Checks that `cycle` is a valid alternation between s and t containing `arc`.
bool is_valid_alternating_cycle(const Bipartition& bp, const SpanningTree& s,
                                const SpanningTree& t, const Arc& arc,
                                const AlternatingCycle& cycle);

// a is a nonnegative integer vector aligned with the sorted P list. True when
// sum(a) = |N| - 1 and every nonempty subset S of P has
// |neighborhood(S)| >= sum(a over S) + 1. Requires no isolated vertices.
bool is_draconian(const BipartiteDigraph& h, const std::vector<int>& a);

// The draconian vectors of h are exactly the left tree-degree sequences
// shifted down by one. Requires h connected.
bool draconian_equals_degrees(const BipartiteDigraph& h, std::uint64_t budget = kDefaultTreeBudget);

// Positive compositions of `total` into `parts` parts, lexicographically
// increasing. next_composition advances in place and returns false at the end.
std::vector<int> first_composition(int parts, int total);
bool next_composition(std::vector<int>& v);

// Nonnegative variant (used for draconian candidate vectors).
std::vector<int> first_composition_nonneg(int parts, int total);
bool next_composition_nonneg(std::vector<int>& v);

// Visits every bipartition of {0,...,d-1} in canonical order: by |P|
// ascending, then P lexicographically. Visitor returns false to stop.
void for_each_bipartition(int d, const std::function<bool(const Bipartition&)>& visit);

} // namespace solvency

#endif // SOLVENCY_BIPARTITE_HPP
