#include "solvency/special_case.hpp"

#include "solvency/errors.hpp"

#include <set>
#include <string>

namespace solvency {

namespace {

constexpr int kMaxExponentialDim = 30;

void require_tractable(int d, const char* what) {
    if (d > kMaxExponentialDim) {
        throw BudgetError(std::string(what) + " enumerates 2^d terms; d = " + std::to_string(d) +
                          " exceeds the supported limit " + std::to_string(kMaxExponentialDim));
    }
}

int checked_equal_index(const BidAskQuote& q, int k, const char* what) {
    if (k < 0 || k >= q.dim()) {
        throw InputError(std::string(what) + ": asset index out of range");
    }
    if (q.bid[k] != q.ask[k]) {
        throw InputError(std::string(what) + ": needs bid = ask at the given asset");
    }
    return k;
}

} // namespace

RatVec bid_ask_generator_for(const BidAskQuote& q, const Bipartition& bp) {
    if (bp.dim() != q.dim()) throw InputError("bipartition dimension mismatch");
    RatVec y(q.ask);
    for (int i : bp.p()) y[i] = q.bid[i];
    return y;
}

GeneratorMatrix bid_ask_generators(const BidAskQuote& q) {
    const int d = q.dim();
    require_tractable(d, "bid_ask_generators");
    std::vector<RatVec> cols{{q.ask[0], q.bid[1]}, {q.bid[0], q.ask[1]}};
    for (int m = 3; m <= d; ++m) {
        std::vector<RatVec> next;
        next.reserve(2 * cols.size() + 2);
        for (const RatVec& c : cols) {
            RatVec e = c;
            e.push_back(q.ask[m - 1]);
            next.push_back(std::move(e));
        }
        RatVec bcol(q.bid.begin(), q.bid.begin() + (m - 1));
        bcol.push_back(q.ask[m - 1]);
        next.push_back(std::move(bcol));
        for (const RatVec& c : cols) {
            RatVec e = c;
            e.push_back(q.bid[m - 1]);
            next.push_back(std::move(e));
        }
        RatVec acol(q.ask.begin(), q.ask.begin() + (m - 1));
        acol.push_back(q.bid[m - 1]);
        next.push_back(std::move(acol));
        cols = std::move(next);
    }
    return GeneratorMatrix{d, std::move(cols)};
}

std::vector<RatVec> canonical_columns(const GeneratorMatrix& m) {
    std::set<RatVec, RatVecLess> seen;
    for (const RatVec& c : m.columns) seen.insert(canonical_scaled(c));
    return {seen.begin(), seen.end()};
}

bool halfspace_test(const BidAskQuote& q, const RatVec& x) {
    const int d = q.dim();
    if (static_cast<int>(x.size()) != d) throw InputError("portfolio dimension mismatch");
    require_tractable(d, "halfspace_test");
    const std::uint64_t all = (std::uint64_t{1} << d) - 1;
    for (std::uint64_t mask = 1; mask < all; ++mask) { // mask bit v set <=> v in P
        Rat sum(0);
        for (int v = 0; v < d; ++v) {
            sum += ((mask >> v) & 1 ? q.bid[v] : q.ask[v]) * x[v];
        }
        if (sum < 0) return false;
    }
    return true;
}

GeneratorMatrix degenerate_generators(const BidAskQuote& q, int k) {
    const int d = q.dim();
    checked_equal_index(q, k, "degenerate_generators");
    require_tractable(d, "degenerate_generators");
    std::vector<int> rest;
    for (int v = 0; v < d; ++v) {
        if (v != k) rest.push_back(v);
    }
    GeneratorMatrix out{d, {}};
    std::set<RatVec, RatVecLess> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (d - 1)); ++mask) {
        RatVec y(q.ask);
        for (int t = 0; t < d - 1; ++t) {
            if ((mask >> t) & 1) y[rest[t]] = q.bid[rest[t]];
        }
        if (seen.insert(canonical_scaled(y)).second) out.columns.push_back(std::move(y));
    }
    return out;
}

std::vector<RatVec> reduced_primal_generators(const BidAskQuote& q, int k) {
    const int d = q.dim();
    checked_equal_index(q, k, "reduced_primal_generators");
    std::vector<RatVec> gens;
    gens.reserve(2 * (d - 1));
    for (int i = 0; i < d; ++i) {
        if (i == k) continue;
        RatVec g(d, Rat(0));
        g[i] = q.ask[k];
        g[k] = -q.bid[i];
        gens.push_back(std::move(g));
    }
    for (int j = 0; j < d; ++j) {
        if (j == k) continue;
        RatVec g(d, Rat(0));
        g[k] = q.ask[j];
        g[j] = -q.bid[k];
        gens.push_back(std::move(g));
    }

    // Every omitted generator must split into the two reduced ones through k.
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i == j || i == k || j == k) continue;
            RatVec lhs(d, Rat(0));
            lhs[i] = q.ask[j] / q.bid[i];
            lhs[j] = -1;
            const Rat alpha = q.ask[j] / q.ask[k];
            RatVec rhs(d, Rat(0));
            rhs[i] = alpha * (q.ask[k] / q.bid[i]);
            rhs[k] = -alpha + q.ask[j] / q.bid[k];
            rhs[j] = -1;
            if (lhs != rhs) {
                throw InternalError("reduced primal generator decomposition failed");
            }
        }
    }
    return gens;
}

} // namespace solvency
