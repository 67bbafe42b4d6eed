#include "solvency/prices.hpp"

#include <sstream>

namespace solvency {

namespace {

void require_square(const RatMatrix& pi) {
    const std::size_t d = pi.size();
    if (d < 2) throw InputError("price matrix must be at least 2x2");
    for (const auto& row : pi) {
        if (row.size() != d) throw InputError("price matrix must be square");
    }
}

} // namespace

AxiomReport validate_axioms(const RatMatrix& pi) {
    require_square(pi);
    const int d = static_cast<int>(pi.size());
    AxiomReport r;

    for (int i = 0; i < d && r.holds_1; ++i) {
        if (pi[i][i] != 1) {
            r.holds_1 = false;
            r.violation_1 = i;
        }
    }
    for (int i = 0; i < d && r.holds_2; ++i) {
        for (int j = 0; j < d && r.holds_2; ++j) {
            if (pi[i][j] <= 0) {
                r.holds_2 = false;
                r.violation_2 = std::make_pair(i, j);
            }
        }
    }

    bool strict_everywhere = true; // over triples with k outside {i,j}
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                const Rat product = pi[i][k] * pi[k][j];
                const int c = cmp(pi[i][j], product);
                if (c > 0 && r.holds_3) {
                    r.holds_3 = false;
                    r.violation_3 = IndexTriple{i, j, k};
                }
                if (c < 0 && !r.holds_4) {
                    r.holds_4 = true;
                    r.witness_4 = IndexTriple{i, j, k};
                }
                if (k != i && k != j && c >= 0 && strict_everywhere) {
                    strict_everywhere = false;
                    r.violation_5 = IndexTriple{i, j, k};
                }
            }
        }
    }
    // The strict regime only replaces (3)+(4) when the excluded triples
    // (k = i or k = j) still satisfy the non-strict inequality; with a unit
    // diagonal those are automatic equalities. For d == 2 there are no
    // admissible triples and the condition is vacuous.
    r.holds_5_strict = strict_everywhere && r.holds_3;
    return r;
}

PriceMatrix PriceMatrix::checked(RatMatrix pi) {
    AxiomReport report = validate_axioms(pi);
    if (!report.market_valid()) {
        std::string why = "price matrix rejected:";
        if (!report.holds_1) why += " diagonal entry != 1;";
        if (!report.holds_2) why += " non-positive entry;";
        if (!report.holds_3) why += " triangle inequality violated;";
        if (!report.holds_4) why += " frictionless (no strict triangle triple);";
        throw AxiomError(why, report);
    }
    for (auto& row : pi) {
        for (auto& x : row) x.canonicalize();
    }
    return PriceMatrix(std::move(pi), report.holds_5_strict);
}

BidAskQuote::BidAskQuote(RatVec ask_in, RatVec bid_in) : ask(std::move(ask_in)), bid(std::move(bid_in)) {
    if (ask.size() != bid.size()) throw InputError("bid and ask vectors must have equal length");
    if (ask.size() < 2) throw InputError("bid-ask quote needs at least 2 assets");
    bool some_strict = false;
    for (std::size_t i = 0; i < ask.size(); ++i) {
        if (bid[i] <= 0) throw InputError("bid prices must be strictly positive");
        if (bid[i] > ask[i]) throw InputError("bid price exceeds ask price at asset " + std::to_string(i + 1));
        if (bid[i] < ask[i]) some_strict = true;
    }
    if (!some_strict) throw InputError("at least one asset must have a strict bid-ask spread");
}

bool BidAskQuote::strict_spread() const {
    for (std::size_t i = 0; i < ask.size(); ++i) {
        if (bid[i] == ask[i]) return false;
    }
    return true;
}

std::vector<int> BidAskQuote::equal_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < ask.size(); ++i) {
        if (bid[i] == ask[i]) out.push_back(static_cast<int>(i));
    }
    return out;
}

PriceMatrix from_bid_ask(const BidAskQuote& q) {
    const int d = q.dim();
    RatMatrix pi(d, RatVec(d, Rat(1)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i != j) pi[i][j] = q.ask[j] / q.bid[i];
        }
    }
    return PriceMatrix::checked(std::move(pi));
}

PriceMatrix prime_matrix(int d, const Int& start) {
    if (d < 2) throw InputError("prime matrix needs d >= 2");
    if (mpz_probab_prime_p(start.get_mpz_t(), 40) == 0) {
        throw InputError("prime matrix start value " + start.get_str() + " is not prime");
    }
    RatMatrix pi(d, RatVec(d, Rat(1)));
    Int p = start;
    Int last = start;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            pi[i][j] = Rat(p);
            last = p;
            Int next;
            mpz_nextprime(next.get_mpz_t(), p.get_mpz_t());
            p = next;
        }
    }
    // Row-wise consecutive primes are increasing, so min/max are start/last.
    const Int square = start * start;
    if (square <= last) {
        std::ostringstream why;
        why << "prime matrix rejected for d=" << d << ", start=" << start.get_str()
            << ": smallest entry squared (" << square.get_str()
            << ") does not exceed largest entry (" << last.get_str() << ")";
        throw ConstructionError(why.str());
    }
    return PriceMatrix::checked(std::move(pi));
}

} // namespace solvency
