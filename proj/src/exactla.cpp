#include "solvency/exactla.hpp"

#include "solvency/errors.hpp"

namespace solvency {

int rank_bareiss(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    for (const auto& row : m) {
        if (row.size() != cols) throw InputError("ragged matrix");
    }

    Int prev_pivot = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) std::swap(m[pivot], m[r]);

        // One-step fraction-free elimination:
        //   m'[i][l] = (m[r][c] * m[i][l] - m[i][c] * m[r][l]) / prev_pivot
        // The division is exact by Bareiss' identity.
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t l = c + 1; l < cols; ++l) {
                Int t = m[r][c] * m[i][l] - m[i][c] * m[r][l];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
                m[i][l] = t;
            }
            m[i][c] = 0;
        }
        prev_pivot = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<std::vector<Int>> cleared_rows(const std::vector<RatVec>& rows) {
    std::vector<std::vector<Int>> out;
    out.reserve(rows.size());
    for (const RatVec& row : rows) {
        Int lcm = 1;
        for (const Rat& x : row) {
            Int t;
            mpz_lcm(t.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
            lcm = t;
        }
        std::vector<Int> cleared;
        cleared.reserve(row.size());
        for (const Rat& x : row) {
            cleared.push_back(Int(x.get_num() * (lcm / x.get_den())));
        }
        out.push_back(std::move(cleared));
    }
    return out;
}

int rank_exact(const std::vector<RatVec>& rows) { return rank_bareiss(cleared_rows(rows)); }

std::vector<std::size_t> greedy_independent_rows(const std::vector<RatVec>& rows) {
    std::vector<std::size_t> chosen;
    if (rows.empty()) return chosen;
    const std::size_t cols = rows.front().size();

    std::vector<RatVec> basis;       // echelon rows, pivot normalized to 1
    std::vector<std::size_t> pivots; // pivot column of each basis row

    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        if (rows[idx].size() != cols) throw InputError("ragged matrix");
        RatVec v = rows[idx];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Rat& coeff = v[pivots[b]];
            if (coeff == 0) continue;
            const Rat c = coeff; // copy before mutation
            for (std::size_t l = 0; l < cols; ++l) v[l] -= c * basis[b][l];
        }
        std::size_t pivot = cols;
        for (std::size_t l = 0; l < cols; ++l) {
            if (v[l] != 0) {
                pivot = l;
                break;
            }
        }
        if (pivot == cols) continue; // dependent
        const Rat inv = v[pivot];
        for (std::size_t l = 0; l < cols; ++l) v[l] /= inv;
        basis.push_back(std::move(v));
        pivots.push_back(pivot);
        chosen.push_back(idx);
    }
    return chosen;
}

} // namespace solvency
