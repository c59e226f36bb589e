#include "arccurve/linalg.hpp"

#include <algorithm>

namespace arccurve {

void FieldMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

namespace {

// row -= factor * pivot, touching only the pivot row's nonzero columns.
// For p = 2 subtraction is XOR on the packed limbs.
void eliminate(const Field& field, std::span<FieldElement> row, FieldElement factor,
               std::span<const std::size_t> support, std::span<const std::uint32_t> pivot_logs) {
    const std::uint32_t lf = field.log(factor);
    if (field.characteristic() == 2) {
        for (std::size_t k = 0; k < support.size(); ++k)
            row[support[k]].value ^= field.exp_sum(lf, pivot_logs[k]).value;
    } else {
        for (std::size_t k = 0; k < support.size(); ++k) {
            auto& x = row[support[k]];
            x = field.sub(x, field.exp_sum(lf, pivot_logs[k]));
        }
    }
}

}  // namespace

Echelon reduce_rref(const Field& field, FieldMatrix& m) {
    Echelon ech;
    std::vector<std::size_t> support;
    std::vector<std::uint32_t> logs;
    for (std::size_t col = 0; col < m.cols() && ech.rank < m.rows(); ++col) {
        std::size_t piv = ech.rank;
        while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(piv, ech.rank);
        auto prow = m.row(ech.rank);

        const FieldElement inv = field.inv(prow[col]);
        support.clear();
        logs.clear();
        for (std::size_t j = col; j < m.cols(); ++j) {
            if (prow[j].is_zero()) continue;
            prow[j] = field.mul(prow[j], inv);
            support.push_back(j);
            logs.push_back(field.log(prow[j]));
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == ech.rank) continue;
            const FieldElement f = m.at(r, col);
            if (!f.is_zero()) eliminate(field, m.row(r), f, support, logs);
        }
        ech.pivot_cols.push_back(col);
        ++ech.rank;
    }
    return ech;
}

std::vector<std::vector<FieldElement>> kernel_basis(const Field& field, const FieldMatrix& rref, const Echelon& ech) {
    const std::size_t n = rref.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;

    FieldMatrix basis(n - ech.rank, n);
    std::size_t b = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        basis.at(b, j) = field.one();
        for (std::size_t i = 0; i < ech.rank; ++i) basis.at(b, ech.pivot_cols[i]) = field.neg(rref.at(i, j));
        ++b;
    }
    reduce_rref(field, basis);

    std::vector<std::vector<FieldElement>> out;
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        auto row = basis.row(r);
        out.emplace_back(row.begin(), row.end());
    }
    return out;
}

}  // namespace arccurve
