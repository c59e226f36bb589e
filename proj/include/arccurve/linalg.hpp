#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "arccurve/gf.hpp"

namespace arccurve {

// Dense row-major matrix of field elements.
class FieldMatrix {
public:
    FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    FieldElement at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    void swap_rows(std::size_t a, std::size_t b);

private:
    std::size_t rows_, cols_;
    std::vector<FieldElement> data_;
};

struct Echelon {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;  // pivot column of row i, i < rank
};

// In-place Gauss-Jordan elimination to reduced row echelon form. Pivots are
// taken column by column from the first row with a nonzero entry.
Echelon reduce_rref(const Field& field, FieldMatrix& m);

// Basis of {v : m v = 0}, returned in reduced echelon form (leading entries 1,
// distinct leading columns, increasing). `rref` must come from reduce_rref.
std::vector<std::vector<FieldElement>> kernel_basis(const Field& field, const FieldMatrix& rref, const Echelon& ech);

}  // namespace arccurve
