#pragma once

#include "frobhh/field.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace frobhh {

// Row-major dense matrix over F_p. The field is passed to operations that need
// arithmetic; the matrix itself only stores canonical representatives.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(const PrimeField& field, std::size_t n);
    // columns given as vectors of equal length
    static DenseMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    Vector column(std::size_t j) const;
    DenseMatrix transpose() const;
    bool is_zero() const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

DenseMatrix multiply(const PrimeField& field, const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix add(const PrimeField& field, const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix subtract(const PrimeField& field, const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scale(const PrimeField& field, Scalar s, const DenseMatrix& a);
Vector apply(const PrimeField& field, const DenseMatrix& a, std::span<const Scalar> x);

struct SparseEntry {
    std::uint32_t col;
    Scalar value;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

// Compressed sparse row storage: coordinates within a row are strictly
// increasing and no zero is stored.
class SparseMatrix {
public:
    SparseMatrix() : row_ptr_(1, 0) {}
    SparseMatrix(std::size_t rows, std::size_t cols);

    static SparseMatrix identity(const PrimeField& field, std::size_t n);
    static SparseMatrix from_dense(const DenseMatrix& m);
    // Triplets may repeat a position; repeated values are summed.
    struct Triplet {
        std::uint32_t row;
        std::uint32_t col;
        Scalar value;
    };
    static SparseMatrix from_triplets(const PrimeField& field, std::size_t rows, std::size_t cols,
                                      std::vector<Triplet> triplets);

    std::size_t rows() const { return row_ptr_.size() - 1; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }

    std::span<const SparseEntry> row(std::size_t i) const
    {
        return {entries_.data() + row_ptr_[i], row_ptr_[i + 1] - row_ptr_[i]};
    }

    // Appends the next row. Entries may be unsorted and repeat a column.
    void append_row(const PrimeField& field, std::vector<SparseEntry> entries);
    // Appends an already canonical row (sorted, distinct columns, no zeros).
    void append_canonical_row(std::span<const SparseEntry> entries);

    Scalar at(std::size_t i, std::size_t j) const;
    DenseMatrix to_dense() const;
    SparseMatrix transpose() const;
    bool is_zero() const { return entries_.empty(); }

    // Restriction to the given row and column index lists. Indices outside the
    // lists are dropped; `col_map` maps a global column to its local index or -1.
    SparseMatrix restrict(std::span<const std::uint32_t> row_indices, std::span<const std::int64_t> col_map,
                          std::size_t local_cols) const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<std::size_t> row_ptr_;
    std::vector<SparseEntry> entries_;
};

// Sorts, merges repeated columns and removes zeros in place.
void canonicalize_row(const PrimeField& field, std::vector<SparseEntry>& entries);

SparseMatrix multiply(const PrimeField& field, const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix add(const PrimeField& field, const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix subtract(const PrimeField& field, const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix scale(const PrimeField& field, Scalar s, const SparseMatrix& a);
Vector apply(const PrimeField& field, const SparseMatrix& a, std::span<const Scalar> x);

// Block matrix [[a, b], [c, d]]; a null block is zero.
SparseMatrix block2x2(std::size_t top_rows, std::size_t bottom_rows, std::size_t left_cols, std::size_t right_cols,
                      const SparseMatrix* a, const SparseMatrix* b, const SparseMatrix* c, const SparseMatrix* d);

}  // namespace frobhh
