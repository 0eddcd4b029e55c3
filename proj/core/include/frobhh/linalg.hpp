#pragma once

#include "frobhh/field.hpp"
#include "frobhh/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace frobhh {

struct EliminationOptions {
    // Switch to dense elimination once the active submatrix is at least this
    // full (nonzeros / (active rows * active cols)).
    double density_threshold = 0.2;
    // Dense fallback is skipped when the active block would exceed this many
    // entries; sparse elimination then continues to the end.
    std::size_t dense_entry_limit = std::size_t{1} << 27;
};

// Reduced row echelon form computed in place; returns pivot columns.
std::vector<std::size_t> rref(const PrimeField& field, DenseMatrix& m);

std::size_t rank_dense(const PrimeField& field, DenseMatrix m);
std::size_t rank(const PrimeField& field, const DenseMatrix& m);
// Markowitz-ordered sparse elimination with dense fallback.
std::size_t rank(const PrimeField& field, const SparseMatrix& m, const EliminationOptions& options = {});

// Basis of the right null space, one vector per free column of the RREF.
std::vector<Vector> kernel_basis(const PrimeField& field, const DenseMatrix& m);
std::vector<Vector> kernel_basis(const PrimeField& field, const SparseMatrix& m);

// Some x with m x = v, free variables set to zero. Throws Error{NoSolution}.
Vector solve(const PrimeField& field, const DenseMatrix& m, const Vector& v);
Vector solve(const PrimeField& field, const SparseMatrix& m, const Vector& v);
std::optional<Vector> try_solve(const PrimeField& field, const DenseMatrix& m, const Vector& v);

// Throws Error{NotInvertible}.
DenseMatrix inverse(const PrimeField& field, const DenseMatrix& m);
DenseMatrix power(const PrimeField& field, const DenseMatrix& m, std::uint64_t e);

// Least r in [1, cap] with m^r = I. Throws Error{NotInvertible} or Error{CapExceeded}.
std::uint64_t matrix_order(const PrimeField& field, const DenseMatrix& m, std::uint64_t cap);

// Indices of columns forming a basis of the column space (first pivots in order).
std::vector<std::size_t> independent_columns(const PrimeField& field, const DenseMatrix& m);

}  // namespace frobhh
