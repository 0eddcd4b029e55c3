#pragma once

#include "frobhh/algebra.hpp"
#include "frobhh/cochain.hpp"
#include "frobhh/frobenius.hpp"
#include "frobhh/linalg.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace frobhh {

struct HochschildOptions {
    std::size_t max_degree = 3;
    bool normalized = true;
    EliminationOptions elimination;
    std::size_t memory_budget_bytes = default_memory_budget();
};

struct CohomologyReport {
    std::size_t max_degree = 0;
    bool normalized = true;
    std::size_t m = 1;
    // dims[n] = dim HH^n, computed on the complex in the algebra's own basis
    std::vector<std::size_t> dims;
    // graded_dims[i][n] = dim HH_i^n, computed on the class-i subcomplex
    std::vector<std::vector<std::size_t>> graded_dims;
    // wall-clock milliseconds per phase
    std::map<std::string, double> timings_ms;
};

// b^n on Hom(A^{(x)n}, A), rows indexed by Hom(A^{(x)n+1}, A). The normalized
// variant requires the unit to be a basis vector.
SparseMatrix hochschild_differential(const Algebra& a, std::size_t n, bool normalized = false,
                                     std::size_t budget_bytes = default_memory_budget());

// Ranks of b^0, ..., b^{max_degree} and the resulting dimensions.
std::vector<std::size_t> hh_dims(const Algebra& a, const HochschildOptions& options);
CohomologyReport graded_hh_dims(const Algebra& a, const Grading& grading, const HochschildOptions& options);

struct TheoremAReport {
    CohomologyReport cohomology;
    // per degree: HH_i^n = 0 for i != 0 and HH^n = HH_0^n
    std::vector<bool> degree_pass;
    bool pass = false;
};

TheoremAReport verify_theorem_a(const Algebra& a, const Grading& grading, const HochschildOptions& options);

// Dimension of the center as the kernel of a -> (x -> xa - ax) assembled from
// commutators of basis vectors.
std::size_t center_dimension(const Algebra& a);

// True when every nonzero entry of `b` joins cochains of the same class.
bool is_block_diagonal(const SparseMatrix& b, std::span<const std::uint32_t> row_class,
                       std::span<const std::uint32_t> col_class);

}  // namespace frobhh
