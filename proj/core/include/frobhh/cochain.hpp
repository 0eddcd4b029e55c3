#pragma once

#include "frobhh/algebra.hpp"
#include "frobhh/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace frobhh {

// Memory budget in bytes for a single differential: FROBHH_MEM_BUDGET_MB when
// set, otherwise 2048 MiB.
std::size_t default_memory_budget();

// Basis of Hom(L^{(x)n}, M) where L and M are spanned by subsets of the basis
// of an algebra. A basis cochain sends the tensor of input letters
// (in_letters[x_1], ..., in_letters[x_n]) to out_letters[o] and every other
// basis tensor to zero. Index = code(x) * |out| + o with x_1 most significant.
class CochainSpace {
public:
    CochainSpace(std::size_t degree, std::size_t in_count, std::size_t out_count);

    std::size_t degree() const { return degree_; }
    std::size_t in_count() const { return in_count_; }
    std::size_t out_count() const { return out_count_; }
    std::size_t tuple_count() const { return tuple_count_; }
    std::size_t size() const { return tuple_count_ * out_count_; }

    std::size_t index(std::span<const std::uint32_t> inputs, std::uint32_t out) const;
    // Writes the input positions into `inputs` (resized to degree) and returns the output position.
    std::uint32_t decode(std::size_t index, std::vector<std::uint32_t>& inputs) const;

private:
    std::size_t degree_;
    std::size_t in_count_;
    std::size_t out_count_;
    std::size_t tuple_count_;
};

// The complex Hom(L^{(x)*}, M) with the Hochschild differential, for a
// subalgebra L and an L-bimodule M inside an algebra A, both spanned by basis
// vectors of A. In the normalized variant the unit letter is excluded from the
// inputs and unit components of products of inputs are dropped.
class CochainComplex {
public:
    // Throws Error{BadStructure} if L is not closed under products, M is not
    // closed under multiplication by L, or (normalized) the unit of A is not
    // one of the letters of L.
    CochainComplex(const Algebra& a, std::vector<std::uint32_t> l_letters, std::vector<std::uint32_t> m_letters,
                   bool normalized);

    // All of A with coefficients in A.
    static CochainComplex hochschild(const Algebra& a, bool normalized);

    const Algebra& algebra() const { return *algebra_; }
    bool normalized() const { return normalized_; }
    const std::vector<std::uint32_t>& in_letters() const { return in_letters_; }
    const std::vector<std::uint32_t>& out_letters() const { return out_letters_; }
    CochainSpace space(std::size_t n) const { return CochainSpace(n, in_letters_.size(), out_letters_.size()); }

    // Estimated bytes of the sparse matrix of b^n.
    std::size_t estimated_bytes(std::size_t n) const;
    // b^n : C^n -> C^{n+1}, rows indexed by C^{n+1}. Throws Error{DegreeTooLarge}
    // when the estimate exceeds `budget_bytes`.
    SparseMatrix differential(std::size_t n, std::size_t budget_bytes = default_memory_budget()) const;

    // Classes (out class - sum of input classes) mod m of every cochain in C^n,
    // given the class of each algebra basis index.
    std::vector<std::uint32_t> cochain_classes(std::size_t n, std::span<const std::size_t> basis_class,
                                               std::size_t m) const;

private:
    struct Term {
        std::uint32_t pos;
        Scalar coeff;
    };

    const Algebra* algebra_;
    std::vector<std::uint32_t> in_letters_;
    std::vector<std::uint32_t> out_letters_;
    bool normalized_;
    // left_[a * |out| + o'] lists (o, c) with c = coefficient of out[o'] in in[a] out[o]
    std::vector<std::vector<Term>> left_;
    std::vector<std::vector<Term>> right_;
    // prod_[a * |in| + b] lists (k, c): in[a] in[b] = sum c in[k] (+ dropped unit part)
    std::vector<std::vector<Term>> prod_;
};

}  // namespace frobhh
