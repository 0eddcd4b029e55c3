#pragma once

#include "frobhh/field.hpp"
#include "frobhh/matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace frobhh {

struct Element {
    Vector coords;

    friend bool operator==(const Element&, const Element&) = default;
};

struct BasisTerm {
    std::uint32_t index;
    Scalar coeff;
};

// Finite-dimensional associative unital algebra given by structure constants
// e_i e_j = sum_k c_{ij}^k e_k. Immutable once constructed.
class Algebra {
public:
    struct Options {
        // Structure-constant self-checks are O(d^3) products; callers may skip
        // them above this dimension.
        bool skip_checks_above_limit = false;
        std::size_t check_limit = 64;
    };

    // structure[i][j] is the coordinate vector of e_i e_j. Throws
    // Error{BadStructure} if associativity or the unit law fails.
    Algebra(PrimeField field, std::vector<std::string> labels, std::vector<std::vector<Vector>> structure, Vector unit,
            Options options);
    Algebra(PrimeField field, std::vector<std::string> labels, std::vector<std::vector<Vector>> structure, Vector unit)
        : Algebra(std::move(field), std::move(labels), std::move(structure), std::move(unit), Options{})
    {
    }

    const PrimeField& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vector& unit() const { return unit_; }
    Element one() const { return Element{unit_}; }
    Element basis(std::size_t i) const;

    // Nonzero terms of e_i e_j, sorted by index.
    std::span<const BasisTerm> product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
    Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

    Vector multiply(std::span<const Scalar> u, std::span<const Scalar> v) const;
    Element multiply(const Element& u, const Element& v) const;
    Element power(const Element& u, std::uint64_t e) const;

    // L(u) x = u x and R(u) x = x u in coordinates.
    DenseMatrix left_mul_matrix(const Element& u) const;
    DenseMatrix right_mul_matrix(const Element& u) const;

    // Index k with 1_A = e_k, if the unit is a basis vector.
    std::optional<std::size_t> unit_index() const { return unit_index_; }

    // Isomorphic algebra in the basis given by the columns of `from_new`
    // (old coordinates of the new basis vectors). Throws Error{NotInvertible}.
    Algebra change_basis(const DenseMatrix& from_new, std::vector<std::string> labels) const;
    // Isomorphic algebra whose basis vector 0 is the unit; identity if already so.
    // `from_new` receives the change-of-basis matrix when non-null.
    Algebra with_unit_first(DenseMatrix* from_new = nullptr) const;
    // The subalgebra spanned by the listed basis vectors, in that basis.
    // Throws Error{BadStructure} if the span is not a unital subalgebra.
    Algebra subalgebra(std::span<const std::size_t> basis_indices) const;

    bool is_commutative() const;

private:
    PrimeField field_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<std::vector<BasisTerm>> products_;
    Vector unit_;
    std::optional<std::size_t> unit_index_;
};

// Standard test corpus.
Algebra matrix_algebra(const PrimeField& field, std::size_t n);
Algebra truncated_poly(const PrimeField& field, std::size_t n);
Algebra cyclic_group_algebra(const PrimeField& field, std::size_t n);
// Basis x^i g^j ordered by (i, j), index i*n + j; relations g^n = 1, x^n = 0,
// xg = w gx. Throws Error{BadRoot} if w^n != 1, Error{NotPrimitivePower} if w
// has smaller order.
Algebra taft(const PrimeField& field, std::size_t n, Scalar w);

// Comultiplication as explicit summands coeff * e_left (x) e_right.
struct CoproductTerm {
    Scalar coeff;
    std::uint32_t left;
    std::uint32_t right;
};

class HopfData {
public:
    // Throws Error{BadStructure} unless coassociativity, the counit law and the
    // antipode law hold on every basis element.
    HopfData(const Algebra& algebra, std::vector<std::vector<CoproductTerm>> comul, Vector counit,
             DenseMatrix antipode);

    std::span<const CoproductTerm> coproduct(std::size_t i) const { return comul_[i]; }
    const Vector& counit() const { return counit_; }
    const DenseMatrix& antipode() const { return antipode_; }
    std::size_t dim() const { return comul_.size(); }

private:
    std::vector<std::vector<CoproductTerm>> comul_;
    Vector counit_;
    DenseMatrix antipode_;
};

HopfData taft_hopf(const Algebra& taft_algebra, std::size_t n);
HopfData cyclic_group_hopf(const Algebra& group_algebra, std::size_t n);

}  // namespace frobhh
