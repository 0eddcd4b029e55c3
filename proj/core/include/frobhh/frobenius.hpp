#pragma once

#include "frobhh/algebra.hpp"
#include "frobhh/field.hpp"
#include "frobhh/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frobhh {

struct FrobeniusForm {
    Vector phi;
    DenseMatrix gram;
    DenseMatrix gram_inv;
};

// G_{ij} = phi(e_i e_j).
DenseMatrix gram_matrix(const Algebra& a, const Vector& phi);
// Throws Error{NotInvertible} when the Gram matrix is singular.
FrobeniusForm frobenius_form(const Algebra& a, Vector phi);
// Samples phi uniformly from a seeded generator until the Gram matrix is
// invertible. Throws Error{NotFrobeniusWithinAttempts}.
FrobeniusForm find_frobenius_form(const Algebra& a, std::uint64_t seed, std::size_t attempts);

// (x phi)(a) = phi(a x)
Vector left_translate_form(const Algebra& a, const Element& x, const Vector& phi);

struct NakayamaData {
    DenseMatrix rho;
    std::uint64_t order = 0;
    // Primitive order-th root used for the grading; absent when order does not divide p - 1.
    std::optional<Scalar> w;
};

// The automorphism with phi(a x) = phi(rho(x) a), i.e. G^{-T} G, after checking
// the defining identity and multiplicativity on all basis pairs.
DenseMatrix nakayama_matrix(const Algebra& a, const FrobeniusForm& form);
std::uint64_t nakayama_order(const PrimeField& field, const DenseMatrix& rho, std::uint64_t cap = 1'000'000);
NakayamaData nakayama(const Algebra& a, const FrobeniusForm& form, std::uint64_t cap = 1'000'000);

struct Grading {
    std::size_t m = 1;
    Scalar w;
    // components[i] holds old coordinates of a basis of A_i; components[0][0] = 1_A.
    std::vector<std::vector<Vector>> components;
    // Columns are the concatenated component bases.
    DenseMatrix from_graded;
    DenseMatrix to_graded;
    std::vector<std::size_t> offsets;
    // Class of each graded basis index.
    std::vector<std::size_t> class_of;
    bool strongly_graded = false;

    std::size_t dim(std::size_t i) const { return components[i].size(); }
    std::vector<std::size_t> dims() const;
};

// A_i = ker(rho - w^i). Throws Error{HypothesisFailure} when no primitive
// order-th root exists in F_p.
Grading eigen_grading(const Algebra& a, const NakayamaData& nak);
// Grading from explicitly given components. Throws Error{BadStructure} unless
// the components form a basis, the unit is the first vector of A_0 and
// A_i A_j lies in A_{i+j}.
Grading grading_from_components(const Algebra& a, Scalar w, std::vector<std::vector<Vector>> components);
bool is_strongly_graded(const Algebra& a, const Grading& grading);

// The algebra rewritten in the graded basis, unit first.
Algebra graded_algebra(const Algebra& a, const Grading& grading);

// Human-readable linear combination of basis labels, e.g. "x+12*xg".
std::string format_element(const Algebra& a, const Vector& coords);

}  // namespace frobhh
