#pragma once

#include "frobhh/algebra.hpp"
#include "frobhh/cochain.hpp"
#include "frobhh/frobenius.hpp"
#include "frobhh/hochschild.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace frobhh {

// The algebra rewritten in a graded basis, so that every A_i is spanned by
// basis vectors; letters[i] lists the basis indices of A_i.
struct GradedView {
    Algebra algebra;
    Grading grading;
    std::vector<std::vector<std::uint32_t>> letters;
};

GradedView make_graded_view(const Algebra& a, const Grading& grading);

struct PartitionPair {
    Vector s;
    Vector s_prime;
};

// Pairs with s in A_i, s' in A_{-i} and sum s' s = 1, in the view's coordinates.
struct PartitionOfUnity {
    std::size_t i = 0;
    std::vector<PartitionPair> pairs;
};

// Solves 1 = sum c_{ba} v_b u_a over bases u of A_i and v of A_{-i} (free
// variables zero). Throws Error{NotStronglyGraded} when 1 is not in A_{-i} A_i.
PartitionOfUnity partition_of_unity(const GradedView& view, std::size_t i);

// theta(F)(a_1, ..., a_n) = sum s'_{j_1} F(s_{j_1} a_1 s'_{j_2}, ..., s_{j_n} a_n s'_{j_{n+1}}) s_{j_{n+1}}
// on Hom(L^{(x)n}, M) for letter sets L, M of `a`, indexed as in CochainSpace.
// Throws Error{BadStructure} if a conjugate leaves L or M.
DenseMatrix theta_matrix(const Algebra& a, std::span<const std::uint32_t> l_letters,
                         std::span<const std::uint32_t> m_letters, std::span<const PartitionPair> pairs,
                         std::size_t n);

// Cohomology of Hom(A_0^{(x)n}, A_v) with chosen representatives.
struct CohomologyPresentation {
    std::size_t n = 0;
    std::size_t v = 0;
    std::size_t cochain_dim = 0;
    std::size_t cocycle_dim = 0;
    std::size_t coboundary_dim = 0;
    // columns: a basis of the coboundaries followed by the representatives
    DenseMatrix coboundaries_then_reps;
    std::vector<Vector> representatives;

    std::size_t dim() const { return representatives.size(); }
    // Coordinates of a cocycle on the representatives. Throws Error{InconsistentSystem}
    // if `z` is not a cocycle in the span.
    Vector reduce(const PrimeField& f, const Vector& z) const;
};

CohomologyPresentation present_cohomology(const GradedView& view, std::size_t n, std::size_t v);

struct ActionCell {
    std::size_t n = 0;
    std::size_t v = 0;
    std::size_t dim = 0;
    // induced action of the generator on the representatives
    DenseMatrix t;
    bool chain_maps = false;       // b theta_i = theta_i b for every i
    bool identity_class0 = false;  // theta_0 induces the identity
    bool order_divides_m = false;  // T^m = I
    bool powers_match = false;     // theta_i induces T^i
    // cochain-level comparison theta_1^i = theta_i; informational only
    bool cochain_multiplicative = false;
    std::size_t fixed_dim_kernel = 0;
    std::size_t fixed_dim_average = 0;

    bool consistent() const
    {
        return chain_maps && identity_class0 && order_divides_m && powers_match && fixed_dim_kernel == fixed_dim_average;
    }
};

struct ActionReport {
    std::size_t m = 1;
    std::vector<PartitionOfUnity> partitions;
    // cells[n][v]
    std::vector<std::vector<ActionCell>> cells;
};

ActionReport cohomology_action(const GradedView& view, std::size_t max_degree);

struct RigidityReport {
    std::size_t hh2_dim = 0;
    // "rigid" when HH^2(A_0) = 0, otherwise "unknown"
    std::string verdict;
};

RigidityReport rigidity_flag(const GradedView& view, const HochschildOptions& options);

struct TheoremBDegree {
    std::size_t n = 0;
    std::size_t dim_hh = 0;
    std::size_t dim_invariants = 0;
    bool pass = false;
};

struct TheoremBRefined {
    std::size_t n = 0;
    std::size_t i = 0;
    std::size_t dim_hh_i = 0;
    std::size_t dim_invariants = 0;
    bool pass = false;
};

struct TheoremBReport {
    std::vector<TheoremBDegree> per_degree;
    std::vector<TheoremBRefined> refined;
    ActionReport action;
    CohomologyReport cohomology;
    RigidityReport rigidity;
    bool pass = false;
};

// Throws Error{NotStronglyGraded} when the grading is not strong.
TheoremBReport verify_theorem_b(const Algebra& a, const Grading& grading, const HochschildOptions& options);

struct TaftActionDegree {
    std::size_t n = 0;
    // the displayed action g^{N-1} F(t.a_1, ..., t.a_n) g equals theta
    bool display_matches = false;
    // g^{N-1} F(t^{-1}.a_1, ..., t^{-1}.a_n) g equals theta
    bool inverse_scaling_matches = false;
    // the displayed action commutes with b (checked against degree n + 1)
    bool display_is_chain_map = false;
};

struct TaftActionReport {
    std::size_t N = 0;
    // basis labels of the subalgebra spanned by x^i g^i
    std::vector<std::string> h0_labels;
    std::vector<TaftActionDegree> degrees;
    bool pass = false;
};

TaftActionReport taft_action_formula_check(const PrimeField& field, std::size_t n, Scalar w, std::size_t max_degree);

}  // namespace frobhh
