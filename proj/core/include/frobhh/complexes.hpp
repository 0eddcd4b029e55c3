#pragma once

#include "frobhh/algebra.hpp"
#include "frobhh/cochain.hpp"
#include "frobhh/frobenius.hpp"
#include "frobhh/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace frobhh {

// Spaces used below, for an algebra with basis e_0, ..., e_{d-1} and dual basis
// e^0, ..., e^{d-1} of DA. Tuples are coded with the first letter most significant.
//   Hom(A^n, A)    index code(x) * d + o
//   Hom(A^n, DA)   index code(x) * d + c, the value at e_c
//   Hom(B^n, DA)   index BBasis::index * d + c
//   P_n = A (x) B^{n+1} (x) A   index (x_0 * |B^{n+1}| + b) * d + x_last
//   Q_n = A^{(x)n+1} (x) A_rho  index code(x_0, ..., x_n, m)
// Every map is a sparse matrix with rows indexed by the target.
//
// DA is a bimodule by (a xi b)(c) = xi(b c a).

// Basis of B^n: tensors with exactly one slot holding a dual basis vector.
// Index = slot * d^n + code(letters), where letters[slot] is the dual index.
class BBasis {
public:
    BBasis(std::size_t n, std::size_t d);

    std::size_t degree() const { return n_; }
    std::size_t size() const { return n_ * tuple_count_; }
    std::size_t index(std::size_t slot, std::span<const std::uint32_t> letters) const;
    // Writes the letters and returns the slot.
    std::size_t decode(std::size_t index, std::vector<std::uint32_t>& letters) const;

private:
    std::size_t n_;
    std::size_t d_;
    std::size_t tuple_count_;
};

// A with the bimodule structure a.x.b = rho(a) x b.
struct TwistedBimodule {
    DenseMatrix rho;
    DenseMatrix rho_inv;

    // rho(a) (rho(b) x) = rho(ab) x and (a.x).b = a.(x.b) on basis triples
    bool is_bimodule(const Algebra& a) const;
};

TwistedBimodule twisted_bimodule(const Algebra& a, const FrobeniusForm& form);

// a . xi and xi . a on DA, in dual coordinates
Vector dual_left_action(const Algebra& a, const Vector& x, const Vector& xi);
Vector dual_right_action(const Algebra& a, const Vector& xi, const Vector& x);

// Column differentials of X and the horizontal map out of degree n:
//   b0    : Hom(A^n, A)       -> Hom(A^{n+1}, A)
//   b1    : Hom(B^{n+1}, DA)  -> Hom(B^{n+2}, DA)
//   delta : Hom(A^n, A)       -> Hom(B^{n+1}, DA)
struct XDifferentials {
    SparseMatrix b0;
    SparseMatrix b1;
    SparseMatrix delta;
};

XDifferentials x_differentials(const Algebra& a, std::size_t n, std::size_t budget_bytes = default_memory_budget());

// Hom(B^n, DA) -> Hom(B^{n+1}, DA) for n >= 1.
SparseMatrix x_column1_differential(const Algebra& a, std::size_t n,
                                    std::size_t budget_bytes = default_memory_budget());
SparseMatrix x_delta(const Algebra& a, std::size_t n, std::size_t budget_bytes = default_memory_budget());

// sigma_n : Hom(A^n, A) -> Hom(B^n, DA), n >= 1, with
// sigma_n(f)(x)(a) = (-1)^{jn+1} x_j(f(x_{j+1..n}, a, x_{1..j-1})) where x_j is the dual slot.
SparseMatrix sigma_homotopy(const Algebra& a, std::size_t n, std::size_t budget_bytes = default_memory_budget());

// delta^{1,n} == b^{1,n} sigma_n - sigma_{n+1} b^{0,n+1} (for n = 0 the first term is absent).
bool sigma_homotopy_holds(const Algebra& a, std::size_t n, std::size_t budget_bytes = default_memory_budget());

// Total complex X^n = Hom(A^n, A) + Hom(B^n, DA) with D(f, g) = (b f, delta f + b g).
SparseMatrix x_total_differential(const Algebra& a, std::size_t n,
                                  std::size_t budget_bytes = default_memory_budget());

struct XCohomology {
    std::vector<std::size_t> column0;  // H^n(Hom(A^*, A))
    std::vector<std::size_t> column1;  // H^n(Hom(B^{*+1}, DA))
    std::vector<std::size_t> total;
    // total[n] == column0[n] + column1[n-1]
    std::vector<bool> matches_column1;
    // total[n] == column0[n] + column0[n-1]
    std::vector<bool> matches_column0_twice;
    bool d_squared_zero = false;
};

XCohomology total_cohomology_X(const Algebra& a, std::size_t n_max,
                               std::size_t budget_bytes = default_memory_budget());

// Resolution P of DA:
//   b''_n : P_n -> P_{n-1} (n >= 1), mu' : P_0 -> DA,
//   contracting s_n : P_{n-1} -> P_n (n >= 1), s_0 : DA -> P_0.
SparseMatrix star_differential(const Algebra& a, std::size_t n, std::size_t budget_bytes = default_memory_budget());
SparseMatrix star_augmentation(const Algebra& a);
SparseMatrix star_homotopy(const Algebra& a, std::size_t n, std::size_t budget_bytes = default_memory_budget());

// Bar resolution Q of A_rho: b'_n : Q_n -> Q_{n-1} (n >= 1), mu : Q_0 -> A with mu(x (x) m) = rho(x) m.
SparseMatrix bar_differential(const Algebra& a, const TwistedBimodule& t, std::size_t n,
                              std::size_t budget_bytes = default_memory_budget());
SparseMatrix bar_augmentation(const Algebra& a, const TwistedBimodule& t);

struct Resolutions {
    SparseMatrix bprime;       // b'_n
    SparseMatrix bdblprime;    // b''_n
    SparseMatrix contracting;  // s_n
};

Resolutions bar_and_star_resolutions(const Algebra& a, const TwistedBimodule& t, std::size_t n,
                                     std::size_t budget_bytes = default_memory_budget());

// Psi'_n : Q_n -> P_n,
// x_0 (x) ... (x) x_n (x) m -> sum_i (-1)^{i+n} x_0 (x) [x_1..x_i, phi, rho x_{i+1}..rho x_n] (x) m.
SparseMatrix psi_chain_map(const Algebra& a, const FrobeniusForm& form, const TwistedBimodule& t, std::size_t n,
                           std::size_t budget_bytes = default_memory_budget());

// Theta : DA -> A with Theta(phi . x) = x.
SparseMatrix theta_iso(const Algebra& a, const FrobeniusForm& form);

// Y columns: btilde : Hom(A^n, A) -> Hom(A^{n+1}, A) and
// deltatilde(f) = (-1)^{n+1} f + (-1)^n rho^{-1} f rho^{(x)n} on Hom(A^n, A).
struct YDifferentials {
    SparseMatrix btilde;
    SparseMatrix deltatilde;
};

YDifferentials y_differentials(const Algebra& a, const TwistedBimodule& t, std::size_t n,
                               std::size_t budget_bytes = default_memory_budget());

// Total complex Y^n = Hom(A^n, A) + Hom(A^{n-1}, A) with D(f, g) = (b f, deltatilde f + b g).
SparseMatrix y_total_differential(const Algebra& a, const TwistedBimodule& t, std::size_t n,
                                  std::size_t budget_bytes = default_memory_budget());

// Upsilon^n : Hom(A^n, A) -> Hom(A^n, DA), f -> f(-) . phi.
SparseMatrix upsilon_iso(const Algebra& a, const FrobeniusForm& form, std::size_t n);

// Hom(A^n, DA) -> Hom(A^{n+1}, DA) dual to b'_{n+1}:
// F -> x_1 F(..) + sum (-1)^i F(.. x_i x_{i+1} ..) + (-1)^{n+1} F(x_1..x_n) rho(x_{n+1}).
SparseMatrix dual_bar_differential(const Algebra& a, const TwistedBimodule& t, std::size_t n,
                                   std::size_t budget_bytes = default_memory_budget());

// Psi^n = Hom(Psi'_n, DA) : Hom(B^{n+1}, DA) -> Hom(A^n, DA).
SparseMatrix psi_dual(const Algebra& a, const FrobeniusForm& form, const TwistedBimodule& t, std::size_t n,
                      std::size_t budget_bytes = default_memory_budget());

struct YBlockCheck {
    std::size_t n = 0;
    std::size_t i = 0;
    bool scalar_action = false;  // deltatilde = (-1)^{n+1} (1 - w^{-i}) on the class-i block
    std::size_t cohomology = 0;  // dim H^n of the class-i block of Tot Y
};

struct YSplittingReport {
    std::size_t m = 1;
    std::vector<std::size_t> total;         // dim H^n(Tot Y)
    std::vector<std::size_t> hh0;           // dim HH_0^n
    std::vector<bool> degree_pass;          // total[n] == hh0[n] + hh0[n-1]
    std::vector<YBlockCheck> blocks;
    bool pass = false;
};

// Throws Error{HypothesisFailure} when the grading's m differs from the Nakayama order.
YSplittingReport verify_y_splitting(const Algebra& a, const FrobeniusForm& form, const Grading& grading, std::size_t n_max,
                             std::size_t budget_bytes = default_memory_budget());

struct IdentityCheck {
    std::string name;
    std::size_t degree = 0;
    bool pass = false;
};

struct ComplexesReport {
    std::vector<IdentityCheck> checks;
    XCohomology x;
    YSplittingReport y;
    // every identity check and every splitting degree
    bool pass = false;
};

// Runs every identity above for degrees 0..n_max (resolution identities up to n_max - 1
// where they need degree n + 1 of the star resolution).
ComplexesReport verify_complexes(const Algebra& a, const FrobeniusForm& form, const Grading& grading,
                                 std::size_t n_max, std::size_t budget_bytes = default_memory_budget());

}  // namespace frobhh
