#pragma once

#include "frobhh/algebra.hpp"
#include "frobhh/frobenius.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frobhh {

// Dual of a finite-dimensional Hopf algebra under (f * g)(h) = sum f(h_1) g(h_2).
class ConvolutionAlgebra {
public:
    ConvolutionAlgebra(const Algebra& h, const HopfData& hopf) : h_(&h), hopf_(&hopf) {}

    Vector multiply(const Vector& f, const Vector& g) const;
    Vector power(const Vector& f, std::uint64_t e) const;
    const Vector& unit() const { return hopf_->counit(); }
    // Least r <= cap with f^{*r} = counit. Throws Error{CapExceeded}.
    std::uint64_t order(const Vector& f, std::uint64_t cap) const;

private:
    const Algebra* h_;
    const HopfData* hopf_;
};

enum class Side { Left, Right };

// Right integral in H: t h = eps(h) t (left: h t = eps(h) t). Returned with
// its first nonzero coordinate equal to 1. Throws Error{NoIntegral} or
// Error{IntegralSpaceNotOneDim}.
Element integral(const Algebra& h, const HopfData& hopf, Side side);
Element right_integral(const Algebra& h, const HopfData& hopf);

// For a right integral, h t = alpha(h) t (for a left one, t h = alpha(h) t).
// Throws Error{InconsistentModular} if t is not an eigenvector or alpha is not multiplicative.
Vector modular_element(const Algebra& h, const Element& t, Side side);

// Right integral in H^*: phi * f = f(1) phi (left: f * phi = f(1) phi), first
// nonzero coordinate 1. Throws Error{NoIntegral} or Error{IntegralSpaceNotOneDim}.
Vector dual_integral(const Algebra& h, const HopfData& hopf, Side side);

// rho^l(h) = sum alpha^{*l}(S(h_1)) S^{2l}(h_2) for l >= 1, and
// rho^{-1}(h) = sum alpha(h_1) Sbar^2(h_2) for l = -1.
DenseMatrix nakayama_via_hopf(const Algebra& h, const HopfData& hopf, const Vector& alpha, int l);

struct IntegralData {
    Element t;
    Vector alpha;
    Vector phi;
    Side integral_side = Side::Right;
    Side dual_side = Side::Right;
    // "right/right" etc.: integral side in H / integral side in H*
    std::string convention;
    // nakayama_via_hopf(1) equals the Nakayama matrix of phi
    bool cross_check = false;
};

// Tries the conventions (right, right), (right, left), (left, right),
// (left, left) in this order and returns the first whose cross-check passes.
// Throws Error{ConventionMismatch} if none does.
IntegralData resolve_integrals(const Algebra& h, const HopfData& hopf);

struct OrderCertificates {
    std::uint64_t alpha_order = 0;
    std::uint64_t antipode_order = 0;
    std::uint64_t rho_order = 0;
    // lcm(ord alpha, ord S^2)
    std::uint64_t bound = 0;
    bool rho_divides_bound = false;
    bool alpha_s2_invariant = false;
};

OrderCertificates finite_order_certificates(const Algebra& h, const HopfData& hopf, const IntegralData& data,
                                            std::uint64_t cap = 1'000'000);

struct TaftHopfReport {
    std::size_t N = 0;
    Scalar w;
    IntegralData integrals;
    OrderCertificates orders;
    bool cross_check = false;
    bool powers_consistent = false;   // rho^l from the formula equals the l-th power, 1 <= l <= ord rho
    bool inverse_consistent = false;  // l = -1 equals the matrix inverse
    bool rho_g_is_wg = false;
    bool rho_x_is_winv_x = false;
    bool alpha_g_is_winv = false;
    bool alpha_x_is_zero = false;
    bool t_matches_display = false;  // t proportional to sum w^j g^j x^{N-1}
    // values actually found, as multipliers: rho(g) = rho_g_scalar g etc.
    std::optional<Scalar> rho_g_scalar;
    std::optional<Scalar> rho_x_scalar;
    Scalar alpha_g;
    Scalar alpha_x;
};

TaftHopfReport taft_hopf_check(const PrimeField& field, std::size_t n, Scalar w);

}  // namespace frobhh
