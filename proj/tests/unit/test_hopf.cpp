#include <doctest.h>

#include "frobhh/error.hpp"
#include "frobhh/hopf.hpp"
#include "frobhh/linalg.hpp"

using namespace frobhh;

namespace {

const PrimeField F13(13);

Vector coords(std::initializer_list<int> values)
{
    Vector v;
    for (int x : values)
        v.push_back(F13.from_int(x));
    return v;
}

}  // namespace

TEST_CASE("integrals of the four-dimensional Taft algebra")
{
    Algebra h = taft(F13, 2, Scalar{12});
    HopfData hopf = taft_hopf(h, 2);
    Element t = right_integral(h, hopf);
    CHECK(t.coords == coords({0, 0, 1, 1}));
    for (std::size_t i = 0; i < 4; ++i) {
        Element th = h.multiply(t, h.basis(i));
        Vector expected = t.coords;
        for (auto& c : expected)
            c = F13.mul(c, hopf.counit()[i]);
        CHECK(th.coords == expected);
    }
    Vector alpha = modular_element(h, t, Side::Right);
    CHECK(alpha == coords({1, 12, 0, 0}));
    Vector phi = dual_integral(h, hopf, Side::Right);
    CHECK(phi == coords({0, 0, 0, 1}));
    CHECK(rank(F13, gram_matrix(h, phi)) == 4);

    ConvolutionAlgebra conv(h, hopf);
    for (std::size_t k = 0; k < 4; ++k) {
        Vector e(4);
        e[k] = F13.one();
        Vector lhs = conv.multiply(phi, e);
        Vector rhs = phi;
        for (auto& c : rhs)
            c = F13.mul(c, e[0]);
        CHECK(lhs == rhs);
        CHECK(conv.multiply(conv.unit(), e) == e);
    }
}

TEST_CASE("convolution is associative on basis covectors")
{
    Algebra h = taft(F13, 2, Scalar{12});
    HopfData hopf = taft_hopf(h, 2);
    ConvolutionAlgebra conv(h, hopf);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            for (std::size_t c = 0; c < 4; ++c) {
                Vector ea(4), eb(4), ec(4);
                ea[a] = eb[b] = ec[c] = F13.one();
                CHECK(conv.multiply(conv.multiply(ea, eb), ec) == conv.multiply(ea, conv.multiply(eb, ec)));
            }
}

TEST_CASE("Hopf formula for the Nakayama automorphism")
{
    for (std::size_t n : {2u, 3u, 4u}) {
        const Scalar w = primitive_root_of_unity(F13, n);
        Algebra h = taft(F13, n, w);
        HopfData hopf = taft_hopf(h, n);
        IntegralData data = resolve_integrals(h, hopf);
        CHECK(data.cross_check);
        CHECK(data.convention == "right/right");
        DenseMatrix rho = nakayama_via_hopf(h, hopf, data.alpha, 1);
        CHECK(rho == nakayama_matrix(h, frobenius_form(h, data.phi)));
        CHECK(nakayama_via_hopf(h, hopf, data.alpha, -1) == inverse(F13, rho));
        CHECK(nakayama_via_hopf(h, hopf, data.alpha, 2) == multiply(F13, rho, rho));
        OrderCertificates c = finite_order_certificates(h, hopf, data);
        CHECK(c.alpha_order == n);
        CHECK(c.rho_order == n);
        CHECK(c.rho_divides_bound);
        CHECK(c.alpha_s2_invariant);
        CHECK(c.antipode_order == 2 * n);
    }
}

TEST_CASE("group algebra integrals")
{
    Algebra c3 = cyclic_group_algebra(F13, 3);
    HopfData hopf = cyclic_group_hopf(c3, 3);
    CHECK(right_integral(c3, hopf).coords == coords({1, 1, 1}));
    IntegralData data = resolve_integrals(c3, hopf);
    CHECK(data.alpha == hopf.counit());
    CHECK(data.phi == coords({1, 0, 0}));
    OrderCertificates c = finite_order_certificates(c3, hopf, data);
    CHECK(c.rho_order == 1);
    CHECK(c.alpha_order == 1);
    CHECK(multiply(F13, hopf.antipode(), hopf.antipode()) == DenseMatrix::identity(F13, 3));

    Algebra c2 = cyclic_group_algebra(F13, 2);
    HopfData hopf2 = cyclic_group_hopf(c2, 2);
    Vector phi = dual_integral(c2, hopf2, Side::Right);
    CHECK(rank(F13, gram_matrix(c2, phi)) == 2);
}

TEST_CASE("Taft report against the displayed values")
{
    TaftHopfReport r2 = taft_hopf_check(F13, 2, Scalar{12});
    CHECK(r2.cross_check);
    CHECK(r2.rho_g_is_wg);
    CHECK(r2.rho_x_is_winv_x);
    CHECK(r2.alpha_g_is_winv);
    CHECK(r2.alpha_x_is_zero);
    CHECK(r2.t_matches_display);
    CHECK(r2.orders.antipode_order == 4);
    CHECK(r2.orders.alpha_order == 2);

    TaftHopfReport r3 = taft_hopf_check(F13, 3, Scalar{3});
    CHECK(r3.cross_check);
    CHECK(r3.powers_consistent);
    CHECK(r3.inverse_consistent);
    CHECK(r3.rho_x_is_winv_x);
    CHECK(r3.alpha_x_is_zero);
    // the right-integral conventions give rho(g) = w^{-1} g and alpha(g) = w for N = 3
    CHECK(r3.rho_g_scalar == F13.inv(Scalar{3}));
    CHECK(r3.alpha_g == Scalar{3});
}
