#include <doctest.h>

#include "frobhh/error.hpp"
#include "frobhh/frobenius.hpp"
#include "frobhh/linalg.hpp"

#include <random>

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

Vector unit_vector(std::size_t d, std::size_t k)
{
    Vector v(d);
    v[k] = F13.one();
    return v;
}

// dual basis vector of x^{N-1} g
Vector taft_form(std::size_t n)
{
    return unit_vector(n * n, (n - 1) * n + 1);
}

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("Gram matrices")
{
    Algebra m2 = matrix_algebra(F13, 2);
    DenseMatrix g = gram_matrix(m2, coords({1, 0, 0, 1}));
    // tr(e_ab e_cd) = [b = c][a = d]
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const bool one = (i % 2 == j / 2) && (i / 2 == j % 2);
            CHECK(g(i, j) == (one ? F13.one() : F13.zero()));
        }
    CHECK(rank(F13, g) == 4);

    Algebra t2 = truncated_poly(F13, 2);
    DenseMatrix gt = gram_matrix(t2, coords({0, 1}));
    CHECK(gt(0, 0) == F13.zero());
    CHECK(gt(0, 1) == F13.one());
    CHECK(gt(1, 0) == F13.one());
    CHECK(gt(1, 1) == F13.zero());
    CHECK(gram_matrix(t2, coords({0, 0})).is_zero());
    CHECK(kind_of([&] { frobenius_form(t2, coords({1, 0})); }) == ErrorKind::NotInvertible);
}

TEST_CASE("random form search")
{
    for (const Algebra& a : {matrix_algebra(F13, 2), taft(F13, 2, Scalar{12}), taft(F13, 3, Scalar{3})}) {
        FrobeniusForm f1 = find_frobenius_form(a, 42, 20);
        FrobeniusForm f2 = find_frobenius_form(a, 42, 20);
        CHECK(f1.phi == f2.phi);
        CHECK(rank(F13, f1.gram) == a.dim());
    }
    // F_13 x F_13 with phi = (1, 0) is degenerate; search finds another form
    std::vector<std::vector<Vector>> s{{coords({1, 0}), coords({0, 0})}, {coords({0, 0}), coords({0, 1})}};
    Algebra prod(F13, {"a", "b"}, s, coords({1, 1}));
    CHECK(kind_of([&] { frobenius_form(prod, coords({1, 0})); }) == ErrorKind::NotInvertible);
    CHECK(rank(F13, frobenius_form(prod, coords({1, 1})).gram) == 2);
    CHECK_NOTHROW(find_frobenius_form(prod, 1, 10));

    // k[x,y]/(x,y)^2 is not Frobenius
    std::vector<std::vector<Vector>> z(3, std::vector<Vector>(3, coords({0, 0, 0})));
    for (std::size_t i = 0; i < 3; ++i) {
        z[0][i] = unit_vector(3, i);
        z[i][0] = unit_vector(3, i);
    }
    Algebra local(F13, {"1", "x", "y"}, z, coords({1, 0, 0}));
    CHECK(kind_of([&] { find_frobenius_form(local, 3, 25); }) == ErrorKind::NotFrobeniusWithinAttempts);
}

TEST_CASE("Nakayama automorphism of symmetric forms")
{
    Algebra m2 = matrix_algebra(F13, 2);
    NakayamaData nak = nakayama(m2, frobenius_form(m2, coords({1, 0, 0, 1})));
    CHECK(nak.rho == DenseMatrix::identity(F13, 4));
    CHECK(nak.order == 1);
    Algebra t2 = truncated_poly(F13, 2);
    CHECK(nakayama_matrix(t2, frobenius_form(t2, coords({0, 1}))) == DenseMatrix::identity(F13, 2));
}

TEST_CASE("Nakayama automorphism of Taft algebras")
{
    Algebra h = taft(F13, 2, Scalar{12});
    NakayamaData nak = nakayama(h, frobenius_form(h, taft_form(2)));
    CHECK(nak.rho.column(1) == coords({0, 12, 0, 0}));
    CHECK(nak.rho.column(2) == coords({0, 0, 12, 0}));
    CHECK(nak.order == 2);
    REQUIRE(nak.w);
    CHECK(*nak.w == Scalar{12});

    Algebra h3 = taft(F13, 3, Scalar{3});
    NakayamaData nak3 = nakayama(h3, frobenius_form(h3, taft_form(3)));
    CHECK(nak3.order == 3);
    CHECK(*nak3.w == Scalar{3});
}

TEST_CASE("changing the form twists rho by an inner automorphism")
{
    std::mt19937_64 rng(5);
    for (const Algebra& a : {taft(F13, 2, Scalar{12}), taft(F13, 3, Scalar{3}), matrix_algebra(F13, 2)}) {
        FrobeniusForm form = find_frobenius_form(a, 11, 20);
        DenseMatrix rho = nakayama_matrix(a, form);
        int tried = 0;
        while (tried < 5) {
            Element x{Vector(a.dim())};
            for (auto& c : x.coords)
                c = Scalar{static_cast<std::uint32_t>(rng() % 13)};
            if (rank(F13, a.left_mul_matrix(x)) != a.dim())
                continue;
            ++tried;
            DenseMatrix twisted = nakayama_matrix(a, frobenius_form(a, left_translate_form(a, x, form.phi)));
            const Element rx{apply(F13, rho, x.coords)};
            const DenseMatrix rx_inv = inverse(F13, a.left_mul_matrix(rx));
            for (std::size_t j = 0; j < a.dim(); ++j) {
                Vector expected = a.multiply(apply(F13, rho, a.basis(j).coords), rx.coords);
                expected = apply(F13, rx_inv, expected);
                CHECK(twisted.column(j) == expected);
            }
        }
    }
}

TEST_CASE("eigenspace gradings")
{
    Algebra h = taft(F13, 2, Scalar{12});
    NakayamaData nak = nakayama(h, frobenius_form(h, taft_form(2)));
    Grading g = eigen_grading(h, nak);
    CHECK(g.dims() == std::vector<std::size_t>{2, 2});
    CHECK(g.components[0][0] == h.unit());
    CHECK(g.components[0][1] == unit_vector(4, 3));
    CHECK(g.strongly_graded);
    for (std::size_t i = 0; i < g.m; ++i)
        for (const auto& v : g.components[i]) {
            Vector expected = v;
            for (auto& c : expected)
                c = F13.mul(c, F13.pow(g.w, static_cast<std::int64_t>(i)));
            CHECK(apply(F13, nak.rho, v) == expected);
        }

    Algebra h3 = taft(F13, 3, Scalar{3});
    Grading g3 = eigen_grading(h3, nakayama(h3, frobenius_form(h3, taft_form(3))));
    CHECK(g3.dims() == std::vector<std::size_t>{3, 3, 3});
    CHECK(g3.strongly_graded);

    Algebra m2 = matrix_algebra(F13, 2);
    Grading gm = eigen_grading(m2, nakayama(m2, frobenius_form(m2, coords({1, 0, 0, 1}))));
    CHECK(gm.dims() == std::vector<std::size_t>{4});
    CHECK(gm.strongly_graded);
    Algebra gm_alg = graded_algebra(m2, gm);
    CHECK(gm_alg.unit_index() == 0);
}

TEST_CASE("grading hypotheses")
{
    // order 3 Nakayama automorphism over F_5 has no cube root of unity
    PrimeField f5(5);
    NakayamaData nak;
    nak.order = 3;
    nak.rho = DenseMatrix::identity(f5, 1);
    Algebra k = truncated_poly(f5, 1);
    CHECK(kind_of([&] { eigen_grading(k, nak); }) == ErrorKind::HypothesisFailure);

    Algebra t2 = truncated_poly(F13, 2);
    Grading forced = grading_from_components(t2, Scalar{12}, {{coords({1, 0})}, {coords({0, 1})}});
    CHECK(!forced.strongly_graded);
    CHECK(kind_of([&] { grading_from_components(t2, Scalar{12}, {{coords({0, 1})}, {coords({1, 0})}}); }) ==
          ErrorKind::BadStructure);
}
