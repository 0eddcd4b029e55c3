#include <doctest.h>

#include "frobhh/algebra.hpp"
#include "frobhh/error.hpp"
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

TEST_CASE("matrix units multiply")
{
    Algebra m2 = matrix_algebra(F13, 2);
    CHECK(m2.dim() == 4);
    CHECK(m2.labels()[1] == "e12");
    CHECK(m2.multiply(m2.basis(0), m2.basis(1)) == m2.basis(1));
    CHECK(m2.multiply(m2.basis(1), m2.basis(0)) == Element{coords({0, 0, 0, 0})});
    CHECK(rank(F13, m2.left_mul_matrix(m2.basis(0))) == 2);
    CHECK(m2.left_mul_matrix(m2.one()) == DenseMatrix::identity(F13, 4));
    CHECK(!m2.unit_index());
    CHECK(!m2.is_commutative());
}

TEST_CASE("taft algebra of dimension 4")
{
    Algebra h = taft(F13, 2, Scalar{12});
    REQUIRE(h.dim() == 4);
    CHECK(h.labels() == std::vector<std::string>{"1", "g", "x", "xg"});
    const Element g = h.basis(1);
    const Element x = h.basis(2);
    CHECK(h.multiply(g, x) == Element{coords({0, 0, 0, 12})});
    CHECK(h.multiply(x, g) == h.basis(3));
    CHECK(multiply(F13, h.left_mul_matrix(x), h.left_mul_matrix(x)).is_zero());
    CHECK(h.unit_index() == 0);
}

TEST_CASE("taft relations in coordinates")
{
    for (std::size_t n : {2u, 3u, 4u}) {
        const Scalar w = primitive_root_of_unity(F13, n);
        Algebra h = taft(F13, n, w);
        CHECK(h.dim() == n * n);
        const Element g = h.basis(1);
        const Element x = h.basis(n);
        CHECK(h.power(g, n) == h.one());
        CHECK(h.power(x, n) == Element{Vector(n * n)});
        Element wgx = h.multiply(g, x);
        for (auto& c : wgx.coords)
            c = F13.mul(c, w);
        CHECK(h.multiply(x, g) == wgx);
    }
    CHECK(kind_of([] { taft(F13, 3, Scalar{2}); }) == ErrorKind::BadRoot);
    CHECK(kind_of([] { taft(F13, 4, Scalar{12}); }) == ErrorKind::NotPrimitivePower);
}

TEST_CASE("unit laws and small constructors")
{
    for (const Algebra& a : {truncated_poly(F13, 2), cyclic_group_algebra(F13, 3), matrix_algebra(F13, 2),
                             taft(F13, 3, Scalar{3})}) {
        for (std::size_t i = 0; i < a.dim(); ++i) {
            CHECK(a.multiply(a.one(), a.basis(i)) == a.basis(i));
            CHECK(a.multiply(a.basis(i), a.one()) == a.basis(i));
        }
    }
    Algebra t2 = truncated_poly(F13, 2);
    CHECK(t2.multiply(t2.basis(1), t2.basis(1)) == Element{coords({0, 0})});
    CHECK(t2.is_commutative());
}

TEST_CASE("bad structure constants are rejected")
{
    // x^2 = 1 and xy = y but yx = 0 with y^2 = 0: unit law holds, associativity fails.
    std::vector<std::vector<Vector>> s(3, std::vector<Vector>(3, coords({0, 0, 0})));
    s[0][0] = coords({1, 0, 0});
    s[0][1] = coords({0, 1, 0});
    s[1][0] = coords({0, 1, 0});
    s[0][2] = coords({0, 0, 1});
    s[2][0] = coords({0, 0, 1});
    s[1][1] = coords({0, 0, 1});
    s[1][2] = coords({1, 0, 0});
    CHECK(kind_of([&] { Algebra a(F13, {"1", "a", "b"}, s, coords({1, 0, 0})); }) == ErrorKind::BadStructure);
    CHECK(kind_of([&] { Algebra a(F13, {"1", "a", "b"}, s, coords({0, 1, 0})); }) == ErrorKind::BadStructure);
    CHECK(kind_of([&] { Algebra a(F13, {"1", "a"}, s, coords({1, 0, 0})); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("basis changes")
{
    Algebra m2 = matrix_algebra(F13, 2);
    DenseMatrix p;
    Algebra b = m2.with_unit_first(&p);
    CHECK(b.unit_index() == 0);
    CHECK(b.labels()[0] == "1");
    CHECK(p.column(0) == m2.unit());
    CHECK(!b.is_commutative());

    Algebra h = taft(F13, 2, Scalar{12});
    std::vector<std::size_t> idx{0, 3};
    Algebra a0 = h.subalgebra(idx);
    CHECK(a0.dim() == 2);
    CHECK(a0.multiply(a0.basis(1), a0.basis(1)) == Element{coords({0, 0})});
    std::vector<std::size_t> not_closed{0, 1, 2};
    CHECK(kind_of([&] { h.subalgebra(not_closed); }) == ErrorKind::BadStructure);
}

TEST_CASE("taft Hopf structure")
{
    Algebra h = taft(F13, 2, Scalar{12});
    HopfData hd = taft_hopf(h, 2);
    auto dx = hd.coproduct(2);
    REQUIRE(dx.size() == 2);
    CHECK(dx[0].left == 0);
    CHECK(dx[0].right == 2);
    CHECK(dx[1].left == 2);
    CHECK(dx[1].right == 1);
    CHECK(hd.antipode().column(2) == coords({0, 0, 0, 12}));
    CHECK(hd.antipode().column(0) == coords({1, 0, 0, 0}));
    CHECK(hd.counit()[0] == F13.one());

    for (std::size_t n : {3u, 4u}) {
        Algebra t = taft(F13, n, primitive_root_of_unity(F13, n));
        CHECK_NOTHROW(taft_hopf(t, n));
    }
    Algebra c3 = cyclic_group_algebra(F13, 3);
    HopfData gh = cyclic_group_hopf(c3, 3);
    CHECK(multiply(F13, gh.antipode(), gh.antipode()) == DenseMatrix::identity(F13, 3));
}

TEST_CASE("broken Hopf data is rejected")
{
    Algebra h = taft(F13, 2, Scalar{12});
    HopfData good = taft_hopf(h, 2);
    std::vector<std::vector<CoproductTerm>> comul;
    for (std::size_t i = 0; i < 4; ++i)
        comul.emplace_back(good.coproduct(i).begin(), good.coproduct(i).end());
    DenseMatrix bad_antipode = DenseMatrix::identity(F13, 4);
    CHECK(kind_of([&] { HopfData(h, comul, good.counit(), bad_antipode); }) == ErrorKind::BadStructure);
    auto bad_comul = comul;
    bad_comul[2].pop_back();
    CHECK(kind_of([&] { HopfData(h, bad_comul, good.counit(), good.antipode()); }) == ErrorKind::BadStructure);
}
