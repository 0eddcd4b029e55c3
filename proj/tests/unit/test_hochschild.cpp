#include <doctest.h>

#include "frobhh/error.hpp"
#include "frobhh/hochschild.hpp"

#include "../oracle/hh_oracle.hpp"

using namespace frobhh;

namespace {

const PrimeField F13(13);

oracle::Table table_of(const Algebra& a)
{
    oracle::Table t{a.field().characteristic(), static_cast<int>(a.dim()), {}};
    t.c.assign(a.dim() * a.dim() * a.dim(), 0);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (const auto& term : a.product(i, j))
                t.c[(i * a.dim() + j) * a.dim() + term.index] = term.coeff.v;
    return t;
}

std::vector<std::size_t> as_sizes(const std::vector<int>& v)
{
    return {v.begin(), v.end()};
}

Vector taft_form(std::size_t n)
{
    Vector v(n * n);
    v[(n - 1) * n + 1] = F13.one();
    return v;
}

HochschildOptions opts(std::size_t n_max, bool normalized)
{
    HochschildOptions o;
    o.max_degree = n_max;
    o.normalized = normalized;
    return o;
}

}  // namespace

TEST_CASE("oracle anchors")
{
    CHECK(oracle::hh_dims(table_of(truncated_poly(F13, 2)), 3) == std::vector<int>{2, 1, 1, 1});
    CHECK(oracle::hh_dims(table_of(matrix_algebra(F13, 2)), 2) == std::vector<int>{1, 0, 0});
}

TEST_CASE("classical dimensions")
{
    CHECK(hh_dims(truncated_poly(F13, 2), opts(3, true)) == std::vector<std::size_t>{2, 1, 1, 1});
    CHECK(hh_dims(truncated_poly(F13, 2), opts(3, false)) == std::vector<std::size_t>{2, 1, 1, 1});
    CHECK(hh_dims(matrix_algebra(F13, 2), opts(2, true)) == std::vector<std::size_t>{1, 0, 0});
    CHECK(hh_dims(matrix_algebra(F13, 2), opts(2, false)) == std::vector<std::size_t>{1, 0, 0});
    CHECK(hh_dims(cyclic_group_algebra(F13, 3), opts(2, true)) == std::vector<std::size_t>{3, 0, 0});
}

TEST_CASE("differentials square to zero")
{
    for (const Algebra& a : {truncated_poly(F13, 3), matrix_algebra(F13, 2), taft(F13, 2, Scalar{12})}) {
        for (bool normalized : {false, true}) {
            const Algebra base = normalized ? a.with_unit_first() : a;
            for (std::size_t n = 0; n < 3; ++n) {
                SparseMatrix b0 = hochschild_differential(base, n, normalized);
                SparseMatrix b1 = hochschild_differential(base, n + 1, normalized);
                CHECK(multiply(F13, b1, b0).is_zero());
            }
        }
    }
    CHECK(hochschild_differential(truncated_poly(F13, 2), 0).is_zero());
    CHECK(rank(F13, hochschild_differential(matrix_algebra(F13, 2), 0)) == 3);
}

TEST_CASE("differential matches the oracle entrywise")
{
    for (const Algebra& a : {taft(F13, 2, Scalar{12}), matrix_algebra(F13, 2)}) {
        for (int n = 0; n < 3; ++n) {
            auto ref = oracle::differential(table_of(a), n);
            DenseMatrix b = hochschild_differential(a, static_cast<std::size_t>(n)).to_dense();
            REQUIRE(b.rows() == ref.size());
            bool same = true;
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    same = same && b(i, j).v == static_cast<std::uint32_t>(ref[i][j]);
            CHECK(same);
        }
    }
}

TEST_CASE("normalized and full complexes agree with the oracle on the corpus")
{
    std::vector<Algebra> corpus{truncated_poly(F13, 2), truncated_poly(F13, 3), truncated_poly(F13, 4),
                                matrix_algebra(F13, 2), cyclic_group_algebra(F13, 2), cyclic_group_algebra(F13, 3),
                                taft(F13, 2, Scalar{12})};
    for (const Algebra& a : corpus) {
        auto expected = as_sizes(oracle::hh_dims(table_of(a), 3));
        CHECK(hh_dims(a, opts(3, true)) == expected);
        CHECK(hh_dims(a, opts(3, false)) == expected);
        CHECK(expected[0] == center_dimension(a));
        CHECK(center_dimension(a) == static_cast<std::size_t>(oracle::center_dim(table_of(a))));
    }
}

TEST_CASE("graded dimensions of the four-dimensional Taft algebra")
{
    Algebra h = taft(F13, 2, Scalar{12});
    Grading g = eigen_grading(h, nakayama(h, frobenius_form(h, taft_form(2))));
    TheoremAReport r = verify_theorem_a(h, g, opts(3, true));
    CHECK(r.pass);
    for (std::size_t n = 0; n <= 3; ++n) {
        CHECK(r.cohomology.graded_dims[1][n] == 0);
        CHECK(r.cohomology.graded_dims[0][n] + r.cohomology.graded_dims[1][n] == r.cohomology.dims[n]);
    }
    TheoremAReport full = verify_theorem_a(h, g, opts(3, false));
    CHECK(full.cohomology.dims == r.cohomology.dims);
    CHECK(full.cohomology.graded_dims == r.cohomology.graded_dims);
}

TEST_CASE("trivial grading collapses to the ungraded row")
{
    Algebra m2 = matrix_algebra(F13, 2);
    Vector trace(4);
    trace[0] = trace[3] = F13.one();
    Grading g = eigen_grading(m2, nakayama(m2, frobenius_form(m2, trace)));
    CohomologyReport r = graded_hh_dims(m2, g, opts(2, true));
    REQUIRE(r.graded_dims.size() == 1);
    CHECK(r.graded_dims[0] == r.dims);
}

TEST_CASE("memory budget")
{
    Algebra h = taft(F13, 3, Scalar{3});
    try {
        hochschild_differential(h, 6, false, 1024);
        FAIL("expected DegreeTooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegreeTooLarge);
    }
}
