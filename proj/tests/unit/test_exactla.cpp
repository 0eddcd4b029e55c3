#include <doctest.h>

#include "frobhh/error.hpp"
#include "frobhh/linalg.hpp"

#include <random>

using namespace frobhh;

namespace {

DenseMatrix diag(const PrimeField& f, std::initializer_list<int> values)
{
    DenseMatrix m(values.size(), values.size());
    std::size_t i = 0;
    for (int v : values) {
        m(i, i) = f.from_int(v);
        ++i;
    }
    return m;
}

DenseMatrix random_matrix(const PrimeField& f, std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                          double density)
{
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::uint32_t> value(1, f.characteristic() - 1);
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (coin(rng) < density)
                m(i, j) = Scalar{value(rng)};
    return m;
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

TEST_CASE("prime field construction")
{
    CHECK(PrimeField(13).characteristic() == 13);
    CHECK(PrimeField(2).characteristic() == 2);
    CHECK(kind_of([] { PrimeField f(12); }) == ErrorKind::NotPrime);
    CHECK(kind_of([] { PrimeField f(1); }) == ErrorKind::NotPrime);
    CHECK(kind_of([] { PrimeField f(std::int64_t{1} << 31); }) == ErrorKind::NotPrime);
    CHECK(PrimeField(2147483647).characteristic() == 2147483647u);
}

TEST_CASE("field arithmetic")
{
    PrimeField f(13);
    CHECK(f.inv(Scalar{2}) == Scalar{7});
    CHECK(f.pow(Scalar{2}, -1) == Scalar{7});
    CHECK(f.from_int(-1) == Scalar{12});
    CHECK(f.order(Scalar{3}) == 3);
    CHECK(f.order(Scalar{12}) == 2);
    CHECK(kind_of([&] { f.inv(Scalar{0}); }) == ErrorKind::NotInvertible);
    PrimeField big(2147483647);
    Scalar a{2147483646};
    CHECK(big.mul(a, a) == big.one());
    CHECK(big.mul(a, big.inv(a)) == big.one());
}

TEST_CASE("primitive roots of unity")
{
    PrimeField f(13);
    CHECK(primitive_root_of_unity(f, 3) == Scalar{3});
    CHECK(primitive_root_of_unity(f, 1) == Scalar{1});
    CHECK(primitive_root_of_unity(f, 2) == Scalar{12});
    CHECK(kind_of([&] { primitive_root_of_unity(f, 5); }) == ErrorKind::NoRoot);
    for (std::uint64_t m : {1, 2, 3, 4, 6, 12}) {
        Scalar w = primitive_root_of_unity(f, m);
        CHECK(f.pow(w, static_cast<std::int64_t>(m)) == f.one());
        for (std::uint64_t r = 1; r < m; ++r)
            CHECK(f.pow(w, static_cast<std::int64_t>(r)) != f.one());
    }
}

TEST_CASE("rank, kernel and solve on small matrices")
{
    PrimeField f(13);
    CHECK(rank(f, DenseMatrix::identity(f, 3)) == 3);
    CHECK(rank(f, SparseMatrix::identity(f, 3)) == 3);
    DenseMatrix zero(2, 2);
    auto k = kernel_basis(f, zero);
    CHECK(k.size() == 2);
    CHECK(rank(f, DenseMatrix::from_columns(2, k)) == 2);

    DenseMatrix two(1, 1);
    two(0, 0) = Scalar{2};
    CHECK(solve(f, two, Vector{Scalar{1}}) == Vector{Scalar{7}});

    DenseMatrix singular(2, 2);
    singular(0, 0) = Scalar{1};
    CHECK(kind_of([&] { solve(f, singular, Vector{Scalar{0}, Scalar{1}}); }) == ErrorKind::NoSolution);
    CHECK(kind_of([&] { solve(f, singular, Vector{Scalar{0}}); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([&] { inverse(f, singular); }) == ErrorKind::NotInvertible);
}

TEST_CASE("matrix order")
{
    PrimeField f(13);
    CHECK(matrix_order(f, diag(f, {3, 1}), 100) == 3);
    CHECK(matrix_order(f, DenseMatrix::identity(f, 4), 100) == 1);
    CHECK(kind_of([&] { matrix_order(f, diag(f, {12, 12}), 1); }) == ErrorKind::CapExceeded);
    CHECK(kind_of([&] { matrix_order(f, diag(f, {0, 1}), 10); }) == ErrorKind::NotInvertible);
}

TEST_CASE("sparse round trips and products")
{
    PrimeField f(13);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        DenseMatrix a = random_matrix(f, rng, 7, 5, 0.3);
        DenseMatrix b = random_matrix(f, rng, 5, 6, 0.3);
        SparseMatrix sa = SparseMatrix::from_dense(a);
        CHECK(sa.to_dense() == a);
        CHECK(sa.transpose().to_dense() == a.transpose());
        CHECK(multiply(f, sa, SparseMatrix::from_dense(b)).to_dense() == multiply(f, a, b));
    }
    std::vector<SparseMatrix::Triplet> t{{0, 1, Scalar{5}}, {0, 1, Scalar{8}}, {1, 0, Scalar{3}}};
    SparseMatrix s = SparseMatrix::from_triplets(f, 2, 2, t);
    CHECK(s.nnz() == 1);
    CHECK(s.at(1, 0) == Scalar{3});
}

TEST_CASE("rank properties on random matrices")
{
    PrimeField f(13);
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 60);
        std::uniform_real_distribution<double> dens(0.02, 0.5);
        DenseMatrix m = random_matrix(f, rng, dim(rng), dim(rng), dens(rng));
        const std::size_t r = rank(f, m);
        CHECK(r == rank(f, m.transpose()));
        CHECK(r == rank(f, SparseMatrix::from_dense(m)));
        CHECK(r + kernel_basis(f, m).size() == m.cols());
        CHECK(kernel_basis(f, SparseMatrix::from_dense(m)).size() == m.cols() - r);
        for (const Vector& v : kernel_basis(f, m))
            for (Scalar s : apply(f, m, v))
                CHECK(s.is_zero());
        Vector x(m.cols());
        for (auto& s : x)
            s = Scalar{static_cast<std::uint32_t>(rng() % 13)};
        Vector mx = apply(f, m, x);
        CHECK(apply(f, m, solve(f, m, mx)) == mx);
    }
}

TEST_CASE("sparse elimination without dense fallback")
{
    PrimeField f(13);
    std::mt19937_64 rng(99);
    EliminationOptions never_dense;
    never_dense.density_threshold = 2.0;
    EliminationOptions always_dense;
    always_dense.density_threshold = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        DenseMatrix m = random_matrix(f, rng, 40, 50, 0.08);
        const std::size_t r = rank_dense(f, m);
        SparseMatrix s = SparseMatrix::from_dense(m);
        CHECK(rank(f, s, never_dense) == r);
        CHECK(rank(f, s, always_dense) == r);
    }
}
