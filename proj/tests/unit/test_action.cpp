#include <doctest.h>

#include "frobhh/action.hpp"
#include "frobhh/error.hpp"

using namespace frobhh;

namespace {

const PrimeField F13(13);

Vector taft_form(std::size_t n)
{
    Vector v(n * n);
    v[(n - 1) * n + 1] = F13.one();
    return v;
}

Grading taft_grading(const Algebra& h, std::size_t n)
{
    return eigen_grading(h, nakayama(h, frobenius_form(h, taft_form(n))));
}

HochschildOptions opts(std::size_t n_max)
{
    HochschildOptions o;
    o.max_degree = n_max;
    return o;
}

Vector sum_s_prime_s(const Algebra& a, const PartitionOfUnity& p)
{
    Vector total(a.dim());
    for (const auto& pair : p.pairs) {
        Vector prod = a.multiply(pair.s_prime, pair.s);
        for (std::size_t k = 0; k < a.dim(); ++k)
            total[k] = F13.add(total[k], prod[k]);
    }
    return total;
}

}  // namespace

TEST_CASE("partitions of unity")
{
    Algebra h = taft(F13, 2, Scalar{12});
    GradedView view = make_graded_view(h, taft_grading(h, 2));
    PartitionOfUnity p0 = partition_of_unity(view, 0);
    REQUIRE(p0.pairs.size() == 1);
    CHECK(p0.pairs[0].s == view.algebra.unit());
    CHECK(p0.pairs[0].s_prime == view.algebra.unit());
    PartitionOfUnity p1 = partition_of_unity(view, 1);
    REQUIRE(p1.pairs.size() == 1);
    CHECK(view.algebra.labels()[view.letters[1][0]] == "g");
    CHECK(p1.pairs[0].s == view.algebra.basis(view.letters[1][0]).coords);
    CHECK(p1.pairs[0].s_prime == p1.pairs[0].s);

    Algebra h3 = taft(F13, 3, Scalar{3});
    GradedView view3 = make_graded_view(h3, taft_grading(h3, 3));
    for (std::size_t i = 0; i < 3; ++i) {
        PartitionOfUnity p = partition_of_unity(view3, i);
        CHECK(sum_s_prime_s(view3.algebra, p) == view3.algebra.unit());
        for (const auto& pair : p.pairs)
            for (std::size_t k = 0; k < 9; ++k) {
                if (!pair.s[k].is_zero())
                    CHECK(view3.grading.class_of[k] == i);
                if (!pair.s_prime[k].is_zero())
                    CHECK(view3.grading.class_of[k] == (3 - i) % 3);
            }
    }

    Algebra t2 = truncated_poly(F13, 2);
    Vector one{F13.one(), F13.zero()};
    Vector x{F13.zero(), F13.one()};
    GradedView bad = make_graded_view(t2, grading_from_components(t2, Scalar{12}, {{one}, {x}}));
    try {
        partition_of_unity(bad, 1);
        FAIL("expected NotStronglyGraded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotStronglyGraded);
    }
}

TEST_CASE("theta on small cochain spaces")
{
    Algebra h = taft(F13, 2, Scalar{12});
    GradedView view = make_graded_view(h, taft_grading(h, 2));
    const auto& l0 = view.letters[0];
    PartitionOfUnity p0 = partition_of_unity(view, 0);
    PartitionOfUnity p1 = partition_of_unity(view, 1);
    for (std::size_t n = 0; n < 3; ++n) {
        DenseMatrix th0 = theta_matrix(view.algebra, l0, l0, p0.pairs, n);
        CHECK(th0 == DenseMatrix::identity(F13, th0.rows()));
    }
    // n = 0: a -> g a g on span{1, xg}
    DenseMatrix th = theta_matrix(view.algebra, l0, l0, p1.pairs, 0);
    REQUIRE(th.rows() == 2);
    CHECK(th(0, 0) == F13.one());
    CHECK(th(1, 1) == Scalar{12});
    CHECK(th(0, 1) == F13.zero());
    CHECK(th(1, 0) == F13.zero());

    CochainComplex cc(view.algebra, l0, l0, false);
    DenseMatrix b = cc.differential(1).to_dense();
    CHECK(multiply(F13, b, theta_matrix(view.algebra, l0, l0, p1.pairs, 1)) ==
          multiply(F13, theta_matrix(view.algebra, l0, l0, p1.pairs, 2), b));
}

TEST_CASE("action on cohomology of the four-dimensional Taft algebra")
{
    Algebra h = taft(F13, 2, Scalar{12});
    GradedView view = make_graded_view(h, taft_grading(h, 2));
    ActionReport r = cohomology_action(view, 2);
    const ActionCell& c00 = r.cells[0][0];
    CHECK(c00.dim == 2);
    CHECK(c00.t(0, 0) == F13.one());
    CHECK(c00.t(1, 1) == Scalar{12});
    CHECK(c00.fixed_dim_kernel == 1);
    for (const auto& row : r.cells)
        for (const auto& cell : row)
            CHECK(cell.consistent());
}

TEST_CASE("cohomology equals action invariants on Taft algebras and degenerate gradings")
{
    Algebra h = taft(F13, 2, Scalar{12});
    TheoremBReport r2 = verify_theorem_b(h, taft_grading(h, 2), opts(3));
    CHECK(r2.pass);
    CHECK(r2.rigidity.hh2_dim == 1);
    CHECK(r2.rigidity.verdict == "unknown");

    Algebra h3 = taft(F13, 3, Scalar{3});
    TheoremBReport r3 = verify_theorem_b(h3, taft_grading(h3, 3), opts(2));
    CHECK(r3.pass);

    Algebra m2 = matrix_algebra(F13, 2);
    Vector trace(4);
    trace[0] = trace[3] = F13.one();
    TheoremBReport rm = verify_theorem_b(m2, eigen_grading(m2, nakayama(m2, frobenius_form(m2, trace))), opts(2));
    CHECK(rm.pass);
    CHECK(rm.rigidity.verdict == "rigid");

    Algebra c3 = cyclic_group_algebra(F13, 3);
    Vector delta(3);
    delta[0] = F13.one();
    TheoremBReport rc = verify_theorem_b(c3, eigen_grading(c3, nakayama(c3, frobenius_form(c3, delta))), opts(2));
    CHECK(rc.pass);
    CHECK(rc.rigidity.verdict == "rigid");
}

TEST_CASE("displayed Taft action")
{
    TaftActionReport r2 = taft_action_formula_check(F13, 2, Scalar{12}, 2);
    CHECK(r2.pass);
    CHECK(r2.h0_labels == std::vector<std::string>{"1", "xg"});
    TaftActionReport r3 = taft_action_formula_check(F13, 3, Scalar{3}, 2);
    REQUIRE(r3.degrees.size() == 3);
    CHECK(r3.degrees[0].display_matches);
    for (const auto& d : r3.degrees)
        CHECK(d.inverse_scaling_matches);
}
