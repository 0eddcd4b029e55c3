#include "frobhh/hochschild.hpp"

#include "frobhh/error.hpp"

#include <chrono>

namespace frobhh {

namespace {

constexpr const char* kModule = "hochschild";

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::size_t cohomology_dim(std::size_t cochains, std::size_t rank_out, std::size_t rank_in)
{
    if (rank_out + rank_in > cochains)
        throw Error(ErrorKind::InconsistentSystem, kModule, "ranks exceed the cochain dimension; b^2 != 0");
    return cochains - rank_out - rank_in;
}

}  // namespace

SparseMatrix hochschild_differential(const Algebra& a, std::size_t n, bool normalized, std::size_t budget_bytes)
{
    return CochainComplex::hochschild(a, normalized).differential(n, budget_bytes);
}

std::vector<std::size_t> hh_dims(const Algebra& a, const HochschildOptions& options)
{
    const bool reorder = options.normalized && a.unit_index() != 0;
    const Algebra base = reorder ? a.with_unit_first() : a;
    const CochainComplex cc = CochainComplex::hochschild(base, options.normalized);
    std::vector<std::size_t> ranks;
    for (std::size_t k = 0; k <= options.max_degree; ++k)
        ranks.push_back(rank(a.field(), cc.differential(k, options.memory_budget_bytes), options.elimination));
    std::vector<std::size_t> dims;
    for (std::size_t n = 0; n <= options.max_degree; ++n)
        dims.push_back(cohomology_dim(cc.space(n).size(), ranks[n], n == 0 ? 0 : ranks[n - 1]));
    return dims;
}

bool is_block_diagonal(const SparseMatrix& b, std::span<const std::uint32_t> row_class,
                       std::span<const std::uint32_t> col_class)
{
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (const auto& e : b.row(r))
            if (row_class[r] != col_class[e.col])
                return false;
    return true;
}

CohomologyReport graded_hh_dims(const Algebra& a, const Grading& grading, const HochschildOptions& options)
{
    CohomologyReport report;
    report.max_degree = options.max_degree;
    report.normalized = options.normalized;
    report.m = grading.m;

    Stopwatch ungraded_clock;
    report.dims = hh_dims(a, options);
    report.timings_ms["ungraded"] = ungraded_clock.elapsed_ms();

    Stopwatch graded_clock;
    const Algebra ga = graded_algebra(a, grading);
    const CochainComplex cc = CochainComplex::hochschild(ga, options.normalized);
    const std::size_t m = grading.m;

    std::vector<std::vector<std::uint32_t>> classes;
    for (std::size_t n = 0; n <= options.max_degree + 1; ++n)
        classes.push_back(cc.cochain_classes(n, grading.class_of, m));

    // members[n][i] = cochain indices of class i in C^n; local[n][j] = position within its class
    std::vector<std::vector<std::vector<std::uint32_t>>> members(classes.size(), std::vector<std::vector<std::uint32_t>>(m));
    std::vector<std::vector<std::int64_t>> local(classes.size());
    for (std::size_t n = 0; n < classes.size(); ++n) {
        local[n].resize(classes[n].size());
        for (std::size_t j = 0; j < classes[n].size(); ++j) {
            auto& list = members[n][classes[n][j]];
            local[n][j] = static_cast<std::int64_t>(list.size());
            list.push_back(static_cast<std::uint32_t>(j));
        }
    }

    std::vector<std::vector<std::size_t>> ranks(m);
    for (std::size_t k = 0; k <= options.max_degree; ++k) {
        const SparseMatrix b = cc.differential(k, options.memory_budget_bytes);
        if (!is_block_diagonal(b, classes[k + 1], classes[k]))
            throw Error(ErrorKind::InconsistentSystem, kModule, "the differential mixes grading classes");
        for (std::size_t i = 0; i < m; ++i) {
            // columns of other classes never occur in class-i rows, so the shared map is safe
            const SparseMatrix block = b.restrict(members[k + 1][i], local[k], members[k][i].size());
            ranks[i].push_back(rank(a.field(), block, options.elimination));
        }
    }
    report.graded_dims.assign(m, {});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t n = 0; n <= options.max_degree; ++n)
            report.graded_dims[i].push_back(
                cohomology_dim(members[n][i].size(), ranks[i][n], n == 0 ? 0 : ranks[i][n - 1]));
    report.timings_ms["graded"] = graded_clock.elapsed_ms();
    return report;
}

TheoremAReport verify_theorem_a(const Algebra& a, const Grading& grading, const HochschildOptions& options)
{
    TheoremAReport r;
    r.cohomology = graded_hh_dims(a, grading, options);
    r.pass = true;
    for (std::size_t n = 0; n <= options.max_degree; ++n) {
        bool ok = r.cohomology.dims[n] == r.cohomology.graded_dims[0][n];
        for (std::size_t i = 1; i < grading.m; ++i)
            ok = ok && r.cohomology.graded_dims[i][n] == 0;
        r.degree_pass.push_back(ok);
        r.pass = r.pass && ok;
    }
    return r;
}

std::size_t center_dimension(const Algebra& a)
{
    const PrimeField& f = a.field();
    const std::size_t d = a.dim();
    DenseMatrix commutators(d * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                commutators(i * d + k, j) = f.sub(a.structure_constant(i, j, k), a.structure_constant(j, i, k));
    return d - rank(f, commutators);
}

}  // namespace frobhh
