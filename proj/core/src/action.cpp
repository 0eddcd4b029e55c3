#include "frobhh/action.hpp"

#include "frobhh/error.hpp"
#include "frobhh/linalg.hpp"

namespace frobhh {

namespace {

constexpr const char* kModule = "action";

std::vector<std::int64_t> position_map(std::size_t d, std::span<const std::uint32_t> letters)
{
    std::vector<std::int64_t> pos(d, -1);
    for (std::size_t i = 0; i < letters.size(); ++i)
        pos[letters[i]] = static_cast<std::int64_t>(i);
    return pos;
}

Vector restrict_to(const Vector& v, const std::vector<std::int64_t>& pos, std::size_t count, const char* what)
{
    Vector out(count);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        if (pos[k] < 0)
            throw Error(ErrorKind::BadStructure, kModule, what);
        out[static_cast<std::size_t>(pos[k])] = v[k];
    }
    return out;
}

DenseMatrix subtract_identity(const PrimeField& f, DenseMatrix m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, i) = f.sub(m(i, i), f.one());
    return m;
}

// Matrix of the map induced on representatives by a chain map `theta`.
DenseMatrix induced(const PrimeField& f, const CohomologyPresentation& pres, const DenseMatrix& theta)
{
    DenseMatrix t(pres.dim(), pres.dim());
    for (std::size_t k = 0; k < pres.dim(); ++k) {
        const Vector coords = pres.reduce(f, apply(f, theta, pres.representatives[k]));
        for (std::size_t r = 0; r < pres.dim(); ++r)
            t(r, k) = coords[r];
    }
    return t;
}

// Display-style action F -> g^{N-1} F(c^{e_1} a_1, ..., c^{e_n} a_n) g where
// a = x^e g^e and c is a scalar.
DenseMatrix scaled_display(const Algebra& h, std::span<const std::uint32_t> letters,
                           const std::vector<Scalar>& letter_scale, std::size_t n, std::size_t big_n)
{
    const PrimeField& f = h.field();
    const auto pos = position_map(h.dim(), letters);
    const std::size_t nl = letters.size();
    const CochainSpace space(n, nl, nl);
    const Element g_inv = h.power(h.basis(1), big_n - 1);
    const Element g = h.basis(1);
    std::vector<Vector> outer(nl);
    for (std::size_t o = 0; o < nl; ++o)
        outer[o] = restrict_to(h.multiply(h.multiply(g_inv, h.basis(letters[o])), g).coords, pos, nl,
                               "conjugation leaves the subalgebra");
    DenseMatrix m(space.size(), space.size());
    std::vector<std::uint32_t> tuple;
    for (std::size_t code = 0; code < space.tuple_count(); ++code) {
        space.decode(code * nl, tuple);
        Scalar c = f.one();
        for (std::uint32_t a : tuple)
            c = f.mul(c, letter_scale[a]);
        for (std::size_t o = 0; o < nl; ++o)
            for (std::size_t o2 = 0; o2 < nl; ++o2)
                m(code * nl + o2, code * nl + o) = f.mul(c, outer[o][o2]);
    }
    return m;
}

}  // namespace

GradedView make_graded_view(const Algebra& a, const Grading& grading)
{
    GradedView view{graded_algebra(a, grading), grading, std::vector<std::vector<std::uint32_t>>(grading.m)};
    for (std::size_t k = 0; k < grading.class_of.size(); ++k)
        view.letters[grading.class_of[k]].push_back(static_cast<std::uint32_t>(k));
    return view;
}

PartitionOfUnity partition_of_unity(const GradedView& view, std::size_t i)
{
    const Algebra& a = view.algebra;
    const PrimeField& f = a.field();
    const std::size_t m = view.grading.m;
    const auto& us = view.letters[i % m];
    const auto& vs = view.letters[(m - i % m) % m];
    std::vector<Vector> columns;
    for (std::uint32_t v : vs)
        for (std::uint32_t u : us)
            columns.push_back(a.multiply(a.basis(v), a.basis(u)).coords);
    std::optional<Vector> c;
    if (!columns.empty())
        c = try_solve(f, DenseMatrix::from_columns(a.dim(), columns), a.unit());
    if (!c)
        throw Error(ErrorKind::NotStronglyGraded, kModule,
                    "1 is not in A_" + std::to_string((m - i % m) % m) + " A_" + std::to_string(i % m));
    PartitionOfUnity p;
    p.i = i % m;
    for (std::size_t b = 0; b < vs.size(); ++b)
        for (std::size_t al = 0; al < us.size(); ++al) {
            const Scalar coeff = (*c)[b * us.size() + al];
            if (coeff.is_zero())
                continue;
            Vector s_prime(a.dim());
            s_prime[vs[b]] = coeff;
            p.pairs.push_back({a.basis(us[al]).coords, std::move(s_prime)});
        }
    return p;
}

DenseMatrix theta_matrix(const Algebra& a, std::span<const std::uint32_t> l_letters,
                         std::span<const std::uint32_t> m_letters, std::span<const PartitionPair> pairs,
                         std::size_t n)
{
    const PrimeField& f = a.field();
    const std::size_t nl = l_letters.size();
    const std::size_t nm = m_letters.size();
    const std::size_t np = pairs.size();
    const auto lpos = position_map(a.dim(), l_letters);
    const auto mpos = position_map(a.dim(), m_letters);

    // conj[(j * np + j2) * nl + l] = s_j l s'_{j2} in L coordinates
    std::vector<Vector> conj(np * np * nl);
    // outer[(j * np + j2) * nm + o] = s'_j o s_{j2} in M coordinates
    std::vector<Vector> outer(np * np * nm);
    for (std::size_t j = 0; j < np; ++j)
        for (std::size_t j2 = 0; j2 < np; ++j2) {
            for (std::size_t l = 0; l < nl; ++l)
                conj[(j * np + j2) * nl + l] = restrict_to(
                    a.multiply(a.multiply(pairs[j].s, a.basis(l_letters[l]).coords), pairs[j2].s_prime), lpos, nl,
                    "s a s' leaves the input subalgebra");
            for (std::size_t o = 0; o < nm; ++o)
                outer[(j * np + j2) * nm + o] = restrict_to(
                    a.multiply(a.multiply(pairs[j].s_prime, a.basis(m_letters[o]).coords), pairs[j2].s), mpos, nm,
                    "s' c s leaves the coefficients");
        }

    const CochainSpace space(n, nl, nm);
    DenseMatrix theta(space.size(), space.size());
    std::vector<std::uint32_t> tuple;
    std::vector<std::size_t> choice(n + 1, 0);
    std::size_t choice_count = 1;
    for (std::size_t k = 0; k <= n; ++k)
        choice_count *= np;
    for (std::size_t code = 0; code < space.tuple_count(); ++code) {
        space.decode(code * nm, tuple);
        std::fill(choice.begin(), choice.end(), 0);
        for (std::size_t c = 0; c < choice_count; ++c) {
            if (c > 0) {
                for (std::size_t t = n + 1; t-- > 0;) {
                    if (++choice[t] < np)
                        break;
                    choice[t] = 0;
                }
            }
            Vector kron{f.one()};
            for (std::size_t t = 0; t < n; ++t) {
                const Vector& factor = conj[(choice[t] * np + choice[t + 1]) * nl + tuple[t]];
                Vector next(kron.size() * nl);
                for (std::size_t x = 0; x < kron.size(); ++x)
                    if (!kron[x].is_zero())
                        for (std::size_t l = 0; l < nl; ++l)
                            next[x * nl + l] = f.mul(kron[x], factor[l]);
                kron = std::move(next);
            }
            const std::size_t pair_index = choice[0] * np + choice[n];
            for (std::size_t in = 0; in < kron.size(); ++in) {
                if (kron[in].is_zero())
                    continue;
                for (std::size_t o = 0; o < nm; ++o) {
                    const Vector& out = outer[pair_index * nm + o];
                    for (std::size_t o2 = 0; o2 < nm; ++o2)
                        if (!out[o2].is_zero()) {
                            Scalar& cell = theta(code * nm + o2, in * nm + o);
                            cell = f.fma(cell, kron[in], out[o2]);
                        }
                }
            }
        }
    }
    return theta;
}

Vector CohomologyPresentation::reduce(const PrimeField& f, const Vector& z) const
{
    std::optional<Vector> x = try_solve(f, coboundaries_then_reps, z);
    if (!x)
        throw Error(ErrorKind::InconsistentSystem, kModule, "vector is not a cocycle of the presented complex");
    return Vector(x->begin() + static_cast<std::ptrdiff_t>(coboundary_dim), x->end());
}

CohomologyPresentation present_cohomology(const GradedView& view, std::size_t n, std::size_t v)
{
    const Algebra& a = view.algebra;
    const PrimeField& f = a.field();
    const CochainComplex cc(a, view.letters[0], view.letters[v], false);
    CohomologyPresentation pres;
    pres.n = n;
    pres.v = v;
    pres.cochain_dim = cc.space(n).size();
    const DenseMatrix b_out = cc.differential(n).to_dense();
    const std::vector<Vector> cocycles = kernel_basis(f, b_out);
    pres.cocycle_dim = cocycles.size();

    std::vector<Vector> columns;
    if (n > 0) {
        const DenseMatrix b_in = cc.differential(n - 1).to_dense();
        for (std::size_t c : independent_columns(f, b_in))
            columns.push_back(b_in.column(c));
    }
    pres.coboundary_dim = columns.size();
    std::vector<Vector> candidates = columns;
    candidates.insert(candidates.end(), cocycles.begin(), cocycles.end());
    if (!candidates.empty())
        for (std::size_t c : independent_columns(f, DenseMatrix::from_columns(pres.cochain_dim, candidates)))
            if (c >= pres.coboundary_dim) {
                pres.representatives.push_back(candidates[c]);
                columns.push_back(candidates[c]);
            }
    if (pres.coboundary_dim + pres.representatives.size() != pres.cocycle_dim)
        throw Error(ErrorKind::InconsistentSystem, kModule, "coboundaries are not contained in the cocycles");
    pres.coboundaries_then_reps = DenseMatrix::from_columns(pres.cochain_dim, columns);
    return pres;
}

ActionReport cohomology_action(const GradedView& view, std::size_t max_degree)
{
    const Algebra& a = view.algebra;
    const PrimeField& f = a.field();
    const std::size_t m = view.grading.m;
    ActionReport report;
    report.m = m;
    for (std::size_t i = 0; i < m; ++i)
        report.partitions.push_back(partition_of_unity(view, i));
    const std::size_t generator = 1 % m;
    const Scalar m_inv = f.inv(f.from_int(static_cast<std::int64_t>(m)));

    for (std::size_t n = 0; n <= max_degree; ++n) {
        report.cells.emplace_back();
        for (std::size_t v = 0; v < m; ++v) {
            ActionCell cell;
            cell.n = n;
            cell.v = v;
            const CochainComplex cc(a, view.letters[0], view.letters[v], false);
            const DenseMatrix b = cc.differential(n).to_dense();
            const CohomologyPresentation pres = present_cohomology(view, n, v);
            cell.dim = pres.dim();

            std::vector<DenseMatrix> thetas;
            std::vector<DenseMatrix> induced_maps;
            cell.chain_maps = true;
            for (std::size_t i = 0; i < m; ++i) {
                const auto& pairs = report.partitions[i].pairs;
                DenseMatrix th = theta_matrix(a, view.letters[0], view.letters[v], pairs, n);
                const DenseMatrix th_next = theta_matrix(a, view.letters[0], view.letters[v], pairs, n + 1);
                cell.chain_maps = cell.chain_maps && multiply(f, b, th) == multiply(f, th_next, b);
                induced_maps.push_back(induced(f, pres, th));
                thetas.push_back(std::move(th));
            }
            const DenseMatrix identity = DenseMatrix::identity(f, cell.dim);
            cell.t = induced_maps[generator];
            cell.identity_class0 = induced_maps[0] == identity;
            cell.order_divides_m = power(f, cell.t, m) == identity;
            cell.powers_match = true;
            cell.cochain_multiplicative = true;
            for (std::size_t i = 0; i < m; ++i) {
                cell.powers_match = cell.powers_match && induced_maps[i] == power(f, cell.t, i);
                cell.cochain_multiplicative =
                    cell.cochain_multiplicative && thetas[i] == power(f, thetas[generator], i);
            }
            cell.fixed_dim_kernel = cell.dim - rank(f, subtract_identity(f, cell.t));
            DenseMatrix average(cell.dim, cell.dim);
            DenseMatrix tp = identity;
            for (std::size_t i = 0; i < m; ++i) {
                average = add(f, average, tp);
                tp = multiply(f, tp, cell.t);
            }
            cell.fixed_dim_average = rank(f, scale(f, m_inv, average));
            report.cells.back().push_back(std::move(cell));
        }
    }
    return report;
}

RigidityReport rigidity_flag(const GradedView& view, const HochschildOptions& options)
{
    const Algebra a0 = view.algebra.subalgebra(std::vector<std::size_t>(view.letters[0].begin(), view.letters[0].end()));
    HochschildOptions o = options;
    o.max_degree = 2;
    RigidityReport r;
    r.hh2_dim = hh_dims(a0, o)[2];
    r.verdict = r.hh2_dim == 0 ? "rigid" : "unknown";
    return r;
}

TheoremBReport verify_theorem_b(const Algebra& a, const Grading& grading, const HochschildOptions& options)
{
    if (!grading.strongly_graded)
        throw Error(ErrorKind::NotStronglyGraded, kModule, "the eigenspace grading is not strongly graded");
    const GradedView view = make_graded_view(a, grading);
    TheoremBReport r;
    r.action = cohomology_action(view, options.max_degree);
    r.cohomology = graded_hh_dims(a, grading, options);
    r.rigidity = rigidity_flag(view, options);
    r.pass = true;
    for (std::size_t n = 0; n <= options.max_degree; ++n) {
        const auto& cells = r.action.cells[n];
        TheoremBDegree d{n, r.cohomology.dims[n], cells[0].fixed_dim_kernel, false};
        d.pass = d.dim_hh == d.dim_invariants && cells[0].consistent();
        r.pass = r.pass && d.pass;
        r.per_degree.push_back(d);
        for (std::size_t i = 0; i < grading.m; ++i) {
            TheoremBRefined x{n, i, r.cohomology.graded_dims[i][n], cells[i].fixed_dim_kernel, false};
            x.pass = x.dim_hh_i == x.dim_invariants && cells[i].consistent();
            r.pass = r.pass && x.pass;
            r.refined.push_back(x);
        }
    }
    return r;
}

TaftActionReport taft_action_formula_check(const PrimeField& field, std::size_t big_n, Scalar w,
                                           std::size_t max_degree)
{
    const Algebra h = taft(field, big_n, w);
    TaftActionReport report;
    report.N = big_n;
    std::vector<std::uint32_t> letters;
    std::vector<Scalar> forward;
    std::vector<Scalar> backward;
    const Scalar w_inv = field.inv(w);
    for (std::size_t i = 0; i < big_n; ++i) {
        letters.push_back(static_cast<std::uint32_t>(i * big_n + i));
        report.h0_labels.push_back(h.labels()[i * big_n + i]);
        forward.push_back(field.pow(w, static_cast<std::int64_t>(i)));
        backward.push_back(field.pow(w_inv, static_cast<std::int64_t>(i)));
    }
    Vector g(h.dim());
    g[1] = field.one();
    const Vector g_last = h.power(h.basis(1), big_n - 1).coords;
    const std::vector<PartitionPair> pairs{{g, g_last}};
    const CochainComplex cc(h, letters, letters, false);

    report.pass = true;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        const DenseMatrix theta = theta_matrix(h, letters, letters, pairs, n);
        const DenseMatrix display = scaled_display(h, letters, forward, n, big_n);
        const DenseMatrix display_next = scaled_display(h, letters, forward, n + 1, big_n);
        const DenseMatrix b = cc.differential(n).to_dense();
        TaftActionDegree deg;
        deg.n = n;
        deg.display_matches = display == theta;
        deg.inverse_scaling_matches = scaled_display(h, letters, backward, n, big_n) == theta;
        deg.display_is_chain_map = multiply(field, b, display) == multiply(field, display_next, b);
        report.pass = report.pass && deg.display_matches;
        report.degrees.push_back(deg);
    }
    return report;
}

}  // namespace frobhh
