#include "frobhh/frobenius.hpp"

#include "frobhh/error.hpp"
#include "frobhh/linalg.hpp"

#include <random>

namespace frobhh {

namespace {

constexpr const char* kModule = "frobenius";

Scalar evaluate(const PrimeField& f, const Vector& phi, std::span<const BasisTerm> terms)
{
    Scalar s = f.zero();
    for (const auto& t : terms)
        s = f.fma(s, t.coeff, phi[t.index]);
    return s;
}

Scalar dot(const PrimeField& f, const Vector& u, const Vector& v)
{
    Scalar s = f.zero();
    for (std::size_t i = 0; i < u.size(); ++i)
        s = f.fma(s, u[i], v[i]);
    return s;
}

}  // namespace

DenseMatrix gram_matrix(const Algebra& a, const Vector& phi)
{
    if (phi.size() != a.dim())
        throw Error(ErrorKind::DimensionMismatch, kModule, "form length differs from dimension");
    const std::size_t d = a.dim();
    DenseMatrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            g(i, j) = evaluate(a.field(), phi, a.product(i, j));
    return g;
}

FrobeniusForm frobenius_form(const Algebra& a, Vector phi)
{
    DenseMatrix g = gram_matrix(a, phi);
    DenseMatrix g_inv;
    try {
        g_inv = inverse(a.field(), g);
    } catch (const Error&) {
        throw Error(ErrorKind::NotInvertible, kModule, "the Gram matrix of the form is singular");
    }
    return FrobeniusForm{std::move(phi), std::move(g), std::move(g_inv)};
}

FrobeniusForm find_frobenius_form(const Algebra& a, std::uint64_t seed, std::size_t attempts)
{
    const PrimeField& f = a.field();
    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
        Vector phi(a.dim());
        for (auto& s : phi)
            s = Scalar{static_cast<std::uint32_t>(rng() % f.characteristic())};
        DenseMatrix g = gram_matrix(a, phi);
        if (rank(f, g) == a.dim())
            return frobenius_form(a, std::move(phi));
    }
    throw Error(ErrorKind::NotFrobeniusWithinAttempts, kModule,
                "Gram determinant vanished on all " + std::to_string(attempts) +
                    " sampled forms; this is evidence, not proof, that the algebra is not Frobenius");
}

Vector left_translate_form(const Algebra& a, const Element& x, const Vector& phi)
{
    const std::size_t d = a.dim();
    Vector out(d);
    for (std::size_t i = 0; i < d; ++i)
        out[i] = dot(a.field(), phi, a.multiply(a.basis(i).coords, x.coords));
    return out;
}

DenseMatrix nakayama_matrix(const Algebra& a, const FrobeniusForm& form)
{
    const PrimeField& f = a.field();
    const std::size_t d = a.dim();
    DenseMatrix rho = multiply(f, form.gram_inv.transpose(), form.gram);

    std::vector<Vector> images(d);
    for (std::size_t j = 0; j < d; ++j)
        images[j] = rho.column(j);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Scalar lhs = form.gram(i, j);
            const Scalar rhs = dot(f, form.phi, a.multiply(images[j], a.basis(i).coords));
            if (lhs != rhs)
                throw Error(ErrorKind::InconsistentSystem, kModule, "phi(a x) = phi(rho(x) a) fails");
            if (a.multiply(images[i], images[j]) != apply(f, rho, a.multiply(a.basis(i).coords, a.basis(j).coords)))
                throw Error(ErrorKind::InconsistentSystem, kModule, "rho is not multiplicative");
        }
    if (apply(f, rho, a.unit()) != a.unit())
        throw Error(ErrorKind::InconsistentSystem, kModule, "rho does not fix the unit");
    return rho;
}

std::uint64_t nakayama_order(const PrimeField& field, const DenseMatrix& rho, std::uint64_t cap)
{
    return matrix_order(field, rho, cap);
}

NakayamaData nakayama(const Algebra& a, const FrobeniusForm& form, std::uint64_t cap)
{
    NakayamaData nak;
    nak.rho = nakayama_matrix(a, form);
    nak.order = nakayama_order(a.field(), nak.rho, cap);
    if ((a.field().characteristic() - 1) % nak.order == 0)
        nak.w = primitive_root_of_unity(a.field(), nak.order);
    return nak;
}

std::vector<std::size_t> Grading::dims() const
{
    std::vector<std::size_t> out;
    for (const auto& c : components)
        out.push_back(c.size());
    return out;
}

Grading grading_from_components(const Algebra& a, Scalar w, std::vector<std::vector<Vector>> components)
{
    const PrimeField& f = a.field();
    const std::size_t d = a.dim();
    Grading g;
    g.m = components.size();
    g.w = w;
    g.components = std::move(components);
    std::vector<Vector> columns;
    for (std::size_t i = 0; i < g.m; ++i) {
        g.offsets.push_back(columns.size());
        for (const auto& v : g.components[i]) {
            if (v.size() != d)
                throw Error(ErrorKind::DimensionMismatch, kModule, "grading vector has wrong length");
            columns.push_back(v);
            g.class_of.push_back(i);
        }
    }
    if (columns.size() != d)
        throw Error(ErrorKind::BadStructure, kModule, "component dimensions do not sum to the algebra dimension");
    if (g.components[0].empty() || g.components[0][0] != a.unit())
        throw Error(ErrorKind::BadStructure, kModule, "the unit must be the first basis vector of A_0");
    g.from_graded = DenseMatrix::from_columns(d, columns);
    try {
        g.to_graded = inverse(f, g.from_graded);
    } catch (const Error&) {
        throw Error(ErrorKind::BadStructure, kModule, "grading components are not independent");
    }
    for (std::size_t i = 0; i < g.m; ++i)
        for (const auto& u : g.components[i])
            for (std::size_t j = 0; j < g.m; ++j)
                for (const auto& v : g.components[j]) {
                    const Vector c = apply(f, g.to_graded, a.multiply(u, v));
                    const std::size_t target = (i + j) % g.m;
                    for (std::size_t k = 0; k < d; ++k)
                        if (!c[k].is_zero() && g.class_of[k] != target)
                            throw Error(ErrorKind::BadStructure, kModule,
                                        "A_" + std::to_string(i) + " A_" + std::to_string(j) + " leaves A_" +
                                            std::to_string(target));
                }
    g.strongly_graded = is_strongly_graded(a, g);
    return g;
}

Grading eigen_grading(const Algebra& a, const NakayamaData& nak)
{
    const PrimeField& f = a.field();
    const std::size_t d = a.dim();
    if (!nak.w)
        throw Error(ErrorKind::HypothesisFailure, kModule,
                    "order m = " + std::to_string(nak.order) + " does not divide p - 1 for p = " +
                        std::to_string(f.characteristic()) + "; no primitive m-th root of unity in F_p");
    const Scalar w = *nak.w;
    std::vector<std::vector<Vector>> components(nak.order);
    for (std::size_t i = 0; i < nak.order; ++i) {
        DenseMatrix shifted = nak.rho;
        const Scalar lambda = f.pow(w, static_cast<std::int64_t>(i));
        for (std::size_t k = 0; k < d; ++k)
            shifted(k, k) = f.sub(shifted(k, k), lambda);
        std::vector<Vector> kernel = kernel_basis(f, shifted);
        if (i == 0) {
            // put the unit first, then complete with kernel vectors
            std::vector<Vector> candidates{a.unit()};
            candidates.insert(candidates.end(), kernel.begin(), kernel.end());
            for (std::size_t c : independent_columns(f, DenseMatrix::from_columns(d, candidates)))
                components[0].push_back(candidates[c]);
        } else {
            components[i] = std::move(kernel);
        }
    }
    return grading_from_components(a, w, std::move(components));
}

bool is_strongly_graded(const Algebra& a, const Grading& grading)
{
    const PrimeField& f = a.field();
    for (std::size_t i = 0; i < grading.m; ++i)
        for (std::size_t j = 0; j < grading.m; ++j) {
            std::vector<Vector> products;
            for (const auto& u : grading.components[i])
                for (const auto& v : grading.components[j])
                    products.push_back(a.multiply(u, v));
            const std::size_t target = grading.dim((i + j) % grading.m);
            const std::size_t r = products.empty() ? 0 : rank(f, DenseMatrix::from_columns(a.dim(), products));
            if (r != target)
                return false;
        }
    return true;
}

Algebra graded_algebra(const Algebra& a, const Grading& grading)
{
    std::vector<std::string> labels;
    for (const auto& comp : grading.components)
        for (const auto& v : comp)
            labels.push_back(format_element(a, v));
    return a.change_basis(grading.from_graded, std::move(labels));
}

std::string format_element(const Algebra& a, const Vector& coords)
{
    const PrimeField& f = a.field();
    std::string out;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k].is_zero())
            continue;
        if (!out.empty())
            out += "+";
        if (coords[k] != f.one())
            out += std::to_string(coords[k].v) + "*";
        out += a.labels()[k];
    }
    return out.empty() ? "0" : out;
}

}  // namespace frobhh
