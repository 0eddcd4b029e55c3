#include "frobhh/algebra.hpp"

#include "frobhh/error.hpp"
#include "frobhh/linalg.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace frobhh {

namespace {

[[noreturn]] void bad_structure(const std::string& what)
{
    throw Error(ErrorKind::BadStructure, "algebra", what);
}

void require_dim(std::size_t got, std::size_t want, const char* what)
{
    if (got != want)
        throw Error(ErrorKind::DimensionMismatch, "algebra", what);
}

std::string power_label(const std::string& base, std::size_t e)
{
    if (e == 0)
        return "";
    if (e == 1)
        return base;
    return base + "^" + std::to_string(e);
}

}  // namespace

Algebra::Algebra(PrimeField field, std::vector<std::string> labels, std::vector<std::vector<Vector>> structure,
                 Vector unit, Options options)
    : field_(std::move(field)), dim_(structure.size()), labels_(std::move(labels)), unit_(std::move(unit))
{
    require_dim(labels_.size(), dim_, "label count differs from dimension");
    require_dim(unit_.size(), dim_, "unit length differs from dimension");
    if (dim_ == 0)
        bad_structure("algebra of dimension zero");
    const std::uint32_t p = field_.characteristic();
    for (Scalar s : unit_)
        if (s.v >= p)
            bad_structure("unit coordinate not reduced modulo p");

    products_.resize(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        require_dim(structure[i].size(), dim_, "structure table row has wrong length");
        for (std::size_t j = 0; j < dim_; ++j) {
            const Vector& c = structure[i][j];
            require_dim(c.size(), dim_, "structure vector has wrong length");
            auto& terms = products_[i * dim_ + j];
            for (std::size_t k = 0; k < dim_; ++k) {
                if (c[k].v >= p)
                    bad_structure("structure constant not reduced modulo p");
                if (!c[k].is_zero())
                    terms.push_back({static_cast<std::uint32_t>(k), c[k]});
            }
        }
    }

    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < dim_; ++k) {
        if (!unit_[k].is_zero()) {
            ++nonzero;
            if (unit_[k] == field_.one())
                unit_index_ = k;
        }
    }
    if (nonzero != 1)
        unit_index_.reset();

    if (options.skip_checks_above_limit && dim_ > options.check_limit)
        return;

    for (std::size_t i = 0; i < dim_; ++i) {
        Element e = basis(i);
        if (multiply(one(), e) != e || multiply(e, one()) != e)
            bad_structure("unit law fails on basis element " + labels_[i]);
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            Vector ij(dim_);
            for (const auto& t : product(i, j))
                ij[t.index] = t.coeff;
            for (std::size_t k = 0; k < dim_; ++k) {
                Vector jk(dim_);
                for (const auto& t : product(j, k))
                    jk[t.index] = t.coeff;
                Vector left(dim_);
                for (std::size_t a = 0; a < dim_; ++a)
                    if (!ij[a].is_zero())
                        for (const auto& t : product(a, k))
                            left[t.index] = field_.fma(left[t.index], ij[a], t.coeff);
                Vector right(dim_);
                for (std::size_t b = 0; b < dim_; ++b)
                    if (!jk[b].is_zero())
                        for (const auto& t : product(i, b))
                            right[t.index] = field_.fma(right[t.index], jk[b], t.coeff);
                if (left != right)
                    bad_structure("associativity fails on (" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] +
                                  ")");
            }
        }
    }
}

Element Algebra::basis(std::size_t i) const
{
    Element e{Vector(dim_)};
    e.coords[i] = field_.one();
    return e;
}

Scalar Algebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const
{
    for (const auto& t : product(i, j))
        if (t.index == k)
            return t.coeff;
    return field_.zero();
}

Vector Algebra::multiply(std::span<const Scalar> u, std::span<const Scalar> v) const
{
    require_dim(u.size(), dim_, "multiply: left factor has wrong length");
    require_dim(v.size(), dim_, "multiply: right factor has wrong length");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero())
                continue;
            const Scalar c = field_.mul(u[i], v[j]);
            for (const auto& t : product(i, j))
                out[t.index] = field_.fma(out[t.index], c, t.coeff);
        }
    }
    return out;
}

Element Algebra::multiply(const Element& u, const Element& v) const
{
    return Element{multiply(u.coords, v.coords)};
}

Element Algebra::power(const Element& u, std::uint64_t e) const
{
    Element result = one();
    Element base = u;
    while (e > 0) {
        if (e & 1)
            result = multiply(result, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return result;
}

DenseMatrix Algebra::left_mul_matrix(const Element& u) const
{
    require_dim(u.coords.size(), dim_, "left_mul_matrix: element has wrong length");
    DenseMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vector col = multiply(u.coords, basis(j).coords);
        for (std::size_t i = 0; i < dim_; ++i)
            m(i, j) = col[i];
    }
    return m;
}

DenseMatrix Algebra::right_mul_matrix(const Element& u) const
{
    require_dim(u.coords.size(), dim_, "right_mul_matrix: element has wrong length");
    DenseMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vector col = multiply(basis(j).coords, u.coords);
        for (std::size_t i = 0; i < dim_; ++i)
            m(i, j) = col[i];
    }
    return m;
}

Algebra Algebra::change_basis(const DenseMatrix& from_new, std::vector<std::string> labels) const
{
    require_dim(from_new.rows(), dim_, "change_basis: matrix has wrong size");
    require_dim(from_new.cols(), dim_, "change_basis: matrix has wrong size");
    const DenseMatrix to_new = inverse(field_, from_new);
    std::vector<Vector> new_basis(dim_);
    for (std::size_t a = 0; a < dim_; ++a)
        new_basis[a] = from_new.column(a);
    std::vector<std::vector<Vector>> structure(dim_, std::vector<Vector>(dim_));
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b)
            structure[a][b] = apply(field_, to_new, multiply(new_basis[a], new_basis[b]));
    return Algebra(field_, std::move(labels), std::move(structure), apply(field_, to_new, unit_));
}

Algebra Algebra::with_unit_first(DenseMatrix* from_new) const
{
    if (unit_index_ == 0) {
        if (from_new)
            *from_new = DenseMatrix::identity(field_, dim_);
        return *this;
    }
    std::size_t replaced = 0;
    while (unit_[replaced].is_zero())
        ++replaced;
    DenseMatrix m(dim_, dim_);
    std::vector<std::string> labels{"1"};
    for (std::size_t i = 0; i < dim_; ++i)
        m(i, 0) = unit_[i];
    std::size_t col = 1;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (i == replaced)
            continue;
        m(i, col++) = field_.one();
        labels.push_back(labels_[i]);
    }
    if (from_new)
        *from_new = m;
    return change_basis(m, std::move(labels));
}

Algebra Algebra::subalgebra(std::span<const std::size_t> basis_indices) const
{
    const std::size_t n = basis_indices.size();
    std::vector<std::int64_t> local(dim_, -1);
    for (std::size_t a = 0; a < n; ++a) {
        if (basis_indices[a] >= dim_ || local[basis_indices[a]] >= 0)
            bad_structure("subalgebra: invalid basis index list");
        local[basis_indices[a]] = static_cast<std::int64_t>(a);
    }
    auto restrict_vector = [&](const Vector& v) {
        Vector out(n);
        for (std::size_t k = 0; k < dim_; ++k) {
            if (v[k].is_zero())
                continue;
            if (local[k] < 0)
                bad_structure("subalgebra: span is not closed");
            out[static_cast<std::size_t>(local[k])] = v[k];
        }
        return out;
    };
    std::vector<std::string> labels;
    std::vector<std::vector<Vector>> structure(n, std::vector<Vector>(n));
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(labels_[basis_indices[a]]);
        for (std::size_t b = 0; b < n; ++b) {
            Vector prod(dim_);
            for (const auto& t : product(basis_indices[a], basis_indices[b]))
                prod[t.index] = t.coeff;
            structure[a][b] = restrict_vector(prod);
        }
    }
    return Algebra(field_, std::move(labels), std::move(structure), restrict_vector(unit_));
}

bool Algebra::is_commutative() const
{
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) {
            auto a = product(i, j);
            auto b = product(j, i);
            if (!std::equal(a.begin(), a.end(), b.begin(), b.end(),
                            [](const BasisTerm& x, const BasisTerm& y) {
                                return x.index == y.index && x.coeff == y.coeff;
                            }))
                return false;
        }
    return true;
}

Algebra matrix_algebra(const PrimeField& field, std::size_t n)
{
    const std::size_t d = n * n;
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            labels.push_back("e" + std::to_string(a + 1) + std::to_string(b + 1));
    std::vector<std::vector<Vector>> structure(d, std::vector<Vector>(d, Vector(d)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                structure[a * n + b][b * n + c][a * n + c] = field.one();
    Vector unit(d);
    for (std::size_t a = 0; a < n; ++a)
        unit[a * n + a] = field.one();
    return Algebra(field, std::move(labels), std::move(structure), std::move(unit));
}

Algebra truncated_poly(const PrimeField& field, std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(i == 0 ? "1" : power_label("x", i));
    std::vector<std::vector<Vector>> structure(n, std::vector<Vector>(n, Vector(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j)
            structure[i][j][i + j] = field.one();
    Vector unit(n);
    unit[0] = field.one();
    return Algebra(field, std::move(labels), std::move(structure), std::move(unit));
}

Algebra cyclic_group_algebra(const PrimeField& field, std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(i == 0 ? "1" : power_label("g", i));
    std::vector<std::vector<Vector>> structure(n, std::vector<Vector>(n, Vector(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            structure[i][j][(i + j) % n] = field.one();
    Vector unit(n);
    unit[0] = field.one();
    return Algebra(field, std::move(labels), std::move(structure), std::move(unit));
}

Algebra taft(const PrimeField& field, std::size_t n, Scalar w)
{
    if (n == 0)
        bad_structure("taft: N must be positive");
    if (w.is_zero() || field.pow(w, static_cast<std::int64_t>(n)) != field.one())
        throw Error(ErrorKind::BadRoot, "algebra",
                    "taft: " + std::to_string(w.v) + " is not an N-th root of unity for N = " + std::to_string(n));
    if (field.order(w) != n)
        throw Error(ErrorKind::NotPrimitivePower, "algebra",
                    "taft: " + std::to_string(w.v) + " has order " + std::to_string(field.order(w)) + ", not " +
                        std::to_string(n));
    const std::size_t d = n * n;
    const Scalar w_inv = field.inv(w);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string label = power_label("x", i) + power_label("g", j);
            labels.push_back(label.empty() ? "1" : label);
        }
    // (x^a g^b)(x^c g^e) = w^{-bc} x^{a+c} g^{b+e}
    std::vector<std::vector<Vector>> structure(d, std::vector<Vector>(d, Vector(d)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; a + c < n; ++c)
                for (std::size_t e = 0; e < n; ++e)
                    structure[a * n + b][c * n + e][(a + c) * n + (b + e) % n] =
                        field.pow(w_inv, static_cast<std::int64_t>((b * c) % n));
    Vector unit(d);
    unit[0] = field.one();
    return Algebra(field, std::move(labels), std::move(structure), std::move(unit));
}

HopfData::HopfData(const Algebra& algebra, std::vector<std::vector<CoproductTerm>> comul, Vector counit,
                   DenseMatrix antipode)
    : comul_(std::move(comul)), counit_(std::move(counit)), antipode_(std::move(antipode))
{
    const std::size_t d = algebra.dim();
    const PrimeField& f = algebra.field();
    require_dim(comul_.size(), d, "comultiplication table has wrong length");
    require_dim(counit_.size(), d, "counit has wrong length");
    require_dim(antipode_.rows(), d, "antipode has wrong size");
    require_dim(antipode_.cols(), d, "antipode has wrong size");
    for (const auto& terms : comul_)
        for (const auto& t : terms)
            if (t.left >= d || t.right >= d)
                bad_structure("coproduct term index out of range");

    using Triple = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;
    auto accumulate = [&](std::map<Triple, Scalar>& acc, Triple key, Scalar c) {
        Scalar& slot = acc[key];
        slot = f.add(slot, c);
    };
    auto drop_zeros = [](std::map<Triple, Scalar>& acc) {
        std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
    };

    for (std::size_t i = 0; i < d; ++i) {
        const std::string& name = algebra.labels()[i];
        std::map<Triple, Scalar> left_assoc;
        std::map<Triple, Scalar> right_assoc;
        for (const auto& t : comul_[i]) {
            for (const auto& u : comul_[t.left])
                accumulate(left_assoc, {u.left, u.right, t.right}, f.mul(t.coeff, u.coeff));
            for (const auto& u : comul_[t.right])
                accumulate(right_assoc, {t.left, u.left, u.right}, f.mul(t.coeff, u.coeff));
        }
        drop_zeros(left_assoc);
        drop_zeros(right_assoc);
        if (left_assoc != right_assoc)
            bad_structure("coassociativity fails on " + name);

        Vector via_left(d);
        Vector via_right(d);
        Vector s_id(d);
        Vector id_s(d);
        for (const auto& t : comul_[i]) {
            via_left[t.right] = f.fma(via_left[t.right], t.coeff, counit_[t.left]);
            via_right[t.left] = f.fma(via_right[t.left], t.coeff, counit_[t.right]);
            Vector a = algebra.multiply(antipode_.column(t.left), algebra.basis(t.right).coords);
            Vector b = algebra.multiply(algebra.basis(t.left).coords, antipode_.column(t.right));
            for (std::size_t k = 0; k < d; ++k) {
                s_id[k] = f.fma(s_id[k], t.coeff, a[k]);
                id_s[k] = f.fma(id_s[k], t.coeff, b[k]);
            }
        }
        const Vector e_i = algebra.basis(i).coords;
        if (via_left != e_i || via_right != e_i)
            bad_structure("counit law fails on " + name);
        Vector expected(d);
        for (std::size_t k = 0; k < d; ++k)
            expected[k] = f.mul(counit_[i], algebra.unit()[k]);
        if (s_id != expected || id_s != expected)
            bad_structure("antipode law fails on " + name);
    }
}

namespace {

// Elements of H (x) H as d*d coordinate vectors, index left*d + right.
Vector tensor_multiply(const Algebra& h, const Vector& u, const Vector& v)
{
    const std::size_t d = h.dim();
    const PrimeField& f = h.field();
    Vector out(d * d);
    for (std::size_t a = 0; a < d * d; ++a) {
        if (u[a].is_zero())
            continue;
        for (std::size_t b = 0; b < d * d; ++b) {
            if (v[b].is_zero())
                continue;
            const Scalar c = f.mul(u[a], v[b]);
            for (const auto& l : h.product(a / d, b / d))
                for (const auto& r : h.product(a % d, b % d))
                    out[l.index * d + r.index] = f.fma(out[l.index * d + r.index], c, f.mul(l.coeff, r.coeff));
        }
    }
    return out;
}

std::vector<CoproductTerm> to_terms(const Vector& t, std::size_t d)
{
    std::vector<CoproductTerm> terms;
    for (std::size_t k = 0; k < t.size(); ++k)
        if (!t[k].is_zero())
            terms.push_back({t[k], static_cast<std::uint32_t>(k / d), static_cast<std::uint32_t>(k % d)});
    return terms;
}

}  // namespace

HopfData taft_hopf(const Algebra& h, std::size_t n)
{
    const std::size_t d = h.dim();
    require_dim(d, n * n, "taft_hopf: algebra dimension is not N^2");
    const PrimeField& f = h.field();
    if (n < 2)
        bad_structure("taft_hopf: N must be at least 2");
    const std::size_t g = 1;
    const std::size_t x = n;

    Vector delta_g(d * d);
    delta_g[g * d + g] = f.one();
    Vector delta_x(d * d);
    delta_x[0 * d + x] = f.one();
    delta_x[x * d + g] = f.add(delta_x[x * d + g], f.one());

    const Element s_g = h.power(h.basis(g), n - 1);
    Element s_x = h.multiply(h.basis(x), s_g);
    for (auto& c : s_x.coords)
        c = f.neg(c);

    std::vector<std::vector<CoproductTerm>> comul(d);
    Vector counit(d);
    DenseMatrix antipode(d, d);
    Vector unit_tensor(d * d);
    unit_tensor[0] = f.one();
    Vector dx_pow = unit_tensor;
    Element sx_pow = h.one();
    for (std::size_t i = 0; i < n; ++i) {
        Vector dg_pow = unit_tensor;
        Element sg_pow = h.one();
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t idx = i * n + j;
            comul[idx] = to_terms(tensor_multiply(h, dx_pow, dg_pow), d);
            counit[idx] = i == 0 ? f.one() : f.zero();
            const Element s = h.multiply(sg_pow, sx_pow);
            for (std::size_t k = 0; k < d; ++k)
                antipode(k, idx) = s.coords[k];
            dg_pow = tensor_multiply(h, dg_pow, delta_g);
            sg_pow = h.multiply(sg_pow, s_g);
        }
        dx_pow = tensor_multiply(h, dx_pow, delta_x);
        sx_pow = h.multiply(sx_pow, s_x);
    }
    return HopfData(h, std::move(comul), std::move(counit), std::move(antipode));
}

HopfData cyclic_group_hopf(const Algebra& h, std::size_t n)
{
    require_dim(h.dim(), n, "cyclic_group_hopf: algebra dimension is not N");
    const PrimeField& f = h.field();
    std::vector<std::vector<CoproductTerm>> comul(n);
    Vector counit(n, f.one());
    DenseMatrix antipode(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        comul[i].push_back({f.one(), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i)});
        antipode((n - i) % n, i) = f.one();
    }
    return HopfData(h, std::move(comul), std::move(counit), std::move(antipode));
}

}  // namespace frobhh
