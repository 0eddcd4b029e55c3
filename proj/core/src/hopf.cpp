#include "frobhh/hopf.hpp"

#include "frobhh/error.hpp"
#include "frobhh/linalg.hpp"

#include <numeric>

namespace frobhh {

namespace {

constexpr const char* kModule = "hopf";

Vector one_dim_kernel(const PrimeField& f, const DenseMatrix& system, const char* what)
{
    std::vector<Vector> k = kernel_basis(f, system);
    if (k.empty())
        throw Error(ErrorKind::NoIntegral, kModule, std::string("no nonzero ") + what);
    if (k.size() > 1)
        throw Error(ErrorKind::IntegralSpaceNotOneDim, kModule,
                    std::string("space of ") + what + "s has dimension " + std::to_string(k.size()));
    Vector v = std::move(k[0]);
    for (Scalar s : v)
        if (!s.is_zero()) {
            const Scalar inv = f.inv(s);
            for (auto& x : v)
                x = f.mul(x, inv);
            break;
        }
    return v;
}

// Stacks the blocks vertically.
DenseMatrix stack(const std::vector<DenseMatrix>& blocks, std::size_t cols)
{
    std::size_t rows = 0;
    for (const auto& b : blocks)
        rows += b.rows();
    DenseMatrix m(rows, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(r0 + i, j) = b(i, j);
        r0 += b.rows();
    }
    return m;
}

const char* side_name(Side s)
{
    return s == Side::Right ? "right" : "left";
}

std::optional<Scalar> eigen_multiplier(const PrimeField& f, const Vector& image, const Vector& v)
{
    std::optional<Scalar> c;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) {
            c = f.div(image[k], v[k]);
            break;
        }
    if (!c)
        return std::nullopt;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (image[k] != f.mul(*c, v[k]))
            return std::nullopt;
    return c;
}

}  // namespace

Vector ConvolutionAlgebra::multiply(const Vector& f, const Vector& g) const
{
    const PrimeField& field = h_->field();
    Vector out(h_->dim());
    for (std::size_t i = 0; i < h_->dim(); ++i)
        for (const auto& t : hopf_->coproduct(i))
            out[i] = field.fma(out[i], t.coeff, field.mul(f[t.left], g[t.right]));
    return out;
}

Vector ConvolutionAlgebra::power(const Vector& f, std::uint64_t e) const
{
    Vector result = unit();
    Vector base = f;
    while (e > 0) {
        if (e & 1)
            result = multiply(result, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return result;
}

std::uint64_t ConvolutionAlgebra::order(const Vector& f, std::uint64_t cap) const
{
    Vector p = f;
    for (std::uint64_t r = 1; r <= cap; ++r) {
        if (p == unit())
            return r;
        p = multiply(p, f);
    }
    throw Error(ErrorKind::CapExceeded, kModule, "convolution order exceeds cap " + std::to_string(cap));
}

Element integral(const Algebra& h, const HopfData& hopf, Side side)
{
    const PrimeField& f = h.field();
    std::vector<DenseMatrix> blocks;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        DenseMatrix m = side == Side::Right ? h.right_mul_matrix(h.basis(i)) : h.left_mul_matrix(h.basis(i));
        for (std::size_t k = 0; k < h.dim(); ++k)
            m(k, k) = f.sub(m(k, k), hopf.counit()[i]);
        blocks.push_back(std::move(m));
    }
    return Element{one_dim_kernel(f, stack(blocks, h.dim()), "integral")};
}

Element right_integral(const Algebra& h, const HopfData& hopf)
{
    return integral(h, hopf, Side::Right);
}

Vector modular_element(const Algebra& h, const Element& t, Side side)
{
    const PrimeField& f = h.field();
    Vector alpha(h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i) {
        const Element image = side == Side::Right ? h.multiply(h.basis(i), t) : h.multiply(t, h.basis(i));
        const auto c = eigen_multiplier(f, image.coords, t.coords);
        if (!c)
            throw Error(ErrorKind::InconsistentModular, kModule,
                        "the integral is not an eigenvector for " + h.labels()[i]);
        alpha[i] = *c;
    }
    auto value = [&](const Vector& x) {
        Scalar s = f.zero();
        for (std::size_t k = 0; k < x.size(); ++k)
            s = f.fma(s, x[k], alpha[k]);
        return s;
    };
    if (value(h.unit()) != f.one())
        throw Error(ErrorKind::InconsistentModular, kModule, "modular element is not unital");
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t j = 0; j < h.dim(); ++j)
            if (value(h.multiply(h.basis(i), h.basis(j)).coords) != f.mul(alpha[i], alpha[j]))
                throw Error(ErrorKind::InconsistentModular, kModule, "modular element is not multiplicative");
    return alpha;
}

Vector dual_integral(const Algebra& h, const HopfData& hopf, Side side)
{
    const PrimeField& f = h.field();
    const std::size_t d = h.dim();
    // one equation per (basis h_i, dual basis e^k):
    //   right: sum_{Delta(h_i)} c phi(left) [right = k] = 1_k phi_i
    //   left:  sum_{Delta(h_i)} c phi(right) [left = k] = 1_k phi_i
    DenseMatrix system(d * d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (const auto& t : hopf.coproduct(i)) {
            const std::size_t k = side == Side::Right ? t.right : t.left;
            const std::size_t var = side == Side::Right ? t.left : t.right;
            system(i * d + k, var) = f.add(system(i * d + k, var), t.coeff);
        }
        for (std::size_t k = 0; k < d; ++k)
            system(i * d + k, i) = f.sub(system(i * d + k, i), h.unit()[k]);
    }
    return one_dim_kernel(f, system, "integral of the dual");
}

DenseMatrix nakayama_via_hopf(const Algebra& h, const HopfData& hopf, const Vector& alpha, int l)
{
    const PrimeField& f = h.field();
    const std::size_t d = h.dim();
    if (l == 0 || l < -1)
        throw Error(ErrorKind::DimensionMismatch, kModule, "power must be positive or -1");
    const ConvolutionAlgebra conv(h, hopf);
    const DenseMatrix& s = hopf.antipode();
    DenseMatrix rho(d, d);
    if (l == -1) {
        const DenseMatrix s_bar = inverse(f, s);
        const DenseMatrix s_bar2 = multiply(f, s_bar, s_bar);
        for (std::size_t i = 0; i < d; ++i)
            for (const auto& t : hopf.coproduct(i)) {
                const Scalar c = f.mul(t.coeff, alpha[t.left]);
                for (std::size_t k = 0; k < d; ++k)
                    rho(k, i) = f.fma(rho(k, i), c, s_bar2(k, t.right));
            }
        return rho;
    }
    const Vector beta = conv.power(alpha, static_cast<std::uint64_t>(l));
    // (beta o S)(e_a) = sum_b beta_b S_{ba}
    const Vector beta_s = apply(f, s.transpose(), beta);
    const DenseMatrix s2l = power(f, s, 2 * static_cast<std::uint64_t>(l));
    for (std::size_t i = 0; i < d; ++i)
        for (const auto& t : hopf.coproduct(i)) {
            const Scalar c = f.mul(t.coeff, beta_s[t.left]);
            for (std::size_t k = 0; k < d; ++k)
                rho(k, i) = f.fma(rho(k, i), c, s2l(k, t.right));
        }
    return rho;
}

IntegralData resolve_integrals(const Algebra& h, const HopfData& hopf)
{
    for (Side integral_side : {Side::Right, Side::Left})
        for (Side dual_side : {Side::Right, Side::Left}) {
            IntegralData data;
            data.integral_side = integral_side;
            data.dual_side = dual_side;
            data.convention = std::string(side_name(integral_side)) + "/" + side_name(dual_side);
            data.t = integral(h, hopf, integral_side);
            data.alpha = modular_element(h, data.t, integral_side);
            data.phi = dual_integral(h, hopf, dual_side);
            FrobeniusForm form;
            try {
                form = frobenius_form(h, data.phi);
            } catch (const Error&) {
                continue;
            }
            data.cross_check = nakayama_via_hopf(h, hopf, data.alpha, 1) == nakayama_matrix(h, form);
            if (data.cross_check)
                return data;
        }
    throw Error(ErrorKind::ConventionMismatch, kModule,
                "no integral convention makes the Hopf formula agree with the Nakayama automorphism");
}

OrderCertificates finite_order_certificates(const Algebra& h, const HopfData& hopf, const IntegralData& data,
                                            std::uint64_t cap)
{
    const PrimeField& f = h.field();
    const ConvolutionAlgebra conv(h, hopf);
    OrderCertificates c;
    c.alpha_order = conv.order(data.alpha, cap);
    c.antipode_order = matrix_order(f, hopf.antipode(), cap);
    const DenseMatrix rho = nakayama_matrix(h, frobenius_form(h, data.phi));
    c.rho_order = matrix_order(f, rho, cap);
    const std::uint64_t s2_order = matrix_order(f, multiply(f, hopf.antipode(), hopf.antipode()), cap);
    c.bound = std::lcm(c.alpha_order, s2_order);
    c.rho_divides_bound = c.bound % c.rho_order == 0;
    const DenseMatrix s2 = multiply(f, hopf.antipode(), hopf.antipode());
    c.alpha_s2_invariant = apply(f, s2.transpose(), data.alpha) == data.alpha;
    return c;
}

TaftHopfReport taft_hopf_check(const PrimeField& field, std::size_t n, Scalar w)
{
    const Algebra h = taft(field, n, w);
    const HopfData hopf = taft_hopf(h, n);
    TaftHopfReport r;
    r.N = n;
    r.w = w;
    r.integrals = resolve_integrals(h, hopf);
    r.cross_check = r.integrals.cross_check;
    r.orders = finite_order_certificates(h, hopf, r.integrals);

    const DenseMatrix rho = nakayama_via_hopf(h, hopf, r.integrals.alpha, 1);
    r.powers_consistent = true;
    for (std::uint64_t l = 1; l <= r.orders.rho_order; ++l)
        r.powers_consistent = r.powers_consistent &&
                              nakayama_via_hopf(h, hopf, r.integrals.alpha, static_cast<int>(l)) == power(field, rho, l);
    r.inverse_consistent = nakayama_via_hopf(h, hopf, r.integrals.alpha, -1) == inverse(field, rho);

    const std::size_t g = 1;
    const std::size_t x = n;
    const Scalar w_inv = field.inv(w);
    r.rho_g_scalar = eigen_multiplier(field, rho.column(g), h.basis(g).coords);
    r.rho_x_scalar = eigen_multiplier(field, rho.column(x), h.basis(x).coords);
    r.rho_g_is_wg = r.rho_g_scalar == w;
    r.rho_x_is_winv_x = r.rho_x_scalar == w_inv;
    r.alpha_g = r.integrals.alpha[g];
    r.alpha_x = r.integrals.alpha[x];
    r.alpha_g_is_winv = r.alpha_g == w_inv;
    r.alpha_x_is_zero = r.alpha_x.is_zero();

    Element display{Vector(h.dim())};
    const Element top = h.power(h.basis(x), n - 1);
    for (std::size_t j = 0; j < n; ++j) {
        Element term = h.multiply(h.power(h.basis(g), j), top);
        const Scalar c = field.pow(w, static_cast<std::int64_t>(j));
        for (std::size_t k = 0; k < h.dim(); ++k)
            display.coords[k] = field.fma(display.coords[k], c, term.coords[k]);
    }
    r.t_matches_display = eigen_multiplier(field, display.coords, r.integrals.t.coords).has_value();
    return r;
}

}  // namespace frobhh
