#include "frobhh/cochain.hpp"

#include "frobhh/error.hpp"

#include <cstdlib>
#include <string>

namespace frobhh {

namespace {

constexpr const char* kModule = "hochschild";

std::size_t checked_power(std::size_t base, std::size_t e)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (base != 0 && r > SIZE_MAX / base)
            throw Error(ErrorKind::DegreeTooLarge, kModule, "cochain space size overflows");
        r *= base;
    }
    return r;
}

}  // namespace

std::size_t default_memory_budget()
{
    std::size_t mb = 2048;
    if (const char* env = std::getenv("FROBHH_MEM_BUDGET_MB")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            mb = static_cast<std::size_t>(v);
    }
    return mb * 1024 * 1024;
}

CochainSpace::CochainSpace(std::size_t degree, std::size_t in_count, std::size_t out_count)
    : degree_(degree), in_count_(in_count), out_count_(out_count), tuple_count_(checked_power(in_count, degree))
{
    if (out_count != 0 && tuple_count_ > SIZE_MAX / out_count)
        throw Error(ErrorKind::DegreeTooLarge, kModule, "cochain space size overflows");
}

std::size_t CochainSpace::index(std::span<const std::uint32_t> inputs, std::uint32_t out) const
{
    std::size_t code = 0;
    for (std::uint32_t x : inputs)
        code = code * in_count_ + x;
    return code * out_count_ + out;
}

std::uint32_t CochainSpace::decode(std::size_t index, std::vector<std::uint32_t>& inputs) const
{
    inputs.resize(degree_);
    const auto out = static_cast<std::uint32_t>(index % out_count_);
    std::size_t code = index / out_count_;
    for (std::size_t t = degree_; t-- > 0;) {
        inputs[t] = static_cast<std::uint32_t>(code % in_count_);
        code /= in_count_;
    }
    return out;
}

CochainComplex::CochainComplex(const Algebra& a, std::vector<std::uint32_t> l_letters,
                               std::vector<std::uint32_t> m_letters, bool normalized)
    : algebra_(&a), out_letters_(std::move(m_letters)), normalized_(normalized)
{
    const std::size_t d = a.dim();
    const auto unit = a.unit_index();
    bool has_unit = false;
    for (std::uint32_t l : l_letters) {
        if (l >= d)
            throw Error(ErrorKind::DimensionMismatch, kModule, "letter index out of range");
        if (unit && l == *unit) {
            has_unit = true;
            if (normalized)
                continue;
        }
        in_letters_.push_back(l);
    }
    if (normalized && !has_unit)
        throw Error(ErrorKind::BadStructure, kModule, "normalized cochains need the unit as a basis letter");

    std::vector<std::int64_t> in_pos(d, -1);
    std::vector<std::int64_t> out_pos(d, -1);
    for (std::size_t i = 0; i < in_letters_.size(); ++i)
        in_pos[in_letters_[i]] = static_cast<std::int64_t>(i);
    for (std::size_t i = 0; i < out_letters_.size(); ++i) {
        if (out_letters_[i] >= d)
            throw Error(ErrorKind::DimensionMismatch, kModule, "letter index out of range");
        out_pos[out_letters_[i]] = static_cast<std::int64_t>(i);
    }

    const std::size_t ni = in_letters_.size();
    const std::size_t no = out_letters_.size();
    prod_.resize(ni * ni);
    for (std::size_t x = 0; x < ni; ++x)
        for (std::size_t y = 0; y < ni; ++y)
            for (const auto& t : a.product(in_letters_[x], in_letters_[y])) {
                if (in_pos[t.index] >= 0)
                    prod_[x * ni + y].push_back({static_cast<std::uint32_t>(in_pos[t.index]), t.coeff});
                else if (!(has_unit && t.index == *unit))
                    throw Error(ErrorKind::BadStructure, kModule, "input letters do not span a subalgebra");
            }

    left_.resize(ni * no);
    right_.resize(ni * no);
    for (std::size_t x = 0; x < ni; ++x)
        for (std::size_t o = 0; o < no; ++o) {
            for (const auto& t : a.product(in_letters_[x], out_letters_[o])) {
                if (out_pos[t.index] < 0)
                    throw Error(ErrorKind::BadStructure, kModule, "coefficients are not closed under left products");
                left_[x * no + static_cast<std::size_t>(out_pos[t.index])].push_back(
                    {static_cast<std::uint32_t>(o), t.coeff});
            }
            for (const auto& t : a.product(out_letters_[o], in_letters_[x])) {
                if (out_pos[t.index] < 0)
                    throw Error(ErrorKind::BadStructure, kModule, "coefficients are not closed under right products");
                right_[x * no + static_cast<std::size_t>(out_pos[t.index])].push_back(
                    {static_cast<std::uint32_t>(o), t.coeff});
            }
        }
}

CochainComplex CochainComplex::hochschild(const Algebra& a, bool normalized)
{
    std::vector<std::uint32_t> all(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        all[i] = static_cast<std::uint32_t>(i);
    return CochainComplex(a, all, all, normalized);
}

std::size_t CochainComplex::estimated_bytes(std::size_t n) const
{
    const std::size_t ni = in_letters_.size();
    const std::size_t no = out_letters_.size();
    auto average = [](const std::vector<std::vector<Term>>& table) {
        std::size_t total = 0;
        for (const auto& v : table)
            total += v.size();
        return table.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(table.size());
    };
    const double per_row = average(left_) + average(right_) + static_cast<double>(n) * average(prod_) * 1.0;
    const double rows = static_cast<double>(checked_power(ni, n + 1)) * static_cast<double>(no);
    return static_cast<std::size_t>(rows * (per_row * sizeof(SparseEntry) + sizeof(std::size_t)));
}

SparseMatrix CochainComplex::differential(std::size_t n, std::size_t budget_bytes) const
{
    const std::size_t bytes = estimated_bytes(n);
    if (bytes > budget_bytes)
        throw Error(ErrorKind::DegreeTooLarge, kModule,
                    "differential in degree " + std::to_string(n) + " needs about " +
                        std::to_string(bytes / (1024 * 1024)) + " MiB, over the budget of " +
                        std::to_string(budget_bytes / (1024 * 1024)) + " MiB");
    const PrimeField& f = algebra_->field();
    const CochainSpace src = space(n);
    const CochainSpace dst = space(n + 1);
    const std::size_t ni = in_letters_.size();
    const std::size_t no = out_letters_.size();

    // powers[k] = ni^k
    std::vector<std::size_t> powers(n + 2, 1);
    for (std::size_t k = 1; k < powers.size(); ++k)
        powers[k] = powers[k - 1] * ni;

    std::vector<Scalar> signs(n + 2);
    for (std::size_t i = 0; i < signs.size(); ++i)
        signs[i] = f.sign(static_cast<std::int64_t>(i));

    SparseMatrix b(0, src.size());
    std::vector<std::uint32_t> x(n + 1, 0);
    std::vector<std::size_t> prefix(n + 2);
    std::vector<std::size_t> suffix(n + 2);
    std::vector<SparseEntry> row;
    for (std::size_t code = 0; code < dst.tuple_count(); ++code) {
        if (code > 0) {
            for (std::size_t t = n + 1; t-- > 0;) {
                if (++x[t] < ni)
                    break;
                x[t] = 0;
            }
        }
        // prefix[k] = code of x_1..x_k, suffix[k] = code of x_{k+1}..x_{n+1}
        prefix[0] = 0;
        for (std::size_t k = 0; k <= n; ++k)
            prefix[k + 1] = prefix[k] * ni + x[k];
        suffix[n + 1] = 0;
        for (std::size_t k = n + 1; k-- > 0;)
            suffix[k] = suffix[k + 1] + x[k] * powers[n - k];

        for (std::size_t o2 = 0; o2 < no; ++o2) {
            row.clear();
            for (const auto& t : left_[x[0] * no + o2])
                row.push_back({static_cast<std::uint32_t>(suffix[1] * no + t.pos), t.coeff});
            for (std::size_t i = 1; i <= n; ++i) {
                // merge x_i x_{i+1}, i.e. zero-based positions i-1 and i
                const std::size_t high = prefix[i - 1];
                const std::size_t low = suffix[i + 1];
                for (const auto& t : prod_[x[i - 1] * ni + x[i]]) {
                    const std::size_t merged = (high * ni + t.pos) * powers[n - i] + low;
                    row.push_back({static_cast<std::uint32_t>(merged * no + o2), f.mul(signs[i], t.coeff)});
                }
            }
            for (const auto& t : right_[x[n] * no + o2])
                row.push_back({static_cast<std::uint32_t>(prefix[n] * no + t.pos), f.mul(signs[n + 1], t.coeff)});
            b.append_row(f, std::move(row));
            row = {};
        }
    }
    return b;
}

std::vector<std::uint32_t> CochainComplex::cochain_classes(std::size_t n, std::span<const std::size_t> basis_class,
                                                           std::size_t m) const
{
    const CochainSpace s = space(n);
    const std::size_t ni = in_letters_.size();
    const std::size_t no = out_letters_.size();
    // class of the input tuple, built digit by digit
    std::vector<std::uint32_t> tuple_class{0};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::uint32_t> next(tuple_class.size() * ni);
        for (std::size_t c = 0; c < tuple_class.size(); ++c)
            for (std::size_t x = 0; x < ni; ++x)
                next[c * ni + x] = static_cast<std::uint32_t>((tuple_class[c] + basis_class[in_letters_[x]]) % m);
        tuple_class = std::move(next);
    }
    std::vector<std::uint32_t> out(s.size());
    for (std::size_t c = 0; c < s.tuple_count(); ++c)
        for (std::size_t o = 0; o < no; ++o)
            out[c * no + o] = static_cast<std::uint32_t>((basis_class[out_letters_[o]] + m - tuple_class[c]) % m);
    return out;
}

}  // namespace frobhh
