#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace frobhh {

// Canonical representative of an element of F_p, always in [0, p).
struct Scalar {
    std::uint32_t v = 0;

    constexpr Scalar() = default;
    constexpr explicit Scalar(std::uint32_t value) : v(value) {}

    constexpr bool is_zero() const { return v == 0; }
    friend constexpr auto operator<=>(Scalar, Scalar) = default;
};

using Vector = std::vector<Scalar>;

// Arithmetic context for the prime field F_p with p < 2^31. Immutable.
class PrimeField {
public:
    // Throws Error{NotPrime} unless p is a prime below 2^31.
    explicit PrimeField(std::int64_t p);

    std::uint32_t characteristic() const { return p_; }

    Scalar zero() const { return Scalar{0}; }
    Scalar one() const { return Scalar{1 % p_}; }

    // Reduces an arbitrary signed integer.
    Scalar from_int(std::int64_t x) const
    {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        if (r < 0)
            r += p_;
        return Scalar{static_cast<std::uint32_t>(r)};
    }

    Scalar add(Scalar a, Scalar b) const
    {
        std::uint32_t s = a.v + b.v;
        return Scalar{s >= p_ ? s - p_ : s};
    }
    Scalar sub(Scalar a, Scalar b) const { return Scalar{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v}; }
    Scalar neg(Scalar a) const { return Scalar{a.v == 0 ? 0 : p_ - a.v}; }
    Scalar mul(Scalar a, Scalar b) const
    {
        return Scalar{static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.v) * b.v) % p_)};
    }
    // a + b*c
    Scalar fma(Scalar a, Scalar b, Scalar c) const
    {
        return Scalar{static_cast<std::uint32_t>((a.v + static_cast<std::uint64_t>(b.v) * c.v) % p_)};
    }
    Scalar pow(Scalar a, std::int64_t e) const;
    // Throws Error{NotInvertible} on zero.
    Scalar inv(Scalar a) const;
    Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
    // (-1)^k
    Scalar sign(std::int64_t k) const { return (k % 2 == 0) ? one() : neg(one()); }

    // Multiplicative order of a nonzero element.
    std::uint64_t order(Scalar a) const;

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

bool is_prime(std::int64_t n);

// Smallest w in [1, p) of multiplicative order exactly m. Throws Error{NoRoot}
// when m does not divide p - 1.
Scalar primitive_root_of_unity(const PrimeField& field, std::uint64_t m);

}  // namespace frobhh
