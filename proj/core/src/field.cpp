#include "frobhh/field.hpp"

#include "frobhh/error.hpp"

#include <string>

namespace frobhh {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NoRoot: return "NoRoot";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BadStructure: return "BadStructure";
    case ErrorKind::BadRoot: return "BadRoot";
    case ErrorKind::NotPrimitivePower: return "NotPrimitivePower";
    case ErrorKind::NotFrobeniusWithinAttempts: return "NotFrobeniusWithinAttempts";
    case ErrorKind::InconsistentSystem: return "InconsistentSystem";
    case ErrorKind::HypothesisFailure: return "HypothesisFailure";
    case ErrorKind::NotStronglyGraded: return "NotStronglyGraded";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NoIntegral: return "NoIntegral";
    case ErrorKind::IntegralSpaceNotOneDim: return "IntegralSpaceNotOneDim";
    case ErrorKind::InconsistentModular: return "InconsistentModular";
    case ErrorKind::ConventionMismatch: return "ConventionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::int64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::int64_t p)
{
    if (p >= (std::int64_t{1} << 31) || !is_prime(p))
        throw Error(ErrorKind::NotPrime, "exactla", std::to_string(p) + " is not a prime below 2^31");
    p_ = static_cast<std::uint32_t>(p);
}

Scalar PrimeField::pow(Scalar a, std::int64_t e) const
{
    if (e < 0)
        return pow(inv(a), -e);
    Scalar result = one();
    while (e > 0) {
        if (e & 1)
            result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Scalar PrimeField::inv(Scalar a) const
{
    if (a.v == 0)
        throw Error(ErrorKind::NotInvertible, "exactla", "zero has no inverse in F_" + std::to_string(p_));
    // extended Euclid on signed 64-bit values
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a.v;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return from_int(t);
}

std::uint64_t PrimeField::order(Scalar a) const
{
    if (a.v == 0)
        throw Error(ErrorKind::NotInvertible, "exactla", "zero has no multiplicative order");
    std::uint64_t k = 1;
    Scalar x = a;
    while (x != one()) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

Scalar primitive_root_of_unity(const PrimeField& field, std::uint64_t m)
{
    const std::uint64_t p = field.characteristic();
    if (m == 0 || (p - 1) % m != 0)
        throw Error(ErrorKind::NoRoot, "exactla",
                    "no primitive " + std::to_string(m) + "-th root of unity in F_" + std::to_string(p));
    for (std::uint32_t w = 1; w < p; ++w) {
        Scalar s{w};
        if (field.pow(s, static_cast<std::int64_t>(m)) != field.one())
            continue;
        bool primitive = true;
        Scalar x = field.one();
        for (std::uint64_t r = 1; r < m; ++r) {
            x = field.mul(x, s);
            if (x == field.one()) {
                primitive = false;
                break;
            }
        }
        if (primitive)
            return s;
    }
    throw Error(ErrorKind::NoRoot, "exactla", "primitive root search exhausted");
}

}  // namespace frobhh
