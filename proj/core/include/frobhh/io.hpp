#pragma once

#include "frobhh/algebra.hpp"
#include "frobhh/frobenius.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace frobhh {

// An algebra read from a description, with the Frobenius form to use.
struct AlgebraSpec {
    std::string name;  // "taft(2)", "file:<path>" ...
    // "taft", "matrix", "truncated", "cyclic" or empty for explicit structure constants
    std::string constructor;
    std::size_t n = 0;
    std::optional<Scalar> w;  // Taft root
    Algebra algebra;
    // form given in the input or fixed by the constructor
    std::optional<Vector> phi;
};

// Parses either
//   {"field": p, "dim": d, "labels": [...], "unit": [...], "structure": [[[...]]], "phi": [...]}
// (labels and phi optional, structure[i][j] = coordinates of e_i e_j), or
//   {"constructor": "taft" | "matrix" | "truncated" | "cyclic", "N": n, "field": p, "w": v}
// (w only for taft). Unknown keys are rejected. Throws Error{ParseError}; JSON syntax
// errors carry the byte position.
AlgebraSpec parse_algebra_json(const std::string& text);
AlgebraSpec load_algebra_file(const std::string& path);

// "taft:2", "matrix:2", "truncated:3", "cyclic:3" over F_p. For taft the root
// defaults to the smallest primitive N-th root of unity.
AlgebraSpec constructor_spec(const std::string& spec, std::int64_t p, std::optional<std::int64_t> w = std::nullopt);

// Canonical form of a constructor: trace for matrix algebras, dual of x^{N-1}
// for truncated polynomials, dual of 1 for group algebras and the right integral
// of the dual Hopf algebra for Taft algebras.
std::optional<Vector> canonical_form(const AlgebraSpec& spec);

// The given or constructor form if present, else a seeded random search.
FrobeniusForm choose_form(const AlgebraSpec& spec, std::uint64_t seed, std::size_t attempts = 64);

}  // namespace frobhh
