#include "frobhh/io.hpp"

#include "frobhh/error.hpp"
#include "frobhh/hopf.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace frobhh {

namespace {

constexpr const char* kModule = "io";

using nlohmann::json;

[[noreturn]] void fail(const std::string& what)
{
    throw Error(ErrorKind::ParseError, kModule, what);
}

std::int64_t integer(const json& j, const std::string& where)
{
    if (!j.is_number_integer())
        fail(where + ": expected an integer");
    return j.get<std::int64_t>();
}

std::size_t positive(const json& j, const std::string& where)
{
    const std::int64_t v = integer(j, where);
    if (v <= 0)
        fail(where + ": expected a positive integer");
    return static_cast<std::size_t>(v);
}

Vector vector_of(const PrimeField& f, const json& j, std::size_t d, const std::string& where)
{
    if (!j.is_array() || j.size() != d)
        fail(where + ": expected an array of " + std::to_string(d) + " integers");
    Vector v;
    for (std::size_t k = 0; k < d; ++k)
        v.push_back(f.from_int(integer(j[k], where + "[" + std::to_string(k) + "]")));
    return v;
}

void reject_unknown(const json& doc, const std::set<std::string>& allowed)
{
    for (const auto& [key, value] : doc.items())
        if (!allowed.contains(key))
            fail("unknown key \"" + key + "\"");
}

const json& required(const json& doc, const char* key)
{
    auto it = doc.find(key);
    if (it == doc.end())
        fail(std::string("missing key \"") + key + "\"");
    return *it;
}

PrimeField field_of(std::int64_t p)
{
    if (!is_prime(p) || p >= (std::int64_t{1} << 31))
        throw Error(ErrorKind::NotPrime, kModule, std::to_string(p) + " is not a prime below 2^31");
    return PrimeField(p);
}

AlgebraSpec from_constructor(const std::string& kind, std::size_t n, std::int64_t p, std::optional<std::int64_t> w)
{
    const PrimeField f = field_of(p);
    if (w && kind != "taft")
        fail("a root w is only accepted for taft");
    if (kind == "taft") {
        const Scalar root = w ? f.from_int(*w) : primitive_root_of_unity(f, n);
        AlgebraSpec s{"taft(" + std::to_string(n) + ")", kind, n, root, taft(f, n, root), std::nullopt};
        s.phi = canonical_form(s);
        return s;
    }
    if (kind == "matrix" || kind == "truncated" || kind == "cyclic") {
        Algebra a = kind == "matrix" ? matrix_algebra(f, n)
                                     : (kind == "truncated" ? truncated_poly(f, n) : cyclic_group_algebra(f, n));
        AlgebraSpec s{kind + "(" + std::to_string(n) + ")", kind, n, std::nullopt, std::move(a), std::nullopt};
        s.phi = canonical_form(s);
        return s;
    }
    fail("unknown constructor \"" + kind + "\"");
}

}  // namespace

AlgebraSpec parse_algebra_json(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object())
        fail("the top level must be an object");

    if (doc.contains("constructor")) {
        reject_unknown(doc, {"constructor", "N", "field", "w"});
        const json& kind = required(doc, "constructor");
        if (!kind.is_string())
            fail("constructor: expected a string");
        std::optional<std::int64_t> w;
        if (doc.contains("w"))
            w = integer(doc["w"], "w");
        return from_constructor(kind.get<std::string>(), positive(required(doc, "N"), "N"),
                                integer(required(doc, "field"), "field"), w);
    }

    reject_unknown(doc, {"field", "dim", "labels", "unit", "structure", "phi"});
    const PrimeField f = field_of(integer(required(doc, "field"), "field"));
    const std::size_t d = positive(required(doc, "dim"), "dim");

    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        const json& l = doc["labels"];
        if (!l.is_array() || l.size() != d)
            fail("labels: expected an array of " + std::to_string(d) + " strings");
        for (const auto& s : l) {
            if (!s.is_string())
                fail("labels: expected strings");
            labels.push_back(s.get<std::string>());
        }
    } else {
        for (std::size_t i = 0; i < d; ++i)
            labels.push_back("e" + std::to_string(i));
    }

    const Vector unit = vector_of(f, required(doc, "unit"), d, "unit");
    const json& st = required(doc, "structure");
    if (!st.is_array() || st.size() != d)
        fail("structure: expected " + std::to_string(d) + " rows");
    std::vector<std::vector<Vector>> structure(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (!st[i].is_array() || st[i].size() != d)
            fail("structure[" + std::to_string(i) + "]: expected " + std::to_string(d) + " entries");
        for (std::size_t j = 0; j < d; ++j)
            structure[i].push_back(
                vector_of(f, st[i][j], d, "structure[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
    AlgebraSpec s{"structure constants", "", d, std::nullopt, Algebra(f, std::move(labels), std::move(structure), unit),
                  std::nullopt};
    if (doc.contains("phi"))
        s.phi = vector_of(f, doc["phi"], d, "phi");
    return s;
}

AlgebraSpec load_algebra_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail("cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    AlgebraSpec s = parse_algebra_json(buffer.str());
    if (s.constructor.empty())
        s.name = "file:" + path;
    return s;
}

AlgebraSpec constructor_spec(const std::string& spec, std::int64_t p, std::optional<std::int64_t> w)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        fail("constructor spec \"" + spec + "\" is not of the form kind:N");
    std::size_t n = 0;
    try {
        std::size_t used = 0;
        const long long v = std::stoll(spec.substr(colon + 1), &used);
        if (used != spec.size() - colon - 1 || v <= 0)
            throw std::invalid_argument("n");
        n = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        fail("constructor spec \"" + spec + "\": N must be a positive integer");
    }
    return from_constructor(spec.substr(0, colon), n, p, w);
}

std::optional<Vector> canonical_form(const AlgebraSpec& spec)
{
    const Algebra& a = spec.algebra;
    const PrimeField& f = a.field();
    Vector phi(a.dim());
    if (spec.constructor == "matrix") {
        for (std::size_t i = 0; i < spec.n; ++i)
            phi[i * spec.n + i] = f.one();
    } else if (spec.constructor == "truncated") {
        phi[spec.n - 1] = f.one();
    } else if (spec.constructor == "cyclic") {
        phi[0] = f.one();
    } else if (spec.constructor == "taft") {
        if (spec.n < 2)
            return std::nullopt;
        const HopfData hopf = taft_hopf(a, spec.n);
        return resolve_integrals(a, hopf).phi;
    } else {
        return std::nullopt;
    }
    return phi;
}

FrobeniusForm choose_form(const AlgebraSpec& spec, std::uint64_t seed, std::size_t attempts)
{
    if (spec.phi)
        return frobenius_form(spec.algebra, *spec.phi);
    return find_frobenius_form(spec.algebra, seed, attempts);
}

}  // namespace frobhh
