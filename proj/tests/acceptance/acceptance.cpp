// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// usage: acceptance CLI_PATH WORK_DIR [--expect-fail=5,6]
#include "frobhh/action.hpp"
#include "frobhh/complexes.hpp"
#include "frobhh/hochschild.hpp"
#include "frobhh/hopf.hpp"
#include "frobhh/io.hpp"
#include "frobhh/linalg.hpp"

#include "../oracle/hh_oracle.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace frobhh;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string join(const std::vector<std::size_t>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

HochschildOptions opts(std::size_t n_max, bool normalized = true)
{
    HochschildOptions o;
    o.max_degree = n_max;
    o.normalized = normalized;
    return o;
}

Grading grading_of(const AlgebraSpec& s)
{
    const FrobeniusForm form = choose_form(s, 1);
    return eigen_grading(s.algebra, nakayama(s.algebra, form));
}

oracle::Table table_of(const Algebra& a)
{
    oracle::Table t{a.field().characteristic(), static_cast<int>(a.dim()), {}};
    t.c.assign(a.dim() * a.dim() * a.dim(), 0);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (const auto& term : a.product(i, j))
                t.c[(i * a.dim() + j) * a.dim() + term.index] = term.coeff.v;
    return t;
}

const std::pair<const char*, std::size_t> kTheoremCases[] = {{"taft:2", 12}, {"taft:3", 3}};

Verdict theorem_a()
{
    Verdict v{true, ""};
    const std::size_t n_max[] = {4, 3};
    for (int k = 0; k < 2; ++k) {
        const AlgebraSpec s = constructor_spec(kTheoremCases[k].first, 13, kTheoremCases[k].second);
        const TheoremAReport r = verify_theorem_a(s.algebra, grading_of(s), opts(n_max[k]));
        v.pass = v.pass && r.pass;
        v.detail += s.name + " HH=" + join(r.cohomology.dims) + (r.pass ? " ok; " : " MISMATCH; ");
    }
    return v;
}

Verdict theorem_b()
{
    Verdict v{true, ""};
    const std::size_t n_max[] = {3, 2};
    for (int k = 0; k < 2; ++k) {
        const AlgebraSpec s = constructor_spec(kTheoremCases[k].first, 13, kTheoremCases[k].second);
        const TheoremBReport r = verify_theorem_b(s.algebra, grading_of(s), opts(n_max[k]));
        std::vector<std::size_t> inv;
        for (const auto& d : r.per_degree)
            inv.push_back(d.dim_invariants);
        v.pass = v.pass && r.pass;
        v.detail += s.name + " invariants=" + join(inv) + " refined cells=" + std::to_string(r.refined.size()) +
                    (r.pass ? " ok; " : " MISMATCH; ");
    }
    return v;
}

Verdict propositions()
{
    Verdict v{true, ""};
    for (const char* c : {"truncated:2", "matrix:2", "taft:2"}) {
        const AlgebraSpec s = constructor_spec(c, 13);
        const std::size_t n_max = s.algebra.dim() == 2 ? 3 : 2;
        const ComplexesReport r = verify_complexes(s.algebra, choose_form(s, 1), grading_of(s), n_max);
        std::size_t failed = 0;
        for (const auto& check : r.checks)
            if (!check.pass) {
                ++failed;
                v.detail += s.name + ":" + check.name + "@" + std::to_string(check.degree) + " failed; ";
            }
        v.pass = v.pass && r.pass;
        v.detail += s.name + " " + std::to_string(r.checks.size() - failed) + "/" + std::to_string(r.checks.size()) +
                    " identities" + (r.y.pass ? "" : ", Y splitting failed") + "; ";
    }
    return v;
}

Verdict classical_anchors()
{
    Verdict v{true, ""};
    const PrimeField f(13);
    const std::pair<Algebra, std::vector<std::size_t>> anchors[] = {
        {truncated_poly(f, 2), {2, 1, 1, 1}},
        {matrix_algebra(f, 2), {1, 0, 0}},
    };
    for (const auto& [a, expected] : anchors) {
        const int n_max = static_cast<int>(expected.size()) - 1;
        const std::vector<int> o = oracle::hh_dims(table_of(a), n_max);
        const std::vector<std::size_t> oracle_dims(o.begin(), o.end());
        const std::vector<std::size_t> engine = hh_dims(a, opts(n_max));
        const bool ok = oracle_dims == expected && engine == expected;
        v.pass = v.pass && ok;
        v.detail += "oracle " + join(oracle_dims) + " engine " + join(engine) + "; ";
    }
    for (const char* c : {"truncated:2", "truncated:3", "matrix:2", "taft:2", "taft:3", "cyclic:3"}) {
        const AlgebraSpec s = constructor_spec(c, 13);
        const std::size_t hh0 = hh_dims(s.algebra, opts(0)).at(0);
        const std::size_t centre = static_cast<std::size_t>(oracle::center_dim(table_of(s.algebra)));
        if (hh0 != centre || center_dimension(s.algebra) != centre) {
            v.pass = false;
            v.detail += s.name + " HH0 != centre; ";
        }
    }
    v.detail += "HH0 = centre checked on 6 algebras";
    return v;
}

Verdict hopf()
{
    Verdict v{true, ""};
    const PrimeField f(13);
    for (const auto& [c, w] : kTheoremCases) {
        const std::size_t n = c == std::string("taft:2") ? 2 : 3;
        const TaftHopfReport r = taft_hopf_check(f, n, f.from_int(static_cast<std::int64_t>(w)));
        const std::pair<const char*, bool> items[] = {
            {"nakayama_via_hopf", r.cross_check}, {"rho(g)=wg", r.rho_g_is_wg},
            {"rho(x)=w^-1x", r.rho_x_is_winv_x},  {"alpha(g)=w^-1", r.alpha_g_is_winv},
            {"alpha(x)=0", r.alpha_x_is_zero},    {"t~sum w^j g^j x^(N-1)", r.t_matches_display},
        };
        std::string bad;
        for (const auto& [name, ok] : items)
            if (!ok)
                bad += std::string(bad.empty() ? "" : ",") + name;
        v.pass = v.pass && bad.empty();
        v.detail += "taft(" + std::to_string(n) + ") " + (bad.empty() ? "all items hold" : "fails " + bad) + "; ";
    }
    return v;
}

Verdict action_formula()
{
    Verdict v{true, ""};
    const PrimeField f(13);
    for (const auto& [c, w] : kTheoremCases) {
        const std::size_t n = c == std::string("taft:2") ? 2 : 3;
        const TaftActionReport r = taft_action_formula_check(f, n, f.from_int(static_cast<std::int64_t>(w)), 2);
        v.pass = v.pass && r.pass;
        v.detail += "N=" + std::to_string(n) + ":";
        for (const auto& d : r.degrees)
            v.detail += " n=" + std::to_string(d.n) + (d.display_matches ? " equal" : " differs") +
                        (d.inverse_scaling_matches ? "" : " (inverse scaling also differs)");
        v.detail += "; ";
    }
    return v;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Verdict determinism(const std::string& cli, const std::string& work)
{
    Verdict v{true, ""};
    const char* runs[] = {
        "analyze --constructor taft:3",
        "hh --constructor truncated:3 --max-degree 3",
        "theorem-a --constructor taft:2 --max-degree 3",
        "theorem-b --constructor taft:2 --max-degree 2",
        "props --constructor truncated:2",
        "hopf-check --constructor taft:2",
        "analyze --constructor matrix:2 --seed 5 --table",
    };
    std::size_t k = 0;
    for (const char* args : runs) {
        std::string out[2];
        for (int rep = 0; rep < 2; ++rep) {
            const std::string path = work + "/det_" + std::to_string(k) + "_" + std::to_string(rep) + ".out";
            const std::string cmd = "\"" + cli + "\" " + args + " > \"" + path + "\"";
            if (std::system(cmd.c_str()) != 0) {
                v.pass = false;
                v.detail += std::string("'") + args + "' did not exit 0; ";
            }
            out[rep] = slurp(path);
        }
        if (out[0].empty() || out[0] != out[1]) {
            v.pass = false;
            v.detail += std::string("'") + args + "' differs; ";
        }
        ++k;
    }
    if (v.pass)
        v.detail = std::to_string(k) + " subcommand configurations byte-identical across two runs";
    return v;
}

Verdict cross_validation()
{
    Verdict v{true, ""};
    std::size_t algebras = 0;
    for (const char* c : {"truncated:2", "truncated:3", "truncated:4", "matrix:2", "taft:2", "cyclic:2", "cyclic:3",
                          "cyclic:4"}) {
        const AlgebraSpec s = constructor_spec(c, 13);
        const auto normalized = hh_dims(s.algebra, opts(3, true));
        const auto full = hh_dims(s.algebra, opts(3, false));
        ++algebras;
        if (normalized != full) {
            v.pass = false;
            v.detail += s.name + " normalized " + join(normalized) + " full " + join(full) + "; ";
        }
    }

    const PrimeField f(13);
    std::mt19937_64 rng(20240613);
    std::uniform_int_distribution<std::size_t> size(1, 200);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::uint32_t> value(1, 12);
    EliminationOptions sparse_only;
    sparse_only.density_threshold = 2.0;
    std::size_t agree = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = size(rng), cols = size(rng);
        const double density = trial % 4 == 0 ? 0.5 : 0.01 + 0.1 * coin(rng);
        DenseMatrix m(rows, cols);
        // every third matrix is a product through a thin inner dimension, so rank deficient
        if (trial % 3 == 0) {
            const std::size_t inner = 1 + size(rng) % std::min(rows, cols);
            DenseMatrix l(rows, inner), r(inner, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < inner; ++j)
                    if (coin(rng) < density)
                        l(i, j) = Scalar{value(rng)};
            for (std::size_t i = 0; i < inner; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    if (coin(rng) < density)
                        r(i, j) = Scalar{value(rng)};
            m = multiply(f, l, r);
        } else {
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    if (coin(rng) < density)
                        m(i, j) = Scalar{value(rng)};
        }
        const SparseMatrix s = SparseMatrix::from_dense(m);
        const std::size_t dense = rank_dense(f, m);
        if (rank(f, s, sparse_only) == dense && rank(f, s) == dense)
            ++agree;
    }
    v.pass = v.pass && agree == 100;
    v.detail += "normalized = full on " + std::to_string(algebras) + " algebras up to n=3; sparse = dense rank on " +
                std::to_string(agree) + "/100 random matrices";
    return v;
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc < 3) {
        std::cerr << "usage: acceptance CLI_PATH WORK_DIR [--expect-fail=N,M]\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string work = argv[2];
    std::set<int> expected_failures;
    for (int i = 3; i < argc; ++i) {
        std::string arg = argv[i];
        const std::string prefix = "--expect-fail=";
        if (arg.rfind(prefix, 0) == 0) {
            std::stringstream list(arg.substr(prefix.size()));
            for (std::string item; std::getline(list, item, ',');)
                expected_failures.insert(std::stoi(item));
        }
    }

    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"graded classes i != 0 carry no cohomology", theorem_a},
        {"HH equals invariants of the cyclic action", theorem_b},
        {"double complex and resolution identities", propositions},
        {"classical dimension anchors", classical_anchors},
        {"Hopf cross-check for taft(2), taft(3)", hopf},
        {"action formula display for N = 2, 3", action_formula},
        {"byte-identical reports", [&] { return determinism(cli, work); }},
        {"oracle cross-validation", cross_validation},
    };

    int unexpected = 0;
    int number = 0;
    for (const auto& [name, fn] : criteria) {
        ++number;
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception& e) {
            v = Verdict{false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (v.pass ? "PASS" : "FAIL") << " " << number << " " << name << " (" << timing << "): " << v.detail
                  << std::endl;
        if (!v.pass && !expected_failures.contains(number))
            ++unexpected;
        if (v.pass && expected_failures.contains(number))
            std::cout << "note: criterion " << number << " was expected to fail and passed" << std::endl;
    }
    return unexpected == 0 ? 0 : 1;
}
