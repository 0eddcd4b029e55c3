#include "report.hpp"

#include "frobhh/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

void add_common(CLI::App* sub, frobhh::cli::RunConfig& cfg)
{
    sub->add_option("--input", cfg.input, "algebra description (JSON)");
    sub->add_option("--constructor", cfg.constructor, "taft:N, matrix:N, truncated:N or cyclic:N");
    sub->add_option("--p", cfg.p, "prime field characteristic")->capture_default_str();
    sub->add_option("--w", cfg.w, "root of unity for taft:N (default: smallest primitive N-th root)");
    sub->add_option("--seed", cfg.seed, "seed for the random form search")->capture_default_str();
    sub->add_option("--max-degree", cfg.max_degree, "highest cohomological degree")->capture_default_str();
    sub->add_flag("--no-normalized", "use the full instead of the normalized complex");
    sub->add_option("--density-threshold", cfg.density_threshold, "dense switch-over density")->capture_default_str();
    sub->add_option("--form-attempts", cfg.form_attempts, "random forms tried before giving up")->capture_default_str();
    sub->add_flag("--timings", cfg.timings, "record wall-clock timings in the report");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hochschild cohomology of Frobenius algebras over prime fields"};
    app.require_subcommand(1);
    frobhh::cli::RunConfig cfg;
    std::string out_path;
    bool table = false;
    app.add_option("--out", out_path, "write the JSON report to this file");
    app.add_flag("--table", table, "print a two-column table instead of JSON");

    const std::vector<std::pair<const char*, const char*>> commands{
        {"analyze", "Frobenius form, Nakayama automorphism and its grading"},
        {"hh", "Hochschild cohomology dimensions, total and per grading class"},
        {"theorem-a", "check that only the class-0 subcomplex carries cohomology"},
        {"theorem-b", "compare HH with the invariants of the cyclic action on H(A_0, A)"},
        {"props", "matrix identities for the double complexes and resolutions"},
        {"hopf-check", "integrals, modular element and the Hopf formula for the Nakayama automorphism"},
    };
    std::vector<CLI::App*> subs;
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_common(sub, cfg);
        sub->add_option("--out", out_path, "write the JSON report to this file");
        sub->add_flag("--table", table, "print a two-column table instead of JSON");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    for (CLI::App* sub : subs)
        if (sub->parsed()) {
            cfg.command = sub->get_name();
            cfg.normalized = sub->count("--no-normalized") == 0;
            cfg.max_degree_given = sub->count("--max-degree") > 0;
        }

    try {
        const frobhh::cli::Outcome out = frobhh::cli::run(cfg);
        const std::string text = out.report.dump(2) + "\n";
        if (!out_path.empty()) {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) {
                std::cerr << "cannot write " << out_path << "\n";
                return 2;
            }
            f << text;
        }
        if (table)
            std::cout << frobhh::cli::render_table(out.report);
        else if (out_path.empty())
            std::cout << text;
        return out.pass ? 0 : 1;
    } catch (const frobhh::Error& e) {
        nlohmann::json err{{"error", std::string(frobhh::to_string(e.kind()))},
                           {"module", e.module()},
                           {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
}
