#include "report.hpp"

#include "frobhh/action.hpp"
#include "frobhh/complexes.hpp"
#include "frobhh/error.hpp"
#include "frobhh/hochschild.hpp"
#include "frobhh/hopf.hpp"
#include "frobhh/io.hpp"

#include <chrono>
#include <sstream>

namespace frobhh::cli {

namespace {

using nlohmann::json;

json to_json(const Vector& v)
{
    json out = json::array();
    for (Scalar s : v)
        out.push_back(s.v);
    return out;
}

json to_json(const DenseMatrix& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).v);
        out.push_back(std::move(row));
    }
    return out;
}

json optional_scalar(const std::optional<Scalar>& s)
{
    return s ? json(s->v) : json(nullptr);
}

AlgebraSpec load(const RunConfig& cfg)
{
    if (!cfg.input.empty() && !cfg.constructor.empty())
        throw Error(ErrorKind::ParseError, "cli", "give either --input or --constructor, not both");
    if (!cfg.input.empty())
        return load_algebra_file(cfg.input);
    if (!cfg.constructor.empty())
        return constructor_spec(cfg.constructor, cfg.p, cfg.w);
    throw Error(ErrorKind::ParseError, "cli", "an algebra is required: --input FILE or --constructor KIND:N");
}

json config_echo(const RunConfig& cfg)
{
    return json{{"command", cfg.command},
                {"input", cfg.input},
                {"constructor", cfg.constructor},
                {"p", cfg.p},
                {"w", cfg.w ? json(*cfg.w) : json(nullptr)},
                {"seed", cfg.seed},
                {"max_degree", cfg.max_degree},
                {"normalized", cfg.normalized},
                {"density_threshold", cfg.density_threshold},
                {"form_attempts", cfg.form_attempts}};
}

json algebra_summary(const AlgebraSpec& spec)
{
    return json{{"name", spec.name},
                {"dim", spec.algebra.dim()},
                {"p", spec.algebra.field().characteristic()},
                {"labels", spec.algebra.labels()}};
}

HochschildOptions hh_options(const RunConfig& cfg)
{
    HochschildOptions o;
    o.max_degree = cfg.max_degree;
    o.normalized = cfg.normalized;
    o.elimination.density_threshold = cfg.density_threshold;
    return o;
}

struct Prepared {
    AlgebraSpec spec;
    FrobeniusForm form;
    NakayamaData nak;
};

Prepared prepare(const RunConfig& cfg)
{
    AlgebraSpec spec = load(cfg);
    FrobeniusForm form = choose_form(spec, cfg.seed, cfg.form_attempts);
    NakayamaData nak = nakayama(spec.algebra, form);
    return Prepared{std::move(spec), std::move(form), std::move(nak)};
}

json grading_json(const Algebra& a, const Grading& g)
{
    json comps = json::array();
    for (const auto& c : g.components) {
        json basis = json::array();
        for (const auto& v : c)
            basis.push_back(format_element(a, v));
        comps.push_back(std::move(basis));
    }
    return json{{"m", g.m}, {"w", g.w.v}, {"dims", g.dims()}, {"strongly_graded", g.strongly_graded},
                {"components", std::move(comps)}};
}

Outcome analyze(const RunConfig& cfg, const Prepared& pr)
{
    json r;
    r["form"] = to_json(pr.form.phi);
    r["form_source"] = pr.spec.phi ? "given" : "seeded search";
    r["nakayama"] = to_json(pr.nak.rho);
    r["m"] = pr.nak.order;
    r["w"] = optional_scalar(pr.nak.w);
    if (pr.nak.w)
        r["grading"] = grading_json(pr.spec.algebra, eigen_grading(pr.spec.algebra, pr.nak));
    else
        r["grading"] = nullptr;
    (void)cfg;
    return Outcome{std::move(r), true};
}

Outcome hh(const RunConfig& cfg, const Prepared& pr)
{
    const Algebra& a = pr.spec.algebra;
    json r;
    r["m"] = pr.nak.order;
    r["w"] = optional_scalar(pr.nak.w);
    r["normalized"] = cfg.normalized;
    std::vector<std::size_t> dims;
    std::map<std::string, double> timings;
    if (pr.nak.w) {
        const CohomologyReport c = graded_hh_dims(a, eigen_grading(a, pr.nak), hh_options(cfg));
        dims = c.dims;
        r["graded_dims"] = c.graded_dims;
        timings = c.timings_ms;
    } else {
        dims = hh_dims(a, hh_options(cfg));
        r["graded_dims"] = nullptr;
    }
    r["dims"] = dims;
    r["center_dim"] = center_dimension(a);
    const bool pass = dims.at(0) == center_dimension(a);
    r["center_matches_hh0"] = pass;
    if (cfg.timings)
        r["timings_ms"] = timings;
    return Outcome{std::move(r), pass};
}

Grading require_grading(const Prepared& pr)
{
    if (!pr.nak.w)
        throw Error(ErrorKind::HypothesisFailure, "cli",
                    "no primitive " + std::to_string(pr.nak.order) + "-th root of unity in F_p; no grading");
    return eigen_grading(pr.spec.algebra, pr.nak);
}

Outcome theorem_a(const RunConfig& cfg, const Prepared& pr)
{
    const TheoremAReport t = verify_theorem_a(pr.spec.algebra, require_grading(pr), hh_options(cfg));
    json r;
    r["m"] = t.cohomology.m;
    r["normalized"] = t.cohomology.normalized;
    r["dims"] = t.cohomology.dims;
    r["graded_dims"] = t.cohomology.graded_dims;
    r["degree_pass"] = t.degree_pass;
    if (cfg.timings)
        r["timings_ms"] = t.cohomology.timings_ms;
    return Outcome{std::move(r), t.pass};
}

Outcome theorem_b(const RunConfig& cfg, const Prepared& pr)
{
    const TheoremBReport t = verify_theorem_b(pr.spec.algebra, require_grading(pr), hh_options(cfg));
    json r;
    json per = json::array();
    for (const auto& d : t.per_degree)
        per.push_back({{"n", d.n}, {"dim_hh", d.dim_hh}, {"dim_invariants", d.dim_invariants}, {"pass", d.pass}});
    json refined = json::array();
    for (const auto& d : t.refined)
        refined.push_back({{"n", d.n},
                           {"i", d.i},
                           {"dim_hh_i", d.dim_hh_i},
                           {"dim_invariants", d.dim_invariants},
                           {"pass", d.pass}});
    json cells = json::array();
    for (const auto& row : t.action.cells)
        for (const auto& c : row)
            cells.push_back({{"n", c.n},
                             {"v", c.v},
                             {"dim", c.dim},
                             {"chain_maps", c.chain_maps},
                             {"order_divides_m", c.order_divides_m},
                             {"powers_match", c.powers_match},
                             {"cochain_multiplicative", c.cochain_multiplicative},
                             {"fixed_dim", c.fixed_dim_kernel},
                             {"consistent", c.consistent()}});
    r["per_degree"] = std::move(per);
    r["refined"] = std::move(refined);
    r["action"] = std::move(cells);
    r["rigidity"] = {{"hh2_dim", t.rigidity.hh2_dim}, {"verdict", t.rigidity.verdict}};
    if (pr.spec.constructor == "taft" && pr.spec.w) {
        const TaftActionReport e =
            taft_action_formula_check(pr.spec.algebra.field(), pr.spec.n, *pr.spec.w, std::min<std::size_t>(cfg.max_degree, 2));
        json degrees = json::array();
        for (const auto& d : e.degrees)
            degrees.push_back({{"n", d.n},
                               {"display_matches", d.display_matches},
                               {"inverse_scaling_matches", d.inverse_scaling_matches},
                               {"display_is_chain_map", d.display_is_chain_map}});
        // informational: not part of the verdict
        r["example_action"] = {{"h0_labels", e.h0_labels}, {"degrees", std::move(degrees)}, {"pass", e.pass}};
    }
    if (cfg.timings)
        r["timings_ms"] = t.cohomology.timings_ms;
    return Outcome{std::move(r), t.pass};
}

Outcome props(const RunConfig& cfg, const Prepared& pr)
{
    const std::size_t d = pr.spec.algebra.dim();
    const std::size_t n_max = cfg.max_degree_given ? cfg.max_degree : (d <= 2 ? 3 : 2);
    const ComplexesReport c = verify_complexes(pr.spec.algebra, pr.form, require_grading(pr), n_max);
    json r;
    r["n_max"] = n_max;
    json checks = json::array();
    for (const auto& k : c.checks)
        checks.push_back({{"name", k.name}, {"degree", k.degree}, {"pass", k.pass}});
    r["checks"] = std::move(checks);
    r["x_cohomology"] = {{"column0", c.x.column0},
                         {"column1", c.x.column1},
                         {"total", c.x.total},
                         {"matches_column1", c.x.matches_column1},
                         {"matches_column0_twice", c.x.matches_column0_twice}};
    json blocks = json::array();
    for (const auto& b : c.y.blocks)
        blocks.push_back({{"n", b.n}, {"i", b.i}, {"scalar_action", b.scalar_action}, {"cohomology", b.cohomology}});
    r["y_splitting"] = {{"m", c.y.m},
                        {"total", c.y.total},
                        {"hh0", c.y.hh0},
                        {"degree_pass", c.y.degree_pass},
                        {"blocks", std::move(blocks)},
                        {"pass", c.y.pass}};
    return Outcome{std::move(r), c.pass};
}

Outcome hopf_check(const RunConfig& cfg, const Prepared& pr)
{
    (void)cfg;
    const AlgebraSpec& spec = pr.spec;
    json r;
    if (spec.constructor == "taft") {
        const TaftHopfReport t = taft_hopf_check(spec.algebra.field(), spec.n, *spec.w);
        r["N"] = t.N;
        r["w"] = t.w.v;
        r["convention"] = t.integrals.convention;
        r["t"] = to_json(t.integrals.t.coords);
        r["t_element"] = format_element(spec.algebra, t.integrals.t.coords);
        r["alpha"] = to_json(t.integrals.alpha);
        r["phi"] = to_json(t.integrals.phi);
        r["orders"] = {{"alpha", t.orders.alpha_order},
                       {"antipode", t.orders.antipode_order},
                       {"rho", t.orders.rho_order},
                       {"bound", t.orders.bound},
                       {"rho_divides_bound", t.orders.rho_divides_bound},
                       {"alpha_s2_invariant", t.orders.alpha_s2_invariant}};
        r["cross_check"] = t.cross_check;
        r["powers_consistent"] = t.powers_consistent;
        r["inverse_consistent"] = t.inverse_consistent;
        r["values"] = {{"rho_g", optional_scalar(t.rho_g_scalar)},
                       {"rho_x", optional_scalar(t.rho_x_scalar)},
                       {"alpha_g", t.alpha_g.v},
                       {"alpha_x", t.alpha_x.v}};
        r["display"] = {{"rho_g_is_wg", t.rho_g_is_wg},
                        {"rho_x_is_winv_x", t.rho_x_is_winv_x},
                        {"alpha_g_is_winv", t.alpha_g_is_winv},
                        {"alpha_x_is_zero", t.alpha_x_is_zero},
                        {"t_matches_display", t.t_matches_display}};
        const bool pass = t.cross_check && t.powers_consistent && t.inverse_consistent &&
                          t.orders.rho_divides_bound && t.rho_g_is_wg && t.rho_x_is_winv_x && t.alpha_g_is_winv &&
                          t.alpha_x_is_zero && t.t_matches_display;
        return Outcome{std::move(r), pass};
    }
    if (spec.constructor == "cyclic") {
        const HopfData hopf = cyclic_group_hopf(spec.algebra, spec.n);
        const IntegralData data = resolve_integrals(spec.algebra, hopf);
        const OrderCertificates o = finite_order_certificates(spec.algebra, hopf, data);
        r["N"] = spec.n;
        r["convention"] = data.convention;
        r["t"] = to_json(data.t.coords);
        r["alpha"] = to_json(data.alpha);
        r["phi"] = to_json(data.phi);
        r["orders"] = {{"alpha", o.alpha_order},
                       {"antipode", o.antipode_order},
                       {"rho", o.rho_order},
                       {"bound", o.bound},
                       {"rho_divides_bound", o.rho_divides_bound},
                       {"alpha_s2_invariant", o.alpha_s2_invariant}};
        r["cross_check"] = data.cross_check;
        return Outcome{std::move(r), data.cross_check && o.rho_divides_bound};
    }
    throw Error(ErrorKind::HypothesisFailure, "cli", "hopf-check needs a Hopf constructor (taft:N or cyclic:N)");
}

void flatten(const json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows)
{
    const bool scalar_array =
        j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, path.empty() ? k : path + "." + k, rows);
    } else if (j.is_array() && !scalar_array) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
    } else {
        rows.emplace_back(path, j.dump());
    }
}

}  // namespace

Outcome run(const RunConfig& cfg)
{
    const auto start = std::chrono::steady_clock::now();
    const Prepared pr = prepare(cfg);
    Outcome out;
    if (cfg.command == "analyze")
        out = analyze(cfg, pr);
    else if (cfg.command == "hh")
        out = hh(cfg, pr);
    else if (cfg.command == "theorem-a")
        out = theorem_a(cfg, pr);
    else if (cfg.command == "theorem-b")
        out = theorem_b(cfg, pr);
    else if (cfg.command == "props")
        out = props(cfg, pr);
    else if (cfg.command == "hopf-check")
        out = hopf_check(cfg, pr);
    else
        throw Error(ErrorKind::ParseError, "cli", "unknown command " + cfg.command);

    json& r = out.report;
    r["config"] = config_echo(cfg);
    r["algebra"] = algebra_summary(pr.spec);
    r["pass"] = out.pass;
    if (!r.contains("timings_ms"))
        r["timings_ms"] = json::object();
    if (cfg.timings)
        r["timings_ms"]["total"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::string render_table(const json& report)
{
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::size_t width = 0;
    for (const auto& [k, v] : rows)
        width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows)
        os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
    return os.str();
}

}  // namespace frobhh::cli
