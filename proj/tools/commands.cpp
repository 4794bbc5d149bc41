#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "extremal/quad.hpp"

namespace extremal::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Strips a trailing '#' comment and surrounding blanks.
std::string content_of(const std::string& line)
{
    return trim(line.substr(0, line.find('#')));
}

double parse_real(const std::string& text, const std::string& where)
{
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError(where + ": '" + text + "' is not a number");
    }
    if (used != text.size() || !std::isfinite(value))
        throw UsageError(where + ": '" + text + "' is not a finite number");
    return value;
}

std::string format_g17(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json complex_json(std::complex<double> z)
{
    return Json::array({z.real(), z.imag()});
}

Json vector_json(const Eigen::VectorXd& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(v[i]);
    return out;
}

Json coefficients_json(const hilbert::CoefficientVector& a)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.push_back(complex_json(a[i]));
    return out;
}

std::vector<double> read_nodes_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open nodes file '" + path + "'");
    return read_nodes(in);
}

hilbert::CoefficientVector read_coefficients_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open coefficients file '" + path + "'");
    return read_coefficients(in);
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw UsageError("cannot write '" + path + "'");
    file << text;
}

}  // namespace

double Grid::at(int k) const
{
    if (k == steps - 1)
        return stop;
    return start + (stop - start) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

Grid parse_grid(const std::string& text)
{
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
        throw UsageError("grid must have the form a:b:n");
    Grid g;
    g.start = parse_real(text.substr(0, c1), "grid start");
    g.stop = parse_real(text.substr(c1 + 1, c2 - c1 - 1), "grid stop");
    const std::string steps = text.substr(c2 + 1);
    std::size_t used = 0;
    long n = 0;
    try {
        n = std::stol(steps, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != steps.size() || steps.empty())
        throw UsageError("grid steps '" + steps + "' is not an integer");
    if (n < 2 || n > 10'000'000)
        throw UsageError("grid needs between 2 and 1e7 steps");
    if (!(g.start < g.stop))
        throw UsageError("grid needs start < stop");
    g.steps = static_cast<int>(n);
    return g;
}

std::vector<double> read_nodes(std::istream& in)
{
    std::vector<double> nodes;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string body = content_of(line);
        if (body.empty())
            continue;
        nodes.push_back(parse_real(body, "nodes line " + std::to_string(number)));
    }
    return nodes;
}

hilbert::CoefficientVector read_coefficients(std::istream& in)
{
    std::vector<std::complex<double>> values;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string body = content_of(line);
        if (body.empty())
            continue;
        const auto comma = body.find(',');
        const std::string where = "coefficients line " + std::to_string(number);
        if (comma == std::string::npos)
            throw UsageError(where + ": expected 're,im'");
        values.emplace_back(parse_real(trim(body.substr(0, comma)), where),
                            parse_real(trim(body.substr(comma + 1)), where));
    }
    hilbert::CoefficientVector a(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i)
        a[static_cast<Eigen::Index>(i)] = values[i];
    return a;
}

EvalTable eval_table(const Grid& grid, double tol, GStrategy strategy)
{
    EvalTable table;
    table.tol_requested = tol;
    table.rows.reserve(static_cast<std::size_t>(grid.steps));
    for (int k = 0; k < grid.steps; ++k) {
        const double x = grid.at(k);
        const GValue G = eval_G_detailed(x, tol, strategy);
        const GValue G_reflected = eval_G_detailed(-x, tol, strategy);
        table.tol_achieved = std::max({table.tol_achieved, G.err_estimate, G_reflected.err_estimate});
        EvalRow row;
        row.x = x;
        row.G = G.value;
        row.M = 2.0 * G.value - 1.0;
        row.B = eval_majorant(Majorant::BeurlingB, x);
        row.psi = eval_deficit(Deficit::psi, x, tol, strategy);
        row.phi = eval_deficit(Deficit::phi, x, tol, strategy);
        table.rows.push_back(row);
    }
    return table;
}

std::string to_csv(const EvalTable& table)
{
    std::string out = "x,G,M,B,psi,phi\n";
    for (const auto& r : table.rows) {
        for (const double v : {r.x, r.G, r.M, r.B, r.psi, r.phi}) {
            out += format_g17(v);
            out += ',';
        }
        out.back() = '\n';
    }
    return out;
}

Json to_json(const EvalTable& table)
{
    Json rows = Json::array();
    for (const auto& r : table.rows)
        rows.push_back({{"x", r.x}, {"G", r.G}, {"M", r.M}, {"B", r.B}, {"psi", r.psi}, {"phi", r.phi}});
    return {{"tol_requested", table.tol_requested},
            {"tol_achieved", table.tol_achieved},
            {"rows", std::move(rows)}};
}

Json to_json(const VerificationReport& report)
{
    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"value", c.value},
                          {"expected", c.expected},
                          {"residual", c.residual},
                          {"threshold", c.threshold},
                          {"err_estimate", c.err_estimate},
                          {"pass", c.pass}});
    return {{"psi_integral", report.psi_integral},
            {"g_integral", report.g_integral},
            {"band_residual_max", report.band_residual_max},
            {"all_pass", report.all_pass},
            {"seed", report.config.seed},
            {"tol", report.config.tol},
            {"checks", std::move(checks)}};
}

Json to_json(const hilbert::RemarkReport& report)
{
    Json trials = Json::array();
    for (const auto& t : report.trials)
        trials.push_back({{"lambdas", t.lambdas},
                          {"a", coefficients_json(t.a)},
                          {"value", t.value},
                          {"imag_residue", t.imag_residue},
                          {"err_estimate", t.err_estimate},
                          {"collapsed", t.collapsed},
                          {"weighted_norm", t.weighted_norm}});
    const auto& c = report.config;
    return {{"mode", "remark"},
            {"config",
             {{"n", c.n}, {"trials", c.trials}, {"seed", c.seed}, {"range", c.range},
              {"min_gap", c.min_gap}, {"transform_tol", c.transform_tol}}},
            {"summary",
             {{"min_value", report.min_value},
              {"argmin", report.argmin},
              {"mean_value", report.mean_value},
              {"min_normalized", report.min_normalized},
              {"max_imag_residue", report.max_imag_residue},
              {"negative_count", report.negative_count}}},
            {"trials", std::move(trials)}};
}

Json to_json(const hilbert::ConstantSearchReport& report)
{
    Json trials = Json::array();
    for (const auto& t : report.trials)
        trials.push_back({{"lambdas", t.lambdas},
                          {"start_constant", t.start_constant},
                          {"best_constant", t.best_constant},
                          {"accepted_moves", t.accepted_moves}});
    const auto& c = report.config;
    return {{"mode", "constant"},
            {"config",
             {{"n", c.n}, {"trials", c.trials}, {"seed", c.seed},
              {"perturbation_steps", c.perturbation_steps}, {"tol", c.tol}}},
            {"summary",
             {{"max_constant", report.max_constant},
              {"argmax", report.argmax},
              {"baseline_constant", report.baseline_constant},
              {"preissmann_bound", report.preissmann_bound},
              {"within_preissmann_bound", report.within_preissmann_bound}}},
            {"trials", std::move(trials)}};
}

Json hilbert_report(const HilbertRequest& request)
{
    const auto nodes = hilbert::NodeSystem::from(request.lambdas);
    const auto est = hilbert::sharp_constant(nodes, request.spectral);

    Json report;
    report["n"] = nodes.size();
    report["lambdas"] = vector_json(nodes.lambdas());
    report["deltas"] = vector_json(nodes.deltas());
    report["sharp_constant"] = {{"value", est.constant},
                                {"over_pi", est.constant / kPi},
                                {"iterations", est.iterations},
                                {"residual", est.residual},
                                {"restarts", est.restarts}};

    // Without user coefficients the margins are taken at the extremal vector.
    const bool given = request.coefficients.has_value();
    const hilbert::CoefficientVector& a = given ? *request.coefficients : est.witness;
    if (a.size() != nodes.size())
        throw hilbert::SizeMismatch("coefficients file has " + std::to_string(a.size()) +
                                    " entries for " + std::to_string(nodes.size()) + " nodes");
    const std::complex<double> phi = hilbert::bilinear_form(nodes, a);
    report["coefficients"] = given ? "file" : "witness";
    report["phi"] = complex_json(phi);
    report["weighted_norm"] = hilbert::weighted_norm(nodes, a);

    std::vector<std::pair<std::string, double>> constants{
        {"pi", kPi}, {"preissmann", hilbert::preissmann_constant()}, {"2pi", 2.0 * kPi}};
    if (request.constant)
        constants.emplace_back("user", *request.constant);
    Json margins = Json::array();
    for (const auto& [label, C] : constants) {
        const double margin = hilbert::verify_inequality(nodes, a, C);
        margins.push_back({{"label", label}, {"C", C}, {"margin", margin}, {"holds", margin >= 0.0}});
    }
    report["margins"] = std::move(margins);
    return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Extremal majorants of sgn(x) and the weighted Hilbert inequality", "extremal"};
    app.require_subcommand(1);

    std::string grid_text, format = "csv", output_path, strategy_text = "closed-form";
    double eval_tol = 1e-12;
    auto* eval = app.add_subcommand("eval", "Tabulate x, G, M, B, psi, phi over a grid");
    eval->add_option("--grid", grid_text, "a:b:n")->required();
    eval->add_option("--tol", eval_tol, "Tolerance for G, in [1e-12, 1e-4]");
    eval->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    eval->add_option("--strategy", strategy_text)->check(CLI::IsMember({"closed-form", "quadrature"}));
    eval->add_option("-o,--output", output_path);

    VerificationConfig verify_config;
    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    verify->add_option("--seed", verify_config.seed);
    verify->add_option("--tol", verify_config.tol, "Quadrature tolerance, in [1e-10, 1e-8]");

    std::string nodes_path, coeffs_path;
    std::optional<double> user_constant;
    HilbertRequest hreq;
    auto* hilb = app.add_subcommand("hilbert", "Margins and sharp constant for a node set");
    hilb->add_option("--nodes", nodes_path, "One real per line")->required();
    hilb->add_option("--coeffs", coeffs_path, "re,im per line");
    hilb->add_option("--constant", user_constant);
    hilb->add_option("--tol", hreq.spectral.tol, "Power-iteration tolerance (>= 1e-12)");
    hilb->add_option("--seed", hreq.spectral.seed);

    std::string mode;
    int n = -1, trials = -1, steps = -1;
    std::uint64_t seed = 0;
    auto* search = app.add_subcommand("search", "Seeded constant search or remark experiment");
    search->add_option("--mode", mode)->required()->check(CLI::IsMember({"constant", "remark"}));
    search->add_option("--n", n);
    search->add_option("--trials", trials);
    search->add_option("--seed", seed);
    search->add_option("--steps", steps, "Perturbation steps per trial (constant mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*eval) {
            const Grid grid = parse_grid(grid_text);
            if (!(eval_tol >= 1e-12 && eval_tol <= 1e-4))
                throw UsageError("--tol must lie in [1e-12, 1e-4]");
            const auto strategy =
                strategy_text == "quadrature" ? GStrategy::Quadrature : GStrategy::ClosedForm;
            const EvalTable table = eval_table(grid, eval_tol, strategy);
            emit(format == "csv" ? to_csv(table) : to_json(table).dump(2) + "\n", output_path, out);
            return kOk;
        }
        if (*verify) {
            if (!(verify_config.tol >= 1e-10 && verify_config.tol <= 1e-8))
                throw UsageError("--tol must lie in [1e-10, 1e-8]");
            const auto report = run_verification(verify_config);
            out << to_json(report).dump(2) << "\n";
            return report.all_pass ? kOk : kVerificationFailed;
        }
        if (*hilb) {
            hreq.lambdas = read_nodes_file(nodes_path);
            if (!coeffs_path.empty())
                hreq.coefficients = read_coefficients_file(coeffs_path);
            if (user_constant && !(*user_constant > 0.0))
                throw UsageError("--constant must be positive");
            if (!(hreq.spectral.tol >= 1e-12))
                throw UsageError("--tol must be >= 1e-12");
            hreq.constant = user_constant;
            out << hilbert_report(hreq).dump(2) << "\n";
            return kOk;
        }
        if (*search) {
            if (mode == "remark") {
                hilbert::RemarkConfig config;
                config.seed = seed;
                if (n >= 0)
                    config.n = n;
                if (trials >= 0)
                    config.trials = trials;
                if (config.n < 2 || config.n > 8)
                    throw UsageError("remark mode needs 2 <= n <= 8");
                if (config.trials < 1)
                    throw UsageError("--trials must be >= 1");
                out << to_json(hilbert::remark_experiment(config)).dump(2) << "\n";
            } else {
                hilbert::ConstantSearchConfig config;
                config.seed = seed;
                if (n >= 0)
                    config.n = n;
                if (trials >= 0)
                    config.trials = trials;
                if (steps >= 0)
                    config.perturbation_steps = steps;
                if (config.n < 2 || config.n > 2048)
                    throw UsageError("constant mode needs 2 <= n <= 2048");
                if (config.trials < 1)
                    throw UsageError("--trials must be >= 1");
                out << to_json(hilbert::constant_search(config)).dump(2) << "\n";
            }
            return kOk;
        }
    } catch (const quad::BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kBudgetFailure;
    } catch (const ToleranceNotMet& e) {
        err << "error: " << e.what() << "\n";
        return kBudgetFailure;
    } catch (const hilbert::MaxIterationsError& e) {
        err << "error: " << e.what() << "\n";
        return kBudgetFailure;
    } catch (const std::invalid_argument& e) {
        // UsageError, DuplicateNodeError, SizeMismatch
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBudgetFailure;
    }
    return kUsageError;
}

}  // namespace extremal::cli
