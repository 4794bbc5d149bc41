#include "extremal/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace extremal::hilbert {

double preissmann_constant()
{
    return std::sqrt(1.0 + 2.0 / 3.0 * std::sqrt(6.0 / 5.0)) * std::numbers::pi;
}

std::vector<double> random_nodes(std::mt19937_64& rng, int n, double range, double min_gap)
{
    if (n < 2 || !(range > 0.0) || !(min_gap > 0.0) || min_gap * (n - 1) > range)
        throw std::domain_error("random_nodes: infeasible configuration");
    std::uniform_real_distribution<double> uniform(0.0, range);
    std::vector<double> nodes(static_cast<std::size_t>(n));
    for (int attempt = 0; attempt < 1'000'000; ++attempt) {
        for (auto& x : nodes)
            x = uniform(rng);
        std::vector<double> sorted = nodes;
        std::sort(sorted.begin(), sorted.end());
        bool ok = true;
        for (std::size_t i = 0; i + 1 < sorted.size() && ok; ++i)
            ok = sorted[i + 1] - sorted[i] >= min_gap;
        if (ok)
            return nodes;
    }
    throw std::runtime_error("random_nodes: rejection sampling did not converge");
}

CoefficientVector random_coefficients(std::mt19937_64& rng, Eigen::Index n)
{
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    CoefficientVector a(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        a[i] = {re, im};
    }
    return a;
}

RemarkReport remark_experiment(const RemarkConfig& config)
{
    if (config.n < 2 || config.n > 8)
        throw std::domain_error("remark_experiment: N must lie in [2, 8]");
    if (config.trials < 1)
        throw std::domain_error("remark_experiment: need at least one trial");

    std::mt19937_64 rng(config.seed);
    RemarkReport report;
    report.config = config;
    report.min_value = std::numeric_limits<double>::infinity();
    report.min_normalized = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (int trial = 0; trial < config.trials; ++trial) {
        RemarkTrial rec;
        rec.lambdas = random_nodes(rng, config.n, config.range, config.min_gap);
        rec.a = random_coefficients(rng, config.n);
        const auto nodes = NodeSystem::from(rec.lambdas);
        const auto s = telescoping_sum(nodes, rec.a, TelescopingMajorant::BeurlingB, config.transform_tol);
        rec.value = s.value;
        rec.imag_residue = s.imag_residue;
        rec.err_estimate = s.err_estimate;
        rec.weighted_norm = weighted_norm(nodes, rec.a);
        const auto phi = bilinear_form(nodes, rec.a);
        rec.collapsed = (std::complex<double>(0.0, 1.0) * phi / std::numbers::pi).real() + rec.weighted_norm;

        sum += rec.value;
        if (rec.value < report.min_value) {
            report.min_value = rec.value;
            report.argmin = static_cast<std::size_t>(trial);
        }
        report.min_normalized = std::min(report.min_normalized, rec.value / rec.weighted_norm);
        report.max_imag_residue = std::max(report.max_imag_residue, rec.imag_residue);
        if (rec.value < 0.0)
            ++report.negative_count;
        report.trials.push_back(std::move(rec));
    }
    report.mean_value = sum / config.trials;
    return report;
}

namespace {

bool well_separated(const std::vector<double>& nodes)
{
    std::vector<double> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    const double range = sorted.back() - sorted.front();
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (!(sorted[i + 1] - sorted[i] > 1e-6 * range))
            return false;
    return true;
}

double constant_of(const std::vector<double>& nodes, const ConstantSearchConfig& config)
{
    SpectralOptions options;
    options.tol = config.tol;
    options.seed = config.seed;
    return sharp_constant(NodeSystem::from(nodes), options).constant;
}

}  // namespace

ConstantSearchReport constant_search(const ConstantSearchConfig& config)
{
    if (config.n < 2 || config.n > 2048)
        throw std::domain_error("constant_search: N must lie in [2, 2048]");
    if (config.trials < 1 || config.perturbation_steps < 0)
        throw std::domain_error("constant_search: need trials >= 1 and steps >= 0");

    std::mt19937_64 rng(config.seed);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> spread(0.0, 1.5);
    std::uniform_int_distribution<int> pick(0, config.n - 1);

    ConstantSearchReport report;
    report.config = config;
    report.preissmann_bound = preissmann_constant();
    for (int trial = 0; trial < config.trials; ++trial) {
        ConstantTrial rec;
        std::vector<double> nodes(static_cast<std::size_t>(config.n));
        if (trial == 0) {
            for (int i = 0; i < config.n; ++i)
                nodes[static_cast<std::size_t>(i)] = i + 1.0;
        } else {
            // log-normal gaps with a per-trial spread
            const double sigma = spread(rng);
            double x = 0.0;
            for (auto& node : nodes) {
                node = x;
                x += std::exp(sigma * normal(rng));
            }
        }
        rec.start_constant = constant_of(nodes, config);
        rec.best_constant = rec.start_constant;
        for (int step = 0; step < config.perturbation_steps; ++step) {
            std::vector<double> candidate = nodes;
            const auto i = static_cast<std::size_t>(pick(rng));
            double local = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < candidate.size(); ++k)
                if (k != i)
                    local = std::min(local, std::abs(candidate[k] - candidate[i]));
            candidate[i] += 0.25 * local * normal(rng);
            if (!well_separated(candidate))
                continue;
            const double c = constant_of(candidate, config);
            if (c > rec.best_constant) {
                rec.best_constant = c;
                nodes = std::move(candidate);
                ++rec.accepted_moves;
            }
        }
        rec.lambdas = nodes;
        if (trial == 0)
            report.baseline_constant = rec.start_constant;
        if (rec.best_constant > report.max_constant) {
            report.max_constant = rec.best_constant;
            report.argmax = static_cast<std::size_t>(trial);
        }
        report.trials.push_back(std::move(rec));
    }
    report.within_preissmann_bound = report.max_constant <= report.preissmann_bound + 1e-6;
    return report;
}

}  // namespace extremal::hilbert
