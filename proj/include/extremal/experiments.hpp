#ifndef EXTREMAL_EXPERIMENTS_HPP
#define EXTREMAL_EXPERIMENTS_HPP

// Seeded randomized experiments over node systems. Every run is a pure
// function of its config: same config, same report, bit for bit.

#include <cstdint>
#include <random>
#include <vector>

#include "extremal/hilbert.hpp"

namespace extremal::hilbert {

/// sqrt(1 + (2/3) sqrt(6/5)) * pi, the best published bound for the weighted inequality.
double preissmann_constant();

/// Nodes drawn uniformly from [0, range], redrawn until all gaps are >= min_gap.
std::vector<double> random_nodes(std::mt19937_64& rng, int n, double range, double min_gap);
/// Independent standard complex Gaussian entries.
CoefficientVector random_coefficients(std::mt19937_64& rng, Eigen::Index n);

struct RemarkConfig {
    int n = 4;
    int trials = 50;
    std::uint64_t seed = 0;
    double range = 10.0;
    double min_gap = 0.1;
    double transform_tol = 1e-8;
};

struct RemarkTrial {
    std::vector<double> lambdas;
    CoefficientVector a;
    double value = 0.0;          ///< Beurling telescoping sum (real part)
    double imag_residue = 0.0;
    double err_estimate = 0.0;
    double collapsed = 0.0;      ///< -Phi/(pi i) + sum |a_n|^2/delta_n
    double weighted_norm = 0.0;
};

struct RemarkReport {
    RemarkConfig config;
    std::vector<RemarkTrial> trials;
    double min_value = 0.0;
    std::size_t argmin = 0;
    double mean_value = 0.0;
    double min_normalized = 0.0;  ///< min of value / weighted_norm
    double max_imag_residue = 0.0;
    int negative_count = 0;
};

/// Beurling-based telescoping sums on random configurations. Reports data only.
RemarkReport remark_experiment(const RemarkConfig& config);

struct ConstantSearchConfig {
    int n = 8;
    int trials = 10;
    std::uint64_t seed = 0;
    int perturbation_steps = 20;
    double tol = 1e-10;
};

struct ConstantTrial {
    std::vector<double> lambdas;
    double start_constant = 0.0;
    double best_constant = 0.0;
    int accepted_moves = 0;
};

struct ConstantSearchReport {
    ConstantSearchConfig config;
    std::vector<ConstantTrial> trials;  ///< trial 0 is the equally spaced baseline
    double max_constant = 0.0;
    std::size_t argmax = 0;
    double baseline_constant = 0.0;
    double preissmann_bound = 0.0;
    bool within_preissmann_bound = true;
};

/// Random node systems plus hill-climbing perturbations maximizing sharp_constant.
ConstantSearchReport constant_search(const ConstantSearchConfig& config);

}  // namespace extremal::hilbert

#endif  // EXTREMAL_EXPERIMENTS_HPP
