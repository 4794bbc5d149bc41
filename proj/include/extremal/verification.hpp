#ifndef EXTREMAL_VERIFICATION_HPP
#define EXTREMAL_VERIFICATION_HPP

// The invariant suite behind `extremal verify`: deficit integrals, Poisson
// sums, band-limit identities, the kernel factorization, grid properties of
// the majorants and the telescoping identity on seeded random node systems.

#include <cstdint>
#include <string>
#include <vector>

namespace extremal {

struct CheckResult {
    std::string name;
    double value = 0.0;      ///< measured quantity
    double expected = 0.0;   ///< target value (or bound for one-sided checks)
    double residual = 0.0;   ///< |value - expected|, or violation for one-sided checks
    double threshold = 0.0;  ///< pass iff residual <= threshold
    double err_estimate = 0.0;
    bool pass = false;
};

struct VerificationConfig {
    std::uint64_t seed = 0;
    /// Quadrature tolerance for the integral checks; must lie in [1e-10, 1e-8].
    double tol = 1e-10;
    int random_instances = 20;
    int grid_points = 100'000;
};

struct VerificationReport {
    VerificationConfig config;
    std::vector<CheckResult> checks;
    double psi_integral = 0.0;
    double g_integral = 0.0;
    double band_residual_max = 0.0;
    bool all_pass = false;

    const CheckResult* find(const std::string& name) const;
};

VerificationReport run_verification(const VerificationConfig& config = {});

}  // namespace extremal

#endif  // EXTREMAL_VERIFICATION_HPP
