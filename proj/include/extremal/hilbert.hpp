#ifndef EXTREMAL_HILBERT_HPP
#define EXTREMAL_HILBERT_HPP

// Weighted Hilbert inequality
//
//   | sum_{m != n} a_m conj(a_n) / (lambda_m - lambda_n) | <= C sum_n |a_n|^2 / delta_n,
//   delta_n = min_{m != n} |lambda_n - lambda_m|.
//
// With b_n = a_n / sqrt(delta_n) the form is b^* A b for the real
// antisymmetric A_nm = sqrt(delta_n delta_m) / (lambda_m - lambda_n), so the
// best constant for a fixed node set is the spectral radius of the Hermitian
// matrix iA, i.e. sqrt(lambda_max(A^T A)).

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace extremal::hilbert {

using CoefficientVector = Eigen::VectorXcd;

class DuplicateNodeError : public std::invalid_argument {
public:
    DuplicateNodeError(const std::string& what, Eigen::Index first, Eigen::Index second)
        : std::invalid_argument(what), first_(first), second_(second) {}
    Eigen::Index first() const noexcept { return first_; }
    Eigen::Index second() const noexcept { return second_; }

private:
    Eigen::Index first_;
    Eigen::Index second_;
};

class SizeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Distinct nodes with their nearest-neighbour separations. Immutable once built.
class NodeSystem {
public:
    /// Throws DuplicateNodeError when two nodes are closer than 1e-9 * range.
    static NodeSystem from(std::span<const double> lambdas);

    Eigen::Index size() const noexcept { return lambdas_.size(); }
    const Eigen::VectorXd& lambdas() const noexcept { return lambdas_; }
    const Eigen::VectorXd& deltas() const noexcept { return deltas_; }
    /// Permutation listing node indices by non-increasing delta (ties by index).
    const std::vector<Eigen::Index>& order() const noexcept { return order_; }

private:
    Eigen::VectorXd lambdas_;
    Eigen::VectorXd deltas_;
    std::vector<Eigen::Index> order_;
};

NodeSystem compute_deltas(std::span<const double> lambdas);

/// Phi(a) = sum_{m != n} a_m conj(a_n) / (lambda_m - lambda_n); purely imaginary.
std::complex<double> bilinear_form(const NodeSystem& nodes, const CoefficientVector& a);

/// sum_n |a_n|^2 / delta_n
double weighted_norm(const NodeSystem& nodes, const CoefficientVector& a);

/// C * weighted_norm - |Phi(a)|; nonnegative iff the inequality holds for a.
double verify_inequality(const NodeSystem& nodes, const CoefficientVector& a, double C);

/// The scaled antisymmetric matrix A_nm = sqrt(delta_n delta_m)/(lambda_m - lambda_n).
Eigen::MatrixXd scaled_form_matrix(const NodeSystem& nodes);

struct SpectralOptions {
    double tol = 1e-12;
    int max_iterations = 100'000;
    std::uint64_t seed = 0x5eed;
    /// Above this size A is applied matrix-free instead of being stored.
    Eigen::Index dense_threshold = 512;
    int max_restarts = 5;
};

struct SpectralEstimate {
    double constant = 0.0;
    int iterations = 0;
    /// Bound on |constant - nearest singular value| from ||A^T A v - rho v||.
    double residual = 0.0;
    int restarts = 0;
    CoefficientVector witness;
};

class MaxIterationsError : public std::runtime_error {
public:
    MaxIterationsError(const std::string& what, SpectralEstimate best)
        : std::runtime_error(what), best_(std::move(best)) {}
    const SpectralEstimate& best() const noexcept { return best_; }

private:
    SpectralEstimate best_;
};

/// Sharp constant sup |Phi(a)| / weighted_norm(a) by power iteration on W^2 = A^T A.
SpectralEstimate sharp_constant(const NodeSystem& nodes, const SpectralOptions& options = {});

enum class TelescopingMajorant { M, BeurlingB };

struct TelescopingValue {
    double value = 0.0;
    double imag_residue = 0.0;
    double err_estimate = 0.0;  ///< propagated transform error (Beurling only)
};

/// Frequency-domain telescoping sum
///   S = sum_j sum_{m,n >= j} a_m conj(a_n) [psi^_{delta_j} - psi^_{delta_{j-1}}](lambda_m - lambda_n),
/// indices taken in NodeSystem::order() and psi^_{delta_0} = 0. For M the
/// closed-form transform is used and |Im S| <= 1e-8 is asserted; for B the
/// numeric transform is used and the imaginary residue is reported.
TelescopingValue telescoping_sum(const NodeSystem& nodes, const CoefficientVector& a,
                                 TelescopingMajorant majorant, double transform_tol = 1e-8);

/// -Phi(a)/(pi i) + 2 sum |a_n|^2/delta_n, the collapsed value of the M sum.
double telescoping_identity(const NodeSystem& nodes, const CoefficientVector& a);

}  // namespace extremal::hilbert

#endif  // EXTREMAL_HILBERT_HPP
