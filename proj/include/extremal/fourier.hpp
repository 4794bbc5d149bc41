#ifndef EXTREMAL_FOURIER_HPP
#define EXTREMAL_FOURIER_HPP

// Fourier transforms with the convention f^(t) = int f(x) e^{-2 pi i x t} dx.
//
// Closed forms (|t| <= 1, zero / band formula outside):
//   g^(t)   = (1 - |t|) e^{2 pi i t} + sgn(t) (e^{2 pi i t} - 1)/(2 pi i)
//   psi^(t) = (g^(t) - 1)/(pi i t),  psi^(0) = 2,  psi^(t) = -1/(pi i t) for |t| >= 1

#include <complex>
#include <span>

#include "extremal/quad.hpp"
#include "extremal/tails.hpp"

namespace extremal::fourier {

std::complex<double> g_hat(double t);
std::complex<double> psi_hat(double t);
/// Transform of psi(delta x): psi^(t/delta)/delta.
std::complex<double> psi_hat_scaled(double delta, double t);

/// -1/(pi i t), the common value of every transform above on |t| >= 1.
std::complex<double> band_value(double t);

enum class Transformable { g, psi, psi_beurling };

struct TransformValue {
    double t = 0.0;
    std::complex<double> value;
    double err_estimate = 0.0;
};

/// Numerical transform of one of the kernels: Filon quadrature on [-T, T]
/// plus the analytic tail model. The table is built once per instance and is
/// read-only afterwards, so one instance can serve concurrent callers.
class NumericTransform {
public:
    explicit NumericTransform(Transformable kind, double max_cutoff = 1e4);

    /// Throws quad::BudgetExceeded when the estimate cannot reach tol even at
    /// the largest cut-off.
    TransformValue operator()(double t, double tol) const;

    Transformable kind() const noexcept { return kind_; }
    double max_cutoff() const noexcept { return table_.half_width(); }

private:
    Transformable kind_;
    quad::tails::TailModel tails_;
    quad::FilonTable table_;
};

/// Process-wide shared instance per kind, built on first use.
const NumericTransform& shared_transform(Transformable kind);

/// numeric_ft through the shared instance; tol >= 1e-8.
TransformValue numeric_ft(Transformable kind, double t, double tol);

/// max over the samples of |numeric_ft(kind, t) + 1/(pi i t)|; all |t| >= 1.
double band_limit_check(Transformable kind, std::span<const double> t_samples, double tol = 1e-7);

}  // namespace extremal::fourier

#endif  // EXTREMAL_FOURIER_HPP
