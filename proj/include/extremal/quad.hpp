#ifndef EXTREMAL_QUAD_HPP
#define EXTREMAL_QUAD_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace extremal::quad {

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// Evaluation budget exhausted; carries the best result reached so far.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, QuadResult best)
        : std::runtime_error(what), best_(best) {}
    const QuadResult& best() const noexcept { return best_; }

private:
    QuadResult best_;
};

struct AdaptiveOptions {
    /// Width of the initial panels; 1/2 keeps one arch of sin^2(pi u) per panel.
    double panel_width = 0.5;
    std::size_t max_evaluations = 10'000'000;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on [a, b].
///
/// Starts from equal panels no wider than options.panel_width and bisects the
/// panel with the largest error until the summed estimate drops below tol.
/// Panels are summed in left-to-right order, so results are deterministic.
QuadResult integrate_adaptive(const Integrand& f, double a, double b, double tol,
                              const AdaptiveOptions& options = {});

enum class TailKernel { g, H, psi, G_minus_heaviside, psi_beurling };

/// Full-line integral: adaptive quadrature on [-T, T] plus analytic tail
/// contributions on |x| > T. T = 1e4 for tol >= 1e-8, growing as tol^{-1/2}.
QuadResult integrate_with_tails(TailKernel kernel, double tol);

enum class HalfLine { negative, positive };

/// Integral over (-inf, 0] or [0, inf) with the same tail treatment.
QuadResult integrate_half_line(TailKernel kernel, HalfLine side, double tol);

/// Cut-off used by integrate_with_tails for a given tolerance.
double full_line_cutoff(double tol);

enum class PoissonKernel { g, H };

struct PoissonCheck {
    double sum = 0.0;  ///< sum_{|n| <= truncation} kernel(n)
    QuadResult integral;
};

PoissonCheck poisson_check(PoissonKernel kernel, int truncation);

struct OscillatoryResult {
    std::complex<double> value;
    double err_estimate = 0.0;
};

/// Filon-type table for int f(x) e^{-2 pi i x t} dx over [-half_width, half_width].
///
/// f is sampled once at Gauss-Legendre nodes on every panel and expanded in
/// Legendre polynomials; each panel moment against the exponential is exact,
///   int_{-1}^{1} P_k(s) e^{-i kappa s} ds = 2 (-i)^k j_k(kappa),
/// so a new frequency costs one pass over the stored coefficients. Panel
/// boundaries fall on multiples of panel_width, so jumps of f at 0 are honored.
class FilonTable {
public:
    FilonTable(const Integrand& f, double half_width, double panel_width = 0.5, int degree = 16);

    /// Transform restricted to |x| <= cutoff (rounded down to the panel grid).
    OscillatoryResult transform(double t, double cutoff) const;
    OscillatoryResult transform(double t) const { return transform(t, half_width_); }

    double half_width() const noexcept { return half_width_; }
    double panel_width() const noexcept { return panel_width_; }
    std::size_t panel_count() const noexcept { return panel_count_; }

private:
    double half_width_;
    double panel_width_;
    int degree_;
    std::size_t panel_count_;
    std::vector<double> coefficients_;  // panel-major, degree_ entries per panel
    std::vector<double> panel_error_;   // size of the two highest coefficients
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace extremal::quad

#endif  // EXTREMAL_QUAD_HPP
