#ifndef EXTREMAL_EXTREMAL_HPP
#define EXTREMAL_EXTREMAL_HPP

// Real-axis evaluation of the monotone extremal majorant of sgn(x), its
// Heaviside version G, Beurling's majorant B and the associated deficits.
//
//   g(u) = -sin^2(pi u) / (pi^2 u (u+1)^2)      G' = g, G(-inf) = 0
//   H(u) = -u g(u) = sinc^2(u+1)                 H >= 0
//   h(u) = sinc(u)/(u+1)                         g = -u h^2
//   M    = 2G - 1                                majorant of sgn
//   B(x) = (sin pi x / pi)^2 (sum_{n>=0} (x-n)^-2 - sum_{m<=-1} (x-m)^-2 + 2/x)

#include <stdexcept>
#include <string>

namespace extremal {

enum class Kernel { g, H, h };
enum class Majorant { G, M, BeurlingB, MinorantOfSgn };
enum class Deficit { psi, phi };

/// How G is evaluated.
///  ClosedForm: antiderivative of the partial-fraction split
///    1/(u(u+1)^2) = 1/u - 1/(u+1) - 1/(u+1)^2 through Si and Cin.
///  Quadrature: adaptive quadrature on [-T, x] plus an analytic tail interval.
enum class GStrategy { ClosedForm, Quadrature };

/// Raised when an evaluation cannot certify the requested tolerance.
class ToleranceNotMet : public std::runtime_error {
public:
    ToleranceNotMet(const std::string& what, double value, double achieved)
        : std::runtime_error(what), value_(value), achieved_(achieved) {}
    double value() const noexcept { return value_; }
    double achieved() const noexcept { return achieved_; }

private:
    double value_;
    double achieved_;
};

/// sgn with sgn(0) = 0.
double sgn(double x) noexcept;
/// Upper semi-continuous Heaviside step: 1 for x >= 0, 0 otherwise.
double heaviside(double x) noexcept;

double eval_kernel(Kernel kind, double u);

struct GValue {
    double value;
    double err_estimate;
};

/// G(x) = int_{-inf}^x g(u) du with an error estimate. tol must lie in [1e-12, 1e-4].
GValue eval_G_detailed(double x, double tol = 1e-12, GStrategy strategy = GStrategy::ClosedForm);
double eval_G(double x, double tol = 1e-12, GStrategy strategy = GStrategy::ClosedForm);

double eval_majorant(Majorant kind, double x, double tol = 1e-12,
                     GStrategy strategy = GStrategy::ClosedForm);

/// G(x) - x_+^0, computed without cancelling against the step for large |x|.
double eval_heaviside_deficit(double x, double tol = 1e-12,
                              GStrategy strategy = GStrategy::ClosedForm);

/// psi(x) = M(x) - sgn(x), phi(x) = sgn(x) + M(-x) = psi(-x).
double eval_deficit(Deficit which, double x, double tol = 1e-12,
                    GStrategy strategy = GStrategy::ClosedForm);

/// B(x) - sgn(x) >= 0, evaluated without the trigamma pole cancellations.
double beurling_deficit(double x);

/// Accuracy of the closed-form route for G (absolute).
inline constexpr double kClosedFormAccuracy = 1e-14;

}  // namespace extremal

#endif  // EXTREMAL_EXTREMAL_HPP
