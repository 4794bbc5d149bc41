#include "extremal/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "extremal/quad.hpp"
#include "extremal/specfun.hpp"
#include "extremal/tails.hpp"

namespace extremal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

void check_tol(double tol)
{
    if (!(tol >= 1e-12 && tol <= 1e-4))
        throw std::domain_error("eval_G: tolerance must lie in [1e-12, 1e-4]");
}

// Antiderivative of sin^2(pi u) / (u (u+1)^2):
//   F(u) = Cin(2 pi |u|)/2 - Cin(2 pi |u+1|)/2 + sin^2(pi v)/v - pi Si(2 pi v),  v = u + 1,
// continuous on the whole line with F(-inf) = pi^2/2, so G(x) = 1/2 - F(x)/pi^2.
double closed_form_G(double x)
{
    using namespace specfun;
    const double v = x + 1.0;
    const double au = 2.0 * kPi * std::abs(x);
    const double av = 2.0 * kPi * std::abs(v);
    double cin_diff;
    if (au > detail::kSeriesSwitch && av > detail::kSeriesSwitch) {
        // The Euler constants cancel, leaving log|u| - log|u+1|.
        const double log_ratio = (x > 0.0 || x < -1.0) ? -std::log1p(1.0 / x)
                                                       : std::log(std::abs(x) / std::abs(v));
        cin_diff = log_ratio - cosine_integral(au) + cosine_integral(av);
    } else {
        cin_diff = cin(au) - cin(av);
    }
    const double s = sinc(v);
    const double F = 0.5 * cin_diff + kPi2 * v * s * s - kPi * sine_integral(2.0 * kPi * v);
    return 0.5 - F / kPi2;
}

// For |x| >= 4 the same antiderivative measured from the nearer end,
//   G(x) - x_+^0 = -D(x)/pi^2,
//   D = cin_diff/2 + sin^2(pi v)/v - sgn(v) pi Im E1(2 pi i |v|),
// where every term is O(1/|x|) and carries relative accuracy.
constexpr double kFarField = 4.0;

double far_field_offset(double x)
{
    using namespace specfun;
    const double v = x + 1.0;
    const auto eu = e1_imaginary(2.0 * kPi * std::abs(x));
    const auto ev = e1_imaginary(2.0 * kPi * std::abs(v));
    // Re E1(i y) = -Ci(y)
    const double cin_diff = -std::log1p(1.0 / x) + eu.real() - ev.real();
    const double s = sin_pi(v);
    const double D = 0.5 * cin_diff + s * s / v - (v > 0.0 ? 1.0 : -1.0) * kPi * ev.imag();
    return -D / kPi2;
}

double closed_form_offset(double x)
{
    if (std::abs(x) >= kFarField)
        return far_field_offset(x);
    return closed_form_G(x) - heaviside(x);
}

GValue quadrature_G(double x, double tol)
{
    using quad::tails::side_contribution;
    static const quad::tails::TailModel model = quad::tails::model_for(quad::TailKernel::g);

    // Left tail remainder is about 1/(4 pi^3 T^3); pick T so it uses a quarter of tol.
    double T = std::max(10.0, std::ceil(std::cbrt(1.0 / (kPi * kPi2 * tol))));
    while (side_contribution(model.negative, T, 0.0).err_estimate > 0.25 * tol)
        T *= 2.0;

    if (x <= -T) {
        const auto tail = side_contribution(model.negative, -x, 0.0);
        return {tail.value.real(), tail.err_estimate};
    }
    const auto g = [](double u) { return eval_kernel(Kernel::g, u); };
    const auto left = side_contribution(model.negative, T, 0.0);
    const auto body = quad::integrate_adaptive(g, -T, std::min(x, T), 0.5 * tol);
    double value = left.value.real() + body.value;
    double err = left.err_estimate + body.err_estimate;
    if (x > T) {
        // int_T^x g = int_T^inf g - int_x^inf g
        const auto from_T = side_contribution(model.positive, T, 0.0);
        const auto from_x = side_contribution(model.positive, x, 0.0);
        value += from_T.value.real() - from_x.value.real();
        err += from_T.err_estimate + from_x.err_estimate;
    }
    return {value, err};
}

}  // namespace

double sgn(double x) noexcept
{
    return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
}

double heaviside(double x) noexcept
{
    return x >= 0.0 ? 1.0 : 0.0;
}

double eval_kernel(Kernel kind, double u)
{
    specfun::require_finite(u, "eval_kernel");
    using specfun::sinc;
    const double v = u + 1.0;
    switch (kind) {
    case Kernel::g:
        // Both forms are exact rewrites; each avoids the 0/0 at one removable point.
        if (std::abs(v) < 0.5) {
            const double s = sinc(v);
            return -s * s / u;
        } else {
            const double s = sinc(u);
            return -u * s * s / (v * v);
        }
    case Kernel::H: {
        const double s = sinc(v);
        return s * s;
    }
    case Kernel::h:
        return std::abs(v) < 0.5 ? -sinc(v) / u : sinc(u) / v;
    }
    throw std::invalid_argument("eval_kernel: unknown kernel");
}

GValue eval_G_detailed(double x, double tol, GStrategy strategy)
{
    specfun::require_finite(x, "eval_G");
    check_tol(tol);
    GValue result;
    if (strategy == GStrategy::ClosedForm)
        result = {std::abs(x) >= kFarField ? heaviside(x) + far_field_offset(x) : closed_form_G(x),
                  kClosedFormAccuracy};
    else
        result = quadrature_G(x, tol);
    if (result.err_estimate > tol)
        throw ToleranceNotMet("eval_G: requested tolerance not reached", result.value,
                              result.err_estimate);
    return result;
}

double eval_G(double x, double tol, GStrategy strategy)
{
    return eval_G_detailed(x, tol, strategy).value;
}

double eval_majorant(Majorant kind, double x, double tol, GStrategy strategy)
{
    specfun::require_finite(x, "eval_majorant");
    switch (kind) {
    case Majorant::G:
        return eval_G(x, tol, strategy);
    case Majorant::M:
        return 2.0 * eval_G(x, tol, strategy) - 1.0;
    case Majorant::BeurlingB:
        return beurling_deficit(x) + sgn(x);
    case Majorant::MinorantOfSgn:
        return -(2.0 * eval_G(-x, tol, strategy) - 1.0);
    }
    throw std::invalid_argument("eval_majorant: unknown kind");
}

double eval_deficit(Deficit which, double x, double tol, GStrategy strategy)
{
    specfun::require_finite(x, "eval_deficit");
    const double y = which == Deficit::psi ? x : -x;
    // M - sgn = 2(G - x_+^0) away from 0; at 0 it is 2G - 1.
    const double offset = eval_heaviside_deficit(y, tol, strategy);
    return y == 0.0 ? 2.0 * offset + 1.0 : 2.0 * offset;
}

double eval_heaviside_deficit(double x, double tol, GStrategy strategy)
{
    specfun::require_finite(x, "eval_heaviside_deficit");
    if (strategy == GStrategy::ClosedForm) {
        check_tol(tol);
        return closed_form_offset(x);
    }
    return eval_G(x, tol, strategy) - heaviside(x);
}

// With the reflection psi_1(-x) = pi^2/sin^2(pi x) - psi_1(1+x) the two series
// of B collapse to a single trigamma at an argument >= 1:
//   x > 0:  B - 1 = (2 sin^2(pi x)/pi^2) (1/x - psi_1(1+x))
//   x < 0:  B + 1 = (2 sin^2(pi x)/pi^2) (1/x^2 - 1/|x| + psi_1(1+|x|))
// Near 0 the sin^2/x factors are rewritten through sinc.
double beurling_deficit(double x)
{
    specfun::require_finite(x, "beurling_deficit");
    using specfun::sinc;
    using specfun::trigamma;
    if (x == 0.0)
        return 1.0;
    const double y = std::abs(x);
    const double s = specfun::sin_pi(y);
    const double weight = 2.0 * s * s / kPi2;
    if (x > 0.0) {
        if (y < 1.0) {
            const double sc = sinc(y);
            return 2.0 * y * sc * sc - weight * trigamma(1.0 + y);
        }
        return weight * (1.0 / y - trigamma(1.0 + y));
    }
    if (y < 1.0) {
        const double sc = sinc(y);
        return 2.0 * (1.0 - y) * sc * sc + weight * trigamma(1.0 + y);
    }
    return weight * (1.0 / (y * y) - 1.0 / y + trigamma(1.0 + y));
}

}  // namespace extremal
