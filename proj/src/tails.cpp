#include "extremal/tails.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "extremal/extremal.hpp"
#include "extremal/specfun.hpp"

namespace extremal::quad::tails {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
constexpr double kPi3 = kPi2 * kPi;

TailSide sin_squared(std::function<double(double)> r, std::function<double(double)> R,
                     double leading = 0.0)
{
    return {TailSide::Form::SinSquared, std::move(r),
            [R = std::move(R)](double T) { return Interval{R(T), 0.0}; }, leading};
}

// E1(i x) for x > 0.
std::complex<double> e1_imaginary_axis(double x)
{
    using namespace specfun;
    if (x > detail::kSeriesSwitch)
        return e1_imaginary(x);
    return {-std::numbers::egamma - std::log(x) + cin(x), sine_integral(x) - kPi / 2.0};
}

// int_T^inf e^{-i nu y} / y^2 dy = E2(i nu T) / T,  E2(z) = e^{-z} - z E1(z).
std::complex<double> inverse_square_transform(double T, double nu)
{
    const double x = std::abs(nu) * T;
    const std::complex<double> z(0.0, x);
    const std::complex<double> e2 = std::exp(-z) - z * e1_imaginary_axis(x);
    return (nu > 0.0 ? e2 : std::conj(e2)) / T;
}

// r = |g| envelopes:  g(y) = -sin^2(pi y)/(pi^2 y (y+1)^2),  g(-y) = sin^2(pi y)/(pi^2 y (y-1)^2)
//   int_T^inf dy/(y(y+1)^2) = log1p(1/T) - 1/(T+1)
//   int_T^inf dy/(y(y-1)^2) = 1/(T-1) + log1p(-1/T)
TailModel g_model()
{
    return {sin_squared([](double y) { return 1.0 / (kPi2 * y * (y - 1.0) * (y - 1.0)); },
                        [](double T) { return (1.0 / (T - 1.0) + std::log1p(-1.0 / T)) / kPi2; }),
            sin_squared([](double y) { return -1.0 / (kPi2 * y * (y + 1.0) * (y + 1.0)); },
                        [](double T) { return -(std::log1p(1.0 / T) - 1.0 / (T + 1.0)) / kPi2; })};
}

// H(y) = sin^2(pi y)/(pi^2 (y+1)^2), H(-y) = sin^2(pi y)/(pi^2 (y-1)^2).
TailModel H_model()
{
    return {sin_squared([](double y) { return 1.0 / (kPi2 * (y - 1.0) * (y - 1.0)); },
                        [](double T) { return 1.0 / (kPi2 * (T - 1.0)); }, 1.0 / kPi2),
            sin_squared([](double y) { return 1.0 / (kPi2 * (y + 1.0) * (y + 1.0)); },
                        [](double T) { return 1.0 / (kPi2 * (T + 1.0)); }, 1.0 / kPi2)};
}

// psi is monotone in |x|. By Fubini
//   int_T^inf psi(y) dy  = (2/pi^2) int_T^inf sin^2(pi u) (u-T)/(u(u+1)^2) du
//   int_T^inf psi(-y) dy = (2/pi^2) int_T^inf sin^2(pi u) (u-T)/(u(u-1)^2) du.
// The sin^2 -> 1/2 part integrates to (1 - T log1p(1/T))/pi^2 and
// (-1 - T log1p(-1/T))/pi^2. The cos(2 pi u) remainder is at most
// (1/pi^2)(1/2pi) * total variation of (u-T)/(u(u+-1)^2) <= 1/(pi^3 (T+-1)^2),
// using (u-T)/(u(u+-1)^2) <= 1/(u+-1)^2.
TailModel psi_model(double scale)
{
    TailSide neg{TailSide::Form::Monotone,
                 [scale](double y) { return scale * eval_deficit(Deficit::psi, -y); },
                 [scale](double T) {
                     return Interval{scale * (-1.0 - T * std::log1p(-1.0 / T)) / kPi2,
                                     scale / (kPi3 * (T - 1.0) * (T - 1.0))};
                 }};
    TailSide pos{TailSide::Form::Monotone,
                 [scale](double y) { return scale * eval_deficit(Deficit::psi, y); },
                 [scale](double T) {
                     return Interval{scale * (1.0 - T * std::log1p(1.0 / T)) / kPi2,
                                     scale / (kPi3 * (T + 1.0) * (T + 1.0))};
                 }};
    return {std::move(neg), std::move(pos)};
}

// Beurling deficit:  psi_B(y)  = sin^2(pi y) (2/pi^2)(1/y - psi_1(1+y))
//                    psi_B(-y) = sin^2(pi y) (2/pi^2)(psi_1(1+y) - 1/y + 1/y^2)
// with int (1/y - psi_1(1+y)) dy = log y - psi(1+y). Both envelopes are
// 1/(pi^2 y^2) -+ 1/(3 pi^2 y^3) + O(y^-5).
TailModel beurling_model()
{
    using specfun::digamma_shift_minus_log;
    using specfun::trigamma;
    return {sin_squared(
                [](double y) { return 2.0 / kPi2 * (trigamma(1.0 + y) - 1.0 / y + 1.0 / (y * y)); },
                [](double T) { return 2.0 / kPi2 * (1.0 / T - digamma_shift_minus_log(T)); },
                1.0 / kPi2),
            sin_squared([](double y) { return 2.0 / kPi2 * (1.0 / y - trigamma(1.0 + y)); },
                        [](double T) { return 2.0 / kPi2 * digamma_shift_minus_log(T); }, 1.0 / kPi2)};
}

struct Component {
    double weight;
    double shift;  // nu' = nu - shift
};

}  // namespace

TailModel model_for(TailKernel kernel)
{
    switch (kernel) {
    case TailKernel::g:
        return g_model();
    case TailKernel::H:
        return H_model();
    case TailKernel::psi:
        return psi_model(1.0);
    case TailKernel::G_minus_heaviside:
        return psi_model(0.5);
    case TailKernel::psi_beurling:
        return beurling_model();
    }
    throw std::invalid_argument("model_for: unknown kernel");
}

OscillatoryResult side_contribution(const TailSide& side, double T, double nu)
{
    if (!(T >= 2.0))
        throw std::domain_error("side_contribution: tail cut-off must be >= 2");
    const Interval R = side.envelope_integral(T);
    const double rT = side.envelope(T);
    // Remainder after the exactly integrated leading term.
    const double qT = rT - side.leading / (T * T);
    const double QT = R.value - side.leading / T;

    // sin^2(pi y) = 1/2 - e^{2 pi i y}/4 - e^{-2 pi i y}/4
    std::array<Component, 3> components{};
    std::size_t count = 0;
    if (side.form == TailSide::Form::SinSquared) {
        components = {Component{0.5, 0.0}, Component{-0.25, 2.0 * kPi}, Component{-0.25, -2.0 * kPi}};
        count = 3;
    } else {
        components[0] = Component{1.0, 0.0};
        count = 1;
    }

    OscillatoryResult out{{0.0, 0.0}, 0.0};
    for (std::size_t c = 0; c < count; ++c) {
        const double w = components[c].weight;
        const double nu_c = nu - components[c].shift;
        if (nu_c == 0.0) {
            out.value += w * R.value;
            out.err_estimate += std::abs(w) * R.err;
            continue;
        }
        if (side.leading != 0.0)
            out.value += w * side.leading * inverse_square_transform(T, nu_c);
        const double bound = std::abs(w * qT / nu_c);
        const double whole = std::abs(w) * (std::abs(QT) + R.err);
        if (bound < whole) {
            // q(T) e^{-i nu' T} / (i nu'); the phase is reduced in cycles.
            const std::complex<double> phase = specfun::unit_phase(nu_c / (2.0 * kPi), T);
            out.value += w * qT * phase / std::complex<double>(0.0, nu_c);
            out.err_estimate += bound;
        } else {
            out.err_estimate += whole;
        }
    }
    return out;
}

OscillatoryResult both_tails(const TailModel& model, double T, double t)
{
    const double nu = 2.0 * kPi * t;
    // x = y on the right; x = -y on the left turns e^{-i nu x} into e^{+i nu y}.
    const auto right = side_contribution(model.positive, T, nu);
    const auto left = side_contribution(model.negative, T, -nu);
    return {right.value + left.value, right.err_estimate + left.err_estimate};
}

}  // namespace extremal::quad::tails
