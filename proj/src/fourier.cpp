#include "extremal/fourier.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "extremal/extremal.hpp"
#include "extremal/specfun.hpp"

namespace extremal::fourier {

namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> kTwoPiI(0.0, 2.0 * kPi);

quad::TailKernel tail_kernel(Transformable kind)
{
    switch (kind) {
    case Transformable::g:
        return quad::TailKernel::g;
    case Transformable::psi:
        return quad::TailKernel::psi;
    case Transformable::psi_beurling:
        return quad::TailKernel::psi_beurling;
    }
    throw std::invalid_argument("unknown transformable kind");
}

quad::Integrand integrand(Transformable kind)
{
    switch (kind) {
    case Transformable::g:
        return [](double x) { return eval_kernel(Kernel::g, x); };
    case Transformable::psi:
        return [](double x) { return eval_deficit(Deficit::psi, x); };
    case Transformable::psi_beurling:
        return [](double x) { return beurling_deficit(x); };
    }
    throw std::invalid_argument("unknown transformable kind");
}

// e^{2 pi i t} and e^{2 pi i t} - 1 without cancellation.
void rotation(double t, std::complex<double>& e, std::complex<double>& em1)
{
    const double s = specfun::sin_pi(t);
    const double c = specfun::cos_pi(t);
    e = {c * c - s * s, 2.0 * s * c};
    em1 = std::complex<double>(0.0, 2.0 * s) * std::complex<double>(c, s);
}

}  // namespace

std::complex<double> band_value(double t)
{
    return {0.0, 1.0 / (kPi * t)};
}

std::complex<double> g_hat(double t)
{
    specfun::require_finite(t, "g_hat");
    if (std::abs(t) >= 1.0)
        return {0.0, 0.0};
    std::complex<double> e, em1;
    rotation(t, e, em1);
    return (1.0 - std::abs(t)) * e + sgn(t) * em1 / kTwoPiI;
}

std::complex<double> psi_hat(double t)
{
    specfun::require_finite(t, "psi_hat");
    if (t == 0.0)
        return {2.0, 0.0};
    if (std::abs(t) >= 1.0)
        return band_value(t);
    const double at = std::abs(t);
    std::complex<double> value;
    if (at < 1e-5) {
        // (g^(t) - 1)/(pi i t) = 2 + (a - 1) t + (a^2/3 - 2a/3) t^2 + O(t^3), a = 2 pi i, t > 0
        const std::complex<double> a = kTwoPiI;
        value = 2.0 + (a - 1.0) * at + (a * a / 3.0 - 2.0 * a / 3.0) * at * at;
    } else {
        std::complex<double> e, em1;
        rotation(at, e, em1);
        const std::complex<double> gm1 = em1 * (1.0 + 1.0 / kTwoPiI) - at * e;
        value = gm1 / std::complex<double>(0.0, kPi * at);
    }
    return t > 0.0 ? value : std::conj(value);
}

std::complex<double> psi_hat_scaled(double delta, double t)
{
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw std::domain_error("psi_hat_scaled: delta must be positive and finite");
    return psi_hat(t / delta) / delta;
}

NumericTransform::NumericTransform(Transformable kind, double max_cutoff)
    : kind_(kind), tails_(quad::tails::model_for(tail_kernel(kind))),
      table_(integrand(kind), max_cutoff)
{
}

TransformValue NumericTransform::operator()(double t, double tol) const
{
    specfun::require_finite(t, "numeric_ft");
    if (!(tol >= 1e-8))
        throw std::domain_error("numeric_ft: tolerance must be >= 1e-8");
    const double max_cut = table_.half_width();
    // Smallest cut-off on the ladder 16, 32, ... whose tail bound fits half of tol.
    double cutoff = std::min(16.0, max_cut);
    auto tail = quad::tails::both_tails(tails_, cutoff, t);
    while (tail.err_estimate > 0.5 * tol && cutoff < max_cut) {
        cutoff = std::min(2.0 * cutoff, max_cut);
        tail = quad::tails::both_tails(tails_, cutoff, t);
    }
    const auto body = table_.transform(t, cutoff);
    TransformValue out{t, body.value + tail.value, body.err_estimate + tail.err_estimate};
    if (out.err_estimate > tol) {
        std::ostringstream msg;
        msg << "numeric_ft: error estimate " << out.err_estimate << " exceeds tolerance " << tol
            << " at t = " << t;
        throw quad::BudgetExceeded(msg.str(), {std::abs(out.value), out.err_estimate, 0});
    }
    return out;
}

const NumericTransform& shared_transform(Transformable kind)
{
    static std::once_flag flags[3];
    static std::unique_ptr<NumericTransform> instances[3];
    const auto index = static_cast<std::size_t>(kind);
    std::call_once(flags[index], [&] { instances[index] = std::make_unique<NumericTransform>(kind); });
    return *instances[index];
}

TransformValue numeric_ft(Transformable kind, double t, double tol)
{
    return shared_transform(kind)(t, tol);
}

double band_limit_check(Transformable kind, std::span<const double> t_samples, double tol)
{
    double worst = 0.0;
    for (const double t : t_samples) {
        if (!(std::abs(t) >= 1.0))
            throw std::domain_error("band_limit_check: samples must satisfy |t| >= 1");
        const auto value = numeric_ft(kind, t, tol);
        worst = std::max(worst, std::abs(value.value - band_value(t)));
    }
    return worst;
}

}  // namespace extremal::fourier
