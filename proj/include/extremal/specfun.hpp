#ifndef EXTREMAL_SPECFUN_HPP
#define EXTREMAL_SPECFUN_HPP

// Scalar special functions shared by every other module. All functions are
// pure and templated on the floating-point type.

#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace extremal::specfun {

template <std::floating_point Scalar>
void require_finite(Scalar x, const char* where)
{
    if (!std::isfinite(x))
        throw std::domain_error(std::string(where) + ": argument is not finite");
}

/// sin(pi x) with exact argument reduction, so sin_pi(n) == 0 for every integer n.
template <std::floating_point Scalar>
Scalar sin_pi(Scalar x)
{
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar r = x - Scalar(2) * std::nearbyint(x / Scalar(2));  // r in [-1, 1], exact
    if (r > Scalar(0.5))
        return std::sin(pi * (Scalar(1) - r));
    if (r < Scalar(-0.5))
        return -std::sin(pi * (Scalar(1) + r));
    return std::sin(pi * r);
}

/// cos(pi x) with exact argument reduction.
template <std::floating_point Scalar>
Scalar cos_pi(Scalar x)
{
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar a = std::abs(x - Scalar(2) * std::nearbyint(x / Scalar(2)));  // a in [0, 1]
    if (a <= Scalar(0.25))
        return std::cos(pi * a);
    if (a <= Scalar(0.75))
        return std::sin(pi * (Scalar(0.5) - a));
    return -std::cos(pi * (Scalar(1) - a));
}

/// e^{-2 pi i a b}, with the product a*b reduced modulo 1 before the
/// trigonometric call so large phases keep full precision.
template <std::floating_point Scalar>
std::complex<Scalar> unit_phase(Scalar a, Scalar b)
{
    const Scalar p = a * b;
    const Scalar e = std::fma(a, b, -p);
    const Scalar frac = (p - std::nearbyint(p)) + e;
    return {cos_pi(Scalar(2) * frac), -sin_pi(Scalar(2) * frac)};
}

/// Normalized sinc, sin(pi x)/(pi x).
template <std::floating_point Scalar>
Scalar sinc(Scalar x)
{
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    require_finite(x, "sinc");
    if (std::abs(x) < Scalar(1e-4)) {
        const Scalar y = (pi * x) * (pi * x);
        return Scalar(1) - y / Scalar(6) + y * y / Scalar(120) - y * y * y / Scalar(5040);
    }
    return sin_pi(x) / (pi * x);
}

/// Fejer triangle (1 - |t|)_+, the Fourier transform of sinc^2.
template <std::floating_point Scalar>
Scalar triangle(Scalar t)
{
    return std::max(Scalar(1) - std::abs(t), Scalar(0));
}

/// Trigamma psi_1(x) = sum_{k>=0} 1/(x+k)^2 for x > 0.
///
/// Upward recurrence psi_1(x) = psi_1(x+1) + 1/x^2 until x >= 10, then the
/// Bernoulli asymptotic series through x^{-15}.
template <std::floating_point Scalar>
Scalar trigamma(Scalar x)
{
    if (!(x > Scalar(0)) || !std::isfinite(x))
        throw std::domain_error("trigamma: argument must be finite and positive");
    Scalar head = 0;
    while (x < Scalar(10)) {
        head += Scalar(1) / (x * x);
        x += Scalar(1);
    }
    const Scalar inv = Scalar(1) / x;
    const Scalar z = inv * inv;
    const Scalar series =
        Scalar(1) / Scalar(6) +
        z * (Scalar(-1) / Scalar(30) +
             z * (Scalar(1) / Scalar(42) +
                  z * (Scalar(-1) / Scalar(30) +
                       z * (Scalar(5) / Scalar(66) + z * (Scalar(-691) / Scalar(2730) + z * (Scalar(7) / Scalar(6)))))));
    return head + inv + z / Scalar(2) + inv * z * series;
}

/// Digamma psi(x) for x > 0, same recurrence/asymptotic scheme as trigamma.
template <std::floating_point Scalar>
Scalar digamma(Scalar x)
{
    if (!(x > Scalar(0)) || !std::isfinite(x))
        throw std::domain_error("digamma: argument must be finite and positive");
    Scalar head = 0;
    while (x < Scalar(10)) {
        head -= Scalar(1) / x;
        x += Scalar(1);
    }
    const Scalar inv = Scalar(1) / x;
    const Scalar z = inv * inv;
    const Scalar series =
        Scalar(1) / Scalar(12) +
        z * (Scalar(-1) / Scalar(120) +
             z * (Scalar(1) / Scalar(252) +
                  z * (Scalar(-1) / Scalar(240) +
                       z * (Scalar(1) / Scalar(132) + z * (Scalar(-691) / Scalar(32760) + z * (Scalar(1) / Scalar(12)))))));
    return head + std::log(x) - inv / Scalar(2) - z * series;
}

/// psi(1 + x) - log(x) for x >= 10, summed directly from the asymptotic
/// series so the O(1/x) result carries no cancellation error.
template <std::floating_point Scalar>
Scalar digamma_shift_minus_log(Scalar x)
{
    if (!(x >= Scalar(10)))
        return digamma(Scalar(1) + x) - std::log(x);
    const Scalar inv = Scalar(1) / x;
    const Scalar z = inv * inv;
    const Scalar series =
        Scalar(1) / Scalar(12) +
        z * (Scalar(-1) / Scalar(120) +
             z * (Scalar(1) / Scalar(252) +
                  z * (Scalar(-1) / Scalar(240) +
                       z * (Scalar(1) / Scalar(132) + z * (Scalar(-691) / Scalar(32760) + z * (Scalar(1) / Scalar(12)))))));
    // psi(1+x) = psi(x) + 1/x and psi(x) - log x = -1/(2x) - z*series.
    return inv / Scalar(2) - z * series;
}

namespace detail {

/// E1(ix) = -Ci(x) + i (Si(x) - pi/2) for x > 2 by its continued fraction (Lentz).
/// Both parts keep full relative accuracy as x grows.
template <std::floating_point Scalar>
std::complex<Scalar> e1_imaginary(Scalar x)
{
    using C = std::complex<Scalar>;
    constexpr Scalar eps = std::numeric_limits<Scalar>::epsilon();
    constexpr Scalar tiny = std::numeric_limits<Scalar>::min() * Scalar(4);
    C b(Scalar(1), x);
    C c(Scalar(1) / tiny, Scalar(0));
    C d = Scalar(1) / b;
    C h = d;
    for (int i = 2; i < 1000; ++i) {
        const Scalar a = -Scalar(i - 1) * Scalar(i - 1);
        b += Scalar(2);
        d = Scalar(1) / (a * d + b);
        c = b + a / c;
        const C del = c * d;
        h *= del;
        if (std::abs(del.real() - Scalar(1)) + std::abs(del.imag()) < eps)
            break;
    }
    return h * C(std::cos(x), -std::sin(x));
}

template <std::floating_point Scalar>
void cisi_continued_fraction(Scalar x, Scalar& ci, Scalar& si)
{
    const std::complex<Scalar> e1 = e1_imaginary(x);
    ci = -e1.real();
    si = std::numbers::pi_v<Scalar> / Scalar(2) + e1.imag();
}

constexpr double kSeriesSwitch = 2.0;

}  // namespace detail

using detail::e1_imaginary;

/// Sine integral Si(x) = int_0^x sin(t)/t dt.
template <std::floating_point Scalar>
Scalar sine_integral(Scalar x)
{
    require_finite(x, "sine_integral");
    const Scalar ax = std::abs(x);
    Scalar result;
    if (ax <= Scalar(detail::kSeriesSwitch)) {
        const Scalar x2 = ax * ax;
        Scalar term = ax;  // x^{2k+1}/(2k+1)! with alternating sign
        Scalar sum = ax;
        for (int k = 0; k < 60; ++k) {
            term *= -x2 / (Scalar(2 * k + 2) * Scalar(2 * k + 3));
            const Scalar add = term / Scalar(2 * k + 3);
            sum += add;
            if (std::abs(add) <= std::numeric_limits<Scalar>::epsilon() * std::abs(sum))
                break;
        }
        result = sum;
    } else {
        Scalar ci;
        detail::cisi_continued_fraction(ax, ci, result);
    }
    return x < 0 ? -result : result;
}

/// Cosine integral Ci(x) for x > 0.
template <std::floating_point Scalar>
Scalar cosine_integral(Scalar x);

/// Entire cosine integral Cin(x) = int_0^x (1 - cos t)/t dt (even in x).
template <std::floating_point Scalar>
Scalar cin(Scalar x)
{
    require_finite(x, "cin");
    const Scalar ax = std::abs(x);
    if (ax <= Scalar(detail::kSeriesSwitch)) {
        const Scalar x2 = ax * ax;
        Scalar term = x2 / Scalar(2);  // x^{2k}/(2k)! with alternating sign, k = 1
        Scalar sum = term / Scalar(2);
        for (int k = 1; k < 60; ++k) {
            term *= -x2 / (Scalar(2 * k + 1) * Scalar(2 * k + 2));
            const Scalar add = term / Scalar(2 * k + 2);
            sum += add;
            if (std::abs(add) <= std::numeric_limits<Scalar>::epsilon() * std::abs(sum))
                break;
        }
        return sum;
    }
    Scalar ci, si;
    detail::cisi_continued_fraction(ax, ci, si);
    return std::numbers::egamma_v<Scalar> + std::log(ax) - ci;
}

template <std::floating_point Scalar>
Scalar cosine_integral(Scalar x)
{
    if (!(x > Scalar(0)) || !std::isfinite(x))
        throw std::domain_error("cosine_integral: argument must be finite and positive");
    if (x <= Scalar(detail::kSeriesSwitch))
        return std::numbers::egamma_v<Scalar> + std::log(x) - cin(x);
    Scalar ci, si;
    detail::cisi_continued_fraction(x, ci, si);
    return ci;
}

}  // namespace extremal::specfun

#endif  // EXTREMAL_SPECFUN_HPP
