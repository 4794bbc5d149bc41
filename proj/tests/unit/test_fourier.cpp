#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "extremal/fourier.hpp"
#include "extremal/quad.hpp"
#include "oracles.hpp"

using namespace extremal;
using namespace extremal::fourier;
using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TEST_CASE("g_hat special values")
{
    CHECK(std::abs(g_hat(0.0) - 1.0) <= 1e-15);
    CHECK(g_hat(-2.0) == cd(0.0, 0.0));
    CHECK(std::abs(g_hat(1.0)) <= 1e-15);
    CHECK(std::abs(g_hat(-1.0)) <= 1e-15);
    CHECK(std::abs(g_hat(0.5) - cd(-0.5, 1.0 / kPi)) <= 1e-15);
    for (const auto& p : oracle::kGHat)
        CHECK(std::abs(g_hat(p.t) - p.value) <= 1e-12);
}

TEST_CASE("g_hat derivative is 2 pi i e^{2 pi i t} triangle(t)")
{
    for (const double t : {-0.9, -0.4, -0.05, 0.05, 0.33, 0.8}) {
        const double h = 1e-6;
        const cd d = (g_hat(t + h) - g_hat(t - h)) / (2.0 * h);
        const cd expected = cd(0.0, 2.0 * kPi) * std::exp(cd(0.0, 2.0 * kPi * t)) * (1.0 - std::abs(t));
        CHECK(std::abs(d - expected) <= 1e-7);
    }
}

TEST_CASE("g_hat agrees with the numeric transform on random frequencies")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 50; ++i) {
        const double t = u(rng);
        const auto num = numeric_ft(Transformable::g, t, 1e-8);
        CHECK(std::abs(num.value - g_hat(t)) <= 1e-7);
    }
}

TEST_CASE("psi_hat values")
{
    CHECK(psi_hat(0.0) == cd(2.0, 0.0));
    CHECK(std::abs(psi_hat(2.0) - cd(0.0, 1.0 / (2.0 * kPi))) <= 1e-16);
    for (const double t : {1.0, 1.25, -3.5, 10.0})
        CHECK(std::abs(psi_hat(t) - band_value(t)) <= 1e-15);
}

TEST_CASE("psi_hat is Hermitian and continuous at the band edge and at zero")
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double t = u(rng);
        CHECK(std::abs(psi_hat(-t) - std::conj(psi_hat(t))) <= 1e-15);
    }
    for (const double edge : {-1.0, 1.0}) {
        const cd inside = psi_hat(edge * (1.0 - 1e-12));
        const cd outside = psi_hat(edge * (1.0 + 1e-12));
        CHECK(std::abs(inside - outside) <= 1e-10);
    }
    // across the Taylor switch at |t| = 1e-5
    for (const double t : {1e-5, -1e-5}) {
        const cd below = psi_hat(std::nextafter(t, 0.0));
        const cd above = psi_hat(std::nextafter(t, 2.0 * t));
        CHECK(std::abs(below - above) <= 1e-12);
    }
    CHECK(std::abs(psi_hat(1e-9) - 2.0) <= 1e-7);
}

TEST_CASE("psi_hat agrees with the numeric transform on (0, 3]")
{
    for (int k = 1; k <= 30; ++k) {
        const double t = 0.1 * k;
        const auto num = numeric_ft(Transformable::psi, t, 1e-8);
        CHECK(std::abs(num.value - psi_hat(t)) <= 1e-6);
    }
    // small |t| needs the coarser tolerance: the tail bound grows like 1/t
    for (const double t : {1e-3, 1e-2, 0.999, 1.001}) {
        const auto num = numeric_ft(Transformable::psi, t, 1e-6);
        CHECK(std::abs(num.value - psi_hat(t)) <= 1e-6);
    }
}

TEST_CASE("psi_hat_scaled")
{
    CHECK(psi_hat_scaled(0.25, 0.0) == cd(8.0, 0.0));
    CHECK(std::abs(psi_hat_scaled(0.5, 1.0) - cd(0.0, 1.0 / kPi)) <= 1e-15);
    CHECK(psi_hat_scaled(2.0, 1.0) == psi_hat(0.5) / 2.0);
    CHECK_THROWS_AS(psi_hat_scaled(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(psi_hat_scaled(-1.0, 1.0), std::domain_error);
    // psi(2x) transformed numerically: (1/2) psi^(t/2)
    const auto num = numeric_ft(Transformable::psi, 0.5, 1e-8);
    CHECK(std::abs(num.value / 2.0 - psi_hat_scaled(2.0, 1.0)) <= 1e-8);
}

TEST_CASE("numeric transforms at zero")
{
    const auto psi0 = numeric_ft(Transformable::psi, 0.0, 1e-7);
    CHECK(std::abs(psi0.value - 2.0) <= 1e-7);
    const auto b0 = numeric_ft(Transformable::psi_beurling, 0.0, 1e-6);
    CHECK(std::abs(b0.value - 1.0) <= 1e-6);
    const auto g0 = numeric_ft(Transformable::g, 0.0, 1e-8);
    CHECK(std::abs(g0.value - 1.0) <= 1e-8);
}

TEST_CASE("numeric transform error estimates are honest")
{
    for (const double t : {0.0, 0.2, 0.7, 1.3}) {
        const auto num = numeric_ft(Transformable::psi, t, 1e-8);
        CHECK(num.err_estimate <= 1e-8);
        CHECK(std::abs(num.value - psi_hat(t)) <= num.err_estimate + 1e-12);
    }
}

TEST_CASE("numeric transforms are Hermitian")
{
    for (const double t : {0.15, 0.8, 2.2}) {
        for (const auto kind : {Transformable::psi, Transformable::psi_beurling}) {
            const auto p = numeric_ft(kind, t, 1e-8);
            const auto m = numeric_ft(kind, -t, 1e-8);
            CHECK(std::abs(p.value - std::conj(m.value)) <= 1e-9);
        }
    }
}

TEST_CASE("band identity")
{
    const std::array<double, 4> samples{1.25, 2.0, 3.5, 5.0};
    CHECK(band_limit_check(Transformable::psi, samples) <= 1e-5);
    CHECK(band_limit_check(Transformable::psi_beurling, samples) <= 1e-5);
    const std::array<double, 1> far{10.0};
    CHECK(band_limit_check(Transformable::psi, far) <= 1e-5);
    const std::array<double, 1> inside{0.5};
    CHECK_THROWS_AS(band_limit_check(Transformable::psi, inside), std::domain_error);
}

TEST_CASE("Beurling deficit transform near the band edge")
{
    // continuity of the transform at |t| = 1 from inside
    const auto at = numeric_ft(Transformable::psi_beurling, 0.9999, 1e-8);
    CHECK(std::abs(at.value - band_value(1.0)) <= 1e-3);
    const auto edge = numeric_ft(Transformable::psi_beurling, 1.0, 1e-8);
    CHECK(std::abs(edge.value - band_value(1.0)) <= 1e-7);
}

TEST_CASE("tolerance floor")
{
    CHECK_THROWS_AS(numeric_ft(Transformable::psi, 0.3, 1e-9), std::domain_error);
}
