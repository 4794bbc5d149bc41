#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "extremal/extremal.hpp"
#include "extremal/specfun.hpp"
#include "oracles.hpp"

using namespace extremal;
constexpr double kPi = std::numbers::pi;

namespace {

double g_direct(double u)
{
    const double s = std::sin(kPi * u);
    return -s * s / (kPi * kPi * u * (u + 1.0) * (u + 1.0));
}

}  // namespace

TEST_CASE("kernel values at the removable points")
{
    CHECK(eval_kernel(Kernel::g, 0.0) == 0.0);
    CHECK(eval_kernel(Kernel::g, -1.0) == 1.0);
    CHECK(eval_kernel(Kernel::H, -1.0) == 1.0);
    CHECK(eval_kernel(Kernel::h, -1.0) == 1.0);
    for (int n = -20; n <= 20; ++n)
        if (n != -1)
            CHECK(eval_kernel(Kernel::H, n) == 0.0);
    // limit oracles one step away
    CHECK(std::abs(eval_kernel(Kernel::g, 1e-6) - g_direct(1e-6)) <= 1e-13);
    CHECK(std::abs(eval_kernel(Kernel::g, -1e-6) - g_direct(-1e-6)) <= 1e-13);
    CHECK(std::abs(eval_kernel(Kernel::g, -1.0 + 1e-6) - 1.0) <= 1e-5);
    CHECK(std::abs(eval_kernel(Kernel::g, -1.0 - 1e-6) - 1.0) <= 1e-5);
}

TEST_CASE("kernel matches the defining formula away from the removable points")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-30.0, 30.0);
    for (int i = 0; i < 5000; ++i) {
        const double x = u(rng);
        if (std::abs(x) < 0.01 || std::abs(x + 1.0) < 0.01)
            continue;
        CHECK(std::abs(eval_kernel(Kernel::g, x) - g_direct(x)) <= 1e-13);
    }
}

TEST_CASE("H = -u g = sinc^2(u+1) and g = -u h^2")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int i = 0; i < 5000; ++i) {
        const double x = i < 4 ? std::array{0.0, -1.0, 1e-9, -1.0 + 1e-9}[i] : u(rng);
        const double g = eval_kernel(Kernel::g, x);
        const double h = eval_kernel(Kernel::h, x);
        const double s = specfun::sinc(x + 1.0);
        CHECK(std::abs(eval_kernel(Kernel::H, x) - s * s) <= 1e-15);
        CHECK(std::abs(-x * g - s * s) <= 1e-13);
        CHECK(std::abs(g + x * h * h) <= 1e-12);
        // u h(u) = sin(pi u)/(pi (u+1))
        if (std::abs(x + 1.0) > 1e-3)
            CHECK(std::abs(x * h - std::sin(kPi * x) / (kPi * (x + 1.0))) <= 1e-13);
    }
}

TEST_CASE("g sign pattern")
{
    for (double x = -40.0; x <= 40.0; x += 0.01) {
        const double g = eval_kernel(Kernel::g, x);
        if (x < 0.0)
            CHECK(g >= 0.0);
        else
            CHECK(g <= 0.0);
    }
}

TEST_CASE("G against the frozen quadrature oracle")
{
    for (const auto& p : oracle::kG)
        CHECK(std::abs(eval_G(p.x) - p.value) <= 1e-14);
}

TEST_CASE("G(0) matches the published decimals and the closed constant")
{
    const double G0 = eval_G(0.0);
    CHECK(std::abs(G0 - 1.0749) <= 5e-4);
    const double exact = 0.5 +
                         (std::numbers::egamma + std::log(2.0 * kPi) - oracle::kCi2Pi) / (2.0 * kPi * kPi) +
                         oracle::kSi2Pi / kPi;
    CHECK(std::abs(G0 - exact) <= 1e-14);
}

TEST_CASE("G limits")
{
    CHECK(std::abs(eval_G(-1e6)) <= 1e-9);
    CHECK(std::abs(eval_G(1e6) - 1.0) <= 1e-9);
    CHECK(std::abs(eval_G(-1e6, 1e-10, GStrategy::Quadrature)) <= 1e-9);
    CHECK(std::abs(eval_G(1e6, 1e-10, GStrategy::Quadrature) - 1.0) <= 1e-9);
}

TEST_CASE("closed form and quadrature agree to the requested tolerance")
{
    for (const double x : {-300.0, -12.0, -4.0, -1.0, -0.999, -0.3, 0.0, 0.2, 1.0, 3.9, 4.1, 17.0, 2e4}) {
        const auto b = eval_G_detailed(x, 1e-11, GStrategy::Quadrature);
        CHECK(b.err_estimate <= 1e-11);
        CHECK(std::abs(eval_G(x) - b.value) <= 1e-11);
    }
}

TEST_CASE("G is continuous across the far-field switch")
{
    for (const double x : {-4.0, 4.0}) {
        const double lo = eval_G(std::nextafter(x, -10.0));
        const double hi = eval_G(std::nextafter(x, 10.0));
        CHECK(std::abs(lo - hi) <= 1e-14);
    }
}

TEST_CASE("G' = g by central differences")
{
    for (const double x : {-6.3, -2.5, -0.7, 0.1, 1.4, 8.2}) {
        const double h = 1e-4;
        const double d = (eval_G(x + h) - eval_G(x - h)) / (2.0 * h);
        CHECK(std::abs(d - eval_kernel(Kernel::g, x)) <= 1e-7);
    }
}

TEST_CASE("tolerance range")
{
    CHECK_THROWS_AS(eval_G(0.0, 1e-13), std::domain_error);
    CHECK_THROWS_AS(eval_G(0.0, 1e-3), std::domain_error);
    CHECK_THROWS_AS(eval_G(std::nan("")), std::domain_error);
}

TEST_CASE("majorant kinds")
{
    CHECK(std::abs(eval_majorant(Majorant::M, 0.0) - 1.1498) <= 1e-3);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int i = 0; i < 500; ++i) {
        const double x = u(rng);
        CHECK(eval_majorant(Majorant::M, x) == 2.0 * eval_G(x) - 1.0);
        CHECK(eval_majorant(Majorant::MinorantOfSgn, x) == -eval_majorant(Majorant::M, -x));
        CHECK(eval_majorant(Majorant::MinorantOfSgn, x) <= sgn(x));
    }
}

TEST_CASE("Beurling B at integers")
{
    CHECK(eval_majorant(Majorant::BeurlingB, 0.0) == 1.0);
    for (int n = -30; n <= 30; ++n)
        if (n != 0)
            CHECK(std::abs(eval_majorant(Majorant::BeurlingB, n) - sgn(n)) <= 1e-10);
}

TEST_CASE("Beurling B against frozen values and the brute-force series")
{
    for (const auto& p : oracle::kBeurling)
        CHECK(std::abs(eval_majorant(Majorant::BeurlingB, p.x) - p.value) <= 1e-14);
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-12.0, 12.0);
    for (int i = 0; i < 60; ++i) {
        double x = u(rng);
        if (std::abs(x - std::round(x)) < 1e-3)
            continue;
        CHECK(std::abs(eval_majorant(Majorant::BeurlingB, x) - oracle::beurling_series(x)) <= 1e-10);
    }
}

TEST_CASE("Beurling B near integers stays smooth")
{
    for (const int n : {-3, -1, 1, 2, 7}) {
        for (const double d : {1e-7, 1e-9, -1e-7, -1e-9}) {
            const double x = n + d;
            const double b = eval_majorant(Majorant::BeurlingB, x);
            CHECK(std::abs(b - sgn(x)) <= 1e-5);
            CHECK(b - sgn(x) >= 0.0);
        }
    }
    // both sides of 0 approach B(0) = 1
    CHECK(std::abs(eval_majorant(Majorant::BeurlingB, 1e-9) - 1.0) <= 1e-8);
    CHECK(std::abs(eval_majorant(Majorant::BeurlingB, -1e-9) - 1.0) <= 1e-8);
}

TEST_CASE("deficits")
{
    CHECK(std::abs(eval_deficit(Deficit::psi, 1e6)) <= 1e-9);
    CHECK(std::abs(eval_deficit(Deficit::psi, 0.0) - 1.1498) <= 1e-3);
    CHECK(eval_deficit(Deficit::psi, 0.0) == eval_majorant(Majorant::M, 0.0));
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-60.0, 60.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = u(rng);
        CHECK(eval_deficit(Deficit::phi, x) == eval_deficit(Deficit::psi, -x));
        CHECK(eval_deficit(Deficit::psi, x) >= 0.0);
        CHECK(std::abs(eval_deficit(Deficit::psi, x) - (eval_majorant(Majorant::M, x) - sgn(x))) <= 1e-15);
    }
}

TEST_CASE("Heaviside deficit keeps relative accuracy far out")
{
    // G(x) - 1 = int_x^inf sin^2(pi u)/(pi^2 u (u+1)^2) du ~ 1/(4 pi^2 x^2)
    for (const double x : {1e3, 1e5, -1e3, -1e5}) {
        const double d = eval_heaviside_deficit(x);
        CHECK(d > 0.0);
        CHECK(std::abs(d * 4.0 * kPi * kPi * x * x - 1.0) <= 5.0 / std::abs(x));
    }
}

TEST_CASE("conventions at zero")
{
    CHECK(sgn(0.0) == 0.0);
    CHECK(heaviside(0.0) == 1.0);
    CHECK(heaviside(-1e-300) == 0.0);
    CHECK(beurling_deficit(0.0) == 1.0);
}
