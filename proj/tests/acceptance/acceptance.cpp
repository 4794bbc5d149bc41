// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "extremal/experiments.hpp"
#include "extremal/extremal.hpp"
#include "extremal/fourier.hpp"
#include "extremal/quad.hpp"

using namespace extremal;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// Pinned tolerances.
constexpr double kIntegralTol = 1e-8;
constexpr double kQuadTol = 1e-9;
constexpr double kG0Value = 1.0749;
constexpr double kG0Tol = 5e-4;
constexpr double kPoissonTol = 1e-15;
constexpr double kBandTol = 1e-5;
constexpr double kBandClosedTol = 1e-12;
constexpr double kTransformZeroTol = 1e-7;
constexpr double kGridSlack = 1e-9;
constexpr int kGridPoints = 100'000;
constexpr double kTelescopingTol = 1e-8;
constexpr double kSpectralBoundSlack = 1e-9;
constexpr double kSharpCap = 1.3154 * kPi + 1e-6;
constexpr double kOracleTol = 1e-9;
constexpr double kAnalyticTol = 1e-10;
constexpr double kImagResidueTol = 1e-6;
constexpr double kCriterion1Seconds = 5.0;
constexpr double kLargeSpectralSeconds = 60.0;

struct Line {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail += " [failed: " + what + "]";
        }
    }
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int failures = 0;

void report(int id, const char* title, const std::function<Line()>& body)
{
    Line line;
    try {
        line = body();
    } catch (const std::exception& e) {
        line.pass = false;
        line.detail = std::string(" exception: ") + e.what();
    }
    if (!line.pass)
        ++failures;
    std::printf("%s %2d %s:%s\n", line.pass ? "PASS" : "FAIL", id, title, line.detail.c_str());
    std::fflush(stdout);
}

std::vector<double> spread_nodes(std::mt19937_64& rng, int n)
{
    // Log-normal gaps with a random spread give very uneven separations.
    std::uniform_real_distribution<double> spread(0.0, 2.0);
    std::normal_distribution<double> normal;
    const double sigma = spread(rng);
    std::vector<double> nodes(static_cast<std::size_t>(n));
    double x = 0.0;
    for (auto& node : nodes) {
        node = x;
        x += std::exp(sigma * normal(rng));
    }
    std::shuffle(nodes.begin(), nodes.end(), rng);
    return nodes;
}

std::vector<double> equally_spaced(int n)
{
    std::vector<double> l(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        l[static_cast<std::size_t>(i)] = i + 1.0;
    return l;
}

}  // namespace

int main()
{
    report(1, "integral of M - sgn equals 2", [] {
        const auto start = std::chrono::steady_clock::now();
        const auto r = quad::integrate_with_tails(quad::TailKernel::psi, kQuadTol);
        const double elapsed = seconds_since(start);
        Line l;
        l.detail = fmt(" value=%.15f residual=%.2e", r.value, std::abs(r.value - 2.0)) +
                   fmt(" time=%.2fs", elapsed);
        l.require(std::abs(r.value - 2.0) <= kIntegralTol, "residual <= 1e-8");
        l.require(elapsed < kCriterion1Seconds, "runtime < 5 s");
        return l;
    });

    report(2, "integral of G - Heaviside equals 1", [] {
        const auto r = quad::integrate_with_tails(quad::TailKernel::G_minus_heaviside, kQuadTol);
        Line l;
        l.detail = fmt(" value=%.15f residual=%.2e", r.value, std::abs(r.value - 1.0));
        l.require(std::abs(r.value - 1.0) <= kIntegralTol, "residual <= 1e-8");
        return l;
    });

    report(3, "G(0) = 1.0749", [] {
        const double closed = eval_G(0.0);
        const double quadrature = eval_G(0.0, 1e-10, GStrategy::Quadrature);
        Line l;
        l.detail = fmt(" closed_form=%.15f quadrature=%.15f", closed, quadrature);
        l.require(std::abs(closed - kG0Value) <= kG0Tol, "closed form within 5e-4");
        l.require(std::abs(quadrature - kG0Value) <= kG0Tol, "quadrature within 5e-4");
        return l;
    });

    report(4, "kernel normalization and Poisson sums", [] {
        const auto r = quad::integrate_with_tails(quad::TailKernel::g, kQuadTol);
        const auto pg = quad::poisson_check(quad::PoissonKernel::g, 100'000);
        const auto pH = quad::poisson_check(quad::PoissonKernel::H, 100'000);
        Line l;
        l.detail = fmt(" int_g=%.15f sum_g=%.17g sum_H=%.17g", r.value, pg.sum, pH.sum);
        l.require(std::abs(r.value - 1.0) <= kIntegralTol, "integral of g within 1e-8");
        l.require(std::abs(pg.sum - 1.0) <= kPoissonTol, "sum g(n) = 1");
        l.require(std::abs(pH.sum - 1.0) <= kPoissonTol, "sum H(n) = 1");
        return l;
    });

    report(5, "band identity outside [-1, 1]", [] {
        const std::vector<double> samples{-10, -5, -3.5, -2, -1.25, 1.25, 2, 3.5, 5, 10};
        double closed = 0.0;
        for (const double t : samples)
            closed = std::max(closed, std::abs(fourier::psi_hat(t) - fourier::band_value(t)));
        const double numeric_m = fourier::band_limit_check(fourier::Transformable::psi, samples);
        const double numeric_b = fourier::band_limit_check(fourier::Transformable::psi_beurling, samples);
        Line l;
        l.detail = fmt(" closed_M=%.2e numeric_M=%.2e numeric_B=%.2e", closed, numeric_m, numeric_b);
        l.require(closed <= kBandClosedTol, "closed form <= 1e-12");
        l.require(numeric_m <= kBandTol, "numeric M <= 1e-5");
        l.require(numeric_b <= kBandTol, "numeric Beurling <= 1e-5");
        return l;
    });

    report(6, "transform of the deficit at zero equals 2", [] {
        const cd closed = fourier::psi_hat(0.0);
        const auto numeric = fourier::numeric_ft(fourier::Transformable::psi, 0.0, 1e-8);
        Line l;
        l.detail = fmt(" closed=%.15f numeric=%.15f numeric_im=%.2e", closed.real(), numeric.value.real(),
                       numeric.value.imag());
        l.require(std::abs(closed - 2.0) <= kTransformZeroTol, "closed form within 1e-7");
        l.require(std::abs(numeric.value - 2.0) <= kTransformZeroTol, "numeric within 1e-7");
        return l;
    });

    report(7, "majorant and monotonicity on 1e5 points of [-50, 50]", [] {
        double worst_margin = std::numeric_limits<double>::infinity();
        double worst_sign = 0.0;
        double worst_step = 0.0;
        double previous = 0.0, previous_x = 0.0;
        for (int k = 0; k < kGridPoints; ++k) {
            const double x = -50.0 + 100.0 * k / (kGridPoints - 1);
            const double M = eval_majorant(Majorant::M, x);
            worst_margin = std::min(worst_margin, M - sgn(x));
            // M' = 2g is >= 0 left of the origin and <= 0 right of it.
            const double slope = 2.0 * eval_kernel(Kernel::g, x);
            if (x < 0.0)
                worst_sign = std::max(worst_sign, -slope);
            else if (x > 0.0)
                worst_sign = std::max(worst_sign, slope);
            if (k > 0 && x <= 0.0)
                worst_step = std::max(worst_step, previous - M);
            else if (k > 0 && previous_x >= 0.0)
                worst_step = std::max(worst_step, M - previous);
            previous = M;
            previous_x = x;
        }
        Line l;
        l.detail = fmt(" min(M-sgn)=%.3e sign_violation=%.2e step_violation=%.2e", worst_margin, worst_sign,
                       worst_step);
        l.require(worst_margin >= -kGridSlack, "M >= sgn");
        l.require(worst_sign <= kGridSlack, "sign pattern of M'");
        l.require(worst_step <= kGridSlack, "monotone samples");
        return l;
    });

    report(8, "telescoping chain on 100 instances", [] {
        std::mt19937_64 rng(20240808);
        double worst_gap = 0.0;
        double min_value = std::numeric_limits<double>::infinity();
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 2 + trial % 5;
            const auto lambdas = hilbert::random_nodes(rng, n, 10.0, 0.1);
            const auto a = hilbert::random_coefficients(rng, n);
            const auto nodes = hilbert::NodeSystem::from(lambdas);
            const auto s = hilbert::telescoping_sum(nodes, a, hilbert::TelescopingMajorant::M);
            worst_gap = std::max(worst_gap, std::abs(s.value - hilbert::telescoping_identity(nodes, a)));
            min_value = std::min(min_value, s.value);
        }
        Line l;
        l.detail = fmt(" max_gap=%.2e min_sum=%.4e", worst_gap, min_value);
        l.require(worst_gap <= kTelescopingTol, "identity within 1e-8");
        l.require(min_value >= -kTelescopingTol, "sum >= -1e-8");
        return l;
    });

    report(9, "inequality with C = 2pi on 1000 instances", [] {
        std::mt19937_64 rng(1729);
        std::uniform_int_distribution<int> size(2, 64);
        double min_margin = std::numeric_limits<double>::infinity();
        double worst_excess = -std::numeric_limits<double>::infinity();
        double max_sharp = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = size(rng);
            const auto lambdas = trial % 2 == 0 ? hilbert::random_nodes(rng, n, 4.0 * n, 0.05)
                                                : spread_nodes(rng, n);
            const auto a = hilbert::random_coefficients(rng, n);
            const auto nodes = hilbert::NodeSystem::from(lambdas);
            min_margin = std::min(min_margin, hilbert::verify_inequality(nodes, a, 2.0 * kPi));
            hilbert::SpectralOptions options;
            options.tol = 1e-10;
            const double sharp = hilbert::sharp_constant(nodes, options).constant;
            max_sharp = std::max(max_sharp, sharp);
            const double excess =
                std::abs(hilbert::bilinear_form(nodes, a)) - sharp * hilbert::weighted_norm(nodes, a);
            worst_excess = std::max(worst_excess, excess);
        }
        Line l;
        l.detail = fmt(" min_margin_2pi=%.4e max(|Phi|-C*W)=%.2e max_sharp/pi=%.6f", min_margin, worst_excess,
                       max_sharp / kPi);
        l.require(min_margin >= 0.0, "margin at 2pi >= 0");
        l.require(worst_excess <= kSpectralBoundSlack, "|Phi| <= sharp * W + 1e-9");
        l.require(max_sharp <= kSharpCap, "sharp <= 1.3154 pi + 1e-6");
        return l;
    });

    report(10, "spectral oracle", [] {
        Line l;
        const auto constant = [](const std::vector<double>& lambdas) {
            return hilbert::sharp_constant(hilbert::NodeSystem::from(lambdas)).constant;
        };
        const double two = constant({0.0, 1.0});
        const double three = constant({1.0, 2.0, 3.0});
        l.require(std::abs(two - 1.0) <= kAnalyticTol, "N = 2 gives 1");
        l.require(std::abs(three - 1.5) <= kAnalyticTol, "{1,2,3} gives 1.5");

        std::mt19937_64 rng(314159);
        double oracle_gap = 0.0;
        for (int n = 2; n <= 12; ++n)
            for (int trial = 0; trial < 5; ++trial) {
                const auto lambdas = trial == 0 ? equally_spaced(n) : spread_nodes(rng, n);
                oracle_gap = std::max(oracle_gap, std::abs(constant(lambdas) - oracle::sharp_constant_oracle(lambdas)));
            }
        l.require(oracle_gap <= kOracleTol, "dense oracle within 1e-9");

        double previous = 0.0;
        bool monotone = true, below_pi = true;
        for (const int n : {2, 4, 8, 16, 32, 64, 128, 256, 512}) {
            const double c = constant(equally_spaced(n));
            monotone = monotone && c >= previous;
            below_pi = below_pi && c < kPi;
            previous = c;
        }
        const auto start = std::chrono::steady_clock::now();
        const double large = constant(equally_spaced(1024));
        const double elapsed = seconds_since(start);
        monotone = monotone && large >= previous;
        below_pi = below_pi && large < kPi;
        l.require(monotone, "non-decreasing in N");
        l.require(below_pi, "below pi");
        l.require(large > 2.9, "N = 1024 above 2.9");
        l.require(elapsed < kLargeSpectralSeconds, "N = 1024 under 60 s");
        l.detail = fmt(" N2=%.12f N3=%.12f oracle_gap=%.2e", two, three, oracle_gap) +
                   fmt(" C(1..1024)=%.10f time=%.2fs", large, elapsed) + l.detail;
        return l;
    });

    report(11, "remark experiment, N = 4, 50 trials", [] {
        hilbert::RemarkConfig config;
        config.n = 4;
        config.trials = 50;
        config.seed = 2718;
        const auto a = hilbert::remark_experiment(config);
        const auto b = hilbert::remark_experiment(config);
        bool same = a.trials.size() == b.trials.size();
        for (std::size_t i = 0; same && i < a.trials.size(); ++i)
            same = a.trials[i].value == b.trials[i].value && a.trials[i].lambdas == b.trials[i].lambdas &&
                   a.trials[i].imag_residue == b.trials[i].imag_residue;
        Line l;
        l.detail = fmt(" max_imag_residue=%.2e min_value=%.4e negatives=%.0f", a.max_imag_residue, a.min_value,
                       a.negative_count);
        l.require(a.trials.size() == 50, "50 trials");
        l.require(a.max_imag_residue <= kImagResidueTol, "imaginary residue <= 1e-6");
        l.require(same, "reproducible");
        return l;
    });

    std::printf("%s: %d of 11 criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
