#include "extremal/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "extremal/experiments.hpp"
#include "extremal/extremal.hpp"
#include "extremal/fourier.hpp"
#include "extremal/hilbert.hpp"
#include "extremal/quad.hpp"
#include "extremal/specfun.hpp"

namespace extremal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::array<double, 10> kBandSamples{-10.0, -5.0, -3.5, -2.0, -1.25,
                                              1.25,  2.0,  3.5,  5.0,  10.0};

CheckResult two_sided(std::string name, double value, double expected, double threshold,
                      double err = 0.0)
{
    CheckResult c{std::move(name), value, expected, std::abs(value - expected), threshold, err, false};
    c.pass = c.residual <= c.threshold;
    return c;
}

// Passes when value >= bound - threshold; residual is the shortfall below bound.
CheckResult lower_bound(std::string name, double value, double bound, double threshold)
{
    CheckResult c{std::move(name), value, bound, std::max(0.0, bound - value), threshold, 0.0, false};
    c.pass = c.residual <= c.threshold;
    return c;
}

double exact_G0()
{
    using namespace specfun;
    const double two_pi = 2.0 * kPi;
    return 0.5 + (std::numbers::egamma + std::log(two_pi) - cosine_integral(two_pi)) / (2.0 * kPi * kPi)
           + sine_integral(two_pi) / kPi;
}

}  // namespace

const CheckResult* VerificationReport::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

VerificationReport run_verification(const VerificationConfig& config)
{
    if (!(config.tol >= 1e-10 && config.tol <= 1e-8))
        throw std::domain_error("run_verification: tol must lie in [1e-10, 1e-8]");
    if (config.random_instances < 1 || config.grid_points < 2)
        throw std::domain_error("run_verification: need instances >= 1 and grid_points >= 2");

    VerificationReport report;
    report.config = config;
    auto& checks = report.checks;
    const double tol = config.tol;

    // Deficit integrals.
    const auto psi = quad::integrate_with_tails(quad::TailKernel::psi, tol);
    const auto g = quad::integrate_with_tails(quad::TailKernel::g, tol);
    const auto heavi = quad::integrate_with_tails(quad::TailKernel::G_minus_heaviside, tol);
    const auto beur = quad::integrate_with_tails(quad::TailKernel::psi_beurling, tol);
    const auto H = quad::integrate_with_tails(quad::TailKernel::H, tol);
    checks.push_back(two_sided("psi_integral", psi.value, 2.0, 1e-8, psi.err_estimate));
    checks.push_back(two_sided("g_integral", g.value, 1.0, 1e-8, g.err_estimate));
    checks.push_back(two_sided("G_minus_heaviside_integral", heavi.value, 1.0, 1e-8, heavi.err_estimate));
    checks.push_back(two_sided("beurling_deficit_integral", beur.value, 1.0, 1e-8, beur.err_estimate));
    checks.push_back(two_sided("H_integral", H.value, 1.0, 1e-8, H.err_estimate));
    report.psi_integral = psi.value;
    report.g_integral = g.value;

    // Half-line identities: int_{-inf}^0 G = int_{-inf}^0 H and int_0^inf (G - 1) = int_0^inf H.
    for (const auto side : {quad::HalfLine::negative, quad::HalfLine::positive}) {
        const auto lhs = quad::integrate_half_line(quad::TailKernel::G_minus_heaviside, side, tol);
        const auto rhs = quad::integrate_half_line(quad::TailKernel::H, side, tol);
        const char* name = side == quad::HalfLine::negative ? "half_line_negative" : "half_line_positive";
        checks.push_back(two_sided(name, lhs.value, rhs.value, 1e-8, lhs.err_estimate + rhs.err_estimate));
    }

    // G(0): against the published digits and against the exact constant.
    const double G0 = eval_G(0.0);
    checks.push_back(two_sided("G0_decimal", G0, 1.0749, 5e-4));
    checks.push_back(two_sided("G0_exact", G0, exact_G0(), 1e-12));

    // The two evaluation routes for G agree.
    double strategy_gap = 0.0;
    for (const double x : {-7.5, -1.0, -0.25, 0.0, 0.6, 3.0, 40.0}) {
        const double a = eval_G(x, 1e-12, GStrategy::ClosedForm);
        const double b = eval_G(x, 1e-10, GStrategy::Quadrature);
        strategy_gap = std::max(strategy_gap, std::abs(a - b));
    }
    checks.push_back(two_sided("G_strategy_agreement", strategy_gap, 0.0, 1e-9));

    // Poisson summation at the integers.
    for (const auto kind : {quad::PoissonKernel::g, quad::PoissonKernel::H}) {
        const auto p = quad::poisson_check(kind, 1000);
        const std::string base = kind == quad::PoissonKernel::g ? "poisson_g" : "poisson_H";
        checks.push_back(two_sided(base + "_sum", p.sum, 1.0, 1e-15));
        checks.push_back(two_sided(base + "_sum_vs_integral", p.sum, p.integral.value, 1e-8,
                                   p.integral.err_estimate));
    }
    double nh2 = 0.0, n2h2 = 0.0;
    for (int n = -1000; n <= 1000; ++n) {
        const double h = eval_kernel(Kernel::h, n);
        nh2 -= n * h * h;
        n2h2 += static_cast<double>(n) * n * h * h;
    }
    checks.push_back(two_sided("poisson_n_h_squared", nh2, 1.0, 1e-15));
    checks.push_back(two_sided("poisson_n2_h_squared", n2h2, 1.0, 1e-15));

    // Band-limit identities.
    double closed_band = 0.0;
    for (const double t : kBandSamples)
        closed_band = std::max(closed_band, std::abs(fourier::psi_hat(t) - fourier::band_value(t)));
    const double psi_band = fourier::band_limit_check(fourier::Transformable::psi, kBandSamples);
    const double beur_band = fourier::band_limit_check(fourier::Transformable::psi_beurling, kBandSamples);
    double g_band = 0.0;
    for (const double t : kBandSamples)
        g_band = std::max(g_band, std::abs(fourier::numeric_ft(fourier::Transformable::g, t, 1e-7).value));
    checks.push_back(two_sided("band_residual_closed_form", closed_band, 0.0, 1e-12));
    checks.push_back(two_sided("band_residual_psi_numeric", psi_band, 0.0, 1e-5));
    checks.push_back(two_sided("band_residual_beurling_numeric", beur_band, 0.0, 1e-5));
    checks.push_back(two_sided("g_hat_outside_band", g_band, 0.0, 1e-5));
    report.band_residual_max = std::max({closed_band, psi_band, beur_band});

    const auto psi0 = fourier::numeric_ft(fourier::Transformable::psi, 0.0, 1e-8);
    checks.push_back(two_sided("psi_hat_zero_closed_form", fourier::psi_hat(0.0).real(), 2.0, 1e-7));
    checks.push_back(two_sided("psi_hat_zero_numeric", std::abs(psi0.value - 2.0), 0.0, 1e-7,
                               psi0.err_estimate));
    double ghat_gap = 0.0;
    for (const double t : {-0.8, -0.3, 0.0, 0.3, 0.5, 0.9}) {
        const auto num = fourier::numeric_ft(fourier::Transformable::g, t, 1e-8);
        ghat_gap = std::max(ghat_gap, std::abs(num.value - fourier::g_hat(t)));
    }
    checks.push_back(two_sided("g_hat_closed_vs_numeric", ghat_gap, 0.0, 1e-7));

    // Pointwise properties on a uniform grid over [-50, 50].
    double factor_gap = 0.0, H_gap = 0.0, slope_bad = 0.0;
    double M_margin = std::numeric_limits<double>::infinity();
    double B_margin = M_margin;
    double prev_M = 0.0;
    const int pts = config.grid_points;
    for (int k = 0; k < pts; ++k) {
        const double x = -50.0 + 100.0 * k / (pts - 1);
        const double gx = eval_kernel(Kernel::g, x);
        const double hx = eval_kernel(Kernel::h, x);
        factor_gap = std::max(factor_gap, std::abs(gx + x * hx * hx));
        H_gap = std::max(H_gap, std::abs(eval_kernel(Kernel::H, x) + x * gx));
        const double M = eval_majorant(Majorant::M, x);
        M_margin = std::min(M_margin, M - sgn(x));
        B_margin = std::min(B_margin, beurling_deficit(x));
        // M' = 2g >= 0 on x < 0 and <= 0 on x > 0.
        slope_bad = std::max(slope_bad, x < 0.0 ? -gx : (x > 0.0 ? gx : 0.0));
        if (k > 0) {
            const double step = M - prev_M;
            if (x <= 0.0)
                slope_bad = std::max(slope_bad, -step);
            else if (x - 100.0 / (pts - 1) >= 0.0)
                slope_bad = std::max(slope_bad, step);
        }
        prev_M = M;
    }
    checks.push_back(two_sided("factorization_g_eq_minus_u_h2", factor_gap, 0.0, 1e-14));
    checks.push_back(two_sided("H_eq_minus_u_g", H_gap, 0.0, 1e-14));
    checks.push_back(lower_bound("majorant_M_grid", M_margin, 0.0, 1e-9));
    checks.push_back(lower_bound("majorant_B_grid", B_margin, 0.0, 1e-9));
    checks.push_back(two_sided("monotonicity_M_grid", slope_bad, 0.0, 1e-9));

    // Telescoping identity and the 2 pi margin on seeded random node systems.
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<int> size(2, 6);
    double tele_gap = 0.0, tele_min = 0.0, margin_min = 0.0;
    bool first = true;
    for (int i = 0; i < config.random_instances; ++i) {
        const int n = size(rng);
        const auto lambdas = hilbert::random_nodes(rng, n, 10.0, 0.1);
        const auto a = hilbert::random_coefficients(rng, n);
        const auto nodes = hilbert::NodeSystem::from(lambdas);
        const double s = hilbert::telescoping_sum(nodes, a, hilbert::TelescopingMajorant::M).value;
        const double scale = std::max(1.0, hilbert::weighted_norm(nodes, a));
        tele_gap = std::max(tele_gap, std::abs(s - hilbert::telescoping_identity(nodes, a)) / scale);
        const double margin = hilbert::verify_inequality(nodes, a, 2.0 * kPi);
        if (first || s < tele_min)
            tele_min = s;
        if (first || margin < margin_min)
            margin_min = margin;
        first = false;
    }
    checks.push_back(two_sided("telescoping_identity", tele_gap, 0.0, 1e-8));
    checks.push_back(lower_bound("telescoping_nonnegative", tele_min, 0.0, 1e-8));
    checks.push_back(lower_bound("margin_2pi", margin_min, 0.0, 0.0));

    report.all_pass = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
    return report;
}

}  // namespace extremal
