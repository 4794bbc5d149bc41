#include "extremal/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "extremal/extremal.hpp"
#include "extremal/specfun.hpp"
#include "extremal/tails.hpp"

namespace extremal::quad {

namespace {

// Kronrod 15-point abscissae/weights and the embedded 7-point Gauss weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double err;
};

struct ByError {
    bool operator()(const Panel& lhs, const Panel& rhs) const
    {
        if (lhs.err != rhs.err)
            return lhs.err < rhs.err;
        return lhs.a > rhs.a;  // deterministic tie-break
    }
};

Panel gauss_kronrod_15(const Integrand& f, double a, double b)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);
    std::array<double, 7> fv1{}, fv2{};
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1)
            resg += kWg[j / 2] * (f1 + f2);
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    const double result = resk * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > uflow / (50.0 * eps))
        err = std::max(50.0 * eps * resabs, err);
    return {a, b, result, err};
}

constexpr std::size_t kEvalsPerPanel = 15;

Integrand integrand_for(TailKernel kernel)
{
    switch (kernel) {
    case TailKernel::g:
        return [](double u) { return eval_kernel(Kernel::g, u); };
    case TailKernel::H:
        return [](double u) { return eval_kernel(Kernel::H, u); };
    case TailKernel::psi:
        return [](double x) { return eval_deficit(Deficit::psi, x); };
    case TailKernel::G_minus_heaviside:
        return [](double x) { return eval_heaviside_deficit(x); };
    case TailKernel::psi_beurling:
        return [](double x) { return beurling_deficit(x); };
    }
    throw std::invalid_argument("integrand_for: unknown kernel");
}

void check_tail_tol(double tol)
{
    if (!(tol >= 1e-10))
        throw std::domain_error("integrate_with_tails: tolerance must be >= 1e-10");
}

}  // namespace

QuadResult integrate_adaptive(const Integrand& f, double a, double b, double tol,
                              const AdaptiveOptions& options)
{
    if (!(std::isfinite(a) && std::isfinite(b) && a < b))
        throw std::domain_error("integrate_adaptive: need finite a < b");
    if (!(tol > 0.0))
        throw std::domain_error("integrate_adaptive: tolerance must be positive");

    const auto initial = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) / options.panel_width)));
    const double width = (b - a) / static_cast<double>(initial);

    std::priority_queue<Panel, std::vector<Panel>, ByError> active;
    std::vector<Panel> settled;
    std::size_t evaluations = 0;
    double total_err = 0.0;

    const auto summarize = [&]() {
        std::vector<Panel> all = settled;
        auto copy = active;
        while (!copy.empty()) {
            all.push_back(copy.top());
            copy.pop();
        }
        std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
        QuadResult res;
        // Neumaier summation over the ordered panels.
        double sum = 0.0, comp = 0.0, err = 0.0;
        for (const auto& p : all) {
            const double t = sum + p.value;
            comp += std::abs(sum) >= std::abs(p.value) ? (sum - t) + p.value : (p.value - t) + sum;
            sum = t;
            err += p.err;
        }
        res.value = sum + comp;
        res.err_estimate = err;
        res.evaluations = evaluations;
        return res;
    };

    for (std::size_t i = 0; i < initial; ++i) {
        const double lo = a + width * static_cast<double>(i);
        const double hi = (i + 1 == initial) ? b : a + width * static_cast<double>(i + 1);
        Panel p = gauss_kronrod_15(f, lo, hi);
        evaluations += kEvalsPerPanel;
        total_err += p.err;
        active.push(p);
    }

    while (total_err > tol && !active.empty()) {
        if (evaluations + 2 * kEvalsPerPanel > options.max_evaluations)
            throw BudgetExceeded("integrate_adaptive: evaluation budget exhausted", summarize());
        Panel worst = active.top();
        active.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) ||
            (worst.b - worst.a) < 1e3 * std::numeric_limits<double>::epsilon() *
                                      std::max(std::abs(worst.a), std::abs(worst.b))) {
            settled.push_back(worst);  // cannot refine further in double precision
            continue;
        }
        Panel left = gauss_kronrod_15(f, worst.a, mid);
        Panel right = gauss_kronrod_15(f, mid, worst.b);
        evaluations += 2 * kEvalsPerPanel;
        total_err += left.err + right.err - worst.err;
        active.push(left);
        active.push(right);
    }
    return summarize();
}

double full_line_cutoff(double tol)
{
    return std::round(1e4 * std::max(1.0, std::sqrt(1e-8 / tol)));
}

QuadResult integrate_half_line(TailKernel kernel, HalfLine side, double tol)
{
    check_tail_tol(tol);
    const double T = full_line_cutoff(tol);
    const auto f = integrand_for(kernel);
    const auto model = tails::model_for(kernel);
    const bool negative = side == HalfLine::negative;
    const QuadResult body = negative ? integrate_adaptive(f, -T, 0.0, 0.5 * tol)
                                     : integrate_adaptive(f, 0.0, T, 0.5 * tol);
    const auto tail = tails::side_contribution(negative ? model.negative : model.positive, T, 0.0);
    return {body.value + tail.value.real(), body.err_estimate + tail.err_estimate, body.evaluations};
}

QuadResult integrate_with_tails(TailKernel kernel, double tol)
{
    check_tail_tol(tol);
    const double T = full_line_cutoff(tol);
    const auto f = integrand_for(kernel);
    const auto model = tails::model_for(kernel);
    // Split at 0: psi jumps there.
    const QuadResult left = integrate_adaptive(f, -T, 0.0, 0.25 * tol);
    const QuadResult right = integrate_adaptive(f, 0.0, T, 0.25 * tol);
    const auto tail = tails::both_tails(model, T, 0.0);
    return {left.value + right.value + tail.value.real(),
            left.err_estimate + right.err_estimate + tail.err_estimate,
            left.evaluations + right.evaluations};
}

PoissonCheck poisson_check(PoissonKernel kernel, int truncation)
{
    if (truncation < 10)
        throw std::domain_error("poisson_check: truncation must be >= 10");
    const Kernel k = kernel == PoissonKernel::g ? Kernel::g : Kernel::H;
    double sum = 0.0;
    for (int n = -truncation; n <= truncation; ++n)
        sum += eval_kernel(k, static_cast<double>(n));
    const TailKernel tk = kernel == PoissonKernel::g ? TailKernel::g : TailKernel::H;
    return {sum, integrate_with_tails(tk, 1e-9)};
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights)
{
    if (n < 1)
        throw std::domain_error("gauss_legendre: need n >= 1");
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    if (n == 1) {
        weights[0] = 2.0;
        return;
    }
    // P_n(x) and P_n'(x) by the three-term recurrence.
    const auto legendre = [n](double x, double& dp) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        return p1;
    };
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            const double dx = legendre(x, dp) / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        legendre(x, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
}

FilonTable::FilonTable(const Integrand& f, double half_width, double panel_width, int degree)
    : half_width_(half_width), panel_width_(panel_width), degree_(degree)
{
    if (!(panel_width > 0.0) || !(half_width > 0.0) || degree < 2)
        throw std::domain_error("FilonTable: invalid geometry");
    const double per_side = half_width / panel_width;
    if (std::abs(per_side - std::round(per_side)) > 1e-9)
        throw std::domain_error("FilonTable: half_width must be a multiple of panel_width");
    const auto panels_per_side = static_cast<std::size_t>(std::llround(per_side));
    panel_count_ = 2 * panels_per_side;

    std::vector<double> s, w;
    gauss_legendre(degree_, s, w);
    const auto n = static_cast<std::size_t>(degree_);
    // legendre[k * n + i] = (2k+1)/2 * w_i * P_k(s_i)
    std::vector<double> legendre(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        double p0 = 1.0, p1 = s[i];
        for (std::size_t k = 0; k < n; ++k) {
            double pk;
            if (k == 0) {
                pk = 1.0;
            } else if (k == 1) {
                pk = s[i];
            } else {
                pk = ((2.0 * k - 1.0) * s[i] * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                p0 = p1;
                p1 = pk;
            }
            legendre[k * n + i] = 0.5 * (2.0 * k + 1.0) * w[i] * pk;
        }
    }

    coefficients_.assign(panel_count_ * n, 0.0);
    panel_error_.assign(panel_count_, 0.0);
    std::vector<double> values(n);
    for (std::size_t p = 0; p < panel_count_; ++p) {
        const double a = -half_width_ + panel_width_ * static_cast<double>(p);
        const double mid = a + 0.5 * panel_width_;
        for (std::size_t i = 0; i < n; ++i)
            values[i] = f(mid + 0.5 * panel_width_ * s[i]);
        double* c = &coefficients_[p * n];
        for (std::size_t k = 0; k < n; ++k) {
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                acc += legendre[k * n + i] * values[i];
            c[k] = acc;
        }
        double scale = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            scale = std::max(scale, std::abs(values[i]));
        panel_error_[p] = panel_width_ * (std::abs(c[n - 1]) + std::abs(c[n - 2]) +
                                          8.0 * std::numeric_limits<double>::epsilon() * scale);
    }
}

OscillatoryResult FilonTable::transform(double t, double cutoff) const
{
    if (!std::isfinite(t))
        throw std::domain_error("FilonTable::transform: frequency must be finite");
    const auto n = static_cast<std::size_t>(degree_);
    const std::size_t per_side = panel_count_ / 2;
    const auto use = std::min(per_side, static_cast<std::size_t>(std::floor(cutoff / panel_width_ + 1e-9)));

    // moments[k] = panel_width * (-i)^k j_k(pi t panel_width)
    const double kappa = std::numbers::pi * t * panel_width_;
    std::vector<std::complex<double>> moments(n);
    const std::array<std::complex<double>, 4> minus_i_pow = {
        std::complex<double>(1, 0), std::complex<double>(0, -1), std::complex<double>(-1, 0),
        std::complex<double>(0, 1)};
    for (std::size_t k = 0; k < n; ++k) {
        double j = std::sph_bessel(static_cast<unsigned>(k), std::abs(kappa));
        if (kappa < 0.0 && (k % 2 == 1))
            j = -j;
        moments[k] = panel_width_ * minus_i_pow[k % 4] * j;
    }

    std::complex<double> sum(0.0, 0.0);
    double err = 0.0;
    for (std::size_t p = per_side - use; p < per_side + use; ++p) {
        const double mid = -half_width_ + panel_width_ * (static_cast<double>(p) + 0.5);
        const double* c = &coefficients_[p * n];
        std::complex<double> local(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k)
            local += c[k] * moments[k];
        sum += specfun::unit_phase(t, mid) * local;
        err += panel_error_[p];
    }
    return {sum, err};
}

}  // namespace extremal::quad
