#include "extremal/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "extremal/fourier.hpp"

namespace extremal::hilbert {

namespace {

constexpr double kPi = std::numbers::pi;

void check_sizes(const NodeSystem& nodes, const CoefficientVector& a)
{
    if (a.size() != nodes.size()) {
        std::ostringstream msg;
        msg << "coefficient vector has " << a.size() << " entries for " << nodes.size() << " nodes";
        throw SizeMismatch(msg.str());
    }
}

// Applies A (dense or matrix-free).
class FormOperator {
public:
    FormOperator(const NodeSystem& nodes, Eigen::Index dense_threshold)
        : lambdas_(nodes.lambdas()), sqrt_deltas_(nodes.deltas().cwiseSqrt())
    {
        if (nodes.size() <= dense_threshold)
            dense_ = scaled_form_matrix(nodes);
    }

    void apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const
    {
        if (dense_.size() != 0) {
            y.noalias() = dense_ * x;
            return;
        }
        const Eigen::Index n = lambdas_.size();
        const Eigen::VectorXd sx = sqrt_deltas_.cwiseProduct(x);
        y.resize(n);
        for (Eigen::Index r = 0; r < n; ++r) {
            const double lr = lambdas_[r];
            double acc = 0.0;
            for (Eigen::Index m = 0; m < r; ++m)
                acc += sx[m] / (lambdas_[m] - lr);
            for (Eigen::Index m = r + 1; m < n; ++m)
                acc += sx[m] / (lambdas_[m] - lr);
            y[r] = sqrt_deltas_[r] * acc;
        }
    }

private:
    Eigen::VectorXd lambdas_;
    Eigen::VectorXd sqrt_deltas_;
    Eigen::MatrixXd dense_;
};

Eigen::VectorXd random_unit(std::mt19937_64& rng, Eigen::Index n)
{
    std::normal_distribution<double> normal;
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v[i] = normal(rng);
    return v.normalized();
}

}  // namespace

NodeSystem NodeSystem::from(std::span<const double> lambdas)
{
    const auto n = static_cast<Eigen::Index>(lambdas.size());
    if (n < 2)
        throw std::invalid_argument("NodeSystem: need at least two nodes");
    for (const double x : lambdas)
        if (!std::isfinite(x))
            throw std::invalid_argument("NodeSystem: nodes must be finite");

    std::vector<Eigen::Index> sorted(static_cast<std::size_t>(n));
    std::iota(sorted.begin(), sorted.end(), Eigen::Index{0});
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](Eigen::Index l, Eigen::Index r) { return lambdas[l] < lambdas[r]; });
    const double range = lambdas[sorted.back()] - lambdas[sorted.front()];
    const double min_gap = 1e-9 * range;

    NodeSystem sys;
    sys.lambdas_ = Eigen::Map<const Eigen::VectorXd>(lambdas.data(), n);
    sys.deltas_ = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
    for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
        const Eigen::Index i = sorted[k];
        const Eigen::Index j = sorted[k + 1];
        const double gap = lambdas[j] - lambdas[i];
        if (!(gap > min_gap)) {
            std::ostringstream msg;
            msg << "nodes " << i << " and " << j << " coincide (" << lambdas[i] << ", " << lambdas[j]
                << ")";
            throw DuplicateNodeError(msg.str(), i, j);
        }
        sys.deltas_[i] = std::min(sys.deltas_[i], gap);
        sys.deltas_[j] = std::min(sys.deltas_[j], gap);
    }
    sys.order_.resize(static_cast<std::size_t>(n));
    std::iota(sys.order_.begin(), sys.order_.end(), Eigen::Index{0});
    std::stable_sort(sys.order_.begin(), sys.order_.end(), [&](Eigen::Index l, Eigen::Index r) {
        return sys.deltas_[l] > sys.deltas_[r];
    });
    return sys;
}

NodeSystem compute_deltas(std::span<const double> lambdas)
{
    return NodeSystem::from(lambdas);
}

std::complex<double> bilinear_form(const NodeSystem& nodes, const CoefficientVector& a)
{
    check_sizes(nodes, a);
    const auto& lam = nodes.lambdas();
    std::complex<double> sum(0.0, 0.0);
    for (Eigen::Index m = 0; m < a.size(); ++m)
        for (Eigen::Index n = 0; n < a.size(); ++n)
            if (m != n)
                sum += a[m] * std::conj(a[n]) / (lam[m] - lam[n]);
    return sum;
}

double weighted_norm(const NodeSystem& nodes, const CoefficientVector& a)
{
    check_sizes(nodes, a);
    return (a.cwiseAbs2().array() / nodes.deltas().array()).sum();
}

double verify_inequality(const NodeSystem& nodes, const CoefficientVector& a, double C)
{
    if (!(C > 0.0))
        throw std::domain_error("verify_inequality: constant must be positive");
    return C * weighted_norm(nodes, a) - std::abs(bilinear_form(nodes, a));
}

Eigen::MatrixXd scaled_form_matrix(const NodeSystem& nodes)
{
    const Eigen::Index n = nodes.size();
    const auto& lam = nodes.lambdas();
    const Eigen::VectorXd s = nodes.deltas().cwiseSqrt();
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
            if (r != c)
                A(r, c) = s[r] * s[c] / (lam[c] - lam[r]);
    return A;
}

SpectralEstimate sharp_constant(const NodeSystem& nodes, const SpectralOptions& options)
{
    if (!(options.tol >= 1e-12))
        throw std::domain_error("sharp_constant: tolerance must be >= 1e-12");
    const Eigen::Index n = nodes.size();
    const FormOperator A(nodes, options.dense_threshold);
    std::mt19937_64 rng(options.seed);

    // A^T A = -A^2 is real symmetric PSD; its top eigenvalue is the square of
    // the spectral radius of iA, whose +-mu pairs stall plain power iteration.
    Eigen::VectorXd v = random_unit(rng, n);
    Eigen::VectorXd Av(n), u(n);
    SpectralEstimate est;
    double previous = -1.0;
    int stagnant = 0;
    for (int it = 1; it <= options.max_iterations; ++it) {
        A.apply(v, Av);
        A.apply(Av, u);
        u = -u;
        const double rho = v.dot(u);
        const double c = std::sqrt(std::max(rho, 0.0));
        const double res = (u - rho * v).norm();
        est.iterations = it;
        est.constant = c;
        est.residual = c > 0.0 ? res / c : res;

        const double change = std::abs(c - previous);
        if (it > 2 && (change < options.tol || est.residual < options.tol))
            break;
        stagnant = change < 10.0 * options.tol ? stagnant + 1 : 0;
        previous = c;
        if (stagnant >= 50 && est.residual > options.tol && est.restarts < options.max_restarts) {
            // Keep the current direction but perturb it with a fresh seeded vector.
            v = (v + 1e-3 * random_unit(rng, n)).normalized();
            ++est.restarts;
            stagnant = 0;
            previous = -1.0;
            continue;
        }
        const double norm = u.norm();
        if (norm == 0.0)
            break;
        v = u / norm;
        if (it == options.max_iterations) {
            est.witness = CoefficientVector::Zero(n);
            throw MaxIterationsError("sharp_constant: iteration limit reached", est);
        }
    }

    // Eigenvector of iA for +mu: w = v + i A v / mu; then a = sqrt(delta) .* w.
    A.apply(v, Av);
    CoefficientVector w(n);
    for (Eigen::Index i = 0; i < n; ++i)
        w[i] = {v[i], est.constant > 0.0 ? Av[i] / est.constant : 0.0};
    CoefficientVector a = w.cwiseProduct(nodes.deltas().cwiseSqrt().cast<std::complex<double>>());
    const double scale = std::sqrt(weighted_norm(nodes, a));
    est.witness = scale > 0.0 ? CoefficientVector(a / scale) : a;
    return est;
}

TelescopingValue telescoping_sum(const NodeSystem& nodes, const CoefficientVector& a,
                                 TelescopingMajorant majorant, double transform_tol)
{
    check_sizes(nodes, a);
    const auto& ord = nodes.order();
    const auto& lam = nodes.lambdas();
    const auto& del = nodes.deltas();
    const auto n = static_cast<std::size_t>(nodes.size());

    // psi^ of the chosen majorant at frequency x (unscaled), with error.
    std::map<double, fourier::TransformValue> cache;
    const auto transform = [&](double x) -> std::pair<std::complex<double>, double> {
        if (majorant == TelescopingMajorant::M)
            return {fourier::psi_hat(x), 0.0};
        const double key = std::round(std::abs(x) * 1e12) / 1e12;
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, fourier::numeric_ft(fourier::Transformable::psi_beurling, key,
                                                        transform_tol))
                     .first;
        const auto& tv = it->second;
        return {x < 0.0 ? std::conj(tv.value) : tv.value, tv.err_estimate};
    };
    const auto scaled = [&](double delta, double t) {
        const auto [value, err] = transform(t / delta);
        return std::pair{value / delta, err / delta};
    };

    std::complex<double> total(0.0, 0.0);
    double err = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double dj = del[ord[j]];
        const double dprev = j == 0 ? 0.0 : del[ord[j - 1]];
        for (std::size_t p = j; p < n; ++p) {
            for (std::size_t q = j; q < n; ++q) {
                const Eigen::Index m = ord[p];
                const Eigen::Index k = ord[q];
                const double t = lam[m] - lam[k];
                auto [cur, cur_err] = scaled(dj, t);
                std::complex<double> diff = cur;
                double diff_err = cur_err;
                if (j > 0) {
                    const auto [prev, prev_err] = scaled(dprev, t);
                    diff -= prev;
                    diff_err += prev_err;
                }
                const std::complex<double> weight = a[m] * std::conj(a[k]);
                total += weight * diff;
                err += std::abs(weight) * diff_err;
            }
        }
    }
    TelescopingValue out{total.real(), std::abs(total.imag()), err};
    if (majorant == TelescopingMajorant::M) {
        const double scale = std::max(1.0, weighted_norm(nodes, a));
        if (out.imag_residue > 1e-8 * scale)
            throw std::logic_error("telescoping_sum: imaginary residue exceeds 1e-8");
    }
    return out;
}

double telescoping_identity(const NodeSystem& nodes, const CoefficientVector& a)
{
    const std::complex<double> phi = bilinear_form(nodes, a);
    // -Phi/(pi i) = i Phi / pi
    return (std::complex<double>(0.0, 1.0) * phi / kPi).real() + 2.0 * weighted_norm(nodes, a);
}

}  // namespace extremal::hilbert
