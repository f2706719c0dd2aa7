#include "dirkde/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dirkde/errors.hpp"
#include "dirkde/specfun.hpp"

namespace dirkde {

double DirichletParams::alpha_sum() const {
    double s = 0.0;
    for (double a : alpha) s += a;
    return s;
}

DirichletParams make_params(std::vector<double> alpha, double beta) {
    if (alpha.empty()) throw DomainError("make_params: alpha must be nonempty");
    for (double a : alpha)
        if (!(a > 0.0)) throw DomainError("make_params: alpha entries must be positive");
    if (!(beta > 0.0)) throw DomainError("make_params: beta must be positive");
    return DirichletParams{std::move(alpha), beta};
}

DirichletParams kernel_params_at(const SimplexPoint& s, double b, int scale) {
    if (!(b > 0.0)) throw InvalidBandwidth("kernel_params_at: b must be positive");
    if (scale < 1 || scale > 3) throw DomainError("kernel_params_at: scale must be 1, 2 or 3");
    const double c = static_cast<double>(scale);
    std::vector<double> alpha(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) alpha[i] = c * s[i] / b + 1.0;
    const double beta = c * (1.0 - s.l1_norm()) / b + 1.0;
    return DirichletParams{std::move(alpha), beta};
}

double log_normalizer(const DirichletParams& p) {
    double ln = log_gamma(p.total()) - log_gamma(p.beta);
    for (double a : p.alpha) ln -= log_gamma(a);
    return ln;
}

double log_density(const DirichletParams& p, const SimplexPoint& x) {
    if (x.dim() != p.dim()) throw PointOutsideSimplex("log_density: dimension mismatch");
    const double inf = std::numeric_limits<double>::infinity();
    double ln = log_normalizer(p);
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const double e = p.alpha[i] - 1.0;
        if (e == 0.0) continue;        // x^0 = 1 even at x = 0
        if (x[i] == 0.0) return e > 0.0 ? -inf : inf;
        ln += e * std::log(x[i]);
    }
    const double eb = p.beta - 1.0;
    if (eb != 0.0) {
        const double rem = 1.0 - x.l1_norm();
        if (rem <= 0.0) return eb > 0.0 ? -inf : inf;
        ln += eb * std::log(rem);
    }
    return ln;
}

Moments moments(const DirichletParams& p) {
    const std::size_t d = p.dim();
    const double tot = p.total();
    Moments m;
    m.mean.resize(d);
    m.cov.resize(d * d);
    for (std::size_t i = 0; i < d; ++i) m.mean[i] = p.alpha[i] / tot;
    const double denom = tot * tot * (tot + 1.0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const double kron = (i == j) ? tot : 0.0;
            m.cov[i * d + j] = p.alpha[i] * (kron - p.alpha[j]) / denom;
        }
    return m;
}

SimplexPoint sample_one(const DirichletParams& p, Rng& rng) {
    const std::size_t d = p.dim();
    std::vector<double> g(d);
    double total = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        g[i] = rng.gamma(p.alpha[i]);
        total += g[i];
    }
    total += rng.gamma(p.beta);
    for (double& v : g) v /= total;
    return SimplexPoint(std::move(g));
}

std::vector<SimplexPoint> sample(const DirichletParams& p, Rng& rng, std::size_t count) {
    std::vector<SimplexPoint> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sample_one(p, rng));
    return out;
}

namespace {

void require_at_least_two(const DirichletParams& p, const char* who) {
    for (double a : p.alpha)
        if (a < 2.0) throw ParamsBelowTwo(std::string(who) + ": all alpha_i must be >= 2");
    if (p.beta < 2.0) throw ParamsBelowTwo(std::string(who) + ": beta must be >= 2");
}

}  // namespace

double density_sup_bound(const DirichletParams& p) {
    require_at_least_two(p, "density_sup_bound");
    const double d = static_cast<double>(p.dim());
    const double tot = p.total();
    double prod = p.beta - 1.0;
    for (double a : p.alpha) prod *= a - 1.0;
    return std::sqrt((tot - 1.0) / prod) * std::pow(tot - d - 1.0, d);
}

ParamGradient log_density_param_gradient(const DirichletParams& p, const SimplexPoint& x) {
    if (!x.is_interior())
        throw PointOnBoundary("log_density_param_gradient: x must be interior");
    const double K = std::exp(log_density(p, x));
    const double psi_tot = digamma(p.total());
    ParamGradient g;
    g.density = K;
    g.d_alpha.resize(p.dim());
    for (std::size_t j = 0; j < p.dim(); ++j)
        g.d_alpha[j] = (psi_tot - digamma(p.alpha[j]) + std::log(x[j])) * K;
    g.d_beta = (psi_tot - digamma(p.beta) + std::log(1.0 - x.l1_norm())) * K;
    return g;
}

double param_derivative_bound(const DirichletParams& p, const SimplexPoint& x, std::size_t j) {
    require_at_least_two(p, "param_derivative_bound");
    const double sup = density_sup_bound(p);
    const double tot = p.total();
    double param_log, coord_log;
    if (j < p.dim()) {
        param_log = std::abs(std::log(p.alpha[j]));
        coord_log = std::abs(std::log(x[j]));
    } else {
        param_log = std::abs(std::log(p.beta));
        coord_log = std::abs(std::log(1.0 - x.l1_norm()));
    }
    return (std::abs(std::log(tot)) + param_log + coord_log) * sup;
}

namespace {

double difference_bound_core(const DirichletParams& p1, const DirichletParams& p2,
                             double f_sup, const char* who) {
    require_at_least_two(p1, who);
    require_at_least_two(p2, who);
    if (p1.dim() != p2.dim()) throw DomainError(std::string(who) + ": dimension mismatch");
    if (!(f_sup > 0.0)) throw DomainError(std::string(who) + ": f_sup must be positive");
    const double d = static_cast<double>(p1.dim());

    double hi_sum = std::max(p1.beta, p2.beta);
    double lo_prod = std::min(p1.beta, p2.beta) - 1.0;
    double delta_inf = std::abs(p1.beta - p2.beta);
    for (std::size_t i = 0; i < p1.dim(); ++i) {
        hi_sum += std::max(p1.alpha[i], p2.alpha[i]);
        lo_prod *= std::min(p1.alpha[i], p2.alpha[i]) - 1.0;
        delta_inf = std::max(delta_inf, std::abs(p1.alpha[i] - p2.alpha[i]));
    }
    return 3.0 * (d + 1.0) * f_sup * std::sqrt((hi_sum - 1.0) / lo_prod) *
           std::pow(hi_sum - d - 1.0, d) * std::log(hi_sum) * delta_inf;
}

}  // namespace

double density_difference_bound(const DirichletParams& p1, const DirichletParams& p2,
                                double delta, double f_sup) {
    if (!(delta > 0.0) || delta > std::exp(-1.0))
        throw InvalidDelta("density_difference_bound: delta must lie in (0, 1/e]");
    return std::abs(std::log(delta)) * difference_bound_core(p1, p2, f_sup, "density_difference_bound");
}

double expectation_difference_bound(const DirichletParams& p1, const DirichletParams& p2,
                                    double f_sup) {
    return difference_bound_core(p1, p2, f_sup, "expectation_difference_bound");
}

}  // namespace dirkde
