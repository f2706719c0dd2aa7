#include "dirkde/concentration.hpp"

#include <cmath>

#include "dirkde/errors.hpp"

namespace dirkde {

double dirichlet_tail_bound(const DirichletParams& p, const std::vector<double>& t) {
    if (t.size() != p.dim()) throw DomainError("dirichlet_tail_bound: t size mismatch");
    double t2 = 0.0;
    for (double v : t) {
        if (!(v > 0.0)) throw DomainError("dirichlet_tail_bound: t entries must be positive");
        t2 += v * v;
    }
    const double d = static_cast<double>(p.dim());
    return std::pow(2.0, d) * std::exp(-2.0 * t2 * (p.total() + 1.0));
}

double hoeffding_bound(std::size_t n, double range_width, double t) {
    if (n == 0 || !(range_width > 0.0))
        throw DomainError("hoeffding_bound: need n >= 1 and positive range width");
    if (t < 0.0) throw DomainError("hoeffding_bound: t must be nonnegative");
    return std::exp(-2.0 * t * t / (static_cast<double>(n) * range_width * range_width));
}

double solve_delta(double x) {
    const double e_inv = std::exp(-1.0);
    if (!(x > 0.0) || x > e_inv)
        throw DomainError("solve_delta: x must lie in (0, 1/e]");
    double lo = 0.0, hi = e_inv;
    // delta |ln delta| is increasing on (0, 1/e]
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double v = mid * std::abs(std::log(mid));
        if (v < x)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-12 * e_inv) break;
    }
    return 0.5 * (lo + hi);
}

DeviationBound large_deviation_bound(const DeviationConfig& cfg) {
    if (cfg.n == 0 || !(cfg.b > 0.0) || cfg.b >= 1.0 || !(cfg.f_sup > 0.0) ||
        !(cfg.a > 0.0) || cfg.d == 0)
        throw PreconditionViolated("large_deviation_bound: invalid configuration");
    const double d = static_cast<double>(cfg.d);
    const double abs_log_b = std::abs(std::log(cfg.b));
    const double cap = std::exp(-1.0) * cfg.f_sup * abs_log_b / std::pow(cfg.b, d + 0.5);
    if (cfg.a > cap)
        throw PreconditionViolated("large_deviation_bound: a exceeds e^{-1} f_sup |ln b| / b^{d+1/2}");

    const double x = std::pow(cfg.b, d + 0.5) * cfg.a / (cfg.f_sup * abs_log_b);
    DeviationBound out;
    out.delta = solve_delta(x);
    const double ratio = std::sqrt(static_cast<double>(cfg.n)) * std::pow(cfg.b, d + 0.5) *
                         cfg.a / (std::abs(std::log(out.delta)) * abs_log_b);
    const double expo = ratio * ratio / (1e4 * d * d * d * d * cfg.f_sup * cfg.f_sup);
    out.value = cfg.C * std::exp(-expo);

    const double b_hi = std::min(std::exp(-16.0 * std::sqrt(2.0)), 1.0 / d);
    const double n_floor = std::pow(100.0, 6.0) * std::pow(d, 6.0);
    out.hypotheses_hold = cfg.b <= b_hi &&
                          cfg.b >= std::pow(static_cast<double>(cfg.n), -1.0 / d) &&
                          static_cast<double>(cfg.n) >= n_floor;
    return out;
}

}  // namespace dirkde
