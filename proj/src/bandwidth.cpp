#include "dirkde/bandwidth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dirkde/asymptotics.hpp"
#include "dirkde/dirichlet.hpp"
#include "dirkde/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dirkde {

PilotFit fit_pilot(const Dataset& data) {
    const std::size_t n = data.n();
    const std::size_t d = data.dim();
    if (n < d + 2) throw DatasetTooSmall("fit_pilot: need n >= d + 2");

    std::vector<double> mean(d, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < d; ++k) mean[k] += data.point(i)[k];
    for (double& m : mean) m /= static_cast<double>(n);

    double var_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const double dev = data.point(i)[k] - mean[k];
            var_sum += dev * dev;
        }
    var_sum /= static_cast<double>(n - 1);
    if (var_sum <= 0.0) throw DegenerateSample("fit_pilot: sample has zero variance");

    // sum_k Var_k = sum_k mu_k (1 - mu_k)/(c + 1) for Dirichlet with total c
    double mu_term = 0.0;
    for (double m : mean) mu_term += m * (1.0 - m);
    const double conc = mu_term / var_sum - 1.0;

    const double last = 1.0 - std::accumulate(mean.begin(), mean.end(), 0.0);

    PilotFit fit{TargetDensity::uniform(d)};
    bool usable = conc > 0.0 && last > 0.0;
    if (usable)
        for (double m : mean) usable = usable && m * conc > 0.0;
    if (usable) {
        std::vector<double> alpha(d);
        for (std::size_t k = 0; k < d; ++k) alpha[k] = mean[k] * conc;
        fit.pilot = TargetDensity::single(make_params(std::move(alpha), last * conc));
    } else {
        fit.is_uniform_fallback = true;
    }

    const Moments mom = moments(fit.pilot.components().front().params);
    fit.moment_residuals.resize(d);
    for (std::size_t k = 0; k < d; ++k) fit.moment_residuals[k] = mean[k] - mom.mean[k];

    for (std::size_t i = 0; i < n; ++i) {
        const double f = fit.pilot.density(data.point(i));
        fit.log_likelihood += f > 0.0 ? std::log(f) : -745.0;
    }
    return fit;
}

PlugInResult plug_in(const Dataset& data, const SimplexGrid& grid) {
    PilotFit fit = fit_pilot(data);
    try {
        const double b = b_opt_mise(fit.pilot, data.n(), grid);
        return PlugInResult{Bandwidth(std::min(b, 1.0)), false, std::move(fit)};
    } catch (const DegenerateG&) {
        return PlugInResult{rule_of_thumb(data.n(), data.dim()), true, std::move(fit)};
    }
}

double lscv_criterion(const Dataset& data, Bandwidth b, const SimplexGrid& grid) {
    const std::size_t n = data.n();
    if (n < 2) throw DatasetTooSmall("lscv: need n >= 2");

    const std::vector<double> fhat = estimate_on_grid(data, b, grid);
    double int_f2 = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k)
        int_f2 += grid.weights[k] * fhat[k] * fhat[k];

    // (2/n) sum_i fhat^{(-i)}(X_i); fhat^{(-i)}(X_i) = (n fhat(X_i) - K_{X_i}(X_i))/(n-1)
    const std::size_t d = data.dim();
    std::vector<double> loo(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
        const std::size_t i = static_cast<std::size_t>(ii);
        const SimplexPoint& xi = data.point(i);
        const double fh = estimate_at_raw(data, b.value, xi.coords().data(), d);
        const double self = std::exp(log_density(kernel_params_at(xi, b.value, 1), xi));
        loo[i] = (static_cast<double>(n) * fh - self) / static_cast<double>(n - 1);
    }
    double loo_sum = 0.0;
    for (double v : loo) loo_sum += v;
    return int_f2 - 2.0 * loo_sum / static_cast<double>(n);
}

Bandwidth lscv(const Dataset& data, const std::vector<Bandwidth>& candidates,
               const SimplexGrid& grid) {
    if (candidates.empty()) throw DomainError("lscv: empty candidate list");
    double best_crit = std::numeric_limits<double>::infinity();
    double best_b = candidates.front().value;
    for (const Bandwidth& b : candidates) {
        const double crit = lscv_criterion(data, b, grid);
        if (crit < best_crit || (crit == best_crit && b.value > best_b)) {
            best_crit = crit;
            best_b = b.value;
        }
    }
    return Bandwidth(best_b);
}

std::vector<Bandwidth> default_lscv_candidates(std::size_t n, std::size_t d) {
    const double rot = rule_of_thumb(n, d).value;
    const double lo = std::log(0.2 * rot);
    const double hi = std::log(std::min(5.0 * rot, 1.0));
    std::vector<Bandwidth> out;
    out.reserve(25);
    for (int k = 0; k < 25; ++k)
        out.emplace_back(std::exp(lo + (hi - lo) * k / 24.0));
    return out;
}

Bandwidth rule_of_thumb(std::size_t n, std::size_t d) {
    if (n == 0) throw DomainError("rule_of_thumb: n must be positive");
    return Bandwidth(std::pow(static_cast<double>(n),
                              -2.0 / (static_cast<double>(d) + 4.0)));
}

}  // namespace dirkde
