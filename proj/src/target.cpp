#include "dirkde/target.hpp"

#include <algorithm>
#include <cmath>

#include "dirkde/errors.hpp"

namespace dirkde {

TargetDensity::TargetDensity(std::vector<Component> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw InvalidTarget("TargetDensity: no components");
    const std::size_t d = components_.front().params.dim();
    double wsum = 0.0;
    for (const auto& c : components_) {
        if (c.params.dim() != d) throw InvalidTarget("TargetDensity: mixed dimensions");
        if (c.weight < 0.0) throw InvalidTarget("TargetDensity: negative weight");
        wsum += c.weight;
    }
    if (std::abs(wsum - 1.0) > 1e-12)
        throw InvalidTarget("TargetDensity: weights must sum to 1");
}

TargetDensity TargetDensity::uniform(std::size_t d) {
    return TargetDensity({{1.0, make_params(std::vector<double>(d, 1.0), 1.0)}});
}

TargetDensity TargetDensity::single(DirichletParams p) {
    return TargetDensity({{1.0, std::move(p)}});
}

TargetDensity TargetDensity::figure1_first() {
    return TargetDensity({{0.4, make_params({1.3, 2.0}, 1.0)},
                          {0.6, make_params({1.7, 1.2}, 2.5)}});
}

double TargetDensity::density(const SimplexPoint& s) const {
    double f = 0.0;
    for (const auto& c : components_) {
        const double lk = log_density(c.params, s);
        if (lk == -std::numeric_limits<double>::infinity()) continue;
        f += c.weight * std::exp(lk);
    }
    return f;
}

std::vector<double> TargetDensity::gradient(const SimplexPoint& s) const {
    const std::size_t d = dim();
    std::vector<double> g(d, 0.0);
    const double rem = 1.0 - s.l1_norm();
    for (const auto& c : components_) {
        const double K = c.weight * std::exp(log_density(c.params, s));
        for (std::size_t i = 0; i < d; ++i) {
            const double Li = (c.params.alpha[i] - 1.0) / s[i] - (c.params.beta - 1.0) / rem;
            g[i] += K * Li;
        }
    }
    return g;
}

std::vector<double> TargetDensity::hessian(const SimplexPoint& s) const {
    const std::size_t d = dim();
    std::vector<double> h(d * d, 0.0);
    const double rem = 1.0 - s.l1_norm();
    std::vector<double> L(d);
    for (const auto& c : components_) {
        const double K = c.weight * std::exp(log_density(c.params, s));
        for (std::size_t i = 0; i < d; ++i)
            L[i] = (c.params.alpha[i] - 1.0) / s[i] - (c.params.beta - 1.0) / rem;
        const double cross = (c.params.beta - 1.0) / (rem * rem);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                double v = L[i] * L[j] - cross;
                if (i == j) v -= (c.params.alpha[i] - 1.0) / (s[i] * s[i]);
                h[i * d + j] += K * v;
            }
    }
    return h;
}

SimplexPoint TargetDensity::sample_one(Rng& rng) const {
    double u = rng.uniform();
    for (const auto& c : components_) {
        if (u < c.weight || &c == &components_.back())
            return dirkde::sample_one(c.params, rng);
        u -= c.weight;
    }
    return dirkde::sample_one(components_.back().params, rng);
}

std::vector<SimplexPoint> TargetDensity::sample(Rng& rng, std::size_t count) const {
    std::vector<SimplexPoint> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sample_one(rng));
    return out;
}

double TargetDensity::sup_on_grid(const SimplexGrid& grid) const {
    double sup = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k)
        sup = std::max(sup, density(grid.point(k)));
    return sup;
}

}  // namespace dirkde
