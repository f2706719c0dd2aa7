#include "dirkde/estimator.hpp"

#include <cmath>
#include <limits>

#include "dirkde/dirichlet.hpp"
#include "dirkde/errors.hpp"
#include "dirkde/specfun.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dirkde {

Bandwidth::Bandwidth(double b) : value(b) {
    if (!(b > 0.0) || b > 1.0)
        throw InvalidBandwidth("Bandwidth: b must lie in (0, 1]");
}

Dataset::Dataset(std::vector<SimplexPoint> points) : points_(std::move(points)) {
    if (points_.empty()) throw DatasetTooSmall("Dataset: need at least one point");
    n_ = points_.size();
    d_ = points_.front().dim();
    log_coords_.resize(n_ * d_);
    log_rem_.resize(n_);
    const double neg_inf = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_; ++i) {
        const SimplexPoint& p = points_[i];
        if (p.dim() != d_) throw PointOutsideSimplex("Dataset: mixed dimensions");
        for (std::size_t k = 0; k < d_; ++k) {
            const double x = p[k];
            log_coords_[i * d_ + k] = x > 0.0 ? std::log(x) : neg_inf;
            if (x == 0.0) has_boundary_ = true;
        }
        const double rem = 1.0 - p.l1_norm();
        log_rem_[i] = rem > 0.0 ? std::log(rem) : neg_inf;
        if (rem <= 0.0) has_boundary_ = true;
    }
}

double estimate_at_raw(const Dataset& data, double b, const double* s_coords,
                       std::size_t d) {
    const std::size_t n = data.n();
    double coef[8];  // d is small; stack coefficients for the inner loop
    std::vector<double> coef_heap;
    double* c = coef;
    if (d > 8) {
        coef_heap.resize(d);
        c = coef_heap.data();
    }
    double s_sum = 0.0;
    double norm = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        c[k] = s_coords[k] / b;
        s_sum += s_coords[k];
        norm -= log_gamma(c[k] + 1.0);
    }
    const double cb = (1.0 - s_sum) / b;
    norm -= log_gamma(cb + 1.0);
    norm += log_gamma(1.0 / b + static_cast<double>(d) + 1.0);

    const double* lx = data.log_coords();
    const double* ly = data.log_rem();
    double acc = 0.0;
    if (!data.has_boundary_point()) {
        if (d == 1) {
            const double c0 = c[0];
            for (std::size_t i = 0; i < n; ++i)
                acc += std::exp(norm + c0 * lx[i] + cb * ly[i]);
        } else if (d == 2) {
            const double c0 = c[0], c1 = c[1];
            for (std::size_t i = 0; i < n; ++i)
                acc += std::exp(norm + c0 * lx[2 * i] + c1 * lx[2 * i + 1] + cb * ly[i]);
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                double e = norm + cb * ly[i];
                for (std::size_t k = 0; k < d; ++k) e += c[k] * lx[i * d + k];
                acc += std::exp(e);
            }
        }
    } else {
        // exact-convention path for datasets with boundary coordinates
        const SimplexPoint s(std::vector<double>(s_coords, s_coords + d));
        const DirichletParams params = kernel_params_at(s, b, 1);
        for (std::size_t i = 0; i < n; ++i) {
            const double lk = log_density(params, data.point(i));
            if (lk != -std::numeric_limits<double>::infinity()) acc += std::exp(lk);
        }
    }
    return acc / static_cast<double>(n);
}

double estimate_at(const Dataset& data, Bandwidth b, const SimplexPoint& s) {
    if (s.dim() != data.dim()) throw PointOutsideSimplex("estimate_at: dimension mismatch");
    return estimate_at_raw(data, b.value, s.coords().data(), data.dim());
}

std::vector<double> estimate_on_grid(const Dataset& data, Bandwidth b,
                                     const SimplexGrid& grid, ExecPolicy policy) {
    if (grid.d != data.dim()) throw PointOutsideSimplex("estimate_on_grid: dimension mismatch");
    const std::size_t m = grid.size();
    const std::size_t d = grid.d;
    std::vector<double> out(m);
#ifdef _OPENMP
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(m); ++k)
            out[static_cast<std::size_t>(k)] =
                estimate_at_raw(data, b.value, grid.nodes.data() + k * d, d);
        return out;
    }
#else
    (void)policy;
#endif
    for (std::size_t k = 0; k < m; ++k)
        out[k] = estimate_at_raw(data, b.value, grid.nodes.data() + k * d, d);
    return out;
}

double loo_estimate_at(const Dataset& data, Bandwidth b, std::size_t i,
                       const SimplexPoint& s) {
    const std::size_t n = data.n();
    if (n < 2) throw DatasetTooSmall("loo_estimate_at: need n >= 2");
    if (i >= n) throw DomainError("loo_estimate_at: index out of range");
    const DirichletParams params = kernel_params_at(s, b.value, 1);
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double lk = log_density(params, data.point(j));
        if (lk != -std::numeric_limits<double>::infinity()) acc += std::exp(lk);
    }
    return acc / static_cast<double>(n - 1);
}

double smoothed_mean(const TargetDensity& target, Bandwidth b, const SimplexPoint& s,
                     const SmoothedMeanMethod& method) {
    const DirichletParams params = kernel_params_at(s, b.value, 1);
    if (method.kind == SmoothedMeanMethod::Kind::MonteCarlo) {
        Rng rng(method.seed);
        double acc = 0.0;
        for (std::size_t i = 0; i < method.mc_samples; ++i)
            acc += target.density(sample_one(params, rng));
        return acc / static_cast<double>(method.mc_samples);
    }
    std::size_t m = method.grid_m;
    if (m == 0) m = target.dim() == 1 ? 400 : 120;
    const SimplexGrid grid = make_grid(target.dim(), m);
    return integrate(
        [&](const SimplexPoint& x) {
            return target.density(x) * std::exp(log_density(params, x));
        },
        grid);
}

double normalization_defect(const Dataset& data, Bandwidth b, const SimplexGrid& grid) {
    const std::vector<double> fhat = estimate_on_grid(data, b, grid);
    double acc = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) acc += grid.weights[k] * fhat[k];
    return acc - 1.0;
}

}  // namespace dirkde
