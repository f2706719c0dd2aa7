#include "dirkde/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dirkde/dirichlet.hpp"
#include "dirkde/errors.hpp"
#include "dirkde/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dirkde {

namespace {
constexpr double kSumTolerance = 1e-12;
}

SimplexPoint::SimplexPoint(std::vector<double> coords) : coords_(std::move(coords)) {}

double SimplexPoint::l1_norm() const {
    double s = 0.0;
    for (double c : coords_) s += c;
    return s;
}

double SimplexPoint::remainder() const {
    return std::max(0.0, 1.0 - l1_norm());
}

bool SimplexPoint::is_interior() const {
    for (double c : coords_)
        if (c <= 0.0) return false;
    return l1_norm() < 1.0;
}

SimplexPoint validate_point(const std::vector<double>& coords) {
    double sum = 0.0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const double c = coords[i];
        if (!std::isfinite(c)) throw NonFiniteValue("validate_point: coordinate " + std::to_string(i) + " is not finite");
        if (c < 0.0) throw NegativeCoordinate("validate_point: coordinate " + std::to_string(i) + " is negative");
        sum += c;
    }
    if (sum > 1.0 + kSumTolerance)
        throw SumExceedsOne("validate_point: coordinate sum " + std::to_string(sum) + " exceeds 1");
    std::vector<double> out = coords;
    if (sum > 1.0) {
        // round-trip noise within tolerance: clamp back onto the face
        for (double& c : out) c /= sum;
    }
    return SimplexPoint(std::move(out));
}

bool in_inner_region(const SimplexPoint& s, double delta) {
    const double hi = 1.0 / (static_cast<double>(s.dim()) + 1.0);
    if (!(delta > 0.0) || !(delta < hi))
        throw InvalidDelta("in_inner_region: delta must lie in (0, 1/(d+1))");
    for (std::size_t i = 0; i < s.dim(); ++i)
        if (s[i] < delta) return false;
    return 1.0 - s.l1_norm() >= delta;
}

SimplexPoint SimplexGrid::point(std::size_t k) const {
    return SimplexPoint(std::vector<double>(nodes.begin() + k * d, nodes.begin() + (k + 1) * d));
}

namespace {

double factorial(std::size_t d) {
    double f = 1.0;
    for (std::size_t k = 2; k <= d; ++k) f *= static_cast<double>(k);
    return f;
}

// Volume of {u in [0,1]^d : sum u <= t} (Irwin-Hall CDF), exact for 0 <= t <= d.
double cube_halfspace_volume(std::size_t d, double t) {
    if (t <= 0.0) return 0.0;
    if (t >= static_cast<double>(d)) return 1.0;
    double sum = 0.0;
    double binom = 1.0;
    double sign = 1.0;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(t); ++j) {
        sum += sign * binom * std::pow(t - static_cast<double>(j), static_cast<double>(d));
        sign = -sign;
        binom *= static_cast<double>(d - j) / static_cast<double>(j + 1);
    }
    return sum / factorial(d);
}

// int_0^t cube_halfspace_volume(d, y) dy
double cube_halfspace_volume_integral(std::size_t d, double t) {
    if (t <= 0.0) return 0.0;
    double sum = 0.0;
    double binom = 1.0;
    double sign = 1.0;
    const std::size_t jmax = std::min<std::size_t>(d, static_cast<std::size_t>(t));
    for (std::size_t j = 0; j <= jmax; ++j) {
        sum += sign * binom * std::pow(t - static_cast<double>(j), static_cast<double>(d) + 1.0);
        sign = -sign;
        binom *= static_cast<double>(d - j) / static_cast<double>(j + 1);
    }
    return sum / (factorial(d) * (static_cast<double>(d) + 1.0));
}

}  // namespace

SimplexGrid make_grid(std::size_t d, std::size_t resolution, std::size_t node_cap) {
    if (d < 1 || resolution < 1)
        throw DomainError("make_grid: d and resolution must be at least 1");
    double est = 1.0;
    for (std::size_t k = 0; k < d; ++k) est *= static_cast<double>(resolution);
    if (est > static_cast<double>(node_cap))
        throw ResolutionTooLarge("make_grid: m^d exceeds the node cap");

    const std::size_t m = resolution;
    SimplexGrid grid;
    grid.d = d;
    grid.resolution = m;

    const double cell_vol = std::pow(static_cast<double>(m), -static_cast<double>(d));
    std::vector<std::size_t> idx(d, 0);
    std::vector<double> node(d);
    for (;;) {
        std::size_t sum_idx = 0;
        for (std::size_t k = 0; k < d; ++k) sum_idx += idx[k];
        if (sum_idx <= m - 1) {  // cell touches the simplex
            const double t = static_cast<double>(m - sum_idx);
            if (t >= static_cast<double>(d)) {
                for (std::size_t k = 0; k < d; ++k)
                    node[k] = (static_cast<double>(idx[k]) + 0.5) / static_cast<double>(m);
                grid.nodes.insert(grid.nodes.end(), node.begin(), node.end());
                grid.weights.push_back(cell_vol);
            } else {
                // cell cut by the face: node at the centroid of the clipped
                // region, weight equal to its exact volume
                const double vol = cube_halfspace_volume(d, t);
                const double integ = cube_halfspace_volume_integral(d, t);
                const double centroid = (t * vol - integ) / (static_cast<double>(d) * vol);
                for (std::size_t k = 0; k < d; ++k)
                    node[k] = (static_cast<double>(idx[k]) + centroid) / static_cast<double>(m);
                grid.nodes.insert(grid.nodes.end(), node.begin(), node.end());
                grid.weights.push_back(vol * cell_vol);
            }
        }
        // advance multi-index
        std::size_t k = 0;
        while (k < d) {
            if (++idx[k] < m) break;
            idx[k] = 0;
            ++k;
        }
        if (k == d) break;
    }

    // kill the accumulated rounding so the sum is exactly the simplex volume
    const double target = 1.0 / factorial(d);
    double total = 0.0;
    for (double w : grid.weights) total += w;
    const double scale = target / total;
    for (double& w : grid.weights) w *= scale;
    return grid;
}

double integrate(const std::function<double(const SimplexPoint&)>& fn,
                 const SimplexGrid& grid, ExecPolicy policy) {
    const std::size_t n = grid.size();
    std::vector<double> values(n);
#ifdef _OPENMP
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k)
            values[static_cast<std::size_t>(k)] = fn(grid.point(static_cast<std::size_t>(k)));
    } else
#else
    (void)policy;
#endif
    {
        for (std::size_t k = 0; k < n; ++k) values[k] = fn(grid.point(k));
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (!std::isfinite(values[k]))
            throw NonFiniteValue("integrate: integrand is not finite at node " + std::to_string(k));
        acc += grid.weights[k] * values[k];
    }
    return acc;
}

double integrate_monte_carlo(const std::function<double(const SimplexPoint&)>& fn,
                             std::size_t d, std::size_t n_samples, std::uint64_t seed) {
    Rng rng(seed);
    const DirichletParams flat{std::vector<double>(d, 1.0), 1.0};
    double acc = 0.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        const SimplexPoint x = sample_one(flat, rng);
        const double v = fn(x);
        if (!std::isfinite(v))
            throw NonFiniteValue("integrate_monte_carlo: integrand is not finite");
        acc += v;
    }
    return acc / static_cast<double>(n_samples) / factorial(d);
}

}  // namespace dirkde
