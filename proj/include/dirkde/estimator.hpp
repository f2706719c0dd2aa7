#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dirkde/simplex.hpp"
#include "dirkde/target.hpp"

namespace dirkde {

// Smoothing parameter of the Dirichlet kernel, constrained to (0, 1].
struct Bandwidth {
    double value;
    explicit Bandwidth(double b);
};

// Immutable sample X_1,...,X_n on the simplex. Logs of the coordinates and
// of 1-|X| are precomputed once; they are what the kernel evaluation loop
// actually consumes.
class Dataset {
public:
    explicit Dataset(std::vector<SimplexPoint> points);

    std::size_t n() const { return n_; }
    std::size_t dim() const { return d_; }
    const SimplexPoint& point(std::size_t i) const { return points_[i]; }
    const std::vector<SimplexPoint>& points() const { return points_; }
    bool has_boundary_point() const { return has_boundary_; }

    const double* log_coords() const { return log_coords_.data(); }  // n x d
    const double* log_rem() const { return log_rem_.data(); }        // n

private:
    std::vector<SimplexPoint> points_;
    std::vector<double> log_coords_;
    std::vector<double> log_rem_;
    std::size_t n_ = 0;
    std::size_t d_ = 0;
    bool has_boundary_ = false;
};

// The Dirichlet kernel density estimator
//   fhat_{n,b}(s) = (1/n) sum_i K_{s/b+1, (1-|s|)/b+1}(X_i).
double estimate_at(const Dataset& data, Bandwidth b, const SimplexPoint& s);

// Elementwise estimate_at over the grid nodes. The serial policy is the
// reference implementation; the parallel one farms nodes out to OpenMP
// threads. Both produce bitwise identical output (one independent value per
// node, no shared accumulation).
std::vector<double> estimate_on_grid(const Dataset& data, Bandwidth b,
                                     const SimplexGrid& grid,
                                     ExecPolicy policy = ExecPolicy::Parallel);

// Leave-one-out variant: average of the kernels over all j != i.
double loo_estimate_at(const Dataset& data, Bandwidth b, std::size_t i,
                       const SimplexPoint& s);

struct SmoothedMeanMethod {
    enum class Kind { Integral, MonteCarlo } kind = Kind::Integral;
    std::size_t grid_m = 0;       // 0 = default (400 for d=1, 120 for d>=2)
    std::size_t mc_samples = 0;
    std::uint64_t seed = 0;

    static SmoothedMeanMethod integral(std::size_t m = 0) {
        return {Kind::Integral, m, 0, 0};
    }
    static SmoothedMeanMethod monte_carlo(std::size_t n, std::uint64_t seed) {
        return {Kind::MonteCarlo, 0, n, seed};
    }
};

// f_b(s) = E[fhat_{n,b}(s)] = int f(x) K_{s/b+1,(1-|s|)/b+1}(x) dx,
// equivalently E[f(xi_s)] with xi_s drawn from the kernel itself.
double smoothed_mean(const TargetDensity& target, Bandwidth b, const SimplexPoint& s,
                     const SmoothedMeanMethod& method = SmoothedMeanMethod::integral());

// int fhat - 1 over the grid. The estimator is not an exact density in s,
// so this is a diagnostic, not an error.
double normalization_defect(const Dataset& data, Bandwidth b, const SimplexGrid& grid);

// Internal fast path shared with the experiment harness: evaluates fhat at a
// single node given the precomputed data logs. Exposed for reuse; prefer
// estimate_at.
double estimate_at_raw(const Dataset& data, double b, const double* s_coords,
                       std::size_t d);

}  // namespace dirkde
