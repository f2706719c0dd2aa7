#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace dirkde {

// Point s in the closed d-simplex {s_i >= 0, sum s_i <= 1}.
class SimplexPoint {
public:
    explicit SimplexPoint(std::vector<double> coords);

    std::size_t dim() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<double>& coords() const { return coords_; }
    double l1_norm() const;                 // ||s||_1
    double remainder() const;               // 1 - ||s||_1, clamped at 0
    bool is_interior() const;               // all s_i > 0 and ||s||_1 < 1

private:
    std::vector<double> coords_;
};

SimplexPoint validate_point(const std::vector<double>& coords);

// true iff 1 - ||s||_1 >= delta and s_i >= delta for all i.
// Requires 0 < delta < 1/(d+1).
bool in_inner_region(const SimplexPoint& s, double delta);

// Quadrature grid over the simplex. Cells of the axis grid of step 1/m that
// are cut by the face ||s||_1 = 1 are clipped exactly (Irwin-Hall volumes)
// and carry their clipped volume and centroid, so the weights sum to 1/d!
// up to rounding; a final rescale makes the sum exact.
struct SimplexGrid {
    std::size_t d = 0;
    std::size_t resolution = 0;
    std::vector<double> nodes;    // row-major, node k at nodes[k*d .. k*d+d)
    std::vector<double> weights;  // volume units, sum = 1/d!

    std::size_t size() const { return weights.size(); }
    SimplexPoint point(std::size_t k) const;
};

inline constexpr std::size_t kDefaultGridNodeCap = 4'000'000;

SimplexGrid make_grid(std::size_t d, std::size_t resolution,
                      std::size_t node_cap = kDefaultGridNodeCap);

enum class ExecPolicy { Serial, Parallel };

// integrate fn over the simplex with the grid rule. Values are computed per
// node (optionally in parallel) and summed in node order, so the result does
// not depend on the thread count. Throws NonFiniteValue on NaN/inf nodes.
double integrate(const std::function<double(const SimplexPoint&)>& fn,
                 const SimplexGrid& grid,
                 ExecPolicy policy = ExecPolicy::Parallel);

// Monte Carlo integral: mean of fn over N uniform points on the simplex
// (Dirichlet(1,...,1;1) draws), scaled by the volume 1/d!.
double integrate_monte_carlo(const std::function<double(const SimplexPoint&)>& fn,
                             std::size_t d, std::size_t n_samples,
                             std::uint64_t seed);

}  // namespace dirkde
