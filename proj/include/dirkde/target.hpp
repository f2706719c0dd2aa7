#pragma once

#include <cstddef>
#include <vector>

#include "dirkde/dirichlet.hpp"
#include "dirkde/rng.hpp"
#include "dirkde/simplex.hpp"

namespace dirkde {

// Known target density: a finite mixture of Dirichlet densities with
// closed-form gradient and Hessian. Weights must sum to 1.
class TargetDensity {
public:
    struct Component {
        double weight;
        DirichletParams params;
    };

    TargetDensity(std::vector<Component> components);

    static TargetDensity uniform(std::size_t d);
    static TargetDensity single(DirichletParams p);
    // 0.4 Dirichlet(1.3, 2, 1) + 0.6 Dirichlet(1.7, 1.2, 2.5), d = 2
    static TargetDensity figure1_first();

    std::size_t dim() const { return components_.front().params.dim(); }
    const std::vector<Component>& components() const { return components_; }

    double density(const SimplexPoint& s) const;
    std::vector<double> gradient(const SimplexPoint& s) const;   // d entries
    std::vector<double> hessian(const SimplexPoint& s) const;    // row-major d x d

    SimplexPoint sample_one(Rng& rng) const;
    std::vector<SimplexPoint> sample(Rng& rng, std::size_t count) const;

    // sup of the density over a probing grid (cheap upper envelope used when
    // an exact sup is not available; exact for the uniform target).
    double sup_on_grid(const SimplexGrid& grid) const;

private:
    std::vector<Component> components_;
};

}  // namespace dirkde
