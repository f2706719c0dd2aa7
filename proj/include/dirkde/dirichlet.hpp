#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dirkde/rng.hpp"
#include "dirkde/simplex.hpp"

namespace dirkde {

// Parameters (alpha, beta) of the Dirichlet density
//   K_{alpha,beta}(s) = Gamma(|alpha|+beta) / (Gamma(beta) prod Gamma(alpha_i))
//                       * (1-|s|)^{beta-1} prod s_i^{alpha_i-1}.
struct DirichletParams {
    std::vector<double> alpha;
    double beta = 1.0;

    std::size_t dim() const { return alpha.size(); }
    double alpha_sum() const;
    double total() const { return alpha_sum() + beta; }
};

DirichletParams make_params(std::vector<double> alpha, double beta);

// Kernel parameters anchored at s: alpha_i = scale*s_i/b + 1,
// beta = scale*(1-|s|)/b + 1. scale 1 is the estimator kernel, scales 2 and 3
// are the squared/cubed-kernel reparameterizations used by the variance and
// third-moment computations.
DirichletParams kernel_params_at(const SimplexPoint& s, double b, int scale = 1);

// ln K_{alpha,beta}(x), with the boundary convention that a factor
// x^{alpha-1} with alpha = 1 contributes 1 even at x = 0, and -inf when an
// exponent is positive at a zero coordinate (+inf for alpha < 1 at zero).
double log_density(const DirichletParams& p, const SimplexPoint& x);

// ln of the normalizing constant Gamma(|alpha|+beta)/(Gamma(beta) prod Gamma(alpha_i)).
double log_normalizer(const DirichletParams& p);

struct Moments {
    std::vector<double> mean;
    std::vector<double> cov;  // row-major d x d
};

Moments moments(const DirichletParams& p);

SimplexPoint sample_one(const DirichletParams& p, Rng& rng);
std::vector<SimplexPoint> sample(const DirichletParams& p, Rng& rng, std::size_t count);

// Upper bound on sup_s K_{alpha,beta}(s) for parameters all >= 2:
//   sqrt((|alpha|+beta-1) / ((beta-1) prod (alpha_i-1))) * (|alpha|+beta-d-1)^d.
double density_sup_bound(const DirichletParams& p);

struct ParamGradient {
    std::vector<double> d_alpha;  // dK/dalpha_j
    double d_beta = 0.0;          // dK/dbeta
    double density = 0.0;         // K itself
};

// Exact derivatives of the density value with respect to the parameters:
// dK/dalpha_j = (psi(|alpha|+beta) - psi(alpha_j) + ln x_j) K, and the
// analogous expression for beta. Requires x interior.
ParamGradient log_density_param_gradient(const DirichletParams& p, const SimplexPoint& x);

// Envelope for |dK/dalpha_j| when all parameters >= 2:
//   {|ln(|alpha|+beta)| + |ln alpha_j| + |ln x_j|} * density_sup_bound.
// Pass j = dim() for the beta derivative (uses ln beta and ln(1-|x|)).
double param_derivative_bound(const DirichletParams& p, const SimplexPoint& x, std::size_t j);

// sup over the inner region S_delta of |K_{p2} - K_{p1}|, bounded by
//   3 (d+1) f_sup |ln delta| sqrt((|a v a'|+(b v b')-1)/(((b ^ b')-1) prod((a_i ^ a_i')-1)))
//   * (|a v a'|+(b v b')-d-1)^d * ln(|a v a'|+(b v b')) * ||(a',b')-(a,b)||_inf.
// Requires all parameters >= 2 and 0 < delta <= 1/e.
double density_difference_bound(const DirichletParams& p1, const DirichletParams& p2,
                                double delta, double f_sup);

// Same bound without the |ln delta| factor: dominates E|K_{p2}(X) - K_{p1}(X)|
// when X has a density bounded by f_sup.
double expectation_difference_bound(const DirichletParams& p1, const DirichletParams& p2,
                                    double f_sup);

}  // namespace dirkde
