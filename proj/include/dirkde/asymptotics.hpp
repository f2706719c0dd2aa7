#pragma once

#include <cstddef>
#include <vector>

#include "dirkde/simplex.hpp"
#include "dirkde/target.hpp"

namespace dirkde {

// psi_J(s) = [(4 pi)^{d-|J|} (1-|s|) prod_{i not in J} s_i]^{-1/2};
// psi = psi_emptyset. Throws BoundaryDivergence when a required coordinate
// vanishes.
double psi(const SimplexPoint& s);
double psi_J(const SimplexPoint& s, const std::vector<std::size_t>& J);

// First-order smoothing coefficient
//   g(s) = sum_i (1-(d+1)s_i) d_i f + (1/2) sum_{ij} s_i (1_{i=j}-s_j) d_ij f
// with analytic mixture derivatives.
double g_at(const TargetDensity& target, const SimplexPoint& s);

// bias of fhat at s: b * g(s) to first order.
double bias_approx(const TargetDensity& target, const SimplexPoint& s, double b);

// Gamma(2k+1) / (2^{2k+1} Gamma(k+1)^2); the per-coordinate variance
// inflation at distance kappa*b from a face.
double boundary_factor(double kappa);

struct Regime {
    enum class Kind { Interior, Boundary } kind = Kind::Interior;
    std::vector<std::size_t> J;      // coordinates pinned near a face
    std::vector<double> kappa;       // s_i / b for i in J

    static Regime interior() { return {}; }
    static Regime boundary(std::vector<std::size_t> J, std::vector<double> kappa);
};

// Attribute s to the interior or boundary regime at bandwidth b: coordinate i
// is boundary-like when s_i / b <= threshold. The paper states the two cases
// only as limits; the finite-sample crossover is ours.
Regime classify_regime(const SimplexPoint& s, double b, double threshold = 5.0);

// Interior: n^{-1} b^{-d/2} psi(s) f(s).
// Boundary: n^{-1} b^{-(d+|J|)/2} psi_J(s) f(s) prod_{i in J} boundary_factor(kappa_i).
double variance_approx(const TargetDensity& target, const SimplexPoint& s,
                       std::size_t n, double b, const Regime& regime = Regime::interior());

struct AsymptoticReport {
    double psi = 0.0;
    double g = 0.0;
    double bias = 0.0;
    double variance = 0.0;
    double mse = 0.0;
    Regime regime;
};

AsymptoticReport mse_approx(const TargetDensity& target, const SimplexPoint& s,
                            std::size_t n, double b);

// b_opt = n^{-2/(d+4)} [ (d/4) psi(s) f(s) / g^2(s) ]^{2/(d+4)}.
double b_opt_mse(const TargetDensity& target, const SimplexPoint& s, std::size_t n);

// MISE functionals: the two integrals are quadrature sums over the grid's
// interior nodes (psi's boundary singularity is integrable and nodes never
// touch the boundary).
struct MiseFunctionals {
    double int_psi_f = 0.0;  // int psi f
    double int_g2 = 0.0;     // int g^2
    double int_sqrt_psi_f = 0.0;
    double int_abs_g = 0.0;
};

MiseFunctionals mise_functionals(const TargetDensity& target, const SimplexGrid& grid);

double mise_approx(const TargetDensity& target, std::size_t n, double b,
                   const SimplexGrid& grid);
double b_opt_mise(const TargetDensity& target, std::size_t n, const SimplexGrid& grid);

// L1 bound: n^{-1/2} b^{-d/4} sqrt(2/pi) int sqrt(psi f) + b int |g|,
// and its minimizing bandwidth with the 4/(d+4) exponent.
double mae_bound(const TargetDensity& target, std::size_t n, double b,
                 const SimplexGrid& grid);
double b_opt_mae(const TargetDensity& target, std::size_t n, const SimplexGrid& grid);

// Squared-kernel constant A_b(s) and the third-moment analogue; both are
// evaluated through log-gamma sums only. b^{d/2} A_b(s) -> psi(s) as b -> 0.
double A_b(const SimplexPoint& s, double b);
double A_tilde_b(const SimplexPoint& s, double b);

}  // namespace dirkde
