#include "dirkde/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "dirkde/errors.hpp"
#include "dirkde/specfun.hpp"

namespace dirkde {

namespace {
constexpr double kFourPi = 12.566370614359172954;
}

double psi_J(const SimplexPoint& s, const std::vector<std::size_t>& J) {
    const std::size_t d = s.dim();
    std::vector<bool> in_J(d, false);
    for (std::size_t j : J) {
        if (j >= d) throw DomainError("psi_J: index out of range");
        in_J[j] = true;
    }
    const double rem = 1.0 - s.l1_norm();
    if (rem <= 0.0) throw BoundaryDivergence("psi_J: 1 - |s| must be positive");
    double prod = rem;
    std::size_t excluded = 0;
    for (std::size_t i = 0; i < d; ++i) {
        if (in_J[i]) {
            ++excluded;
            continue;
        }
        if (s[i] <= 0.0) throw BoundaryDivergence("psi_J: coordinate outside J vanishes");
        prod *= s[i];
    }
    const double expon = static_cast<double>(d - excluded);
    return 1.0 / std::sqrt(std::pow(kFourPi, expon) * prod);
}

double psi(const SimplexPoint& s) { return psi_J(s, {}); }

double g_at(const TargetDensity& target, const SimplexPoint& s) {
    const std::size_t d = target.dim();
    const std::vector<double> grad = target.gradient(s);
    const std::vector<double> hess = target.hessian(s);
    double g = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        g += (1.0 - (static_cast<double>(d) + 1.0) * s[i]) * grad[i];
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const double kron = (i == j) ? 1.0 : 0.0;
            g += 0.5 * s[i] * (kron - s[j]) * hess[i * d + j];
        }
    return g;
}

double bias_approx(const TargetDensity& target, const SimplexPoint& s, double b) {
    return b * g_at(target, s);
}

double boundary_factor(double kappa) {
    if (!(kappa > 0.0)) throw DomainError("boundary_factor: kappa must be positive");
    return std::exp(log_gamma(2.0 * kappa + 1.0) - (2.0 * kappa + 1.0) * std::log(2.0) -
                    2.0 * log_gamma(kappa + 1.0));
}

Regime Regime::boundary(std::vector<std::size_t> J, std::vector<double> kappa) {
    if (J.empty()) throw RegimeMismatch("Regime::boundary: J must be nonempty");
    if (J.size() != kappa.size())
        throw RegimeMismatch("Regime::boundary: J and kappa sizes differ");
    Regime r;
    r.kind = Kind::Boundary;
    r.J = std::move(J);
    r.kappa = std::move(kappa);
    return r;
}

Regime classify_regime(const SimplexPoint& s, double b, double threshold) {
    std::vector<std::size_t> J;
    std::vector<double> kappa;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const double ratio = s[i] / b;
        if (ratio <= threshold && ratio > 0.0) {
            J.push_back(i);
            kappa.push_back(ratio);
        }
    }
    if (J.empty()) return Regime::interior();
    return Regime::boundary(std::move(J), std::move(kappa));
}

double variance_approx(const TargetDensity& target, const SimplexPoint& s,
                       std::size_t n, double b, const Regime& regime) {
    const double d = static_cast<double>(s.dim());
    const double f = target.density(s);
    if (regime.kind == Regime::Kind::Interior) {
        if (!s.is_interior())
            throw BoundaryDivergence("variance_approx: interior regime needs interior s");
        return std::pow(b, -d / 2.0) * psi(s) * f / static_cast<double>(n);
    }
    if (regime.J.empty())
        throw RegimeMismatch("variance_approx: boundary regime with empty J");
    double factor = psi_J(s, regime.J);
    for (double k : regime.kappa) factor *= boundary_factor(k);
    const double cardJ = static_cast<double>(regime.J.size());
    return std::pow(b, -(d + cardJ) / 2.0) * factor * f / static_cast<double>(n);
}

AsymptoticReport mse_approx(const TargetDensity& target, const SimplexPoint& s,
                            std::size_t n, double b) {
    AsymptoticReport r;
    r.psi = psi(s);
    r.g = g_at(target, s);
    r.bias = b * r.g;
    r.variance = variance_approx(target, s, n, b);
    r.mse = r.variance + r.bias * r.bias;
    r.regime = Regime::interior();
    return r;
}

double b_opt_mse(const TargetDensity& target, const SimplexPoint& s, std::size_t n) {
    const double d = static_cast<double>(s.dim());
    const double f = target.density(s);
    const double g = g_at(target, s);
    if (f * g == 0.0) throw DegenerateG("b_opt_mse: f(s) * g(s) must be nonzero");
    const double ratio = d / 4.0 * psi(s) * f / (g * g);
    return std::pow(static_cast<double>(n), -2.0 / (d + 4.0)) * std::pow(ratio, 2.0 / (d + 4.0));
}

MiseFunctionals mise_functionals(const TargetDensity& target, const SimplexGrid& grid) {
    MiseFunctionals out;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const SimplexPoint s = grid.point(k);
        const double w = grid.weights[k];
        const double f = target.density(s);
        const double v = psi(s) * f;
        const double g = g_at(target, s);
        out.int_psi_f += w * v;
        out.int_g2 += w * g * g;
        out.int_sqrt_psi_f += w * std::sqrt(v);
        out.int_abs_g += w * std::abs(g);
    }
    return out;
}

double mise_approx(const TargetDensity& target, std::size_t n, double b,
                   const SimplexGrid& grid) {
    const double d = static_cast<double>(target.dim());
    const MiseFunctionals f = mise_functionals(target, grid);
    return std::pow(b, -d / 2.0) * f.int_psi_f / static_cast<double>(n) + b * b * f.int_g2;
}

double b_opt_mise(const TargetDensity& target, std::size_t n, const SimplexGrid& grid) {
    const double d = static_cast<double>(target.dim());
    const MiseFunctionals f = mise_functionals(target, grid);
    if (!(f.int_g2 > 0.0)) throw DegenerateG("b_opt_mise: int g^2 must be positive");
    const double ratio = d / 4.0 * f.int_psi_f / f.int_g2;
    return std::pow(static_cast<double>(n), -2.0 / (d + 4.0)) * std::pow(ratio, 2.0 / (d + 4.0));
}

double mae_bound(const TargetDensity& target, std::size_t n, double b,
                 const SimplexGrid& grid) {
    const double d = static_cast<double>(target.dim());
    const MiseFunctionals f = mise_functionals(target, grid);
    return std::pow(static_cast<double>(n), -0.5) * std::pow(b, -d / 4.0) *
               std::sqrt(2.0 / 3.14159265358979323846) * f.int_sqrt_psi_f +
           b * f.int_abs_g;
}

double b_opt_mae(const TargetDensity& target, std::size_t n, const SimplexGrid& grid) {
    const double d = static_cast<double>(target.dim());
    const MiseFunctionals f = mise_functionals(target, grid);
    if (!(f.int_abs_g > 0.0)) throw DegenerateG("b_opt_mae: int |g| must be positive");
    const double ratio =
        d / 4.0 * std::sqrt(2.0 / 3.14159265358979323846) * f.int_sqrt_psi_f / f.int_abs_g;
    return std::pow(static_cast<double>(n), -2.0 / (d + 4.0)) * std::pow(ratio, 4.0 / (d + 4.0));
}

double A_b(const SimplexPoint& s, double b) {
    if (!s.is_interior()) throw BoundaryDivergence("A_b: s must be interior");
    const double d = static_cast<double>(s.dim());
    const double rem = 1.0 - s.l1_norm();
    double ln = log_gamma(2.0 * rem / b + 1.0) - 2.0 * log_gamma(rem / b + 1.0);
    for (std::size_t i = 0; i < s.dim(); ++i)
        ln += log_gamma(2.0 * s[i] / b + 1.0) - 2.0 * log_gamma(s[i] / b + 1.0);
    ln += 2.0 * log_gamma(1.0 / b + d + 1.0) - log_gamma(2.0 / b + d + 1.0);
    return std::exp(ln);
}

double A_tilde_b(const SimplexPoint& s, double b) {
    if (!s.is_interior()) throw BoundaryDivergence("A_tilde_b: s must be interior");
    const double d = static_cast<double>(s.dim());
    const double rem = 1.0 - s.l1_norm();
    double ln = log_gamma(3.0 * rem / b + 1.0) - log_gamma(2.0 * rem / b + 1.0) -
                log_gamma(rem / b + 1.0);
    for (std::size_t i = 0; i < s.dim(); ++i)
        ln += log_gamma(3.0 * s[i] / b + 1.0) - log_gamma(2.0 * s[i] / b + 1.0) -
              log_gamma(s[i] / b + 1.0);
    ln += log_gamma(2.0 / b + d + 1.0) + log_gamma(1.0 / b + d + 1.0) -
          log_gamma(3.0 / b + d + 1.0);
    return std::exp(ln);
}

}  // namespace dirkde
