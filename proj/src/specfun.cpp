#include "dirkde/specfun.hpp"

#include <cmath>

#include "dirkde/errors.hpp"

namespace dirkde {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2 pi)/2

// Lanczos, g = 7, 9 terms (Godfrey's coefficients).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double log_gamma_lanczos(double z) {
    // valid for z >= 0.5
    double acc = kLanczos[0];
    for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (z - 1.0 + k);
    const double t = z + kLanczosG - 0.5;
    return kHalfLog2Pi + (z - 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

double log_gamma(double z) {
    if (!(z > 0.0)) throw DomainError("log_gamma: argument must be positive");
    if (z >= 0.5) return log_gamma_lanczos(z);
    // lnGamma(z) = lnGamma(z+1) - ln z, exact recurrence for tiny arguments
    return log_gamma_lanczos(z + 1.0) - std::log(z);
}

double digamma(double z) {
    if (!(z > 0.0)) throw DomainError("digamma: argument must be positive");
    double acc = 0.0;
    while (z < 8.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // asymptotic series with Bernoulli numbers B2..B14
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    double series = std::log(z) - 0.5 * inv;
    series -= inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
    return acc + series;
}

double stirling_ratio(double z) {
    if (z < 0.0) throw DomainError("stirling_ratio: argument must be nonnegative");
    if (z == 0.0) return 0.0;
    if (z < 10.0) {
        const double expo = kHalfLog2Pi - z + (z + 0.5) * std::log(z) - log_gamma(z + 1.0);
        return std::exp(expo);
    }
    // log R(z) = -(1/(12z) - 1/(360z^3) + 1/(1260z^5) - 1/(1680z^7) + ...)
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    const double log_r = -inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0 - inv2 / 1188.0))));
    return std::exp(log_r);
}

}  // namespace dirkde
