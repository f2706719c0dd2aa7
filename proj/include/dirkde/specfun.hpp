#pragma once

namespace dirkde {

// ln Gamma(z) for z > 0. Lanczos approximation, absolute error below
// 1e-12 wherever the magnitude of the result allows it.
// Throws DomainError for z <= 0.
double log_gamma(double z);

// psi(z) = Gamma'(z)/Gamma(z) for z > 0: recurrence up to z >= 8, then the
// asymptotic Bernoulli series. Throws DomainError for z <= 0.
double digamma(double z);

// R(z) = sqrt(2 pi) e^{-z} z^{z+1/2} / Gamma(z+1), with R(0) = 0.
// Satisfies 0 < R(z) < 1 for z >= 1 and R increasing on (1, inf).
// Large z goes through the series for log R directly; the naive difference
// of Stirling-sized logs would drown the ~1/(12z) exponent in rounding.
double stirling_ratio(double z);

}  // namespace dirkde
