#pragma once

#include <cstddef>
#include <vector>

#include "dirkde/estimator.hpp"
#include "dirkde/simplex.hpp"
#include "dirkde/target.hpp"

namespace dirkde {

struct PilotFit {
    TargetDensity pilot;
    double log_likelihood = 0.0;
    std::vector<double> moment_residuals;  // sample mean minus pilot mean, per part
    bool is_uniform_fallback = false;
};

// Single-Dirichlet pilot by method of moments: matches the sample mean vector
// and the mean per-component variance. Falls back to the uniform pilot when
// the implied concentration is non-positive.
PilotFit fit_pilot(const Dataset& data);

struct PlugInResult {
    Bandwidth b;
    bool fell_back_to_rot = false;  // pilot had g == 0 (e.g. uniform)
    PilotFit pilot;
};

// Theorem-3 optimum evaluated on the pilot density.
PlugInResult plug_in(const Dataset& data, const SimplexGrid& grid);

// LSCV(b) = int fhat^2 - (2/n) sum_i fhat^{(-i)}(X_i); smallest criterion
// wins, ties broken toward larger b.
Bandwidth lscv(const Dataset& data, const std::vector<Bandwidth>& candidates,
               const SimplexGrid& grid);

double lscv_criterion(const Dataset& data, Bandwidth b, const SimplexGrid& grid);

// 25 log-spaced candidates in [0.2 rot, 5 rot].
std::vector<Bandwidth> default_lscv_candidates(std::size_t n, std::size_t d);

// Rate-only rule of thumb n^{-2/(d+4)} with unit constant.
Bandwidth rule_of_thumb(std::size_t n, std::size_t d);

}  // namespace dirkde
