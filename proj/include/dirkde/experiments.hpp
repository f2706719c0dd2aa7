#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dirkde/estimator.hpp"
#include "dirkde/simplex.hpp"
#include "dirkde/target.hpp"

namespace dirkde {

struct BandwidthRule {
    enum class Kind { Fixed, OptMise, OptMae, Power } kind = Kind::Fixed;
    double fixed_b = 0.1;
    double power_c = 1.0;
    double power_exponent = 0.0;

    static BandwidthRule fixed(double b) { return {Kind::Fixed, b, 0, 0}; }
    static BandwidthRule opt_mise() { return {Kind::OptMise, 0, 0, 0}; }
    static BandwidthRule opt_mae() { return {Kind::OptMae, 0, 0, 0}; }
    static BandwidthRule power(double c, double exponent) {
        return {Kind::Power, 0, c, exponent};
    }

    double resolve(std::size_t n, const TargetDensity& target,
                   const SimplexGrid& grid) const;
};

struct ExperimentConfig {
    TargetDensity target;
    std::vector<std::size_t> sample_sizes;  // strictly increasing
    BandwidthRule rule = BandwidthRule::fixed(0.1);
    std::size_t replications = 1;
    std::uint64_t master_seed = 42;
    std::size_t grid_m = 400;

    void validate() const;
};

struct ReportRow {
    std::string experiment;
    std::size_t n = 0;
    double b = 0.0;
    std::string metric;
    double value = 0.0;
    double std_error = 0.0;
    bool pass = true;
};

struct ExperimentReport {
    std::vector<ReportRow> rows;
    double slope = 0.0;
    double slope_half_width = 0.0;
    bool has_slope = false;
    bool passed = true;
};

// Ordinary least squares on (ln n, ln value); half_width = 2 standard errors.
struct SlopeFit {
    double slope = 0.0;
    double half_width = 0.0;
};
SlopeFit fit_log_slope(const std::vector<std::pair<double, double>>& points);

// Empirical CDF versus standard normal.
double kolmogorov_smirnov_statistic(std::vector<double> values);
double normal_cdf(double z);

// Grid-quadrature MISE per n, fitted log-log slope; pass when the slope lies
// within slope_tol of slope_target.
ExperimentReport run_rate_experiment(const ExperimentConfig& cfg, double slope_target,
                                     double slope_tol);

// Empirical Var(fhat(s)) over R replications against the Theorem-1
// approximation in the requested regime; pass when the relative error stays
// within rel_tol for every n.
struct Regime;  // from asymptotics.hpp
ExperimentReport run_variance_experiment(const ExperimentConfig& cfg, const SimplexPoint& s,
                                         bool boundary_regime, double rel_tol);

// (f_b(s) - f(s))/b for the given bandwidths (integral oracle, no sampling);
// pass when the last ratio is within rel_tol of g(s).
ExperimentReport run_bias_experiment(const ExperimentConfig& cfg, const SimplexPoint& s,
                                     const std::vector<double>& bandwidths, double rel_tol);

// R standardized replicates n^{1/2} b^{d/4} (fhat(s) - f_b(s)) / sqrt(psi f);
// with use_true_density, f replaces f_b in the centering (undersmoothing
// variant). Pass when the KS statistic is at most ks_threshold.
ExperimentReport run_normality_experiment(const ExperimentConfig& cfg, const SimplexPoint& s,
                                          double ks_threshold, bool use_true_density = false);

// One growing sample path per seed; sup over the S_{bd}-restricted grid per n.
// Pass when the sup decreases strictly in n for at least required_fraction of
// the seeds.
ExperimentReport run_consistency_experiment(const ExperimentConfig& cfg, std::size_t n_seeds,
                                            double required_fraction);

// Empirical mean integrated absolute error against the Theorem-4 bound;
// pass when empirical <= slack * bound for every n.
ExperimentReport run_mae_experiment(const ExperimentConfig& cfg, double slack);

// CSV with columns experiment,n,b,metric,value,stderr,pass.
void write_report_csv(const ExperimentReport& report, const std::string& path);
std::string report_csv_string(const ExperimentReport& report);

}  // namespace dirkde
