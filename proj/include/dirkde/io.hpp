#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dirkde/estimator.hpp"
#include "dirkde/target.hpp"

namespace dirkde {

// Compositional CSV: header row, then rows of d+1 nonnegative parts. With
// closure, each row is divided by its sum and the last part dropped; without,
// rows carry d parts already summing to at most 1. Offending rows are
// rejected with their 1-based line number.
Dataset ingest_csv(const std::string& path, bool closure);
Dataset ingest_csv_text(const std::string& text, bool closure);

// Writes all d+1 parts (the last is 1 - |s|) with 17 significant digits so a
// closure re-read reproduces the sample to full precision.
void write_dataset_csv(const std::vector<SimplexPoint>& points, const std::string& path);
std::string dataset_csv_string(const std::vector<SimplexPoint>& points);

// Flat "key = value" config with [section] headers; section names prefix the
// keys as "section.key". '#' starts a comment.
std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> parse_config_file(const std::string& path);

// Bandwidth argument: a plain number, one of the selector names
// (rot, plug_in, lscv), or a power rule like "n^(-1/3)" or "0.24*n^(-2/5)".
struct BandwidthSpec {
    enum class Kind { Fixed, Rot, PlugIn, Lscv, Power } kind = Kind::Fixed;
    double fixed = 0.1;
    double coef = 1.0;
    double exponent = 0.0;
};
BandwidthSpec parse_bandwidth_spec(const std::string& text);
double resolve_bandwidth(const BandwidthSpec& spec, const Dataset& data,
                         const SimplexGrid& grid);

// Target argument: "uniform", "beta(a,b)", "dir(a_1,...,a_d,beta)",
// "figure1", or a weighted sum "0.4*dir(1.3,2,1)+0.6*dir(1.7,1.2,2.5)".
TargetDensity parse_target(const std::string& text, std::size_t d_hint = 0);

std::string format_double(double v);  // 17 significant digits

}  // namespace dirkde
