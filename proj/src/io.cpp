#include "dirkde/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dirkde/bandwidth.hpp"
#include "dirkde/errors.hpp"

namespace dirkde {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_number(const std::string& text, std::size_t line_no) {
    const std::string t = trim(text);
    if (t.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty field");
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": not a number: " + t);
    }
    if (pos != t.size())
        throw ParseError("line " + std::to_string(line_no) + ": trailing junk: " + t);
    return v;
}

// "p/q" or decimal
double parse_fraction(const std::string& text) {
    const std::string t = trim(text);
    const std::size_t slash = t.find('/');
    if (slash == std::string::npos) return std::stod(t);
    return std::stod(t.substr(0, slash)) / std::stod(t.substr(slash + 1));
}

}  // namespace

Dataset ingest_csv_text(const std::string& text, bool closure) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    std::vector<SimplexPoint> points;
    std::size_t expected_parts = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (!saw_header) {  // header row is required and skipped
            saw_header = true;
            continue;
        }
        const std::vector<std::string> fields = split(t, ',');
        if (expected_parts == 0) {
            expected_parts = fields.size();
            if (expected_parts < (closure ? 2u : 1u))
                throw ParseError("line " + std::to_string(line_no) + ": too few columns");
        } else if (fields.size() != expected_parts) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(expected_parts) + " columns");
        }
        std::vector<double> parts(fields.size());
        double sum = 0.0;
        for (std::size_t k = 0; k < fields.size(); ++k) {
            parts[k] = parse_number(fields[k], line_no);
            if (parts[k] < 0.0)
                throw NegativePart("line " + std::to_string(line_no) + ": negative part " +
                                   std::to_string(k + 1));
            sum += parts[k];
        }
        if (closure) {
            if (sum <= 0.0)
                throw ParseError("line " + std::to_string(line_no) + ": zero row sum");
            std::vector<double> coords(parts.begin(), parts.end() - 1);
            for (double& c : coords) c /= sum;
            points.push_back(validate_point(coords));
        } else {
            try {
                points.push_back(validate_point(parts));
            } catch (const Error& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
    }
    if (points.empty()) throw EmptyFile("ingest_csv: no data rows");
    return Dataset(std::move(points));
}

Dataset ingest_csv(const std::string& path, bool closure) {
    std::ifstream in(path);
    if (!in) throw EmptyFile("ingest_csv: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return ingest_csv_text(buf.str(), closure);
}

std::string format_double(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

std::string dataset_csv_string(const std::vector<SimplexPoint>& points) {
    std::ostringstream out;
    if (points.empty()) return "";
    const std::size_t d = points.front().dim();
    for (std::size_t k = 0; k <= d; ++k) out << "part_" << (k + 1) << (k == d ? '\n' : ',');
    for (const SimplexPoint& p : points) {
        for (std::size_t k = 0; k < d; ++k) out << format_double(p[k]) << ',';
        out << format_double(p.remainder()) << '\n';
    }
    return out.str();
}

void write_dataset_csv(const std::vector<SimplexPoint>& points, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // LF endings everywhere
    if (!out) throw Error("write_dataset_csv: cannot open " + path);
    out << dataset_csv_string(points);
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line, section;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '[' && t.back() == ']') {
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos) throw ParseError("config: missing '=' in: " + t);
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw ParseError("config: empty key in: " + t);
        out[section.empty() ? key : section + "." + key] = value;
    }
    return out;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EmptyFile("parse_config_file: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

BandwidthSpec parse_bandwidth_spec(const std::string& text) {
    const std::string t = trim(text);
    BandwidthSpec spec;
    if (t == "rot" || t == "rule_of_thumb") {
        spec.kind = BandwidthSpec::Kind::Rot;
        return spec;
    }
    if (t == "plug_in" || t == "plugin" || t == "plug-in") {
        spec.kind = BandwidthSpec::Kind::PlugIn;
        return spec;
    }
    if (t == "lscv") {
        spec.kind = BandwidthSpec::Kind::Lscv;
        return spec;
    }
    const std::size_t n_pos = t.find("n^");
    if (n_pos != std::string::npos) {
        spec.kind = BandwidthSpec::Kind::Power;
        spec.coef = 1.0;
        if (n_pos > 0) {
            std::string head = trim(t.substr(0, n_pos));
            if (!head.empty() && head.back() == '*') head.pop_back();
            if (!trim(head).empty()) spec.coef = std::stod(trim(head));
        }
        std::string expo = trim(t.substr(n_pos + 2));
        if (!expo.empty() && expo.front() == '(' && expo.back() == ')')
            expo = expo.substr(1, expo.size() - 2);
        try {
            spec.exponent = parse_fraction(expo);
        } catch (const std::exception&) {
            throw ParseError("bandwidth rule: bad exponent in: " + t);
        }
        return spec;
    }
    try {
        spec.fixed = std::stod(t);
    } catch (const std::exception&) {
        throw ParseError("bandwidth rule: cannot parse: " + t);
    }
    spec.kind = BandwidthSpec::Kind::Fixed;
    return spec;
}

double resolve_bandwidth(const BandwidthSpec& spec, const Dataset& data,
                         const SimplexGrid& grid) {
    switch (spec.kind) {
        case BandwidthSpec::Kind::Fixed:
            return spec.fixed;
        case BandwidthSpec::Kind::Rot:
            return rule_of_thumb(data.n(), data.dim()).value;
        case BandwidthSpec::Kind::PlugIn:
            return plug_in(data, grid).b.value;
        case BandwidthSpec::Kind::Lscv:
            return lscv(data, default_lscv_candidates(data.n(), data.dim()), grid).value;
        case BandwidthSpec::Kind::Power:
            return spec.coef * std::pow(static_cast<double>(data.n()), spec.exponent);
    }
    return spec.fixed;
}

namespace {

TargetDensity::Component parse_component(const std::string& text, double weight) {
    const std::string t = trim(text);
    const std::size_t open = t.find('(');
    if (open == std::string::npos || t.back() != ')')
        throw ParseError("target: expected name(args): " + t);
    const std::string name = trim(t.substr(0, open));
    const std::vector<std::string> args = split(t.substr(open + 1, t.size() - open - 2), ',');
    std::vector<double> vals;
    for (const std::string& a : args) vals.push_back(std::stod(trim(a)));
    if (name == "beta") {
        if (vals.size() != 2) throw ParseError("target: beta needs two parameters");
        return {weight, make_params({vals[0]}, vals[1])};
    }
    if (name == "dir" || name == "dirichlet") {
        if (vals.size() < 2) throw ParseError("target: dir needs at least two parameters");
        const double beta = vals.back();
        vals.pop_back();
        return {weight, make_params(std::move(vals), beta)};
    }
    throw ParseError("target: unknown component: " + name);
}

}  // namespace

TargetDensity parse_target(const std::string& text, std::size_t d_hint) {
    const std::string t = trim(text);
    if (t == "uniform") {
        if (d_hint == 0) throw ParseError("target: uniform needs a dimension");
        return TargetDensity::uniform(d_hint);
    }
    if (t == "figure1") return TargetDensity::figure1_first();

    // split on '+' at depth 0
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (char c : t) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '+' && depth == 0) {
            terms.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    terms.push_back(cur);

    std::vector<TargetDensity::Component> components;
    for (const std::string& term : terms) {
        const std::string tt = trim(term);
        const std::size_t star = tt.find('*');
        const std::size_t paren = tt.find('(');
        if (star != std::string::npos && star < paren) {
            const double w = std::stod(trim(tt.substr(0, star)));
            components.push_back(parse_component(tt.substr(star + 1), w));
        } else {
            components.push_back(parse_component(tt, 1.0));
        }
    }
    return TargetDensity(std::move(components));
}

}  // namespace dirkde
