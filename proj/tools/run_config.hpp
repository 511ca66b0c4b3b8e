#pragma once

#include <string>
#include <vector>

#include "splab/model.hpp"

namespace splab::cli {

enum class OutputFormat { csv, json, both };

OutputFormat parse_format(const std::string& name);

// Flat key=value run description.  Every key can be overridden through the
// environment as SHORTPATH_<KEY> (upper-cased).
struct RunConfig {
    ParamSpec spec;

    int n = 50;
    std::vector<int> n_list{30, 32, 34, 36, 38, 40, 42, 44, 46, 48, 50};

    double k = 1.0;
    double b = 0.7;
    bool b_auto = false;  // b = auto: back off the measured critical field
    double s = 1.0;

    double b_lo = 0.0, b_hi = 1.0;
    int b_points = 201;
    int s_points = 101;

    double mingap_b_lo = 0.5, mingap_b_hi = 0.9;
    int coarse_points = 64;
    double gs_tol = 1e-10;
    double margin_frac = 0.025;

    int w_b = -1;
    int d = -1;
};

// Loads defaults, then the file (if non-empty), then environment overrides.
RunConfig load_config(const std::string& path);

std::vector<double> linspace(double lo, double hi, int points);

} // namespace splab::cli
