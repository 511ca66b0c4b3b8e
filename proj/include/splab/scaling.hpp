#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splab/model.hpp"
#include "splab/operators.hpp"
#include "splab/search.hpp"

namespace splab {

// Everything is scored as time = 2^(C n) up to polynomial factors.
// C = 1 is brute-force search, C = 0.5 a bare Grover speedup.
enum class Algorithm {
    short_path,
    adiabatic,
    adiabatic_roland_cerf,
    greedy_grover,
    brute_force,
    grover,
};

const char* algorithm_name(Algorithm a);

struct PerN {
    int n = 0;
    double c_n = 0.0;
    bool flagged = false;  // overlap underflow / gap below the precision floor
};

struct ScalingReport {
    Algorithm algorithm = Algorithm::short_path;
    std::vector<PerN> per_n;      // ordered by n
    double fitted_c = 0.0;        // least-squares slope of log2(time) vs n
    double headline_c = 0.0;      // value at the largest unflagged n
    bool not_applicable = false;
    bool nonconstant = false;     // c_n drifts with n; no constant exponent
    std::string note;
    ParamSpec params_spec;
    double k = 0.0;
    double b = 0.0;
};

// Short path: time ~ 1/overlap at s = 1, so c_n = -log2(overlap)/n.
// When b_critical is supplied, b >= b_critical earns a warning note.
ScalingReport shortpath_exponent(const ParamSpec& spec, double k, double b,
                                 const std::vector<int>& n_list,
                                 std::optional<double> b_critical = std::nullopt,
                                 int threads = 0);

// Adiabatic: time ~ gap_min^-2 with the gap minimized over b of H_Z - b X
// (k = 1, s = 1), so c_n = -2 log2(gap_min)/n; the Roland-Cerf schedule
// halves every c_n.  Sizes whose gap falls below the precision floor are
// flagged and dropped from the fit and headline.
ScalingReport adiabatic_exponent(const ParamSpec& spec,
                                 const std::vector<int>& n_list,
                                 const GapSearchOptions& search,
                                 bool roland_cerf = false, int threads = 0);

// Full comparison: short path, adiabatic (both schedules), greedy-Grover,
// plus the constant baselines.  The greedy row is marked not applicable when
// the potential carries fluctuations.
std::vector<ScalingReport> comparison_report(const ParamSpec& spec, double k,
                                             double b,
                                             const std::vector<int>& n_list,
                                             const GapSearchOptions& adiabatic_search,
                                             int threads = 0);

} // namespace splab
