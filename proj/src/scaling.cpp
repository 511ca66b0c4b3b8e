#include "splab/scaling.hpp"

#include <algorithm>
#include <cmath>

#include "splab/errors.hpp"
#include "splab/parallel.hpp"
#include "splab/spectral.hpp"

namespace splab {

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::short_path: return "short-path";
        case Algorithm::adiabatic: return "adiabatic";
        case Algorithm::adiabatic_roland_cerf: return "adiabatic-roland-cerf";
        case Algorithm::greedy_grover: return "greedy-grover";
        case Algorithm::brute_force: return "brute-force";
        case Algorithm::grover: return "grover";
    }
    return "?";
}

namespace {

// slope of the least-squares line through (n_i, y_i)
double fit_slope(const std::vector<std::pair<double, double>>& xy) {
    if (xy.size() < 2) return xy.empty() ? 0.0 : xy.front().second / xy.front().first;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : xy) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(xy.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::vector<int> sorted_sizes(const std::vector<int>& n_list) {
    if (n_list.empty())
        throw config_error("scaling: empty n list");
    std::vector<int> ns = n_list;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    return ns;
}

// headline = value at the largest unflagged n; fit runs on log2(time) vs n
void finish_report(ScalingReport& rep, const std::vector<double>& log2_time) {
    std::vector<std::pair<double, double>> pts;
    rep.headline_c = 0.0;
    bool have = false;
    for (size_t i = 0; i < rep.per_n.size(); ++i) {
        if (rep.per_n[i].flagged) continue;
        pts.emplace_back(double(rep.per_n[i].n), log2_time[i]);
        rep.headline_c = rep.per_n[i].c_n;
        have = true;
    }
    if (!have)
        throw numerical_error("scaling: every size is flagged; no data for " +
                              std::string(algorithm_name(rep.algorithm)));
    rep.fitted_c = fit_slope(pts);

    // drifting c_n means there is no constant exponent to quote
    std::vector<double> cs;
    for (const PerN& r : rep.per_n)
        if (!r.flagged) cs.push_back(r.c_n);
    if (cs.size() >= 3) {
        bool increasing = true;
        for (size_t i = 1; i < cs.size(); ++i)
            if (cs[i] <= cs[i - 1]) increasing = false;
        if (increasing && cs.back() - cs.front() > 0.1 * cs.front()) {
            rep.nonconstant = true;
            if (!rep.note.empty()) rep.note += "; ";
            rep.note += "c_n grows with n; no n-independent exponent";
        }
    }
}

struct AdiabaticRow {
    int n = 0;
    double gap_min = 0.0;
    double b_min = 0.0;
    bool below = false;
};

std::vector<AdiabaticRow> adiabatic_rows(const ParamSpec& spec,
                                         const std::vector<int>& ns,
                                         const GapSearchOptions& search,
                                         int threads) {
    GapSearchOptions opt = search;
    opt.threads = threads;
    std::vector<AdiabaticRow> rows(ns.size());
    for (size_t i = 0; i < ns.size(); ++i) {
        const ModelParams p = resolve_params(spec, ns[i]);
        const MinGapResult r = min_gap(p, 1.0, 1.0, opt).front();
        rows[i] = AdiabaticRow{ns[i], r.gap_min, r.b_min, r.below_resolution};
    }
    return rows;
}

ScalingReport adiabatic_from_rows(const std::vector<AdiabaticRow>& rows,
                                  bool roland_cerf) {
    ScalingReport rep;
    rep.algorithm = roland_cerf ? Algorithm::adiabatic_roland_cerf : Algorithm::adiabatic;
    const double factor = roland_cerf ? 1.0 : 2.0;  // time ~ gap^-1 vs gap^-2
    std::vector<double> log2_time(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        const double y = -factor * std::log2(rows[i].gap_min);
        rep.per_n.push_back(PerN{rows[i].n, y / rows[i].n, rows[i].below});
        log2_time[i] = y;
    }
    finish_report(rep, log2_time);
    if (std::any_of(rows.begin(), rows.end(), [](const AdiabaticRow& r) { return r.below; }))
        rep.note += std::string(rep.note.empty() ? "" : "; ") +
                    "sizes with gap below the precision floor were dropped";
    return rep;
}

} // namespace

ScalingReport shortpath_exponent(const ParamSpec& spec, double k, double b,
                                 const std::vector<int>& n_list,
                                 std::optional<double> b_critical, int threads) {
    const std::vector<int> ns = sorted_sizes(n_list);
    ScalingReport rep;
    rep.algorithm = Algorithm::short_path;
    rep.params_spec = spec;
    rep.k = k;
    rep.b = b;

    std::vector<double> overlaps(ns.size());
    parallel_for_index(static_cast<int>(ns.size()), threads, [&](int i) {
        const ModelParams p = resolve_params(spec, ns[static_cast<size_t>(i)]);
        overlaps[static_cast<size_t>(i)] = analyze(p, DriverSpec{k, b, 1.0}).overlap;
    });

    std::vector<double> log2_time(ns.size());
    for (size_t i = 0; i < ns.size(); ++i) {
        const double y = -std::log2(overlaps[i]);
        const bool underflow = overlaps[i] < std::pow(2.0, -double(ns[i]));
        rep.per_n.push_back(PerN{ns[i], y / ns[i], underflow});
        log2_time[i] = y;
    }
    finish_report(rep, log2_time);
    if (b_critical && b >= *b_critical) {
        rep.note += std::string(rep.note.empty() ? "" : "; ") +
                    "warning: b is at or above the estimated critical field";
    }
    return rep;
}

ScalingReport adiabatic_exponent(const ParamSpec& spec,
                                 const std::vector<int>& n_list,
                                 const GapSearchOptions& search,
                                 bool roland_cerf, int threads) {
    const std::vector<int> ns = sorted_sizes(n_list);
    ScalingReport rep = adiabatic_from_rows(adiabatic_rows(spec, ns, search, threads),
                                            roland_cerf);
    rep.params_spec = spec;
    rep.k = 1.0;
    return rep;
}

std::vector<ScalingReport> comparison_report(const ParamSpec& spec, double k,
                                             double b,
                                             const std::vector<int>& n_list,
                                             const GapSearchOptions& adiabatic_search,
                                             int threads) {
    const std::vector<int> ns = sorted_sizes(n_list);
    const std::vector<AdiabaticRow> rows = adiabatic_rows(spec, ns, adiabatic_search, threads);

    // the b_min of the largest resolvable size doubles as the b_cr estimate
    std::optional<double> b_cr;
    for (const AdiabaticRow& r : rows)
        if (!r.below) b_cr = r.b_min;

    std::vector<ScalingReport> table;
    table.push_back(shortpath_exponent(spec, k, b, ns, b_cr, threads));
    table.push_back(adiabatic_from_rows(rows, false));
    table.push_back(adiabatic_from_rows(rows, true));

    ScalingReport greedy;
    greedy.algorithm = Algorithm::greedy_grover;
    greedy.params_spec = spec;
    {
        std::vector<double> log2_time(ns.size());
        bool fluct = false;
        for (size_t i = 0; i < ns.size(); ++i) {
            const ModelParams p = resolve_params(spec, ns[i]);
            if (p.fluct_f > 0.0) fluct = true;
            const double c = greedy_grover_exponent(p);
            greedy.per_n.push_back(PerN{ns[i], c, false});
            log2_time[i] = c * ns[i];
        }
        if (fluct) {
            // greedy descent gets stuck on the parity peaks; its time is not scored
            greedy.not_applicable = true;
            greedy.per_n.clear();
            greedy.note = "not applicable: fluctuations trap greedy descent";
        } else {
            finish_report(greedy, log2_time);
        }
    }
    table.push_back(greedy);

    for (Algorithm base : {Algorithm::brute_force, Algorithm::grover}) {
        ScalingReport rep;
        rep.algorithm = base;
        rep.params_spec = spec;
        const double c = base == Algorithm::brute_force ? 1.0 : 0.5;
        std::vector<double> log2_time(ns.size());
        for (size_t i = 0; i < ns.size(); ++i) {
            rep.per_n.push_back(PerN{ns[i], c, false});
            log2_time[i] = c * ns[i];
        }
        finish_report(rep, log2_time);
        table.push_back(rep);
    }

    for (ScalingReport& rep : table) {
        rep.params_spec = spec;
        if (rep.algorithm == Algorithm::short_path) {
            rep.k = k;
            rep.b = b;
        }
    }
    return table;
}

} // namespace splab
