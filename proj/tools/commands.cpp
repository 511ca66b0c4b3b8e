#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "splab/analytic.hpp"
#include "splab/errors.hpp"
#include "splab/format.hpp"
#include "splab/projected.hpp"
#include "splab/scaling.hpp"
#include "splab/search.hpp"
#include "splab/spectral.hpp"

namespace splab::cli {

namespace {

std::ofstream open_out(const CommandContext& ctx, const std::string& name) {
    std::filesystem::create_directories(ctx.out_dir);
    const std::string path = ctx.out_dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot write output file '" + path + "'");
    return out;
}

std::string params_fields(const ModelParams& p) {
    std::ostringstream os;
    os << "n=" << p.n << " v_max=" << g17(p.v_max) << " delta_v=" << g17(p.delta_v)
       << " delta_w=" << g17(p.delta_w) << " fluct_f=" << g17(p.fluct_f);
    return os.str();
}

std::string params_json(const ModelParams& p) {
    std::ostringstream os;
    os << "{\"n\": " << p.n << ", \"v_max\": " << g17(p.v_max)
       << ", \"delta_v\": " << g17(p.delta_v) << ", \"delta_w\": " << g17(p.delta_w)
       << ", \"fluct_f\": " << g17(p.fluct_f) << "}";
    return os.str();
}

std::string json_bool(bool v) { return v ? "true" : "false"; }

void write_mingap_record(std::ostream& os, const MinGapResult& r,
                         const std::string& indent) {
    os << indent << "{\"b_min\": " << g17(r.b_min) << ", \"gap_min\": " << g17(r.gap_min)
       << ", \"bracket\": [" << g17(r.bracket_lo) << ", " << g17(r.bracket_hi) << "]"
       << ", \"below_resolution\": " << json_bool(r.below_resolution)
       << ", \"at_boundary\": " << json_bool(r.at_boundary)
       << ", \"converged\": " << json_bool(r.converged) << "}";
}

GapSearchOptions search_options(const CommandContext& ctx) {
    GapSearchOptions opt;
    opt.b_lo = ctx.cfg.mingap_b_lo;
    opt.b_hi = ctx.cfg.mingap_b_hi;
    opt.coarse_points = ctx.cfg.coarse_points;
    opt.tol = ctx.cfg.gs_tol;
    opt.threads = ctx.threads;
    return opt;
}

// b = auto: run the per-size search and back off the largest-n crossing
double resolve_field(const CommandContext& ctx, std::string& source) {
    if (!ctx.cfg.b_auto) {
        source = "config";
        return ctx.cfg.b;
    }
    const BcrEstimate est =
        bcr_estimate(ctx.cfg.spec, ctx.cfg.k, ctx.cfg.s, ctx.cfg.n_list,
                     search_options(ctx), ctx.cfg.margin_frac);
    source = "auto";
    return est.b_work;
}

} // namespace

void cmd_sweep(const CommandContext& ctx) {
    const ModelParams p = resolve_params(ctx.cfg.spec, ctx.cfg.n);
    const auto grid = linspace(ctx.cfg.b_lo, ctx.cfg.b_hi, ctx.cfg.b_points);
    const auto rows = sweep_b(p, ctx.cfg.k, ctx.cfg.s, grid, ctx.threads);

    auto out = open_out(ctx, "sweep.csv");
    out << "# shortpath-lab sweep | " << params_fields(p) << " | k=" << g17(ctx.cfg.k)
        << " s=" << g17(ctx.cfg.s) << "\n";
    out << "b,e0,e1,gap,overlap\n";
    for (const SweepRow& r : rows)
        out << g17(r.b) << "," << g17(r.e0) << "," << g17(r.e1) << "," << g17(r.gap)
            << "," << g17(r.overlap) << "\n";
    std::cout << "sweep: " << rows.size() << " rows -> " << ctx.out_dir
              << "/sweep.csv\n";
}

void cmd_mingap(const CommandContext& ctx) {
    const ModelParams p = resolve_params(ctx.cfg.spec, ctx.cfg.n);
    const auto res = min_gap(p, ctx.cfg.k, ctx.cfg.s, search_options(ctx));
    const MinGapResult& top = res.front();

    auto out = open_out(ctx, "mingap.json");
    out << "{\n  \"command\": \"mingap\",\n";
    out << "  \"params\": " << params_json(p) << ",\n";
    out << "  \"driver\": {\"k\": " << g17(ctx.cfg.k) << ", \"s\": " << g17(ctx.cfg.s)
        << "},\n";
    out << "  \"b_min\": " << g17(top.b_min) << ",\n";
    out << "  \"gap_min\": " << g17(top.gap_min) << ",\n";
    out << "  \"bracket\": [" << g17(top.bracket_lo) << ", " << g17(top.bracket_hi)
        << "],\n";
    out << "  \"below_resolution\": " << json_bool(top.below_resolution) << ",\n";
    out << "  \"minima\": [\n";
    for (size_t i = 0; i < res.size(); ++i) {
        write_mingap_record(out, res[i], "    ");
        out << (i + 1 < res.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
    std::cout << "mingap: b_min=" << g17(top.b_min) << " gap_min=" << g17(top.gap_min)
              << " -> " << ctx.out_dir << "/mingap.json\n";
}

void cmd_crossing(const CommandContext& ctx) {
    const ModelParams p = resolve_params(ctx.cfg.spec, ctx.cfg.n);
    const CrossingEstimate analytic = analytic_crossing(p, ctx.cfg.gs_tol);

    std::optional<CrossingEstimate> small;
    try {
        small = small_field_crossing(p);
    } catch (const not_found_error&) {
        small.reset();
    }

    const auto numeric = min_gap(p, ctx.cfg.k, ctx.cfg.s, search_options(ctx));
    // the first interior closing is the b_cr analogue; fall back to the global
    MinGapResult first = numeric.front();
    bool found = false;
    for (const MinGapResult& r : numeric) {
        if (r.at_boundary) continue;
        if (!found || r.b_min < first.b_min) {
            first = r;
            found = true;
        }
    }
    const K2Transitions k2 = k2_transitions(p);

    auto out = open_out(ctx, "crossing.json");
    out << "{\n  \"command\": \"crossing\",\n";
    out << "  \"params\": " << params_json(p) << ",\n";
    out << "  \"driver\": {\"k\": " << g17(ctx.cfg.k) << ", \"s\": " << g17(ctx.cfg.s)
        << "},\n";
    out << "  \"analytic\": " << g17(analytic.b_cross) << ",\n";
    out << "  \"analytic_residual\": " << g17(analytic.residual) << ",\n";
    if (small)
        out << "  \"small_field\": " << g17(small->b_cross) << ",\n";
    else
        out << "  \"small_field\": null,\n";
    out << "  \"numeric\": " << g17(first.b_min) << ",\n";
    out << "  \"numeric_gap\": " << g17(first.gap_min) << ",\n";
    out << "  \"k2_wide\": " << g17(k2.b_wide) << ",\n";
    out << "  \"k2_narrow\": " << g17(k2.b_narrow) << "\n}\n";
    std::cout << "crossing: analytic=" << g17(analytic.b_cross)
              << " numeric=" << g17(first.b_min) << " -> " << ctx.out_dir
              << "/crossing.json\n";
}

void cmd_scaling(const CommandContext& ctx) {
    std::string b_source;
    const double b = resolve_field(ctx, b_source);
    const auto table = comparison_report(ctx.cfg.spec, ctx.cfg.k, b, ctx.cfg.n_list,
                                         search_options(ctx), ctx.threads);
    const ModelParams p_head = resolve_params(ctx.cfg.spec, ctx.cfg.n_list.back());

    if (ctx.format != OutputFormat::json) {
        auto csv = open_out(ctx, "scaling.csv");
        csv << "# shortpath-lab scaling | " << params_fields(p_head)
            << " | k=" << g17(ctx.cfg.k) << " b=" << g17(b) << " s=1 (largest n shown)\n";
        csv << "algorithm,n,c_n,flagged\n";
        for (const ScalingReport& rep : table)
            for (const PerN& r : rep.per_n)
                csv << algorithm_name(rep.algorithm) << "," << r.n << "," << g17(r.c_n)
                    << "," << (r.flagged ? 1 : 0) << "\n";
    }

    if (ctx.format != OutputFormat::csv) {
        auto js = open_out(ctx, "scaling.json");
        js << "{\n  \"command\": \"scaling\",\n";
        js << "  \"params\": " << params_json(p_head) << ",\n";
        js << "  \"k\": " << g17(ctx.cfg.k) << ",\n";
        js << "  \"b\": " << g17(b) << ",\n";
        js << "  \"b_source\": \"" << b_source << "\",\n";
        js << "  \"algorithms\": [\n";
        for (size_t i = 0; i < table.size(); ++i) {
            const ScalingReport& rep = table[i];
            js << "    {\"algorithm\": \"" << algorithm_name(rep.algorithm) << "\""
               << ", \"headline_c\": " << g17(rep.headline_c)
               << ", \"fitted_c\": " << g17(rep.fitted_c)
               << ", \"not_applicable\": " << json_bool(rep.not_applicable)
               << ", \"nonconstant\": " << json_bool(rep.nonconstant) << ", \"note\": \""
               << rep.note << "\"}";
            js << (i + 1 < table.size() ? ",\n" : "\n");
        }
        js << "  ]\n}\n";
    }
    std::cout << "scaling: b=" << g17(b) << " (" << b_source << ")";
    for (const ScalingReport& rep : table)
        if (!rep.not_applicable)
            std::cout << " " << algorithm_name(rep.algorithm) << "=" << g17(rep.headline_c);
    std::cout << " -> " << ctx.out_dir << "/scaling.{csv,json}\n";
}

void cmd_projected(const CommandContext& ctx) {
    if (ctx.cfg.w_b < 0 || ctx.cfg.d < 0)
        throw config_error("projected: w_b and d must be set (config keys or --wb/--d)");
    const ModelParams p = resolve_params(ctx.cfg.spec, ctx.cfg.n);
    const TwoWeightBasis basis = build_basis(p.n, ctx.cfg.w_b, ctx.cfg.d);
    const auto grid = linspace(0.0, 1.0, ctx.cfg.s_points);
    const ProjectedProfile prof = projected_path_profile(p, basis, grid, ctx.threads);

    // with the full ball the projected family must reproduce the
    // symmetric-sector ground energy at every s
    std::string equivalence = "n/a";
    if (ctx.cfg.d == p.n) {
        const auto v = potential_vector(p);
        double maxdiff = 0.0;
        for (double s : grid) {
            const EigenSystem proj = eigensolve(projected_hamiltonian(p, basis, s));
            Matrix dicke = -(1.0 - s) * x_matrix(p.n);
            for (int w = 0; w <= p.n; ++w) dicke(w, w) += s * v[static_cast<size_t>(w)];
            const EigenSystem ref = eigensolve(dicke);
            maxdiff = std::max(maxdiff, std::abs(proj.values(0) - ref.values(0)));
        }
        equivalence = maxdiff <= 1e-10 * std::max(1.0, p.v_max) ? "pass" : "fail";
    }

    if (ctx.format != OutputFormat::json) {
        auto csv = open_out(ctx, "projected.csv");
        csv << "# shortpath-lab projected | " << params_fields(p)
            << " | w_b=" << ctx.cfg.w_b << " d=" << ctx.cfg.d << "\n";
        csv << "s,gap\n";
        for (const GapPoint& pt : prof.points)
            csv << g17(pt.s) << "," << g17(pt.gap) << "\n";
    }

    if (ctx.format != OutputFormat::csv) {
        auto js = open_out(ctx, "projected.json");
        js << "{\n  \"command\": \"projected\",\n";
        js << "  \"params\": " << params_json(p) << ",\n";
        js << "  \"w_b\": " << ctx.cfg.w_b << ",\n";
        js << "  \"d\": " << ctx.cfg.d << ",\n";
        js << "  \"basis_size\": " << basis.size() << ",\n";
        js << "  \"min_gap\": " << g17(prof.min_gap) << ",\n";
        js << "  \"argmin_s\": " << g17(prof.argmin_s) << ",\n";
        js << "  \"success\": " << json_bool(prof.success) << ",\n";
        js << "  \"ground_weight_s1\": " << prof.ground_weight_s1 << ",\n";
        js << "  \"ball_min_potential\": " << g17(prof.ball_min_potential) << ",\n";
        js << "  \"d_equals_n_check\": \"" << equivalence << "\"\n}\n";
    }
    std::cout << "projected: basis=" << basis.size() << " min_gap=" << g17(prof.min_gap)
              << " success=" << json_bool(prof.success) << " -> " << ctx.out_dir
              << "/projected.{csv,json}\n";
}

} // namespace splab::cli
