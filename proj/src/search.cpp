#include "splab/search.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "splab/errors.hpp"
#include "splab/parallel.hpp"

namespace splab {

namespace {

constexpr int kGoldenIterCap = 200;

void check_b_grid(const std::vector<double>& b_grid) {
    if (b_grid.empty())
        throw config_error("sweep_b: empty b grid");
    for (size_t i = 0; i < b_grid.size(); ++i) {
        if (!(b_grid[i] >= 0.0))
            throw config_error("sweep_b: b must be >= 0");
        if (i > 0 && !(b_grid[i] > b_grid[i - 1]))
            throw config_error("sweep_b: grid must be strictly ascending");
    }
}

SweepRow row_at(const ModelParams& p, double k, double s, double b) {
    const SpectralResult r = analyze(p, DriverSpec{k, b, s});
    return SweepRow{b, r.e0, r.e1, r.gap, r.overlap};
}

} // namespace

std::vector<SweepRow> sweep_b(const ModelParams& p, double k, double s,
                              const std::vector<double>& b_grid, int threads) {
    check_b_grid(b_grid);
    std::vector<SweepRow> rows(b_grid.size());
    parallel_for_index(static_cast<int>(b_grid.size()), threads, [&](int i) {
        rows[static_cast<size_t>(i)] = row_at(p, k, s, b_grid[static_cast<size_t>(i)]);
    });
    return rows;
}

std::vector<SweepRow> sweep_b_serial(const ModelParams& p, double k, double s,
                                     const std::vector<double>& b_grid) {
    check_b_grid(b_grid);
    std::vector<SweepRow> rows;
    rows.reserve(b_grid.size());
    for (double b : b_grid) rows.push_back(row_at(p, k, s, b));
    return rows;
}

GoldenResult golden_section_min(const std::function<double(double)>& f,
                                double a, double m, double c, double tol) {
    if (!(a < m && m < c))
        throw bracket_error("golden_section_min: need a < m < c");
    if (!(tol > 0.0))
        throw bracket_error("golden_section_min: tol must be positive");
    const double fm = f(m);
    if (c - a <= tol)
        return GoldenResult{m, fm, true, 0};
    if (!(fm < f(a) && fm < f(c)))
        throw bracket_error("golden_section_min: f(m) must be below both ends");

    const double ratio = 0.618033988749894848;  // 1/phi
    const double comp = 1.0 - ratio;
    double x0 = a, x3 = c, x1, x2, f1, f2;
    if (c - m > m - a) {
        x1 = m;
        f1 = fm;
        x2 = m + comp * (c - m);
        f2 = f(x2);
    } else {
        x2 = m;
        f2 = fm;
        x1 = m - comp * (m - a);
        f1 = f(x1);
    }
    int iter = 0;
    while (x3 - x0 > tol && iter < kGoldenIterCap) {
        if (f2 < f1) {
            x0 = x1;
            x1 = x2;
            f1 = f2;
            x2 = ratio * x1 + comp * x3;
            f2 = f(x2);
        } else {
            x3 = x2;
            x2 = x1;
            f2 = f1;
            x1 = ratio * x2 + comp * x0;
            f1 = f(x1);
        }
        ++iter;
    }
    GoldenResult res;
    res.converged = (x3 - x0 <= tol);
    res.iterations = iter;
    if (f1 < f2) {
        res.x_min = x1;
        res.f_min = f1;
    } else {
        res.x_min = x2;
        res.f_min = f2;
    }
    return res;
}

std::vector<MinGapResult> min_gap(const ModelParams& p, double k, double s,
                                  const GapSearchOptions& opt) {
    if (!(opt.b_lo < opt.b_hi))
        throw config_error("min_gap: b range must satisfy lo < hi");
    if (!(opt.b_lo >= 0.0))
        throw config_error("min_gap: b must be >= 0");
    if (opt.coarse_points < 8)
        throw config_error("min_gap: coarse_points must be >= 8");

    const int m = opt.coarse_points;
    std::vector<double> grid(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        grid[static_cast<size_t>(i)] = opt.b_lo + (opt.b_hi - opt.b_lo) * i / (m - 1);

    std::vector<double> gap(static_cast<size_t>(m)), norm(static_cast<size_t>(m));
    parallel_for_index(m, opt.threads, [&](int i) {
        const SpectralResult r = analyze(p, DriverSpec{k, grid[static_cast<size_t>(i)], s});
        gap[static_cast<size_t>(i)] = r.gap;
        norm[static_cast<size_t>(i)] = r.norm_bound;
    });

    const auto gap_fn = [&](double b) {
        return analyze(p, DriverSpec{k, b, s}).gap;
    };
    const auto flag_floor = [&](MinGapResult& r, double norm_bound) {
        r.below_resolution = r.gap_min < kResolutionFloorFactor * norm_bound;
    };

    // interior coarse minima
    std::vector<int> interior;
    for (int i = 1; i + 1 < m; ++i)
        if (gap[i] <= gap[i - 1] && gap[i] <= gap[i + 1]) interior.push_back(i);

    std::vector<MinGapResult> out;

    if (interior.empty()) {
        const int j = gap.front() <= gap.back() ? 0 : m - 1;
        MinGapResult r;
        r.b_min = grid[static_cast<size_t>(j)];
        r.gap_min = gap[static_cast<size_t>(j)];
        r.bracket_lo = grid[static_cast<size_t>(j == 0 ? 0 : j - 1)];
        r.bracket_hi = grid[static_cast<size_t>(j == 0 ? 1 : j)];
        r.at_boundary = true;
        flag_floor(r, norm[static_cast<size_t>(j)]);
        out.push_back(r);
        return out;
    }

    double best = gap[static_cast<size_t>(interior.front())];
    for (int i : interior) best = std::min(best, gap[static_cast<size_t>(i)]);

    for (int i : interior) {
        // refine minima within the 2x tie threshold of the best one, plus the
        // leftmost one always: it tracks the first gap closing (b_cr) even
        // when a deeper minimum sits further right
        if (gap[static_cast<size_t>(i)] > 2.0 * best && i != interior.front()) continue;
        MinGapResult r;
        r.bracket_lo = grid[static_cast<size_t>(i - 1)];
        r.bracket_hi = grid[static_cast<size_t>(i + 1)];
        if (gap[static_cast<size_t>(i)] < gap[static_cast<size_t>(i - 1)] &&
            gap[static_cast<size_t>(i)] < gap[static_cast<size_t>(i + 1)]) {
            const GoldenResult g = golden_section_min(
                gap_fn, r.bracket_lo, grid[static_cast<size_t>(i)], r.bracket_hi, opt.tol);
            r.b_min = g.x_min;
            r.gap_min = g.f_min;
            r.converged = g.converged;
        } else {
            // flat coarse triple; nothing for golden section to do
            r.b_min = grid[static_cast<size_t>(i)];
            r.gap_min = gap[static_cast<size_t>(i)];
        }
        flag_floor(r, norm[static_cast<size_t>(i)]);
        out.push_back(r);
    }

    // A range edge can undercut every interior minimum (k = 2: the gap keeps
    // shrinking towards large b); report it alongside the refined minima.
    const double edge = std::min(gap.front(), gap.back());
    if (edge < best) {
        const int j = gap.front() <= gap.back() ? 0 : m - 1;
        MinGapResult r;
        r.b_min = grid[static_cast<size_t>(j)];
        r.gap_min = gap[static_cast<size_t>(j)];
        r.bracket_lo = grid[static_cast<size_t>(j == 0 ? 0 : j - 1)];
        r.bracket_hi = grid[static_cast<size_t>(j == 0 ? 1 : j)];
        r.at_boundary = true;
        flag_floor(r, norm[static_cast<size_t>(j)]);
        out.push_back(r);
    }

    std::stable_sort(out.begin(), out.end(), [](const MinGapResult& a, const MinGapResult& b) {
        if (a.gap_min != b.gap_min) return a.gap_min < b.gap_min;
        return a.b_min < b.b_min;
    });
    return out;
}

BcrEstimate bcr_estimate(const ParamSpec& spec, double k, double s,
                         const std::vector<int>& n_list,
                         const GapSearchOptions& opt, double margin_frac) {
    if (n_list.empty())
        throw config_error("bcr_estimate: empty n list");
    if (!(margin_frac >= 0.0 && margin_frac < 1.0))
        throw config_error("bcr_estimate: margin_frac must lie in [0, 1)");

    BcrEstimate est;
    for (int n : n_list) {
        const ModelParams p = resolve_params(spec, n);
        const std::vector<MinGapResult> res = min_gap(p, k, s, opt);
        BcrRow row;
        row.n = n;
        row.global = res.front();
        // leftmost interior minimum = first gap closing as b grows
        row.first_closing = res.front();
        bool found = false;
        for (const MinGapResult& r : res) {
            if (r.at_boundary) continue;
            if (!found || r.b_min < row.first_closing.b_min) {
                row.first_closing = r;
                found = true;
            }
        }
        est.per_n.push_back(row);
    }
    std::stable_sort(est.per_n.begin(), est.per_n.end(),
                     [](const BcrRow& a, const BcrRow& b) { return a.n < b.n; });

    double lo = est.per_n.front().first_closing.b_min, hi = lo;
    for (const BcrRow& r : est.per_n) {
        lo = std::min(lo, r.first_closing.b_min);
        hi = std::max(hi, r.first_closing.b_min);
    }
    est.drifting_location = (hi - lo) > 0.1 * hi;

    const double b_ref = est.per_n.back().first_closing.b_min;
    est.margin = margin_frac * b_ref;
    est.b_work = b_ref - est.margin;
    return est;
}

} // namespace splab
