#include <cstdio>
#include <cstdlib>
#include <cstring>

#include <omp.h>

#include "splab/model.hpp"
#include "splab/search.hpp"

// Times the b-sweep kernel: serial reference vs the OpenMP version on the
// same grid, and checks that the two produce bit-identical rows.
int main(int argc, char** argv) {
    using namespace splab;
    const int n = argc > 1 ? std::atoi(argv[1]) : 80;
    const int points = argc > 2 ? std::atoi(argv[2]) : 160;
    const double k = argc > 3 ? std::atof(argv[3]) : 3.0;

    ParamSpec spec;
    spec.delta_v = ParamEntry{1.0, true};
    const ModelParams p = resolve_params(spec, n);

    std::vector<double> grid(static_cast<size_t>(points));
    for (int i = 0; i < points; ++i)
        grid[static_cast<size_t>(i)] = 1.0 * i / (points - 1);

    double t_serial = -omp_get_wtime();
    const auto rows_serial = sweep_b_serial(p, k, 1.0, grid);
    t_serial += omp_get_wtime();

    const int threads = omp_get_max_threads();
    double t_parallel = -omp_get_wtime();
    const auto rows_parallel = sweep_b(p, k, 1.0, grid, threads);
    t_parallel += omp_get_wtime();

    const bool identical =
        rows_serial.size() == rows_parallel.size() &&
        std::memcmp(rows_serial.data(), rows_parallel.data(),
                    rows_serial.size() * sizeof(SweepRow)) == 0;

    std::printf("sweep kernel: n=%d, %d grid points, k=%g\n", n, points, k);
    std::printf("serial     : %.3f s\n", t_serial);
    std::printf("parallel   : %.3f s  (%d threads)\n", t_parallel, threads);
    std::printf("speedup    : %.2f\n", t_serial / t_parallel);
    std::printf("efficiency : %.2f\n", (t_serial / t_parallel) / threads);
    std::printf("bit-identical rows: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
