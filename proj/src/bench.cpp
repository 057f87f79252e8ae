#include "cubetti/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "cubetti/morse.hpp"

namespace cubetti {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

} // namespace

BenchRow bench_one(int side, double density, uint64_t seed, int min_reps)
{
    ShapeSpec spec;
    spec.kind = ShapeKind::Random;
    spec.nx = spec.ny = spec.nz = side;
    spec.density = density;
    spec.seed = seed;
    const VoxelGrid input = generate(spec);

    const auto construct_once = [&] {
        const auto t0 = clock_type::now();
        auto [body, prep] = preprocess(input);
        SweepResult f = sweep(body);
        DualResult h = dual_sweep(body);
        const double t = seconds_since(t0);
        return std::tuple{std::move(body), std::move(f), std::move(h), t};
    };

    auto [body, f, h, t_first] = construct_once();

    // repeat until the construct phase is comfortably measurable
    int reps = std::max(min_reps, int(std::ceil(0.15 / std::max(t_first, 1e-4))));
    reps = std::min(reps, 60);
    std::vector<double> samples{t_first};
    for (int r = 1; r < reps; ++r) samples.push_back(std::get<3>(construct_once()));
    std::sort(samples.begin(), samples.end());

    const auto t0 = clock_type::now();
    const BettiReport report = betti(f, h);
    const double t_rank = seconds_since(t0);

    BenchRow row;
    row.n = std::size_t(body.nx() + 1) * (body.ny() + 1) * (body.nz() + 1);
    row.n_c = report.n_critical;
    row.t_construct = samples[samples.size() / 2];
    row.t_rank = t_rank;
    return row;
}

double fit_loglog_slope(const std::vector<BenchRow>& rows)
{
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(rows.size());
    for (const BenchRow& r : rows) {
        const double x = std::log(double(r.n));
        const double y = std::log(std::max(r.t_construct, 1e-9));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace cubetti
