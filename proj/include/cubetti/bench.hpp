#pragma once

#include <cstdint>
#include <vector>

namespace cubetti {

struct BenchRow {
    std::size_t n = 0;   // lattice vertices of the preprocessed grid
    std::size_t n_c = 0; // total critical points across both passes
    double t_construct = 0.0;
    double t_rank = 0.0;
};

// Generates a random body with pre-subdivision dims side^3 at the given
// density, then times preprocessing + both sweeps + matrix construction
// (median over enough repetitions to be measurable) and the rank phase
// (once). Deterministic for fixed (side, density, seed).
BenchRow bench_one(int side, double density, uint64_t seed, int min_reps = 3);

// least-squares slope of log t_construct against log n
double fit_loglog_slope(const std::vector<BenchRow>& rows);

} // namespace cubetti
