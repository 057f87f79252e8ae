// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "cubetti/bench.hpp"
#include "cubetti/morse.hpp"
#include "cubetti/oracle.hpp"
#include "cubetti/preprocess.hpp"
#include "support/naive_gf2.hpp"

using namespace cubetti;
namespace orc = cubetti::oracle;
namespace ts = cubetti::testsupport;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail)
{
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct CorpusStats {
    long bodies = 0;
    long mismatches = 0;
    long forbidden_errors = 0;
    long other_errors = 0;
    long morse_violations = 0;
    long alexander_violations = 0;
    long diag_warnings = 0;
    long warning_and_mismatch = 0;
    long monkey_bodies = 0;
};

void run_body(const VoxelGrid& input, CorpusStats& stats)
{
    ++stats.bodies;
    try {
        const PipelineResult res = run_pipeline(input);
        const auto bf = orc::betti_bruteforce(res.body);
        const bool match =
            bf.b0 == res.report.b0 && bf.b1 == res.report.b1 && bf.b2 == res.report.b2;
        if (!match) ++stats.mismatches;

        const long morse_lhs = long(res.report.dim_c0) - long(res.report.dim_c1) +
                               long(res.report.dim_c2);
        if (morse_lhs != euler_cell_count(res.body)) ++stats.morse_violations;

        if (res.report.b2 != orc::components_union_find(complement(res.body)) - 1)
            ++stats.alexander_violations;

        const ChainDiagnostic diag = chain_diagnostic(res.fpass, res.hpass);
        if (!diag.identified || !diag.product_zero) {
            ++stats.diag_warnings;
            if (!match) ++stats.warning_and_mismatch;
        }

        if (res.report.monkey_count > 0) ++stats.monkey_bodies;
    } catch (const MorseError& e) {
        if (std::string(e.what()).find("forbidden") != std::string::npos)
            ++stats.forbidden_errors;
        else
            ++stats.other_errors;
    } catch (const std::exception&) {
        ++stats.other_errors;
    }
}

VoxelGrid notched_box()
{
    VoxelGrid g(2, 2, 2);
    for (int k = 0; k < 2; ++k)
        for (int j = 0; j < 2; ++j)
            for (int i = 0; i < 2; ++i)
                if (i || j || k) g.set(i, j, k);
    return g;
}

} // namespace

int main()
{
    // --- criterion 1: golden shapes ---------------------------------------
    {
        struct Golden {
            const char* name;
            VoxelGrid grid;
            long b0, b1, b2;
        };
        ShapeSpec box;
        box.kind = ShapeKind::SolidBox;
        box.nx = 3;
        box.ny = 4;
        box.nz = 5;
        std::vector<Golden> goldens;
        goldens.push_back({"solid-box", generate(box), 1, 0, 0});
        goldens.push_back({"two-components", generate({ShapeKind::TwoComponents}), 2, 0, 0});
        goldens.push_back({"shell", generate({ShapeKind::Shell}), 1, 0, 1});
        goldens.push_back({"ring", generate({ShapeKind::Ring}), 1, 1, 0});

        bool ok = true;
        std::string detail = "golden shapes:";
        bool diag_ok = true;
        for (const Golden& g : goldens) {
            const auto t0 = std::chrono::steady_clock::now();
            const PipelineResult res = run_pipeline(g.grid);
            const auto bf = orc::betti_bruteforce(res.body);
            const double dt = seconds_since(t0);
            const bool match = res.report.b0 == g.b0 && res.report.b1 == g.b1 &&
                               res.report.b2 == g.b2 && bf.b0 == g.b0 && bf.b1 == g.b1 &&
                               bf.b2 == g.b2;
            const ChainDiagnostic diag = chain_diagnostic(res.fpass, res.hpass);
            if (!diag.identified || !diag.product_zero) diag_ok = false;
            char buf[128];
            std::snprintf(buf, sizeof buf, " %s(%ld,%ld,%ld|%.2fs)", g.name, res.report.b0,
                          res.report.b1, res.report.b2, dt);
            detail += buf;
            if (!match || dt >= 5.0) ok = false;
        }
        report(1, ok, detail);

        // --- criterion 6, golden part, reported after the corpus below ----
        static bool golden_diag_ok;
        golden_diag_ok = diag_ok;

        // --- criterion 2: oracle equivalence at scale ----------------------
        CorpusStats stats;
        std::mt19937_64 dims_rng(9001);
        const double densities[3] = {0.2, 0.5, 0.8};
        for (int d = 0; d < 3; ++d)
            for (int i = 0; i < 70; ++i) {
                ShapeSpec spec;
                spec.kind = ShapeKind::Random;
                spec.nx = 2 + int(dims_rng() % 7);
                spec.ny = 2 + int(dims_rng() % 7);
                spec.nz = 2 + int(dims_rng() % 7);
                spec.density = densities[d];
                spec.seed = 100000 + 1000 * d + i;
                run_body(generate(spec), stats);
            }
        for (const Golden& g : goldens) run_body(g.grid, stats);

        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "%ld random bodies (dims 2..8, densities .2/.5/.8): %ld mismatches, "
                      "%ld forbidden-class errors, %ld other errors",
                      stats.bodies - long(goldens.size()), stats.mismatches,
                      stats.forbidden_errors, stats.other_errors);
        report(2, stats.bodies >= 200 && stats.mismatches == 0 && stats.forbidden_errors == 0 &&
                      stats.other_errors == 0,
               buf);

        // --- criterion 3: classification-table validation ------------------
        {
            const auto regenerated = orc::generate_classification_table();
            const auto embedded_diff = orc::table_diff(regenerated, kVertexClassTable);
            const auto expansion = orc::reference_type_expansion();
            const auto critical_diff = orc::critical_entry_diff(regenerated, expansion);
            const bool classes_ok = expansion[0x80] == VertexClass::Index0 &&
                                    expansion[0xFE] == VertexClass::Index2 &&
                                    expansion[0xE8] == VertexClass::MonkeySaddle;
            std::snprintf(buf, sizeof buf,
                          "table regenerated over 256 codes: %zu diffs vs embedded, %zu "
                          "critical-entry diffs vs the expanded type table",
                          embedded_diff.size(), critical_diff.size());
            report(3, embedded_diff.empty() && critical_diff.empty() && classes_ok, buf);
        }

        // --- criterion 4: Morse equality ------------------------------------
        std::snprintf(buf, sizeof buf,
                      "|C0| - |C1| + dim C2 = cell count on %ld bodies: %ld violations",
                      stats.bodies, stats.morse_violations);
        report(4, stats.morse_violations == 0, buf);

        // --- criterion 5: duality check --------------------------------------
        std::snprintf(buf, sizeof buf,
                      "b2 = components(complement) - 1 on %ld bodies: %ld violations",
                      stats.bodies, stats.alexander_violations);
        report(5, stats.alexander_violations == 0, buf);

        // --- criterion 6: chain diagnostic -----------------------------------
        std::snprintf(buf, sizeof buf,
                      "D1^T D2 = 0 on golden shapes: %s; %ld warnings on random bodies, "
                      "%ld coincided with a Betti mismatch",
                      golden_diag_ok ? "yes" : "NO", stats.diag_warnings,
                      stats.warning_and_mismatch);
        report(6, golden_diag_ok && stats.warning_and_mismatch == 0, buf);

        // --- criterion 7: monkey-saddle exercise ------------------------------
        {
            const PipelineResult res = run_pipeline(notched_box());
            const auto bf = orc::betti_bruteforce(res.body);
            const bool notched_ok = res.report.monkey_count == 1 && res.report.b0 == bf.b0 &&
                                    res.report.b1 == bf.b1 && res.report.b2 == bf.b2;
            std::snprintf(buf, sizeof buf,
                          "notched box has %d monkey saddle(s) and matches the oracle; %ld of "
                          "the random bodies contain monkey saddles",
                          res.report.monkey_count, stats.monkey_bodies);
            report(7, notched_ok && stats.monkey_bodies >= 1, buf);
        }
    }

    // --- criterion 8: complexity slope ------------------------------------
    {
        std::vector<BenchRow> rows;
        std::string detail = "construction scaling:";
        for (const int side : {10, 21, 42}) {
            rows.push_back(bench_one(side, 0.5, 1));
            char buf[96];
            std::snprintf(buf, sizeof buf, " n=%zu t=%.4fs (rank %.3fs, n_c=%zu);",
                          rows.back().n, rows.back().t_construct, rows.back().t_rank,
                          rows.back().n_c);
            detail += buf;
        }
        const double slope = fit_loglog_slope(rows);
        char buf[64];
        std::snprintf(buf, sizeof buf, " log-log slope %.3f", slope);
        detail += buf;
        report(8, slope >= 0.7 && slope <= 1.3, detail);
    }

    // --- criterion 9: packed GF(2) vs the naive reference -------------------
    {
        std::mt19937_64 rng(77);
        long bad = 0;
        for (int i = 0; i < 1000; ++i) {
            const std::size_t rows = 1 + rng() % 64, cols = 1 + rng() % 64,
                              inner = 1 + rng() % 64;
            Gf2Matrix a(rows, inner), b(inner, cols);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < inner; ++c)
                    if (rng() & 1) a.set(r, c, true);
            for (std::size_t r = 0; r < inner; ++r)
                for (std::size_t c = 0; c < cols; ++c)
                    if (rng() & 1) b.set(r, c, true);

            if (rank(a) != ts::naive_rank(ts::to_naive(a))) ++bad;
            if (ts::to_naive(multiply(a, b)) !=
                ts::naive_multiply(ts::to_naive(a), ts::to_naive(b)))
                ++bad;
            if (ts::to_naive(transpose(a)) != ts::naive_transpose(ts::to_naive(a))) ++bad;
        }
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "1000 random matrices up to 64x64: %ld disagreements with the naive "
                      "reference",
                      bad);
        report(9, bad == 0, buf);
    }

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    return failures;
}
