// cubetti command-line interface.
//
// Subcommands:
//   gen      generate a shape in the cubetti-voxels text format
//   compute  Betti numbers of a body via the two gradient sweeps
//   lut      regenerate and audit the vertex classification table
//   bench    scaling benchmark of the construction phase
//
// Exit status: 0 success, 1 oracle mismatch or table diff, 2 hard error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cubetti/bench.hpp"
#include "cubetti/morse.hpp"
#include "cubetti/oracle.hpp"
#include "cubetti/voxel_grid.hpp"

namespace {

cubetti::VoxelGrid read_input(const std::string& path)
{
    if (path == "-") return cubetti::load_grid(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    return cubetti::load_grid(in);
}

void write_output(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << text;
}

int cmd_gen(const std::string& kind, const std::vector<int>& sizes, double density,
            uint64_t seed, const std::string& out_path)
{
    cubetti::ShapeSpec spec;
    if (kind == "solid-box")
        spec.kind = cubetti::ShapeKind::SolidBox;
    else if (kind == "shell")
        spec.kind = cubetti::ShapeKind::Shell;
    else if (kind == "ring")
        spec.kind = cubetti::ShapeKind::Ring;
    else if (kind == "two-components")
        spec.kind = cubetti::ShapeKind::TwoComponents;
    else if (kind == "random")
        spec.kind = cubetti::ShapeKind::Random;
    else
        throw std::runtime_error("unknown shape kind '" + kind + "'");
    spec.nx = sizes[0];
    spec.ny = sizes[1];
    spec.nz = sizes[2];
    spec.density = density;
    spec.seed = seed;
    write_output(out_path, cubetti::save_grid(cubetti::generate(spec)));
    return 0;
}

int cmd_compute(const std::string& input, bool with_oracle, const std::string& dump_path,
                bool no_preprocess)
{
    const cubetti::VoxelGrid grid = read_input(input);
    cubetti::PipelineOptions options;
    options.preprocess = !no_preprocess;
    const cubetti::PipelineResult res = cubetti::run_pipeline(grid, options);
    const cubetti::BettiReport& r = res.report;

    std::printf("%ld %ld %ld %ld\n", r.b0, r.b1, r.b2, r.chi);
    std::printf("critical: c0=%zu c1=%zu c2=%zu monkey=%d\n", r.dim_c0, r.dim_c1, r.dim_c2,
                r.monkey_count);

    if (!dump_path.empty())
        write_output(dump_path, cubetti::dump_critical_csv(res.fpass, res.hpass));

    if (with_oracle) {
        const auto bf = cubetti::oracle::betti_bruteforce(res.body);
        const bool match = bf.b0 == r.b0 && bf.b1 == r.b1 && bf.b2 == r.b2;
        std::printf("oracle: %s\n", match ? "match" : "MISMATCH");
        if (!match) {
            std::fprintf(stderr, "brute force says (%ld, %ld, %ld)\n", bf.b0, bf.b1, bf.b2);
            return 1;
        }
    }
    return 0;
}

int cmd_lut()
{
    const auto regenerated = cubetti::oracle::generate_classification_table();
    int status = 0;

    for (int code : cubetti::oracle::table_diff(regenerated, cubetti::kVertexClassTable)) {
        std::fprintf(stderr, "embedded table differs at 0x%02X: embedded %s, oracle %s\n", code,
                     cubetti::to_string(cubetti::kVertexClassTable[code]),
                     cubetti::to_string(regenerated[code]));
        status = 1;
    }
    const auto expansion = cubetti::oracle::reference_type_expansion();
    for (int code : cubetti::oracle::critical_entry_diff(regenerated, expansion)) {
        std::fprintf(stderr, "critical-type expansion differs at 0x%02X: oracle %s, expansion %s\n",
                     code, cubetti::to_string(regenerated[code]),
                     cubetti::to_string(expansion[code]));
        status = 1;
    }

    std::fputs(cubetti::oracle::dump_table(regenerated).c_str(), stdout);
    return status;
}

int cmd_bench(const std::vector<int>& sides, double density, uint64_t seed)
{
    std::printf("n,n_c,t_construct,t_rank\n");
    std::vector<cubetti::BenchRow> rows;
    for (std::size_t i = 0; i < sides.size(); ++i) {
        const cubetti::BenchRow row = cubetti::bench_one(sides[i], density, seed + i);
        std::printf("%zu,%zu,%.6f,%.6f\n", row.n, row.n_c, row.t_construct, row.t_rank);
        std::fflush(stdout);
        rows.push_back(row);
    }
    if (rows.size() >= 2) std::printf("slope %.3f\n", cubetti::fit_loglog_slope(rows));
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Betti numbers of cubical bodies via ascending/descending gradient sweeps"};
    app.require_subcommand(1);

    std::string gen_kind;
    std::vector<int> gen_sizes{4, 4, 4};
    double gen_density = 0.5;
    uint64_t gen_seed = 0;
    std::string gen_out = "-";
    auto* gen = app.add_subcommand("gen", "generate a shape in the cubetti-voxels format");
    gen->add_option("kind", gen_kind, "solid-box | shell | ring | two-components | random")
        ->required();
    gen->add_option("--sizes", gen_sizes, "dims for solid-box / random")
        ->expected(3)
        ->delimiter(',');
    gen->add_option("--density", gen_density, "fill probability for random");
    gen->add_option("--seed", gen_seed, "seed for random");
    gen->add_option("-o,--output", gen_out, "output path, '-' for stdout");

    std::string compute_input = "-";
    bool compute_oracle = false;
    std::string compute_dump;
    bool compute_no_preprocess = false;
    auto* compute = app.add_subcommand("compute", "compute b0 b1 b2 chi of a body");
    compute->add_option("input", compute_input, "input path, '-' for stdin");
    compute->add_flag("--oracle", compute_oracle,
                      "cross-check against brute-force cubical homology");
    compute->add_option("--dump-critical", compute_dump, "write the critical-point CSV here");
    compute->add_flag("--no-preprocess", compute_no_preprocess,
                      "input is already unstacked; the sweep hard-errors on "
                      "neighborhoods that violate the unstacking invariant");

    auto* lut = app.add_subcommand("lut", "regenerate and audit the classification table");

    std::vector<int> bench_sides{10, 21, 42};
    double bench_density = 0.5;
    uint64_t bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "time construction vs rank across sizes");
    bench->add_option("--sizes", bench_sides, "pre-subdivision cube sides")->delimiter(',');
    bench->add_option("--density", bench_density, "fill probability");
    bench->add_option("--seed", bench_seed, "base seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(gen_kind, gen_sizes, gen_density, gen_seed, gen_out);
        if (compute->parsed())
            return cmd_compute(compute_input, compute_oracle, compute_dump,
                               compute_no_preprocess);
        if (lut->parsed()) return cmd_lut();
        if (bench->parsed()) return cmd_bench(bench_sides, bench_density, bench_seed);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
