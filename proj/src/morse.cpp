#include "cubetti/morse.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <sstream>

// Ascending sweep over the diagonal function f(x,y,z) = x+y+z.
//
// Vertices are visited level by level, so every descent target (one step
// down along a coordinate edge) is already resolved when a vertex is
// reached. Each vertex is classified by its 8-cube neighborhood code;
// critical vertices become chain generators and the two descent sinks of
// every index-1 generator fill in its boundary row. The dual pass reuses
// the same sweep verbatim on the reflected complement, which realizes the
// descending sweep of the complement without a second code path.

namespace cubetti {

const char* to_string(VertexClass c)
{
    switch (c) {
    case VertexClass::Regular: return "regular";
    case VertexClass::Index0: return "index0";
    case VertexClass::Index1: return "index1";
    case VertexClass::Index2: return "index2";
    case VertexClass::MonkeySaddle: return "monkey";
    case VertexClass::Forbidden: return "forbidden";
    }
    return "?";
}

uint8_t neighborhood_code(const VoxelGrid& grid, const Vertex& v)
{
    uint8_t code = 0;
    for (int s3 = 0; s3 < 2; ++s3)
        for (int s2 = 0; s2 < 2; ++s2)
            for (int s1 = 0; s1 < 2; ++s1)
                if (grid.occupied(v[0] - 1 + s1, v[1] - 1 + s2, v[2] - 1 + s3))
                    code |= uint8_t(1u << octant_bit(s1, s2, s3));
    return code;
}

uint8_t reverse_code(uint8_t code)
{
    uint8_t out = 0;
    for (int b = 0; b < 8; ++b)
        if (code & (1u << b)) out |= uint8_t(1u << (7 - b));
    return out;
}

uint8_t permute_code(uint8_t code, const std::array<int, 3>& perm)
{
    uint8_t out = 0;
    for (int b = 0; b < 8; ++b) {
        if (!(code & (1u << b))) continue;
        const int s[3] = {b & 1, (b >> 1) & 1, (b >> 2) & 1};
        out |= uint8_t(1u << octant_bit(s[perm[0]], s[perm[1]], s[perm[2]]));
    }
    return out;
}

VertexClass classify(uint8_t code) { return kVertexClassTable[code]; }

namespace {

std::string vertex_str(const Vertex& v)
{
    std::ostringstream ss;
    ss << '(' << v[0] << ", " << v[1] << ", " << v[2] << ')';
    return ss.str();
}

std::string code_str(uint8_t code)
{
    static const char* hex = "0123456789ABCDEF";
    return std::string("0x") + hex[code >> 4] + hex[code & 15];
}

// axis of the greatest decreasing edge lying in the body (z > y > x)
int down_any_axis(uint8_t code)
{
    for (int d = 2; d >= 0; --d)
        if (code & kDecreasingEdgeCubes[d]) return d;
    throw std::invalid_argument("no decreasing edge at code " + code_str(code));
}

// Decreasing boundary edges of an index-1 vertex and the opposite-label
// pick. An edge lies in the boundary iff the cubes around it are neither
// all absent nor all present. When three such edges exist, exactly one
// axis pair spans a square face lying in the boundary (one of its two
// cubes occupied); those two edges share a label and the remaining edge
// carries the other.
std::pair<int, int> index1_down_axes(uint8_t code)
{
    int dirs[3];
    int n = 0;
    for (int d = 0; d < 3; ++d) {
        const uint8_t m = code & kDecreasingEdgeCubes[d];
        if (m != 0 && m != kDecreasingEdgeCubes[d]) dirs[n++] = d;
    }
    if (n == 2) return {dirs[1], dirs[0]}; // dirs ascending, so dirs[1] is greatest
    if (n == 3) {
        int pair_a = -1, pair_b = -1, pairs = 0;
        const int axis_pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        for (const auto& ap : axis_pairs) {
            const uint8_t sq = kDecreasingEdgeCubes[ap[0]] & kDecreasingEdgeCubes[ap[1]];
            if (std::popcount(uint8_t(code & sq)) == 1) {
                pair_a = ap[0];
                pair_b = ap[1];
                ++pairs;
            }
        }
        if (pairs != 1)
            throw MorseError("ambiguous edge labels at index-1 code " + code_str(code));
        // highest edge overall is z (axis 2, present since n == 3)
        if (pair_a == 2 || pair_b == 2) {
            const int lone = 3 - pair_a - pair_b; // axis outside the pair
            return {2, lone};
        }
        return {2, std::max(pair_a, pair_b)}; // z is the lone edge
    }
    throw MorseError("index-1 vertex with " + std::to_string(n) +
                     " decreasing boundary edges, code " + code_str(code));
}

Vertex step_down(const Vertex& v, int axis)
{
    Vertex w = v;
    w[axis] -= 1;
    return w;
}

} // namespace

DescentTargets descent_targets(const VoxelGrid& grid, const Vertex& v, VertexClass cls)
{
    const uint8_t code = neighborhood_code(grid, v);
    switch (cls) {
    case VertexClass::Regular:
    case VertexClass::Index2:
        return {step_down(v, down_any_axis(code)), std::nullopt, std::nullopt};
    case VertexClass::Index1: {
        const auto [a, b] = index1_down_axes(code);
        return {step_down(v, a), step_down(v, b), std::nullopt};
    }
    case VertexClass::MonkeySaddle:
        return {step_down(v, 0), step_down(v, 1),
                std::make_pair(v, step_down(v, 2))};
    case VertexClass::Index0:
        throw std::invalid_argument("descent_targets: index-0 vertex has no decreasing edge");
    case VertexClass::Forbidden:
        break;
    }
    throw MorseError("unstacking invariant violated at " + vertex_str(v) +
                     ": forbidden neighborhood code " + code_str(code));
}

SweepResult sweep(const VoxelGrid& grid)
{
    const int nx = grid.nx(), ny = grid.ny(), nz = grid.nz();
    SweepResult out;
    out.lattice = {nx + 1, ny + 1, nz + 1};
    out.gf.assign(std::size_t(nx + 1) * (ny + 1) * (nz + 1), kGfUnset);

    std::vector<std::array<uint32_t, 2>> rows; // sink pair per c1 row, or unset

    const auto vid = [&](int x, int y, int z) {
        return std::size_t(x) + std::size_t(nx + 1) * (std::size_t(y) + std::size_t(ny + 1) * z);
    };
    const auto gf_of = [&](const Vertex& w) {
        const uint32_t g = out.gf[vid(w[0], w[1], w[2])];
        if (g == kGfUnset)
            throw MorseError("sweep order violation: descent into unvisited vertex " +
                             vertex_str(w));
        return g;
    };
    const auto push_row = [&](uint32_t a, uint32_t b) {
        if (a != b)
            rows.push_back({a, b});
        else
            rows.push_back({kGfUnset, kGfUnset});
    };

    for (int s = 0; s <= nx + ny + nz; ++s)
        for (int x = std::max(0, s - ny - nz); x <= std::min(nx, s); ++x)
            for (int y = std::max(0, s - x - nz); y <= std::min(ny, s - x); ++y) {
                const int z = s - x - y;
                const Vertex v{x, y, z};
                const uint8_t code = neighborhood_code(grid, v);
                if (code == 0) continue; // not a vertex of the body
                const VertexClass cls = classify(code);
                switch (cls) {
                case VertexClass::Regular:
                case VertexClass::Index2:
                    out.gf[vid(x, y, z)] = gf_of(step_down(v, down_any_axis(code)));
                    break;
                case VertexClass::Index0: {
                    const uint32_t ord = uint32_t(out.c0.size());
                    out.c0.push_back({v, cls, false, ord});
                    out.gf[vid(x, y, z)] = ord;
                    break;
                }
                case VertexClass::Index1: {
                    const auto [da, db] = index1_down_axes(code);
                    const uint32_t a = gf_of(step_down(v, da));
                    const uint32_t b = gf_of(step_down(v, db));
                    out.c1.push_back({v, cls, false, uint32_t(out.c1.size())});
                    out.gf[vid(x, y, z)] = a;
                    push_row(a, b);
                    break;
                }
                case VertexClass::MonkeySaddle: {
                    const uint32_t a = gf_of(step_down(v, 0)); // -x
                    const uint32_t b = gf_of(step_down(v, 1)); // -y
                    const uint32_t c = gf_of(step_down(v, 2)); // -z, double's second sink
                    out.c1.push_back({v, cls, false, uint32_t(out.c1.size())});
                    out.c1.push_back({v, cls, true, uint32_t(out.c1.size())});
                    out.gf[vid(x, y, z)] = a;
                    push_row(a, b);
                    push_row(a, c); // double descends via the fictive edge to v, then -z
                    ++out.monkey_count;
                    break;
                }
                case VertexClass::Forbidden:
                    throw MorseError("unstacking invariant violated at " + vertex_str(v) +
                                     ": forbidden neighborhood code " + code_str(code));
                }
            }

    out.d1 = Gf2Matrix(rows.size(), out.c0.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r][0] != kGfUnset) {
            out.d1.set(r, rows[r][0], true);
            out.d1.set(r, rows[r][1], true);
        }
    return out;
}

DualResult dual_sweep(const VoxelGrid& grid)
{
    const VoxelGrid mirrored = reflect(complement(grid));
    SweepResult h = sweep(mirrored);

    std::size_t p0_index = h.c0.size();
    for (std::size_t i = 0; i < h.c0.size(); ++i)
        if (h.c0[i].vertex == Vertex{0, 0, 0}) {
            p0_index = i;
            break;
        }
    if (p0_index == h.c0.size())
        throw MorseError("no corner sink in the complement: the body touches the bounding "
                         "box; preprocess or pad the input first");

    const auto unreflect = [&](Vertex v) {
        return Vertex{grid.nx() - v[0], grid.ny() - v[1], grid.nz() - v[2]};
    };

    DualResult out;
    out.c2_dim = h.c0.size() - 1;
    out.d2 = delete_column(h.d1, p0_index);
    out.p0 = h.c0[p0_index];
    out.p0.vertex = unreflect(out.p0.vertex);
    out.monkey_count = h.monkey_count;

    out.c2.reserve(out.c2_dim);
    for (std::size_t i = 0; i < h.c0.size(); ++i) {
        if (i == p0_index) continue;
        CriticalPoint p = h.c0[i];
        p.vertex = unreflect(p.vertex);
        p.ordinal = uint32_t(out.c2.size());
        out.c2.push_back(p);
    }
    out.c1h.reserve(h.c1.size());
    for (CriticalPoint p : h.c1) {
        p.vertex = unreflect(p.vertex);
        out.c1h.push_back(p);
    }
    return out;
}

BettiReport betti(const SweepResult& f, const DualResult& h)
{
    if (h.c1h.size() != f.c1.size())
        throw MorseError("index-1 counts differ between passes: " +
                         std::to_string(f.c1.size()) + " ascending vs " +
                         std::to_string(h.c1h.size()) + " descending");

    BettiReport r;
    r.dim_c0 = f.c0.size();
    r.dim_c1 = f.c1.size();
    r.dim_c2 = h.c2_dim;
    r.rank_d1 = rank(f.d1);
    r.rank_d2 = rank(h.d2);
    r.monkey_count = f.monkey_count;

    r.b0 = long(r.dim_c0) - long(r.rank_d1);
    r.b1 = long(r.dim_c1) - long(r.rank_d1) - long(r.rank_d2);
    r.b2 = long(r.dim_c2) - long(r.rank_d2);
    if (r.b0 < 0 || r.b1 < 0 || r.b2 < 0)
        throw MorseError("negative Betti number (" + std::to_string(r.b0) + ", " +
                         std::to_string(r.b1) + ", " + std::to_string(r.b2) +
                         "): upstream invariant broken");
    r.chi = r.b0 - r.b1 + r.b2;
    r.n_critical = r.dim_c0 + r.dim_c1 + r.dim_c2 + 1;
    return r;
}

long euler_cell_count(const VoxelGrid& g)
{
    const int nx = g.nx(), ny = g.ny(), nz = g.nz();
    long vertices = 0, edges = 0, faces = 0;

    for (int z = 0; z <= nz; ++z)
        for (int y = 0; y <= ny; ++y)
            for (int x = 0; x <= nx; ++x)
                if (neighborhood_code(g, {x, y, z}) != 0) ++vertices;

    // an edge belongs to the body iff one of the 4 cubes around it does
    for (int z = 0; z <= nz; ++z)
        for (int y = 0; y <= ny; ++y)
            for (int x = 0; x < nx; ++x) // edge along x from (x,y,z)
                if (g.occupied(x, y - 1, z - 1) || g.occupied(x, y, z - 1) ||
                    g.occupied(x, y - 1, z) || g.occupied(x, y, z))
                    ++edges;
    for (int z = 0; z <= nz; ++z)
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x <= nx; ++x) // edge along y
                if (g.occupied(x - 1, y, z - 1) || g.occupied(x, y, z - 1) ||
                    g.occupied(x - 1, y, z) || g.occupied(x, y, z))
                    ++edges;
    for (int z = 0; z < nz; ++z)
        for (int y = 0; y <= ny; ++y)
            for (int x = 0; x <= nx; ++x) // edge along z
                if (g.occupied(x - 1, y - 1, z) || g.occupied(x, y - 1, z) ||
                    g.occupied(x - 1, y, z) || g.occupied(x, y, z))
                    ++edges;

    // a square belongs to the body iff one of its 2 cubes does
    for (int z = 0; z <= nz; ++z)
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x < nx; ++x) // square normal to z
                if (g.occupied(x, y, z - 1) || g.occupied(x, y, z)) ++faces;
    for (int z = 0; z < nz; ++z)
        for (int y = 0; y <= ny; ++y)
            for (int x = 0; x < nx; ++x) // square normal to y
                if (g.occupied(x, y - 1, z) || g.occupied(x, y, z)) ++faces;
    for (int z = 0; z < nz; ++z)
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x <= nx; ++x) // square normal to x
                if (g.occupied(x - 1, y, z) || g.occupied(x, y, z)) ++faces;

    return vertices - edges + faces - long(g.occupied_count());
}

ChainDiagnostic chain_diagnostic(const SweepResult& f, const DualResult& h)
{
    ChainDiagnostic diag;
    if (f.c1.size() != h.c1h.size()) {
        diag.note = "index-1 counts differ between passes";
        return diag;
    }

    std::map<std::array<int, 4>, uint32_t> by_vertex;
    for (const CriticalPoint& p : f.c1) {
        const std::array<int, 4> key{p.vertex[0], p.vertex[1], p.vertex[2], p.is_double};
        if (!by_vertex.emplace(key, p.ordinal).second) {
            diag.note = "duplicate index-1 vertex in the ascending pass";
            return diag;
        }
    }

    Gf2Matrix permuted(f.c1.size(), h.c2_dim);
    for (std::size_t i = 0; i < h.c1h.size(); ++i) {
        const CriticalPoint& p = h.c1h[i];
        const std::array<int, 4> key{p.vertex[0], p.vertex[1], p.vertex[2], p.is_double};
        const auto it = by_vertex.find(key);
        if (it == by_vertex.end()) {
            diag.note = "descending-pass index-1 vertex " + vertex_str(p.vertex) +
                        " has no ascending-pass partner";
            return diag;
        }
        for (std::size_t c : h.d2.row_bits(i)) permuted.set(it->second, c, true);
        by_vertex.erase(it);
    }
    diag.identified = true;
    diag.product_zero = multiply(transpose(f.d1), permuted).is_zero();
    if (!diag.product_zero) diag.note = "D1^T * D2 is nonzero";
    return diag;
}

std::string dump_critical_csv(const SweepResult& f, const DualResult& h)
{
    std::ostringstream out;
    out << "x,y,z,class,is_double,pass\n";
    const auto emit = [&](const CriticalPoint& p, char pass) {
        out << p.vertex[0] << ',' << p.vertex[1] << ',' << p.vertex[2] << ','
            << to_string(p.cls) << ',' << (p.is_double ? 1 : 0) << ',' << pass << '\n';
    };
    for (const auto& p : f.c0) emit(p, 'f');
    for (const auto& p : f.c1) emit(p, 'f');
    emit(h.p0, 'h');
    for (const auto& p : h.c2) emit(p, 'h');
    for (const auto& p : h.c1h) emit(p, 'h');
    return out.str();
}

PipelineResult run_pipeline(const VoxelGrid& input, const PipelineOptions& options)
{
    using clock = std::chrono::steady_clock;
    const auto seconds = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double>(b - a).count();
    };

    const auto t0 = clock::now();
    VoxelGrid body = input;
    PreprocessReport prep;
    if (options.preprocess) {
        auto [processed, report] = preprocess(input);
        body = std::move(processed);
        prep = report;
    }
    SweepResult f = sweep(body);
    DualResult h = dual_sweep(body);
    const auto t1 = clock::now();
    BettiReport report = betti(f, h);
    const auto t2 = clock::now();
    report.t_construct = seconds(t0, t1);
    report.t_rank = seconds(t1, t2);

    return {std::move(body), prep, std::move(f), std::move(h), report};
}

} // namespace cubetti
