#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubetti/gf2.hpp"
#include "cubetti/preprocess.hpp"
#include "cubetti/voxel_grid.hpp"

namespace cubetti {

// Lattice vertex of the box [0,Nx] x [0,Ny] x [0,Nz].
using Vertex = std::array<int, 3>;

// Raised when the ascending sweep meets a configuration it cannot handle:
// a forbidden neighborhood class (the unstacking invariant is violated) or
// a body touching the box boundary in the dual pass.
struct MorseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// How crossing the diagonal level of a vertex changes the body nearby.
// Forbidden marks neighborhoods that cannot occur after unstacking; meeting
// one at sweep time is a hard error, not a classification.
enum class VertexClass : uint8_t { Regular, Index0, Index1, Index2, MonkeySaddle, Forbidden };

const char* to_string(VertexClass c);

// --- neighborhood codes ------------------------------------------------
//
// The eight cubes around a lattice vertex are indexed by their sign octant:
// bit b = s1 + 2*s2 + 4*s3 where s_k = 1 means the cube extends in the
// positive k direction. Bit set iff the octant cube is occupied. 0x00 means
// the vertex does not belong to the body.

constexpr int octant_bit(int s1, int s2, int s3) { return s1 + 2 * s2 + 4 * s3; }

// cubes containing the decreasing edge along axis d at the vertex
inline constexpr std::array<uint8_t, 3> kDecreasingEdgeCubes = {0x55, 0x33, 0x0F};

uint8_t neighborhood_code(const VoxelGrid& grid, const Vertex& v);

// bit b <-> bit 7-b: the code seen after point reflection through the vertex
uint8_t reverse_code(uint8_t code);

// action of a coordinate permutation on octant codes
uint8_t permute_code(uint8_t code, const std::array<int, 3>& perm);

// 256-entry table lookup; the table constant is regenerated from first
// principles by the homology oracle and checked byte-for-byte in tests.
VertexClass classify(uint8_t code);

extern const std::array<VertexClass, 256> kVertexClassTable;

// --- gradient descent ---------------------------------------------------

struct DescentTargets {
    Vertex down1;                                   // end of the highest decreasing edge
    std::optional<Vertex> down2;                    // opposite-label edge (index 1) or monkey -y
    std::optional<std::pair<Vertex, Vertex>> fictive; // (down1, down2) of the monkey double
};

// Decreasing edges are ordered z > y > x. Regular and index-2 vertices
// descend along the highest decreasing edge lying in the body. Index-1
// vertices descend along decreasing boundary edges carrying opposite labels:
// with two such edges the labels differ; with three, the two edges spanning
// a boundary square share one label and the remaining edge gets the other.
// A monkey saddle descends along -x and -y, and its fictive double descends
// along the fictive edge to the saddle and along -z.
DescentTargets descent_targets(const VoxelGrid& grid, const Vertex& v, VertexClass cls);

// --- the ascending sweep -------------------------------------------------

struct CriticalPoint {
    Vertex vertex{0, 0, 0};
    VertexClass cls = VertexClass::Regular;
    bool is_double = false; // true only for the fictive double of a monkey saddle
    uint32_t ordinal = 0;   // position in its basis list
};

inline constexpr uint32_t kGfUnset = 0xffffffffu;

struct SweepResult {
    std::vector<CriticalPoint> c0; // index-0 critical points in visit order
    std::vector<CriticalPoint> c1; // index-1 points; monkey doubles included
    Gf2Matrix d1;                  // rows: c1, cols: c0; each row has 0 or 2 ones
    std::vector<uint32_t> gf;      // vertex -> ordinal of its sink in c0
    std::array<int, 3> lattice{0, 0, 0};
    int monkey_count = 0;

    uint32_t gf_at(const Vertex& v) const
    {
        return gf[std::size_t(v[0]) +
                  std::size_t(lattice[0]) * (std::size_t(v[1]) + std::size_t(lattice[1]) * v[2])];
    }
};

// Visits the body vertices in nondecreasing diagonal order f(v) = x+y+z,
// ties broken lexicographically by (x,y,z), classifying each vertex and
// propagating sinks along the gradient. Requires an unstacked body (or a
// caller prepared for MorseError on forbidden neighborhoods).
SweepResult sweep(const VoxelGrid& grid);

// --- the dual pass on the complement -------------------------------------

struct DualResult {
    std::size_t c2_dim = 0;         // h-pass index-0 points, excluding p0
    Gf2Matrix d2;                   // rows: h-pass index-1 points, cols: c2
    CriticalPoint p0;               // the corner sink removed from the column set
    std::vector<CriticalPoint> c2;  // h-pass index-0 points without p0, column order
    std::vector<CriticalPoint> c1h; // h-pass index-1 points, row order
    int monkey_count = 0;
    // all vertices above are reported in the original (un-reflected) frame
};

// Runs the ascending sweep on reflect(complement(grid)), which is the
// descending sweep of the complement. p0 is the sink whose vertex maps back
// to the box corner where the diagonal is maximal; a missing p0 means the
// body touches the box boundary and must be preprocessed or padded first.
DualResult dual_sweep(const VoxelGrid& grid);

// --- assembling Betti numbers ---------------------------------------------

struct BettiReport {
    long b0 = 0, b1 = 0, b2 = 0;
    long chi = 0;
    std::size_t n_critical = 0; // |C0| + |C1| + dim C2 + 1 (the corner sink)
    std::size_t dim_c0 = 0, dim_c1 = 0, dim_c2 = 0;
    std::size_t rank_d1 = 0, rank_d2 = 0;
    int monkey_count = 0;
    double t_construct = 0.0; // seconds: preprocess + both sweeps + matrices
    double t_rank = 0.0;      // seconds: rank computations
};

// b0 = |C0| - rank D1, b1 = |C1| - rank D1 - rank D2, b2 = dim C2 - rank D2.
// Hard-errors if the two passes disagree on the index-1 count or any Betti
// number comes out negative.
BettiReport betti(const SweepResult& f, const DualResult& h);

// V - E + F - C over all cells belonging to at least one occupied cube.
long euler_cell_count(const VoxelGrid& grid);

// --- diagnostics and output ------------------------------------------------

struct ChainDiagnostic {
    bool identified = false;   // index-1 generators matched across passes by vertex
    bool product_zero = false; // D1^T * D2 == 0 over GF(2) (valid when identified)
    std::string note;
};

ChainDiagnostic chain_diagnostic(const SweepResult& f, const DualResult& h);

// CSV dump `x,y,z,class,is_double,pass` of the critical points of both
// passes, coordinates in the original (preprocessed, un-reflected) frame.
std::string dump_critical_csv(const SweepResult& f, const DualResult& h);

// --- one-call pipeline -------------------------------------------------------

struct PipelineOptions {
    bool preprocess = true; // disable only for inputs already in unstacked form
};

struct PipelineResult {
    VoxelGrid body;      // the grid the sweeps actually ran on
    PreprocessReport prep;
    SweepResult fpass;
    DualResult hpass;
    BettiReport report;
};

PipelineResult run_pipeline(const VoxelGrid& input, const PipelineOptions& options = {});

} // namespace cubetti
