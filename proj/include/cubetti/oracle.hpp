#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cubetti/morse.hpp"
#include "cubetti/voxel_grid.hpp"

// Independent ground truth. Everything here computes homology from the
// definition (chain complexes and their ranks) with no reference to the
// sweep machinery, so mismatches point at real bugs.

namespace cubetti::oracle {

struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// number of face-connected components of the occupied set
long components_union_find(const VoxelGrid& grid);

// Full cubical chain complex of the occupied set: cells of dimension 0..3,
// each included iff it is a face of some occupied cube, and the boundary
// matrices over GF(2) as sparse columns (row indices of the set entries).
struct CubicalChainComplex {
    std::size_t n_cells[4] = {0, 0, 0, 0};
    // boundary[k] maps (k+1)-cells to k-cells: one column per (k+1)-cell
    std::array<std::vector<std::vector<uint32_t>>, 3> boundary;

    bool boundaries_square_to_zero() const;
};

CubicalChainComplex build_chain_complex(const VoxelGrid& grid);

struct BruteForceResult {
    long b0 = 0, b1 = 0, b2 = 0, b3 = 0;
    long chi = 0;
    std::size_t n_cells[4] = {0, 0, 0, 0};
    std::size_t rank_d1 = 0, rank_d2 = 0, rank_d3 = 0;
};

// b_k = #k-cells - rank d_k - rank d_{k+1}, computed by sparse elimination.
// Guarded: refuses grids with more than max_cells cells in total.
BruteForceResult betti_bruteforce(const VoxelGrid& grid, std::size_t max_cells = 400000);

// Relative GF(2) homology ranks of the local sublevel pair at a vertex with
// the given neighborhood code. The occupied octant cubes are triangulated
// into six tetrahedra each (the diagonal subdivision), on which the diagonal
// function is injective per simplex, so sublevel sets deformation-retract to
// the full subcomplexes L (vertex levels <= 0) and L- (levels <= -1).
// The ranks of H_*(L, L-) identify the handle glued when the level crosses
// the vertex. descending = true runs the same construction for -f.
struct LocalPairProfile {
    int r0 = 0, r1 = 0, r2 = 0, r3 = 0;
    bool face_connected = false;            // occupied octants, within the block
    bool complement_face_connected = false; // empty octants, within the block

    bool trivial() const { return r0 == 0 && r1 == 0 && r2 == 0 && r3 == 0; }
    bool unstackable() const { return face_connected && complement_face_connected; }
};

LocalPairProfile local_pair_profile(uint8_t code, bool descending = false);

// Profile-to-class map. A neighborhood is admissible when its occupied
// octants and its empty octants are each face-connected within the 2x2x2
// block; this is the local normal form of unstacked bodies, is symmetric
// under complementation and reflection (so the complement sweep meets only
// admissible codes too), and is exactly what the erosion step enforces.
// Inadmissible codes are Forbidden regardless of profile: cubes meeting only
// at a joint edge or vertex, and ring-like neighborhoods whose complement
// pinches, cannot be classified by handle attachment. Admissible codes map
// by profile; an admissible profile outside the known set is Forbidden.
VertexClass classify_code_oracle(uint8_t code);
VertexClass classify_code_oracle_h(uint8_t code); // same, for the descending direction

std::array<VertexClass, 256> generate_classification_table();

// The hand-enumerated table of critical neighborhood types (15 entries,
// closed under coordinate permutations), expanded over all 256 codes with
// Regular elsewhere.
std::array<VertexClass, 256> reference_type_expansion();

// codes at which the two tables differ
std::vector<int> table_diff(const std::array<VertexClass, 256>& a,
                            const std::array<VertexClass, 256>& b);

// codes where one table has a critical class (neither Regular nor Forbidden)
// and the other disagrees on it
std::vector<int> critical_entry_diff(const std::array<VertexClass, 256>& table,
                                     const std::array<VertexClass, 256>& expansion);

// 256 lines "0xNN class", byte-stable ordering
std::string dump_table(const std::array<VertexClass, 256>& table);

} // namespace cubetti::oracle
