#pragma once

#include <array>
#include <cstddef>
#include <utility>

#include "cubetti/voxel_grid.hpp"

namespace cubetti {

struct PreprocessReport {
    std::size_t input_cubes = 0;
    std::size_t subdivided_cubes = 0; // always 27 * input_cubes
    std::size_t eroded_cubes = 0;     // cubes removed by the erosion pass
    std::array<int, 3> output_dims{0, 0, 0};
    int margin = 0;
};

// 3x linear refinement: cube (i,j,k) becomes the 27 cubes
// (3i+a, 3j+b, 3k+c), a,b,c in {0,1,2}. Dims triple.
VoxelGrid subdivide3(const VoxelGrid& grid);

// Removes every occupied cube that has at least one of its six faces on the
// topological boundary of the body (neighbor across the face unoccupied or
// outside the box). One simultaneous pass: all removals are decided against
// the input occupancy. The box boundary counts as unoccupied, so cubes
// touching it by a face are removed too.
VoxelGrid erode_boundary_faces(const VoxelGrid& grid);

// Grows the dims by 2*margin per axis and translates the body by +margin,
// leaving an empty shell around it.
VoxelGrid pad(const VoxelGrid& grid, int margin);

// The unstacking pipeline: pad(erode_boundary_faces(subdivide3(grid)), 1).
// Separates cubes that met only at a vertex or an edge while preserving
// face-connected components, and leaves the body strictly interior to the
// box so the complement contains the far corner.
std::pair<VoxelGrid, PreprocessReport> preprocess(const VoxelGrid& grid);

} // namespace cubetti
