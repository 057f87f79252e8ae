#include "cubetti/preprocess.hpp"

namespace cubetti {

VoxelGrid subdivide3(const VoxelGrid& grid)
{
    VoxelGrid out(grid.nx() * 3, grid.ny() * 3, grid.nz() * 3);
    for (int k = 0; k < grid.nz(); ++k)
        for (int j = 0; j < grid.ny(); ++j)
            for (int i = 0; i < grid.nx(); ++i) {
                if (!grid.occupied(i, j, k)) continue;
                for (int c = 0; c < 3; ++c)
                    for (int b = 0; b < 3; ++b)
                        for (int a = 0; a < 3; ++a)
                            out.set(3 * i + a, 3 * j + b, 3 * k + c);
            }
    return out;
}

VoxelGrid erode_boundary_faces(const VoxelGrid& grid)
{
    VoxelGrid out(grid.nx(), grid.ny(), grid.nz());
    for (int k = 0; k < grid.nz(); ++k)
        for (int j = 0; j < grid.ny(); ++j)
            for (int i = 0; i < grid.nx(); ++i) {
                if (!grid.occupied(i, j, k)) continue;
                const bool interior = grid.occupied(i - 1, j, k) && grid.occupied(i + 1, j, k) &&
                                      grid.occupied(i, j - 1, k) && grid.occupied(i, j + 1, k) &&
                                      grid.occupied(i, j, k - 1) && grid.occupied(i, j, k + 1);
                if (interior) out.set(i, j, k);
            }
    return out;
}

VoxelGrid pad(const VoxelGrid& grid, int margin)
{
    if (margin <= 0) throw std::invalid_argument("pad: margin must be positive");
    VoxelGrid out(grid.nx() + 2 * margin, grid.ny() + 2 * margin, grid.nz() + 2 * margin);
    for (int k = 0; k < grid.nz(); ++k)
        for (int j = 0; j < grid.ny(); ++j)
            for (int i = 0; i < grid.nx(); ++i)
                if (grid.occupied(i, j, k)) out.set(i + margin, j + margin, k + margin);
    return out;
}

std::pair<VoxelGrid, PreprocessReport> preprocess(const VoxelGrid& grid)
{
    PreprocessReport report;
    report.input_cubes = grid.occupied_count();

    VoxelGrid fine = subdivide3(grid);
    report.subdivided_cubes = fine.occupied_count();

    VoxelGrid core = erode_boundary_faces(fine);
    report.eroded_cubes = report.subdivided_cubes - core.occupied_count();

    report.margin = 1;
    VoxelGrid padded = pad(core, report.margin);
    report.output_dims = {padded.nx(), padded.ny(), padded.nz()};
    return {std::move(padded), report};
}

} // namespace cubetti
