#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubetti {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// Binary occupancy of unit cubes inside the bounding box
// [0,Nx] x [0,Ny] x [0,Nz]. Cube (i,j,k) spans [i,i+1]x[j,j+1]x[k,k+1];
// queries outside the dims always read as unoccupied. Dims are fixed at
// construction, and a fully built grid is safe for concurrent reads.
class VoxelGrid {
public:
    VoxelGrid(int nx, int ny, int nz) : nx_(nx), ny_(ny), nz_(nz)
    {
        if (nx <= 0 || ny <= 0 || nz <= 0)
            throw std::invalid_argument("VoxelGrid: dims must be positive");
        words_.assign((std::size_t(nx) * ny * nz + 63) / 64, 0);
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nz() const { return nz_; }

    bool in_bounds(int i, int j, int k) const
    {
        return i >= 0 && i < nx_ && j >= 0 && j < ny_ && k >= 0 && k < nz_;
    }

    bool occupied(int i, int j, int k) const
    {
        if (!in_bounds(i, j, k)) return false;
        const std::size_t b = index(i, j, k);
        return (words_[b >> 6] >> (b & 63)) & 1u;
    }

    void set(int i, int j, int k, bool value = true)
    {
        if (!in_bounds(i, j, k))
            throw std::out_of_range("VoxelGrid::set: cube outside dims");
        const std::size_t b = index(i, j, k);
        const uint64_t bit = uint64_t(1) << (b & 63);
        if (value)
            words_[b >> 6] |= bit;
        else
            words_[b >> 6] &= ~bit;
    }

    std::size_t occupied_count() const;

    friend bool operator==(const VoxelGrid& a, const VoxelGrid& b)
    {
        return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.nz_ == b.nz_ && a.words_ == b.words_;
    }

private:
    std::size_t index(int i, int j, int k) const
    {
        return std::size_t(i) + std::size_t(nx_) * (std::size_t(j) + std::size_t(ny_) * k);
    }

    int nx_, ny_, nz_;
    std::vector<uint64_t> words_;
};

enum class ShapeKind { SolidBox, Shell, Ring, TwoComponents, Random };

struct ShapeSpec {
    ShapeKind kind = ShapeKind::SolidBox;
    int nx = 2, ny = 2, nz = 2;    // solid-box and random only
    double density = 0.5;          // random only
    uint64_t seed = 0;             // random only
};

// cubetti-voxels text format:
//   cubetti-voxels 1
//   dim <Nx> <Ny> <Nz>
//   <i> <j> <k>        one occupied cube per line, 0-based, any order
// Blank lines and lines starting with '#' are ignored. Duplicate triples
// are idempotent. Malformed input raises ParseError with the line number.
VoxelGrid load_grid(std::istream& in);
std::string save_grid(const VoxelGrid& grid);

// Shapes with known topology. `random` fills each cube independently with
// probability `density`, reproducibly: one draw of std::mt19937_64(seed)
// per cube in k-outer, j, i-inner order; the cube is occupied iff
// (draw >> 11) < floor(density * 2^53).
VoxelGrid generate(const ShapeSpec& spec);

// Occupancy flipped cube-wise within the same dims (an involution).
VoxelGrid complement(const VoxelGrid& grid);

// Point reflection through the box center: cube (i,j,k) maps to
// (Nx-1-i, Ny-1-j, Nz-1-k). An involution; commutes with complement.
// Sweeping the reflection in ascending diagonal order is combinatorially
// the descending sweep of the original.
VoxelGrid reflect(const VoxelGrid& grid);

} // namespace cubetti
