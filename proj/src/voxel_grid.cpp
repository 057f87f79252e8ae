#include "cubetti/voxel_grid.hpp"

#include <bit>
#include <istream>
#include <random>
#include <sstream>

namespace cubetti {

std::size_t VoxelGrid::occupied_count() const
{
    std::size_t n = 0;
    for (uint64_t w : words_) n += std::size_t(std::popcount(w));
    return n;
}

namespace {

bool significant(const std::string& line)
{
    for (char ch : line) {
        if (ch == '#') return false;
        if (!isspace(static_cast<unsigned char>(ch))) return true;
    }
    return false;
}

// parses exactly `count` integers and nothing else
std::vector<long> parse_ints(const std::string& line, int count, int lineno)
{
    std::istringstream ss(line);
    std::vector<long> out;
    std::string tok;
    while (ss >> tok) {
        std::size_t pos = 0;
        long value = 0;
        try {
            value = std::stol(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("non-integer token '" + tok + "'", lineno);
        }
        if (pos != tok.size())
            throw ParseError("non-integer token '" + tok + "'", lineno);
        out.push_back(value);
    }
    if (int(out.size()) != count)
        throw ParseError("expected " + std::to_string(count) + " integers", lineno);
    return out;
}

} // namespace

VoxelGrid load_grid(std::istream& in)
{
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line))
        throw ParseError("empty input, expected 'cubetti-voxels 1'", 1);
    ++lineno;
    {
        std::istringstream ss(line);
        std::string magic, version;
        ss >> magic >> version;
        std::string rest;
        if (magic != "cubetti-voxels" || version != "1" || (ss >> rest))
            throw ParseError("malformed header, expected 'cubetti-voxels 1'", lineno);
    }

    // dim line is the first significant line after the magic
    long nx = 0, ny = 0, nz = 0;
    for (;;) {
        if (!std::getline(in, line))
            throw ParseError("missing 'dim <Nx> <Ny> <Nz>' line", lineno + 1);
        ++lineno;
        if (!significant(line)) continue;
        std::istringstream ss(line);
        std::string kw;
        ss >> kw;
        if (kw != "dim")
            throw ParseError("expected 'dim <Nx> <Ny> <Nz>'", lineno);
        std::string rest;
        std::getline(ss, rest);
        const auto dims = parse_ints(rest, 3, lineno);
        nx = dims[0];
        ny = dims[1];
        nz = dims[2];
        if (nx <= 0 || ny <= 0 || nz <= 0)
            throw ParseError("dims must be positive", lineno);
        break;
    }

    VoxelGrid grid{int(nx), int(ny), int(nz)};
    while (std::getline(in, line)) {
        ++lineno;
        if (!significant(line)) continue;
        const auto t = parse_ints(line, 3, lineno);
        if (t[0] < 0 || t[0] >= nx || t[1] < 0 || t[1] >= ny || t[2] < 0 || t[2] >= nz)
            throw ParseError("index out of range", lineno);
        grid.set(int(t[0]), int(t[1]), int(t[2]));
    }
    return grid;
}

std::string save_grid(const VoxelGrid& grid)
{
    std::ostringstream out;
    out << "cubetti-voxels 1\n";
    out << "dim " << grid.nx() << ' ' << grid.ny() << ' ' << grid.nz() << '\n';
    for (int k = 0; k < grid.nz(); ++k)
        for (int j = 0; j < grid.ny(); ++j)
            for (int i = 0; i < grid.nx(); ++i)
                if (grid.occupied(i, j, k))
                    out << i << ' ' << j << ' ' << k << '\n';
    return out.str();
}

VoxelGrid generate(const ShapeSpec& spec)
{
    switch (spec.kind) {
    case ShapeKind::SolidBox: {
        VoxelGrid g(spec.nx, spec.ny, spec.nz);
        for (int k = 0; k < spec.nz; ++k)
            for (int j = 0; j < spec.ny; ++j)
                for (int i = 0; i < spec.nx; ++i) g.set(i, j, k);
        return g;
    }
    case ShapeKind::Shell: {
        VoxelGrid g(3, 3, 3);
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j)
                for (int i = 0; i < 3; ++i)
                    if (!(i == 1 && j == 1 && k == 1)) g.set(i, j, k);
        return g;
    }
    case ShapeKind::Ring: {
        VoxelGrid g(3, 3, 1);
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i)
                if (!(i == 1 && j == 1)) g.set(i, j, 0);
        return g;
    }
    case ShapeKind::TwoComponents: {
        // gap of one empty cube on every axis between the two cubes
        VoxelGrid g(3, 3, 3);
        g.set(0, 0, 0);
        g.set(2, 2, 2);
        return g;
    }
    case ShapeKind::Random: {
        VoxelGrid g(spec.nx, spec.ny, spec.nz);
        std::mt19937_64 rng(spec.seed);
        const double p = spec.density < 0.0 ? 0.0 : (spec.density > 1.0 ? 1.0 : spec.density);
        const uint64_t threshold = uint64_t(p * 9007199254740992.0); // p * 2^53
        for (int k = 0; k < spec.nz; ++k)
            for (int j = 0; j < spec.ny; ++j)
                for (int i = 0; i < spec.nx; ++i)
                    if ((rng() >> 11) < threshold) g.set(i, j, k);
        return g;
    }
    }
    throw std::invalid_argument("generate: unknown shape kind");
}

VoxelGrid complement(const VoxelGrid& grid)
{
    VoxelGrid out(grid.nx(), grid.ny(), grid.nz());
    for (int k = 0; k < grid.nz(); ++k)
        for (int j = 0; j < grid.ny(); ++j)
            for (int i = 0; i < grid.nx(); ++i)
                out.set(i, j, k, !grid.occupied(i, j, k));
    return out;
}

VoxelGrid reflect(const VoxelGrid& grid)
{
    VoxelGrid out(grid.nx(), grid.ny(), grid.nz());
    for (int k = 0; k < grid.nz(); ++k)
        for (int j = 0; j < grid.ny(); ++j)
            for (int i = 0; i < grid.nx(); ++i)
                if (grid.occupied(i, j, k))
                    out.set(grid.nx() - 1 - i, grid.ny() - 1 - j, grid.nz() - 1 - k);
    return out;
}

} // namespace cubetti
