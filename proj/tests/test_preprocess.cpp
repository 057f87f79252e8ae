#include <doctest.h>

#include <random>

#include "cubetti/morse.hpp"
#include "cubetti/oracle.hpp"
#include "cubetti/preprocess.hpp"

using namespace cubetti;

namespace {

VoxelGrid random_grid(std::mt19937_64& rng, double density)
{
    ShapeSpec spec;
    spec.kind = ShapeKind::Random;
    spec.nx = 2 + int(rng() % 5);
    spec.ny = 2 + int(rng() % 5);
    spec.nz = 2 + int(rng() % 5);
    spec.density = density;
    spec.seed = rng();
    return generate(spec);
}

} // namespace

TEST_CASE("subdivide3 triples everything")
{
    VoxelGrid one(1, 1, 1);
    one.set(0, 0, 0);
    const VoxelGrid fine = subdivide3(one);
    CHECK(fine.nx() == 3);
    CHECK(fine.occupied_count() == 27);

    const VoxelGrid empty = subdivide3(VoxelGrid(2, 2, 2));
    CHECK(empty.nx() == 6);
    CHECK(empty.occupied_count() == 0);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const VoxelGrid g = random_grid(rng, 0.5);
        CHECK(subdivide3(g).occupied_count() == 27 * g.occupied_count());
    }
}

TEST_CASE("erode_boundary_faces keeps exactly the face-interior cubes")
{
    ShapeSpec box;
    box.kind = ShapeKind::SolidBox;
    box.nx = box.ny = box.nz = 3;
    const VoxelGrid eroded = erode_boundary_faces(generate(box));
    CHECK(eroded.occupied_count() == 1);
    CHECK(eroded.occupied(1, 1, 1));

    CHECK(erode_boundary_faces(VoxelGrid(3, 3, 3)).occupied_count() == 0);

    // two cubes sharing only a vertex come apart after subdivision + erosion
    VoxelGrid touching(2, 2, 2);
    touching.set(0, 0, 0);
    touching.set(1, 1, 1);
    const VoxelGrid separated = erode_boundary_faces(subdivide3(touching));
    CHECK(oracle::components_union_find(separated) == 2);
}

TEST_CASE("pad translates and grows")
{
    VoxelGrid one(1, 1, 1);
    one.set(0, 0, 0);
    const VoxelGrid padded = pad(one, 1);
    CHECK(padded.nx() == 3);
    CHECK(padded.occupied(1, 1, 1));
    CHECK(padded.occupied_count() == 1);

    const VoxelGrid empty = pad(VoxelGrid(2, 2, 2), 2);
    CHECK(empty.nx() == 6);
    CHECK(empty.occupied_count() == 0);

    std::mt19937_64 rng(31);
    const VoxelGrid g = random_grid(rng, 0.5);
    CHECK(pad(g, 2).occupied_count() == g.occupied_count());
    CHECK_THROWS_AS(pad(g, 0), std::invalid_argument);
}

TEST_CASE("preprocess of a single cube is a single centered cube")
{
    VoxelGrid one(1, 1, 1);
    one.set(0, 0, 0);
    const auto [out, report] = preprocess(one);
    CHECK(out.nx() == 5);
    CHECK(out.ny() == 5);
    CHECK(out.nz() == 5);
    CHECK(out.occupied_count() == 1);
    CHECK(out.occupied(2, 2, 2));
    CHECK(report.input_cubes == 1);
    CHECK(report.subdivided_cubes == 27);
    CHECK(report.eroded_cubes == 26);
    CHECK(report.margin == 1);
    CHECK(report.output_dims == std::array<int, 3>{5, 5, 5});
}

TEST_CASE("preprocess keeps face-connectivity and splits edge/vertex contacts")
{
    VoxelGrid face_pair(2, 1, 1);
    face_pair.set(0, 0, 0);
    face_pair.set(1, 0, 0);
    CHECK(oracle::components_union_find(preprocess(face_pair).first) == 1);

    VoxelGrid edge_pair(2, 2, 1);
    edge_pair.set(0, 0, 0);
    edge_pair.set(1, 1, 0);
    CHECK(oracle::components_union_find(preprocess(edge_pair).first) == 2);

    VoxelGrid vertex_pair(2, 2, 2);
    vertex_pair.set(0, 0, 0);
    vertex_pair.set(1, 1, 1);
    CHECK(oracle::components_union_find(preprocess(vertex_pair).first) == 2);
}

TEST_CASE("preprocess invariants on random bodies")
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 25; ++i) {
        const double density = (i % 3 == 0) ? 0.2 : (i % 3 == 1 ? 0.5 : 0.8);
        const VoxelGrid g = random_grid(rng, density);
        const auto [out, report] = preprocess(g);

        // margin shell is empty
        bool shell_clear = true;
        for (int k = 0; k < out.nz() && shell_clear; ++k)
            for (int j = 0; j < out.ny() && shell_clear; ++j)
                for (int i2 = 0; i2 < out.nx() && shell_clear; ++i2)
                    if (i2 == 0 || j == 0 || k == 0 || i2 == out.nx() - 1 ||
                        j == out.ny() - 1 || k == out.nz() - 1)
                        if (out.occupied(i2, j, k)) shell_clear = false;
        CHECK(shell_clear);

        // unstacking neither merges nor destroys face-connected components
        CHECK(oracle::components_union_find(out) == oracle::components_union_find(g));

        // classification never yields Forbidden on the body or its complement
        for (const VoxelGrid* grid : {&out}) {
            const VoxelGrid comp = reflect(complement(*grid));
            for (int z = 0; z <= grid->nz(); ++z)
                for (int y = 0; y <= grid->ny(); ++y)
                    for (int x = 0; x <= grid->nx(); ++x) {
                        CHECK(classify(neighborhood_code(*grid, {x, y, z})) !=
                              VertexClass::Forbidden);
                        CHECK(classify(neighborhood_code(comp, {x, y, z})) !=
                              VertexClass::Forbidden);
                    }
        }
    }
}
