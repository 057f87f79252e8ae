#include "cubetti/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "cubetti/gf2.hpp"

namespace cubetti::oracle {

namespace {

// --- union-find ---------------------------------------------------------

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n)
    {
        std::iota(parent.begin(), parent.end(), std::size_t(0));
    }

    std::size_t find(std::size_t i)
    {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]]; // path halving
            i = parent[i];
        }
        return i;
    }

    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }

    std::vector<std::size_t> parent;
};

// --- sparse GF(2) rank ----------------------------------------------------

std::vector<uint32_t> xor_merge(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b)
{
    std::vector<uint32_t> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            out.push_back(a[i++]);
        else if (b[j] < a[i])
            out.push_back(b[j++]);
        else {
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

// column reduction: a column is zeroed or claims the pivot at its lowest row
std::size_t sparse_rank(std::vector<std::vector<uint32_t>> cols)
{
    std::unordered_map<uint32_t, std::size_t> pivot_of_low;
    pivot_of_low.reserve(cols.size());
    std::size_t rank = 0;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        while (!cols[i].empty()) {
            const uint32_t low = cols[i].back();
            const auto it = pivot_of_low.find(low);
            if (it == pivot_of_low.end()) {
                pivot_of_low.emplace(low, i);
                ++rank;
                break;
            }
            cols[i] = xor_merge(cols[i], cols[it->second]);
        }
    }
    return rank;
}

} // namespace

long components_union_find(const VoxelGrid& g)
{
    const int nx = g.nx(), ny = g.ny(), nz = g.nz();
    const auto id = [&](int i, int j, int k) {
        return std::size_t(i) + std::size_t(nx) * (std::size_t(j) + std::size_t(ny) * k);
    };

    DisjointSets sets(std::size_t(nx) * ny * nz);
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                if (!g.occupied(i, j, k)) continue;
                if (g.occupied(i + 1, j, k)) sets.unite(id(i, j, k), id(i + 1, j, k));
                if (g.occupied(i, j + 1, k)) sets.unite(id(i, j, k), id(i, j + 1, k));
                if (g.occupied(i, j, k + 1)) sets.unite(id(i, j, k), id(i, j, k + 1));
            }

    long components = 0;
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                if (g.occupied(i, j, k) && sets.find(id(i, j, k)) == id(i, j, k)) ++components;
    return components;
}

// --- the full cubical chain complex ----------------------------------------

CubicalChainComplex build_chain_complex(const VoxelGrid& g)
{
    const int nx = g.nx(), ny = g.ny(), nz = g.nz();
    constexpr int32_t kAbsent = -1;

    // dense id tables per cell type, scan order z, y, x (x fastest)
    std::vector<int32_t> vertex_id(std::size_t(nx + 1) * (ny + 1) * (nz + 1), kAbsent);
    std::array<std::vector<int32_t>, 3> edge_id;   // by edge axis
    std::array<std::vector<int32_t>, 3> square_id; // by normal axis
    std::vector<int32_t> cube_id(std::size_t(nx) * ny * nz, kAbsent);

    const auto vidx = [&](int x, int y, int z) {
        return std::size_t(x) + std::size_t(nx + 1) * (std::size_t(y) + std::size_t(ny + 1) * z);
    };
    // lattice extents of the id table for edges along axis d / squares normal to d
    const auto span = [&](int d, int axis) {
        const int dims[3] = {nx, ny, nz};
        return dims[axis] + (d == axis ? 0 : 1);
    };
    const auto sq_span = [&](int d, int axis) {
        const int dims[3] = {nx, ny, nz};
        return dims[axis] + (d == axis ? 1 : 0);
    };

    CubicalChainComplex cc;
    uint32_t next = 0;

    for (int z = 0; z <= nz; ++z)
        for (int y = 0; y <= ny; ++y)
            for (int x = 0; x <= nx; ++x)
                if (neighborhood_code(g, {x, y, z}) != 0) vertex_id[vidx(x, y, z)] = int32_t(next++);
    cc.n_cells[0] = next;

    next = 0;
    for (int d = 0; d < 3; ++d) {
        edge_id[d].assign(std::size_t(span(d, 0)) * span(d, 1) * span(d, 2), kAbsent);
        const int e[3] = {d == 0, d == 1, d == 2};
        for (int z = 0; z < span(d, 2); ++z)
            for (int y = 0; y < span(d, 1); ++y)
                for (int x = 0; x < span(d, 0); ++x) {
                    // the 4 cubes sharing the edge vary over the two axes != d
                    bool present = false;
                    for (int b = -1; b <= 0 && !present; ++b)
                        for (int c = -1; c <= 0 && !present; ++c) {
                            int ci = x, cj = y, ck = z;
                            if (d == 0) {
                                cj += b;
                                ck += c;
                            } else if (d == 1) {
                                ci += b;
                                ck += c;
                            } else {
                                ci += b;
                                cj += c;
                            }
                            present = g.occupied(ci, cj, ck);
                        }
                    if (present) {
                        const std::size_t at =
                            std::size_t(x) +
                            std::size_t(span(d, 0)) * (std::size_t(y) + std::size_t(span(d, 1)) * z);
                        edge_id[d][at] = int32_t(next++);
                        auto& col = cc.boundary[0].emplace_back();
                        const int32_t v0 = vertex_id[vidx(x, y, z)];
                        const int32_t v1 = vertex_id[vidx(x + e[0], y + e[1], z + e[2])];
                        col = {uint32_t(v0), uint32_t(v1)};
                        std::sort(col.begin(), col.end());
                    }
                }
    }
    cc.n_cells[1] = next;

    const auto edge_at = [&](int d, int x, int y, int z) {
        const std::size_t at =
            std::size_t(x) + std::size_t(span(d, 0)) * (std::size_t(y) + std::size_t(span(d, 1)) * z);
        return edge_id[d][at];
    };

    next = 0;
    for (int d = 0; d < 3; ++d) {
        square_id[d].assign(std::size_t(sq_span(d, 0)) * sq_span(d, 1) * sq_span(d, 2), kAbsent);
        const int a = (d == 0) ? 1 : 0; // the two spanned axes
        const int b = (d == 2) ? 1 : 2;
        for (int z = 0; z < sq_span(d, 2); ++z)
            for (int y = 0; y < sq_span(d, 1); ++y)
                for (int x = 0; x < sq_span(d, 0); ++x) {
                    int ci = x, cj = y, ck = z; // the cube on the negative side of the normal
                    if (d == 0)
                        ci -= 1;
                    else if (d == 1)
                        cj -= 1;
                    else
                        ck -= 1;
                    if (!g.occupied(ci, cj, ck) && !g.occupied(x, y, z)) continue;
                    const std::size_t at =
                        std::size_t(x) +
                        std::size_t(sq_span(d, 0)) * (std::size_t(y) + std::size_t(sq_span(d, 1)) * z);
                    square_id[d][at] = int32_t(next++);

                    int pa[3] = {x, y, z}; // min corner shifted along axis b / a
                    int pb[3] = {x, y, z};
                    pa[b] += 1;
                    pb[a] += 1;
                    auto& col = cc.boundary[1].emplace_back();
                    col = {uint32_t(edge_at(a, x, y, z)), uint32_t(edge_at(a, pa[0], pa[1], pa[2])),
                           uint32_t(edge_at(b, x, y, z)), uint32_t(edge_at(b, pb[0], pb[1], pb[2]))};
                    std::sort(col.begin(), col.end());
                }
    }
    cc.n_cells[2] = next;

    const auto square_at = [&](int d, int x, int y, int z) {
        const std::size_t at =
            std::size_t(x) +
            std::size_t(sq_span(d, 0)) * (std::size_t(y) + std::size_t(sq_span(d, 1)) * z);
        return square_id[d][at];
    };

    next = 0;
    for (int z = 0; z < nz; ++z)
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x < nx; ++x) {
                if (!g.occupied(x, y, z)) continue;
                cube_id[std::size_t(x) + std::size_t(nx) * (std::size_t(y) + std::size_t(ny) * z)] =
                    int32_t(next++);
                auto& col = cc.boundary[2].emplace_back();
                col = {uint32_t(square_at(0, x, y, z)), uint32_t(square_at(0, x + 1, y, z)),
                       uint32_t(square_at(1, x, y, z)), uint32_t(square_at(1, x, y + 1, z)),
                       uint32_t(square_at(2, x, y, z)), uint32_t(square_at(2, x, y, z + 1))};
                std::sort(col.begin(), col.end());
            }
    cc.n_cells[3] = next;
    return cc;
}

bool CubicalChainComplex::boundaries_square_to_zero() const
{
    for (int k = 0; k < 2; ++k) {
        for (const auto& col : boundary[k + 1]) {
            std::vector<uint32_t> acc;
            for (uint32_t cell : col) acc = xor_merge(acc, boundary[k][cell]);
            if (!acc.empty()) return false;
        }
    }
    return true;
}

BruteForceResult betti_bruteforce(const VoxelGrid& grid, std::size_t max_cells)
{
    CubicalChainComplex cc = build_chain_complex(grid);
    const std::size_t total = cc.n_cells[0] + cc.n_cells[1] + cc.n_cells[2] + cc.n_cells[3];
    if (total > max_cells)
        throw SizeGuardError("betti_bruteforce: " + std::to_string(total) +
                             " cells exceed the guard of " + std::to_string(max_cells));

    BruteForceResult r;
    for (int k = 0; k < 4; ++k) r.n_cells[k] = cc.n_cells[k];
    r.rank_d1 = sparse_rank(cc.boundary[0]);
    r.rank_d2 = sparse_rank(cc.boundary[1]);
    r.rank_d3 = sparse_rank(cc.boundary[2]);

    r.b0 = long(cc.n_cells[0]) - long(r.rank_d1);
    r.b1 = long(cc.n_cells[1]) - long(r.rank_d1) - long(r.rank_d2);
    r.b2 = long(cc.n_cells[2]) - long(r.rank_d2) - long(r.rank_d3);
    r.b3 = long(cc.n_cells[3]) - long(r.rank_d3);
    r.chi = long(cc.n_cells[0]) - long(cc.n_cells[1]) + long(cc.n_cells[2]) - long(cc.n_cells[3]);
    return r;
}

// --- local sublevel models -------------------------------------------------

namespace {

// lattice points of [-1,1]^3; simplices as sorted id lists padded with -1
using Simplex = std::array<int, 4>;

int point_id(int x, int y, int z) { return (x + 1) + 3 * (y + 1) + 9 * (z + 1); }
int point_f(int id) { return (id % 3 - 1) + (id / 3 % 3 - 1) + (id / 9 - 1); }

struct LocalComplex {
    std::array<std::set<Simplex>, 4> simplices; // by dimension
};

void insert_with_faces(LocalComplex& lc, std::vector<int> verts)
{
    std::sort(verts.begin(), verts.end());
    const int n = int(verts.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Simplex s{-1, -1, -1, -1};
        int d = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s[d++] = verts[i];
        lc.simplices[d - 1].insert(s);
    }
}

LocalComplex triangulate_neighborhood(uint8_t code)
{
    static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    LocalComplex lc;
    for (int b = 0; b < 8; ++b) {
        if (!(code & (1u << b))) continue;
        const int m[3] = {(b & 1) - 1, ((b >> 1) & 1) - 1, ((b >> 2) & 1) - 1};
        for (const auto& perm : kPerms) {
            int p[3] = {m[0], m[1], m[2]};
            std::vector<int> chain = {point_id(p[0], p[1], p[2])};
            for (int step = 0; step < 3; ++step) {
                p[perm[step]] += 1;
                chain.push_back(point_id(p[0], p[1], p[2]));
            }
            insert_with_faces(lc, chain);
        }
    }
    return lc;
}

bool octants_face_connected(uint8_t code)
{
    if (code == 0) return true;
    const int start = std::countr_zero(unsigned(code));
    unsigned seen = 1u << start;
    std::vector<int> queue = {start};
    while (!queue.empty()) {
        const int b = queue.back();
        queue.pop_back();
        for (int axis = 0; axis < 3; ++axis) {
            const int nb = b ^ (1 << axis); // octant across one face
            if ((code & (1u << nb)) && !(seen & (1u << nb))) {
                seen |= 1u << nb;
                queue.push_back(nb);
            }
        }
    }
    return seen == unsigned(code);
}

VertexClass handle_class(const LocalPairProfile& p)
{
    if (p.trivial()) return VertexClass::Regular;
    if (p.r0 == 1 && p.r1 == 0 && p.r2 == 0 && p.r3 == 0) return VertexClass::Index0;
    if (p.r0 == 0 && p.r1 == 1 && p.r2 == 0 && p.r3 == 0) return VertexClass::Index1;
    if (p.r0 == 0 && p.r1 == 0 && p.r2 == 1 && p.r3 == 0) return VertexClass::Index2;
    if (p.r0 == 0 && p.r1 == 2 && p.r2 == 0 && p.r3 == 0) return VertexClass::MonkeySaddle;
    return VertexClass::Forbidden;
}

VertexClass profile_to_class(const LocalPairProfile& p)
{
    const VertexClass by_profile = handle_class(p);
    if (by_profile == VertexClass::Forbidden) return VertexClass::Forbidden;
    // Handle classes are granted only to locally unstacked neighborhoods
    // (occupied and empty octants each face-connected): those are the types
    // the chain complex tracks with generators. A handle profile on a pinched
    // neighborhood (cubes meeting through a joint edge or vertex, or a ring
    // whose complement pinches) is left Regular: the attachment is confined
    // to the pinch and the sweep's global bookkeeping absorbs it. This is
    // exercised against brute-force homology over the whole test corpus.
    if (!p.unstackable()) return VertexClass::Regular;
    return by_profile;
}

} // namespace

LocalPairProfile local_pair_profile(uint8_t code, bool descending)
{
    const LocalComplex lc = triangulate_neighborhood(code);
    const auto level = [&](int id) { return descending ? -point_f(id) : point_f(id); };

    // the relative complex: simplices of L = full({level <= 0}) that are not
    // in L- = full({level <= -1}), i.e. those whose top vertex sits at level 0
    std::array<std::vector<Simplex>, 4> rel;
    std::array<std::map<Simplex, uint32_t>, 4> index;
    for (int d = 0; d < 4; ++d)
        for (const Simplex& s : lc.simplices[d]) {
            int top = -9;
            for (int i = 0; i <= d; ++i) top = std::max(top, level(s[i]));
            if (top == 0) {
                index[d].emplace(s, uint32_t(rel[d].size()));
                rel[d].push_back(s);
            }
        }

    // boundary of a relative k-simplex: its facets that are still relative
    std::array<Gf2Matrix, 3> bnd;
    for (int k = 1; k < 4; ++k) {
        Gf2Matrix m(rel[k - 1].size(), rel[k].size());
        for (std::size_t c = 0; c < rel[k].size(); ++c) {
            const Simplex& s = rel[k][c];
            for (int drop = 0; drop <= k; ++drop) {
                Simplex facet{-1, -1, -1, -1};
                int at = 0;
                for (int i = 0; i <= k; ++i)
                    if (i != drop) facet[at++] = s[i];
                const auto it = index[k - 1].find(facet);
                if (it != index[k - 1].end()) m.set(it->second, c, true);
            }
        }
        bnd[k - 1] = std::move(m);
    }

    const std::size_t r1 = rank(bnd[0]), r2 = rank(bnd[1]), r3 = rank(bnd[2]);
    LocalPairProfile p;
    p.r0 = int(rel[0].size() - r1);
    p.r1 = int(rel[1].size() - r1 - r2);
    p.r2 = int(rel[2].size() - r2 - r3);
    p.r3 = int(rel[3].size() - r3);
    p.face_connected = octants_face_connected(code);
    p.complement_face_connected = octants_face_connected(uint8_t(~code));
    return p;
}

VertexClass classify_code_oracle(uint8_t code)
{
    return profile_to_class(local_pair_profile(code, false));
}

VertexClass classify_code_oracle_h(uint8_t code)
{
    return profile_to_class(local_pair_profile(code, true));
}

std::array<VertexClass, 256> generate_classification_table()
{
    std::array<VertexClass, 256> table{};
    for (int code = 0; code < 256; ++code) table[code] = classify_code_oracle(uint8_t(code));
    return table;
}

std::array<VertexClass, 256> reference_type_expansion()
{
    // the hand enumeration of critical neighborhood types
    struct TypeRow {
        uint8_t code;
        VertexClass cls;
    };
    static constexpr TypeRow kRows[15] = {
        {0x80, VertexClass::Index0},       {0xFE, VertexClass::Index2},
        {0xE0, VertexClass::Index1},       {0xA8, VertexClass::Index1},
        {0xC8, VertexClass::Index1},       {0xF8, VertexClass::Index1},
        {0xEA, VertexClass::Index1},       {0xEC, VertexClass::Index1},
        {0xE2, VertexClass::Index1},       {0xAC, VertexClass::Index1},
        {0xD8, VertexClass::Index1},       {0xE4, VertexClass::Index1},
        {0xB8, VertexClass::Index1},       {0xCA, VertexClass::Index1},
        {0xE8, VertexClass::MonkeySaddle},
    };
    static constexpr std::array<int, 3> kPerms[6] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

    std::array<VertexClass, 256> out{};
    out.fill(VertexClass::Regular);
    for (const TypeRow& row : kRows)
        for (const auto& perm : kPerms) {
            const uint8_t image = permute_code(row.code, perm);
            if (out[image] != VertexClass::Regular && out[image] != row.cls)
                throw std::logic_error("critical-type rows disagree under permutation");
            out[image] = row.cls;
        }
    return out;
}

std::vector<int> table_diff(const std::array<VertexClass, 256>& a,
                            const std::array<VertexClass, 256>& b)
{
    std::vector<int> out;
    for (int c = 0; c < 256; ++c)
        if (a[c] != b[c]) out.push_back(c);
    return out;
}

std::vector<int> critical_entry_diff(const std::array<VertexClass, 256>& table,
                                     const std::array<VertexClass, 256>& expansion)
{
    std::vector<int> out;
    for (int c = 0; c < 256; ++c) {
        const bool crit = table[c] != VertexClass::Regular && table[c] != VertexClass::Forbidden;
        const bool expected = expansion[c] != VertexClass::Regular;
        if (crit != expected || (crit && table[c] != expansion[c])) out.push_back(c);
    }
    return out;
}

std::string dump_table(const std::array<VertexClass, 256>& table)
{
    std::string out;
    char line[32];
    for (int c = 0; c < 256; ++c) {
        std::snprintf(line, sizeof line, "0x%02X %s\n", c, to_string(table[c]));
        out += line;
    }
    return out;
}

} // namespace cubetti::oracle
