#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkvol/diagram.hpp"

namespace linkvol {

// Ideal triangulation as tetrahedra with face gluings. Face f of a
// tetrahedron is the one opposite vertex slot f. A gluing stores the
// partner tet/face and the slot correspondence (perm[s] = partner slot).
struct FaceGluing {
    int tet = -1;
    int face = -1;
    std::array<int, 4> perm{0, 1, 2, 3};
};

struct IdealTriangulation {
    int ntets = 0;
    // glue[t][f]
    std::vector<std::array<FaceGluing, 4>> glue;

    void resize(int n) {
        ntets = n;
        glue.assign(n, {});
    }
    void set_glue(int t1, int f1, int t2, int f2, const std::array<int, 4>& perm);
};

// Edge of a tet = unordered slot pair; 6 per tet, indexed 0..5.
constexpr std::array<std::array<int, 2>, 6> kTetEdges = {{
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
}};
int edge_index(int a, int b);

// Shape-parameter type of an edge: 0 for (01)/(23), 1 for (02)/(13),
// 2 for (03)/(12); valid on positively ordered tets.
int edge_type(int a, int b);

struct EdgeClassRef {
    int tet;
    int a, b;  // slots
};

struct TriangulationInfo {
    int tets = 0;
    int edge_classes = 0;
    int vertex_classes = 0;
    std::vector<int> link_chis;      // per vertex class
    int cusps = 0;                   // torus links
    int cone_points = 0;             // sphere links
    bool faces_matched = true;
    bool edge_cycles_ok = true;
    bool orientable = true;
    bool connected = true;
    bool ok() const {
        return faces_matched && edge_cycles_ok && orientable && connected;
    }
};

std::vector<std::vector<EdgeClassRef>> edge_classes(const IdealTriangulation& tri);
std::vector<std::vector<std::pair<int, int>>> vertex_classes(const IdealTriangulation& tri);
TriangulationInfo inspect(const IdealTriangulation& tri);

// One octahedron per crossing split into four tetrahedra around the
// over-under axis; two extra ideal vertices above and below the projection
// sphere (cone points with sphere links). Requires a connected reduced
// diagram with at least two crossings.
IdealTriangulation octahedral_triangulation(const LinkDiagram& d);

// Reorders slots so every tetrahedron is positively oriented (all gluing
// permutations odd). Throws when the complex is non-orientable.
IdealTriangulation orient_canonically(const IdealTriangulation& tri);

// Collapses the two cone-point vertices into cusps and removes valence-<=2
// edges; the result is an ideal triangulation of the link complement with
// edge classes == tetrahedra. Returns nullopt when no valid move sequence is
// found.
std::optional<IdealTriangulation> remove_cone_points(const IdealTriangulation& tri,
                                                     int retries = 12, int variant = 0);

// JSON import/export (gluings only): {"tets":N,"gluings":[[t,f,t2,f2,[p0,p1,p2,p3]],...]}
std::string to_json(const IdealTriangulation& tri);
IdealTriangulation from_json(const std::string& text);

}  // namespace linkvol
