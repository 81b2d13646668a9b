#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkvol/conway.hpp"

namespace linkvol {

// Planar link diagram in PD style. Each crossing lists its four incident
// arc ids in counterclockwise order (port 0..3); the over-strand runs
// through ports 0-2 when over02 is set, otherwise through 1-3.
struct CrossingPD {
    std::array<int, 4> arcs;
    bool over02;
};

struct LinkDiagram {
    std::vector<CrossingPD> crossings;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int arc_count() const;
};

// Build a diagram from a Conway symbol (numerator closure for algebraic
// symbols, braid-template closure with vertex substitution for polyhedral
// ones).
LinkDiagram build_diagram(const ConwaySymbol& sym);

int component_count(const LinkDiagram& d);

// Faces of the underlying 4-valent planar map; face count must equal
// crossings + 2 for a connected diagram on the sphere.
std::vector<std::vector<std::pair<int, int>>> faces(const LinkDiagram& d);

struct DiagramDiagnostics {
    bool arc_incidence_ok = true;    // every arc appears exactly twice
    bool connected = true;
    bool planar = true;              // V - E + F == 2
    bool reduced = true;             // no arc bounds the same face twice
    std::vector<std::string> notes;
    bool ok() const { return arc_incidence_ok && connected && planar && reduced; }
};

DiagramDiagnostics validate(const LinkDiagram& d);

// Crossing signs from an arbitrary orientation of each component:
// +1 right-handed, -1 left-handed.
std::vector<int> crossing_signs(const LinkDiagram& d);

// PD code JSON: {"crossings": [[a,b,c,d],...], "signs": [...]} with arcs
// counterclockwise from the incoming under-strand.
std::string pd_json(const LinkDiagram& d);

}  // namespace linkvol
