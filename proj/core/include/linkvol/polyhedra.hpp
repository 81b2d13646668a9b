#pragma once

#include <optional>
#include <string>
#include <vector>

namespace linkvol {

// Basic polyhedron registry entry. The diagram of the polyhedron is the
// closure of `braid` (lowercase = positive generator, uppercase = inverse);
// vertex k of the Conway symbol is braid letter position[k] and its fill is
// attached with an extra quarter-turn rotation[k]. Both tables are pinned
// empirically against the volumes in the reference tables; entries with
// `verified` false carry the convention-unverified flag.
struct BasicPolyhedron {
    std::string name;
    std::string braid;
    std::vector<int> position;   // Conway vertex -> braid letter index
    std::vector<int> rotation;   // extra quarter turns per Conway vertex
    bool verified = false;
};

const BasicPolyhedron& polyhedron(const std::string& name);
std::vector<std::string> polyhedron_names();

}  // namespace linkvol
