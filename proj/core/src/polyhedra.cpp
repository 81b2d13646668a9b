#include "linkvol/polyhedra.hpp"

#include <map>
#include <stdexcept>

#include "linkvol/conway.hpp"

namespace linkvol {

namespace {

BasicPolyhedron make(const std::string& name, const std::string& braid, bool verified) {
    BasicPolyhedron bp;
    bp.name = name;
    bp.braid = braid;
    bp.position.resize(braid.size());
    for (std::size_t i = 0; i < braid.size(); ++i) bp.position[i] = static_cast<int>(i);
    bp.rotation.assign(braid.size(), 0);
    bp.verified = verified;
    return bp;
}

std::string antiprismatic_braid(int vertices) {
    std::string w;
    for (int i = 0; i < vertices / 2; ++i) w += "aB";
    return w;
}

const std::map<std::string, BasicPolyhedron>& registry() {
    static const std::map<std::string, BasicPolyhedron> reg = [] {
        std::map<std::string, BasicPolyhedron> r;
        for (int n = 2; n <= 24; ++n) {
            std::string name = std::to_string(2 * n) + "*";
            // 6* and 8* vertex conventions are pinned by reference volumes;
            // larger antiprismatic polyhedra share the construction.
            bool verified = (2 * n == 6 || 2 * n == 8);
            r.emplace(name, make(name, antiprismatic_braid(2 * n), verified));
        }
        r.emplace("9*", make("9*", "AbACbACbC", false));
        r.emplace("10**", make("10**", "AbAbCbACbC", false));
        r.emplace("11**", make("11**", "AbAbACbACbC", false));
        r.emplace("12F", make("12F", "AbAbAbCbACbC", false));
        return r;
    }();
    return reg;
}

}  // namespace

const BasicPolyhedron& polyhedron(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end())
        throw std::runtime_error("unknown basic polyhedron: " + name);
    return it->second;
}

std::vector<std::string> polyhedron_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
}

}  // namespace linkvol
