#include "linkvol/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace linkvol {

void IdealTriangulation::set_glue(int t1, int f1, int t2, int f2,
                                  const std::array<int, 4>& perm) {
    if (glue[t1][f1].tet != -1 || glue[t2][f2].tet != -1)
        throw std::logic_error("face already glued");
    if (perm[f1] != f2) throw std::logic_error("perm does not map face to face");
    glue[t1][f1] = {t2, f2, perm};
    std::array<int, 4> inv{};
    for (int i = 0; i < 4; ++i) inv[perm[i]] = i;
    glue[t2][f2] = {t1, f1, inv};
}

int edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    for (int i = 0; i < 6; ++i)
        if (kTetEdges[i][0] == a && kTetEdges[i][1] == b) return i;
    throw std::logic_error("bad edge");
}

int edge_type(int a, int b) {
    if (a > b) std::swap(a, b);
    if ((a == 0 && b == 1) || (a == 2 && b == 3)) return 0;
    if ((a == 0 && b == 2) || (a == 1 && b == 3)) return 1;
    return 2;
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) {
            p[x] = p[p[x]];
            x = p[x];
        }
        return x;
    }
    void join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[a] = b;
    }
};

constexpr std::array<std::array<int, 3>, 4> kFaceSlots = {{
    {1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2},
}};

}  // namespace

std::vector<std::vector<EdgeClassRef>> edge_classes(const IdealTriangulation& tri) {
    UnionFind uf(tri.ntets * 6);
    auto id = [](int t, int a, int b) { return t * 6 + edge_index(a, b); };
    for (int t = 0; t < tri.ntets; ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.glue[t][f];
            if (g.tet < 0) continue;
            const auto& fs = kFaceSlots[f];
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    uf.join(id(t, fs[i], fs[j]), id(g.tet, g.perm[fs[i]], g.perm[fs[j]]));
        }
    std::map<int, std::vector<EdgeClassRef>> by_root;
    for (int t = 0; t < tri.ntets; ++t)
        for (int e = 0; e < 6; ++e)
            by_root[uf.find(t * 6 + e)].push_back({t, kTetEdges[e][0], kTetEdges[e][1]});
    std::vector<std::vector<EdgeClassRef>> out;
    out.reserve(by_root.size());
    for (auto& [k, v] : by_root) out.push_back(std::move(v));
    return out;
}

std::vector<std::vector<std::pair<int, int>>> vertex_classes(const IdealTriangulation& tri) {
    UnionFind uf(tri.ntets * 4);
    for (int t = 0; t < tri.ntets; ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.glue[t][f];
            if (g.tet < 0) continue;
            for (int s : kFaceSlots[f]) uf.join(t * 4 + s, g.tet * 4 + g.perm[s]);
        }
    std::map<int, std::vector<std::pair<int, int>>> by_root;
    for (int t = 0; t < tri.ntets; ++t)
        for (int s = 0; s < 4; ++s) by_root[uf.find(t * 4 + s)].push_back({t, s});
    std::vector<std::vector<std::pair<int, int>>> out;
    out.reserve(by_root.size());
    for (auto& [k, v] : by_root) out.push_back(std::move(v));
    return out;
}

TriangulationInfo inspect(const IdealTriangulation& tri) {
    TriangulationInfo info;
    info.tets = tri.ntets;
    for (int t = 0; t < tri.ntets; ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.glue[t][f];
            if (g.tet < 0) {
                info.faces_matched = false;
                continue;
            }
            const auto& back = tri.glue[g.tet][g.face];
            if (back.tet != t || back.face != f) info.faces_matched = false;
            if (g.perm[f] != g.face) info.faces_matched = false;
        }
    if (!info.faces_matched) return info;

    // connectivity
    std::vector<bool> vis(tri.ntets, false);
    if (tri.ntets > 0) {
        std::vector<int> stack{0};
        vis[0] = true;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                int t2 = tri.glue[t][f].tet;
                if (!vis[t2]) {
                    vis[t2] = true;
                    stack.push_back(t2);
                }
            }
        }
        info.connected = std::all_of(vis.begin(), vis.end(), [](bool b) { return b; });
    }

    // orientability: parity propagation
    std::vector<int> sign(tri.ntets, 0);
    sign[0] = 1;
    std::vector<int> stack{0};
    auto parity = [](const std::array<int, 4>& p) {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) inv ^= 1;
        return inv;
    };
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.glue[t][f];
            int s2 = parity(g.perm) == 1 ? sign[t] : -sign[t];
            if (sign[g.tet] == 0) {
                sign[g.tet] = s2;
                stack.push_back(g.tet);
            } else if (sign[g.tet] != s2) {
                info.orientable = false;
            }
        }
    }

    // edge cycles: walking around each edge must close up consistently
    auto ecl = edge_classes(tri);
    info.edge_classes = static_cast<int>(ecl.size());
    for (const auto& ec : ecl) {
        // walk: start at (t, a, b, f) choosing one of the 2 faces containing
        // the edge, cross gluings until back; count visits == class size
        const auto& start = ec[0];
        int t = start.tet, a = start.a, b = start.b;
        // faces containing edge (a,b): the two slots not in {a,b}
        std::array<int, 2> others{};
        int k = 0;
        for (int s = 0; s < 4; ++s)
            if (s != a && s != b) others[k++] = s;
        int f = others[0];
        int steps = 0;
        int t0 = t, a0 = a, b0 = b, f0 = f;
        do {
            const auto& g = tri.glue[t][f];
            int na = g.perm[a], nb = g.perm[b];
            // entered partner through face g.face; continue through the other
            // face of the partner containing the edge
            int nf = -1;
            for (int s = 0; s < 4; ++s)
                if (s != na && s != nb && s != g.face) nf = s;
            t = g.tet;
            a = na;
            b = nb;
            f = nf;
            ++steps;
            if (steps > 10 * static_cast<int>(ec.size())) {
                info.edge_cycles_ok = false;
                break;
            }
        } while (!(t == t0 && ((a == a0 && b == b0)) && f == f0));
        if (steps != static_cast<int>(ec.size()) && info.edge_cycles_ok) {
            // each (tet, edge) instance must be visited exactly once
            info.edge_cycles_ok = false;
        }
    }

    // vertex links
    auto vcl = vertex_classes(tri);
    info.vertex_classes = static_cast<int>(vcl.size());
    std::map<std::pair<int, int>, int> vindex;
    for (std::size_t i = 0; i < vcl.size(); ++i)
        for (auto& x : vcl[i]) vindex[x] = static_cast<int>(i);
    std::vector<int> ends(vcl.size(), 0);
    for (const auto& ec : ecl) {
        const auto& r = ec[0];
        ++ends[vindex[{r.tet, r.a}]];
        ++ends[vindex[{r.tet, r.b}]];
    }
    for (std::size_t i = 0; i < vcl.size(); ++i) {
        int F = static_cast<int>(vcl[i].size());
        // chi = V - E + F with E = 3F/2 and V = incident edge-class ends
        int chi2 = 2 * ends[static_cast<int>(i)] - 3 * F + 2 * F;  // 2*chi
        int chi = chi2 / 2;
        info.link_chis.push_back(chi);
        if (chi == 0) ++info.cusps;
        else if (chi == 2) ++info.cone_points;
    }
    return info;
}

IdealTriangulation octahedral_triangulation(const LinkDiagram& d) {
    auto diag = validate(d);
    if (!diag.ok()) {
        std::string msg = "diagram not suitable for triangulation:";
        for (const auto& n : diag.notes) msg += " " + n;
        throw std::runtime_error(msg);
    }
    int n = d.crossing_count();
    if (n < 2) throw std::runtime_error("need at least 2 crossings");

    // region of each corner (quadrant q at crossing c spans ports q, q+1)
    auto fs = faces(d);
    std::vector<int> region(4 * n, -1);
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (auto [c, p] : fs[i]) region[4 * c + (p + 3) % 4] = static_cast<int>(i);

    // arc endpoints
    std::vector<std::array<std::pair<int, int>, 2>> ends(
        d.arc_count(), {std::pair{-1, -1}, std::pair{-1, -1}});
    std::vector<int> cnt(d.arc_count(), 0);
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < 4; ++p) {
            int a = d.crossings[c].arcs[p];
            ends[a][cnt[a]++] = {c, p};
        }

    auto is_over = [&](int c, int p) {
        return d.crossings[c].over02 ? (p % 2 == 0) : (p % 2 == 1);
    };

    IdealTriangulation tri;
    tri.resize(4 * n);
    auto tid = [&](int c, int q) { return 4 * c + ((q % 4) + 4) % 4; };

    // walls around the crossing axis: at port j, between quadrants j-1 and j;
    // the wall face contains slots {0,1,X}, X = 3 below an over-strand germ,
    // 2 above an under-strand germ; identity slot correspondence.
    for (int c = 0; c < n; ++c)
        for (int j = 0; j < 4; ++j) {
            int X = is_over(c, j) ? 3 : 2;
            int omit = 5 - X;
            tri.set_glue(tid(c, j - 1), omit, tid(c, j), omit, {0, 1, 2, 3});
        }

    // fins across each arc: same-region quadrants at the two ends glue along
    // the face containing the arc's apex slot and both pole slots.
    for (int a = 0; a < d.arc_count(); ++a) {
        auto [e1, e2] = std::pair{ends[a][0], ends[a][1]};
        auto [c1, p1] = e1;
        auto [c2, p2] = e2;
        int s1 = is_over(c1, p1) ? 0 : 1;
        int s2 = is_over(c2, p2) ? 0 : 1;
        std::array<int, 2> q1{(p1 + 3) % 4, p1};
        std::array<int, 2> q2{(p2 + 3) % 4, p2};
        for (int k = 0; k < 2; ++k) {
            int r1 = region[4 * c1 + q1[k]];
            int other = (region[4 * c2 + q2[0]] == r1) ? q2[0] : q2[1];
            if (region[4 * c2 + other] != r1)
                throw std::runtime_error("region mismatch across arc");
            std::array<int, 4> perm{};
            perm[s1] = s2;
            perm[1 - s1] = 1 - s2;
            perm[2] = 2;
            perm[3] = 3;
            tri.set_glue(tid(c1, q1[k]), 1 - s1, tid(c2, other), 1 - s2, perm);
        }
    }
    return tri;
}

IdealTriangulation orient_canonically(const IdealTriangulation& tri) {
    std::vector<int> sign(tri.ntets, 0);
    sign[0] = 1;
    std::vector<int> stack{0};
    auto parity = [](const std::array<int, 4>& p) {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) inv ^= 1;
        return inv;
    };
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.glue[t][f];
            int s2 = parity(g.perm) == 1 ? sign[t] : -sign[t];
            if (sign[g.tet] == 0) {
                sign[g.tet] = s2;
                stack.push_back(g.tet);
            } else if (sign[g.tet] != s2) {
                throw std::runtime_error("non-orientable triangulation");
            }
        }
    }
    auto m = [&](int t, int s) {
        if (sign[t] < 0 && s >= 2) return 5 - s;
        return s;
    };
    IdealTriangulation out;
    out.resize(tri.ntets);
    std::vector<std::array<bool, 4>> done(tri.ntets, {false, false, false, false});
    for (int t = 0; t < tri.ntets; ++t)
        for (int f = 0; f < 4; ++f) {
            if (done[t][f]) continue;
            const auto& g = tri.glue[t][f];
            int nf = m(t, f);
            int nf2 = m(g.tet, g.face);
            std::array<int, 4> np{};
            for (int s = 0; s < 4; ++s) np[m(t, s)] = m(g.tet, g.perm[s]);
            out.set_glue(t, nf, g.tet, nf2, np);
            done[t][f] = true;
            done[g.tet][g.face] = true;
        }
    return out;
}

std::string to_json(const IdealTriangulation& tri) {
    nlohmann::json j;
    j["tets"] = tri.ntets;
    auto& gl = j["gluings"] = nlohmann::json::array();
    for (int t = 0; t < tri.ntets; ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.glue[t][f];
            if (g.tet < t || (g.tet == t && g.face < f)) continue;
            gl.push_back({t, f, g.tet, g.face,
                          {g.perm[0], g.perm[1], g.perm[2], g.perm[3]}});
        }
    return j.dump();
}

IdealTriangulation from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    IdealTriangulation tri;
    tri.resize(j.at("tets").get<int>());
    for (const auto& g : j.at("gluings")) {
        std::array<int, 4> perm{g.at(4).at(0).get<int>(), g.at(4).at(1).get<int>(),
                                g.at(4).at(2).get<int>(), g.at(4).at(3).get<int>()};
        tri.set_glue(g.at(0).get<int>(), g.at(1).get<int>(), g.at(2).get<int>(),
                     g.at(3).get<int>(), perm);
    }
    for (int t = 0; t < tri.ntets; ++t)
        for (int f = 0; f < 4; ++f)
            if (tri.glue[t][f].tet < 0)
                throw std::runtime_error("unglued face in triangulation file");
    return tri;
}

}  // namespace linkvol
