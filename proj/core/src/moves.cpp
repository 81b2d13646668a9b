// Retriangulation moves used to turn the raw octahedral complex into an
// all-cusped ideal triangulation: edge collapse (folds the tets around an
// edge whose endpoints are distinct vertex classes) and valence-2 edge
// cancellation (removes a pillow pair). Every move is applied to a scratch
// copy and committed only if the full structural inspection passes.
#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "linkvol/triangulation.hpp"

namespace linkvol {

namespace {

constexpr std::array<std::array<int, 3>, 4> kFaceSlots = {{
    {1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2},
}};

std::array<int, 4> compose(const std::array<int, 4>& p2, const std::array<int, 4>& p1) {
    std::array<int, 4> r{};
    for (int i = 0; i < 4; ++i) r[i] = p2[p1[i]];
    return r;
}

std::array<int, 4> inverse(const std::array<int, 4>& p) {
    std::array<int, 4> r{};
    for (int i = 0; i < 4; ++i) r[p[i]] = i;
    return r;
}

bool structurally_valid(const IdealTriangulation& tri, int expected_cusps) {
    if (tri.ntets == 0) return false;
    auto info = inspect(tri);
    if (!info.ok()) return false;
    for (int chi : info.link_chis)
        if (chi != 0 && chi != 2) return false;
    if (expected_cusps >= 0 && info.cusps != expected_cusps) return false;
    return true;
}

// Collapse the edge class containing eclass; identifies its two (distinct)
// endpoint vertex classes and removes all tets containing the edge.
std::optional<IdealTriangulation> collapse_edge(const IdealTriangulation& tri,
                                                const std::vector<EdgeClassRef>& eclass,
                                                int expected_cusps) {
    auto vcl = vertex_classes(tri);
    std::map<std::pair<int, int>, int> vindex;
    for (std::size_t i = 0; i < vcl.size(); ++i)
        for (auto& x : vcl[i]) vindex[x] = static_cast<int>(i);

    int A = vindex[{eclass[0].tet, eclass[0].a}];
    int B = vindex[{eclass[0].tet, eclass[0].b}];
    if (A == B) return std::nullopt;

    std::map<int, std::pair<int, int>> dying;  // tet -> (slotA, slotB)
    for (const auto& r : eclass) {
        if (dying.count(r.tet)) return std::nullopt;  // tet contains edge twice
        int a = r.a, b = r.b;
        if (vindex[{r.tet, a}] == B) std::swap(a, b);
        if (vindex[{r.tet, a}] != A || vindex[{r.tet, b}] != B) return std::nullopt;
        dying[r.tet] = {a, b};
    }

    // Fold map inside a dying tet: face omit(a) <-> face omit(b) via the
    // transposition a<->b.
    auto fold_perm = [&](int t) {
        auto [a, b] = dying[t];
        std::array<int, 4> p{0, 1, 2, 3};
        std::swap(p[a], p[b]);
        return p;
    };

    struct NewGlue {
        int t1, f1, t2, f2;
        std::array<int, 4> perm;
    };
    std::vector<NewGlue> newglue;
    std::set<std::pair<int, int>> handled;

    for (const auto& [t, ab] : dying) {
        for (int side = 0; side < 2; ++side) {
            int f = side == 0 ? ab.first : ab.second;
            if (handled.count({t, f})) continue;
            // find chain start: walk backwards through dying tets
            std::pair<int, int> start{t, f};
            while (true) {
                const auto& g = tri.glue[start.first][start.second];
                auto it = dying.find(g.tet);
                bool is_fold_port =
                    it != dying.end() &&
                    (g.face == it->second.first || g.face == it->second.second);
                if (!is_fold_port) break;
                // continue through that dying tet
                int other = g.face == it->second.first ? it->second.second
                                                       : it->second.first;
                start = {g.tet, other};
                if (start == std::pair{t, f}) return std::nullopt;  // closed loop
            }
            // traverse forward from start
            const auto& g0 = tri.glue[start.first][start.second];
            std::pair<int, int> out1{g0.tet, g0.face};
            auto perm_start_to_out1 = g0.perm;
            std::array<int, 4> M{0, 1, 2, 3};
            std::pair<int, int> cur = start;
            while (true) {
                int tc = cur.first;
                auto it = dying.find(tc);
                int exit_face = cur.second == it->second.first ? it->second.second
                                                               : it->second.first;
                M = compose(fold_perm(tc), M);
                const auto& g = tri.glue[tc][exit_face];
                M = compose(g.perm, M);
                cur = {g.tet, g.face};
                auto it2 = dying.find(cur.first);
                if (it2 == dying.end() ||
                    (cur.second != it2->second.first && cur.second != it2->second.second))
                    break;
            }
            std::pair<int, int> out2 = cur;
            auto perm_o1_o2 = compose(M, inverse(perm_start_to_out1));
            newglue.push_back({out1.first, out1.second, out2.first, out2.second, perm_o1_o2});
            // mark chain handled
            cur = start;
            while (true) {
                handled.insert(cur);
                auto it = dying.find(cur.first);
                int other = cur.second == it->second.first ? it->second.second
                                                           : it->second.first;
                handled.insert({cur.first, other});
                const auto& g = tri.glue[cur.first][other];
                cur = {g.tet, g.face};
                auto it2 = dying.find(cur.first);
                if (it2 == dying.end() ||
                    (cur.second != it2->second.first && cur.second != it2->second.second))
                    break;
            }
        }
    }

    // build survivor triangulation
    std::vector<int> remap(tri.ntets, -1);
    int nn = 0;
    for (int t = 0; t < tri.ntets; ++t)
        if (!dying.count(t)) remap[t] = nn++;
    if (nn == 0) return std::nullopt;

    for (const auto& ng : newglue) {
        if (remap[ng.t1] < 0 || remap[ng.t2] < 0) return std::nullopt;
        if (ng.t1 == ng.t2 && ng.f1 == ng.f2) return std::nullopt;
    }
    std::set<std::pair<int, int>> used;
    for (const auto& ng : newglue) {
        if (used.count({ng.t1, ng.f1}) || used.count({ng.t2, ng.f2})) return std::nullopt;
        used.insert({ng.t1, ng.f1});
        used.insert({ng.t2, ng.f2});
    }

    IdealTriangulation out;
    out.resize(nn);
    try {
        for (int t = 0; t < tri.ntets; ++t) {
            if (remap[t] < 0) continue;
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri.glue[t][f];
                if (remap[g.tet] < 0) continue;
                if (used.count({t, f})) continue;
                if (out.glue[remap[t]][f].tet != -1) continue;
                out.set_glue(remap[t], f, remap[g.tet], g.face, g.perm);
            }
        }
        for (const auto& ng : newglue) {
            if (out.glue[remap[ng.t1]][ng.f1].tet != -1 ||
                out.glue[remap[ng.t2]][ng.f2].tet != -1)
                return std::nullopt;
            out.set_glue(remap[ng.t1], ng.f1, remap[ng.t2], ng.f2, ng.perm);
        }
    } catch (const std::logic_error&) {
        return std::nullopt;
    }
    if (!structurally_valid(out, expected_cusps)) return std::nullopt;
    return out;
}

// Remove the two tets around a valence-2 edge.
std::optional<IdealTriangulation> cancel_valence2(const IdealTriangulation& tri,
                                                  const std::vector<EdgeClassRef>& eclass,
                                                  int expected_cusps) {
    if (eclass.size() != 2) return std::nullopt;
    int t1 = eclass[0].tet, t2 = eclass[1].tet;
    if (t1 == t2) return std::nullopt;
    auto [a, b] = std::pair{eclass[0].a, eclass[0].b};
    // both faces of t1 containing the edge glue to t2
    std::array<int, 2> inner{};
    int k = 0;
    for (int s = 0; s < 4; ++s)
        if (s != a && s != b) inner[k++] = s;
    for (int f : inner)
        if (tri.glue[t1][f].tet != t2) return std::nullopt;
    auto perm = tri.glue[t1][inner[0]].perm;  // t1 slots -> t2 slots

    struct NewGlue {
        int t1, f1, t2, f2;
        std::array<int, 4> perm;
    };
    std::vector<NewGlue> ng;
    for (int s : {a, b}) {
        int f1o = s;
        int f2o = perm[s];
        const auto& g1 = tri.glue[t1][f1o];
        const auto& g2 = tri.glue[t2][f2o];
        if (g1.tet == t1 || g1.tet == t2 || g2.tet == t1 || g2.tet == t2)
            return std::nullopt;
        auto m = compose(g2.perm, compose(perm, inverse(g1.perm)));
        ng.push_back({g1.tet, g1.face, g2.tet, g2.face, m});
    }
    std::set<std::pair<int, int>> used;
    for (const auto& x : ng) {
        if (std::pair{x.t1, x.f1} == std::pair{x.t2, x.f2}) return std::nullopt;
        if (used.count({x.t1, x.f1}) || used.count({x.t2, x.f2})) return std::nullopt;
        used.insert({x.t1, x.f1});
        used.insert({x.t2, x.f2});
    }
    std::vector<int> remap(tri.ntets, -1);
    int nn = 0;
    for (int t = 0; t < tri.ntets; ++t)
        if (t != t1 && t != t2) remap[t] = nn++;
    if (nn == 0) return std::nullopt;
    IdealTriangulation out;
    out.resize(nn);
    try {
        for (int t = 0; t < tri.ntets; ++t) {
            if (remap[t] < 0) continue;
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri.glue[t][f];
                if (remap[g.tet] < 0) continue;
                if (used.count({t, f})) continue;
                if (out.glue[remap[t]][f].tet != -1) continue;
                out.set_glue(remap[t], f, remap[g.tet], g.face, g.perm);
            }
        }
        for (const auto& x : ng) {
            if (out.glue[remap[x.t1]][x.f1].tet != -1 ||
                out.glue[remap[x.t2]][x.f2].tet != -1)
                return std::nullopt;
            out.set_glue(remap[x.t1], x.f1, remap[x.t2], x.f2, x.perm);
        }
    } catch (const std::logic_error&) {
        return std::nullopt;
    }
    if (!structurally_valid(out, expected_cusps)) return std::nullopt;
    return out;
}

std::optional<IdealTriangulation> attempt(const IdealTriangulation& tri0, int cusps,
                                          std::mt19937& rng, bool shuffle) {
    IdealTriangulation cur = tri0;
    for (int round = 0; round < 400; ++round) {
        auto ecl = edge_classes(cur);
        auto vcl = vertex_classes(cur);
        auto info = inspect(cur);
        std::map<std::pair<int, int>, int> vindex;
        for (std::size_t i = 0; i < vcl.size(); ++i)
            for (auto& x : vcl[i]) vindex[x] = static_cast<int>(i);

        // cancel valence-2 edges first (they force flat tetrahedra)
        std::vector<const std::vector<EdgeClassRef>*> val2;
        for (const auto& ec : ecl)
            if (ec.size() == 2) val2.push_back(&ec);
        if (shuffle) std::shuffle(val2.begin(), val2.end(), rng);
        bool acted = false;
        for (const auto* ec : val2) {
            if (auto out = cancel_valence2(cur, *ec, cusps)) {
                cur = *out;
                acted = true;
                break;
            }
        }
        if (acted) continue;

        bool have_cone = info.cone_points > 0;
        if (!have_cone) {
            for (const auto& ec : edge_classes(cur))
                if (ec.size() <= 2) return std::nullopt;  // stuck with low valence
            return cur;
        }

        // collapse an edge joining a cone point to a cusp
        std::vector<std::pair<std::size_t, const std::vector<EdgeClassRef>*>> cands;
        for (const auto& ec : ecl) {
            int va = vindex[{ec[0].tet, ec[0].a}];
            int vb = vindex[{ec[0].tet, ec[0].b}];
            if (va == vb) continue;
            bool sa = info.link_chis[va] == 2, sb = info.link_chis[vb] == 2;
            if (sa != sb) cands.push_back({ec.size(), &ec});
        }
        if (shuffle)
            std::shuffle(cands.begin(), cands.end(), rng);
        else
            std::sort(cands.begin(), cands.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& [sz, ec] : cands) {
            if (auto out = collapse_edge(cur, *ec, cusps)) {
                cur = *out;
                acted = true;
                break;
            }
        }
        if (!acted) {
            // cone-cone edge as a fallback
            for (const auto& ec : ecl) {
                int va = vindex[{ec[0].tet, ec[0].a}];
                int vb = vindex[{ec[0].tet, ec[0].b}];
                if (va != vb && info.link_chis[va] == 2 && info.link_chis[vb] == 2) {
                    if (auto out = collapse_edge(cur, ec, cusps)) {
                        cur = *out;
                        acted = true;
                        break;
                    }
                }
            }
        }
        if (!acted) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

std::optional<IdealTriangulation> remove_cone_points(const IdealTriangulation& tri,
                                                     int retries, int variant) {
    auto info = inspect(tri);
    if (!info.ok()) return std::nullopt;
    int cusps = info.cusps;
    for (int att = 0; att < retries; ++att) {
        std::mt19937 rng(7919u * (att + 1) + 104729u * variant);
        if (auto out = attempt(tri, cusps, rng, att > 0 || variant > 0)) return out;
    }
    return std::nullopt;
}

}  // namespace linkvol
