#include "linkvol/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "linkvol/polyhedra.hpp"

namespace linkvol {

namespace {

// Wire-based tangle assembler. Crossings have four ports in counterclockwise
// order: 0=SW, 1=SE, 2=NE, 3=SW-opposite (NW). Tangle corners are wire ids
// in the order (NW, NE, SE, SW).
class Net {
  public:
    int new_wire() {
        parent_.push_back(static_cast<int>(parent_.size()));
        return static_cast<int>(parent_.size()) - 1;
    }
    int find(int w) {
        while (parent_[w] != w) {
            parent_[w] = parent_[parent_[w]];
            w = parent_[w];
        }
        return w;
    }
    void join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[a] = b;
    }
    std::array<int, 4> add_crossing(bool over02) {
        std::array<int, 4> ws{new_wire(), new_wire(), new_wire(), new_wire()};
        crossings_.push_back(ws);
        over_.push_back(over02);
        return ws;
    }
    LinkDiagram finish() {
        LinkDiagram d;
        std::map<int, int> ids;
        for (std::size_t c = 0; c < crossings_.size(); ++c) {
            CrossingPD pd{};
            for (int p = 0; p < 4; ++p) {
                int root = find(crossings_[c][p]);
                auto [it, inserted] = ids.try_emplace(root, static_cast<int>(ids.size()));
                pd.arcs[p] = it->second;
            }
            pd.over02 = over_[c];
            d.crossings.push_back(pd);
        }
        return d;
    }

  private:
    std::vector<int> parent_;
    std::vector<std::array<int, 4>> crossings_;
    std::vector<bool> over_;
};

using Corners = std::array<int, 4>;  // NW, NE, SE, SW

struct Builder {
    Net net;
    bool signflip = false;

    void chain(int n, Corners c, bool mir) {
        auto [nw, ne, se, sw] = c;
        if (signflip) n = -n;
        if (n == 0) {
            if (!mir) {
                net.join(nw, ne);
                net.join(sw, se);
            } else {
                net.join(nw, sw);
                net.join(ne, se);
            }
            return;
        }
        bool over = n > 0;
        int k = std::abs(n);
        if (!mir) {
            int prevSE = -1, prevNE = -1;
            for (int i = 0; i < k; ++i) {
                auto ws = net.add_crossing(over);
                if (i == 0) {
                    net.join(ws[3], nw);
                    net.join(ws[0], sw);
                } else {
                    net.join(prevSE, ws[0]);
                    net.join(prevNE, ws[3]);
                }
                prevSE = ws[1];
                prevNE = ws[2];
            }
            net.join(prevNE, ne);
            net.join(prevSE, se);
        } else {
            int prevSW = -1, prevSE = -1;
            for (int i = 0; i < k; ++i) {
                auto ws = net.add_crossing(over);
                if (i == 0) {
                    net.join(ws[3], nw);
                    net.join(ws[2], ne);
                } else {
                    net.join(prevSW, ws[3]);
                    net.join(prevSE, ws[2]);
                }
                prevSW = ws[0];
                prevSE = ws[1];
            }
            net.join(prevSW, sw);
            net.join(prevSE, se);
        }
    }

    void build(const TanglePtr& t, Corners c, bool mir) {
        if (auto* ch = std::get_if<Chain>(&t->node)) {
            chain(ch->value, c, mir);
        } else if (auto* p = std::get_if<Product>(&t->node)) {
            product(p->factors, c, mir);
        } else if (auto* r = std::get_if<Ramification>(&t->node)) {
            ram(r->terms, c, mir);
        } else if (auto* pl = std::get_if<Plus>(&t->node)) {
            append_plus(pl->base, pl->count, c, mir);
        } else if (auto* n = std::get_if<Negated>(&t->node)) {
            signflip = !signflip;
            build(n->base, c, mir);
            signflip = !signflip;
        }
    }

    // product t1 ... tk, left associative: P = transpose(P') + t_last.
    // transpose = reflection in the NW-SE diagonal; transpose(A + B) =
    // vstack(transpose(A), transpose(B)).
    void product(const std::vector<TanglePtr>& fs, Corners c, bool mir) {
        if (fs.size() == 1) {
            build(fs[0], c, mir);
            return;
        }
        std::vector<TanglePtr> head(fs.begin(), fs.end() - 1);
        const TanglePtr& last = fs.back();
        auto [nw, ne, se, sw] = c;
        if (!mir) {
            int m1 = net.new_wire(), m2 = net.new_wire();
            product(head, {nw, m1, m2, sw}, true);
            build(last, {m1, ne, se, m2}, false);
        } else {
            int m1 = net.new_wire(), m2 = net.new_wire();
            product(head, {nw, ne, m2, m1}, false);
            build(last, {m1, m2, se, sw}, true);
        }
    }

    // ramification t1,...,tk = sum of transposed terms
    void ram(const std::vector<TanglePtr>& ts, Corners c, bool mir) {
        auto [nw, ne, se, sw] = c;
        std::size_t k = ts.size();
        if (!mir) {
            int cur_nw = nw, cur_sw = sw;
            for (std::size_t i = 0; i < k; ++i) {
                int tne = (i == k - 1) ? ne : net.new_wire();
                int tse = (i == k - 1) ? se : net.new_wire();
                build(ts[i], {cur_nw, tne, tse, cur_sw}, true);
                cur_nw = tne;
                cur_sw = tse;
            }
        } else {
            int cur_nw = nw, cur_ne = ne;
            for (std::size_t i = 0; i < k; ++i) {
                int tse = (i == k - 1) ? se : net.new_wire();
                int tsw = (i == k - 1) ? sw : net.new_wire();
                build(ts[i], {cur_nw, cur_ne, tse, tsw}, false);
                cur_nw = tsw;
                cur_ne = tse;
            }
        }
    }

    // trailing '+' repetitions: base + k extra crossings, no transpose
    void append_plus(const TanglePtr& base, int k, Corners c, bool mir) {
        auto [nw, ne, se, sw] = c;
        if (!mir) {
            int m1 = net.new_wire(), m2 = net.new_wire();
            build(base, {nw, m1, m2, sw}, false);
            chain(k, {m1, ne, se, m2}, false);
        } else {
            int m1 = net.new_wire(), m2 = net.new_wire();
            build(base, {nw, ne, m2, m1}, true);
            chain(k, {m1, m2, se, sw}, true);
        }
    }

    // braid-template closure for polyhedral symbols
    void polyhedral(const ConwaySymbol& sym) {
        const BasicPolyhedron& bp = polyhedron(*sym.basis);
        const std::string& word = bp.braid;
        int strands = 0;
        for (char ch : word)
            strands = std::max(strands, std::tolower(ch) - 'a' + 2);
        std::vector<int> cur(strands), start(strands);
        for (int i = 0; i < strands; ++i) cur[i] = start[i] = net.new_wire();

        // fills in Conway-vertex order -> braid letter order
        std::vector<TanglePtr> fill_at(word.size());
        std::vector<int> rot_at(word.size(), 0);
        for (std::size_t v = 0; v < sym.fills.size() && v < word.size(); ++v) {
            std::size_t letter = static_cast<std::size_t>(bp.position[v]);
            fill_at[letter] = sym.fills[v];
            rot_at[letter] = bp.rotation[v];
        }

        for (std::size_t li = 0; li < word.size(); ++li) {
            char ch = word[li];
            int i = std::tolower(ch) - 'a';
            bool lower = std::islower(static_cast<unsigned char>(ch)) != 0;
            TanglePtr fill = fill_at[li] ? fill_at[li] : make_chain(1);
            int bl = net.new_wire(), br = net.new_wire();
            Corners corners{cur[i], cur[i + 1], br, bl};
            attach_vertex(fill, corners, lower, rot_at[li]);
            cur[i] = bl;
            cur[i + 1] = br;
        }
        for (int i = 0; i < strands; ++i) net.join(cur[i], start[i]);
    }

    // Vertex substitution frame: pinned against the reference volumes.
    // Lowercase letters: rotate corners by 3 quarters, sign-flipped fill;
    // uppercase: rotate by 1 quarter, fill as is.
    void attach_vertex(const TanglePtr& fill, Corners corners, bool lower, int extra_rot) {
        int rot = (lower ? 3 : 1) + extra_rot;
        bool mir = false;
        bool flip = lower;
        std::array<int, 4> ring = corners;
        std::rotate(ring.begin(), ring.begin() + (rot % 4), ring.end());
        Corners cc{ring[0], ring[1], ring[2], ring[3]};
        if (flip) {
            signflip = !signflip;
            build(fill, cc, mir);
            signflip = !signflip;
        } else {
            build(fill, cc, mir);
        }
    }
};

}  // namespace

int LinkDiagram::arc_count() const {
    int mx = -1;
    for (const auto& c : crossings)
        for (int a : c.arcs) mx = std::max(mx, a);
    return mx + 1;
}

LinkDiagram build_diagram(const ConwaySymbol& sym) {
    Builder b;
    if (sym.basis) {
        b.polyhedral(sym);
    } else {
        Corners c{b.net.new_wire(), b.net.new_wire(), b.net.new_wire(), b.net.new_wire()};
        b.build(sym.root, c, false);
        b.net.join(c[0], c[1]);  // numerator closure: NW-NE
        b.net.join(c[3], c[2]);  // SW-SE
    }
    return b.net.finish();
}

namespace {

// arc -> its two (crossing, port) incidences
std::vector<std::array<std::pair<int, int>, 2>> arc_ends(const LinkDiagram& d) {
    std::vector<std::array<std::pair<int, int>, 2>> ends(d.arc_count(),
                                                         {std::pair{-1, -1}, std::pair{-1, -1}});
    std::vector<int> seen(d.arc_count(), 0);
    for (int c = 0; c < d.crossing_count(); ++c)
        for (int p = 0; p < 4; ++p) {
            int a = d.crossings[c].arcs[p];
            if (seen[a] < 2) ends[a][seen[a]] = {c, p};
            ++seen[a];
        }
    return ends;
}

}  // namespace

int component_count(const LinkDiagram& d) {
    auto ends = arc_ends(d);
    std::vector<std::array<bool, 4>> seen(d.crossing_count(), {false, false, false, false});
    int n = 0;
    for (int c0 = 0; c0 < d.crossing_count(); ++c0) {
        for (int p0 = 0; p0 < 4; ++p0) {
            if (seen[c0][p0]) continue;
            ++n;
            int c = c0, p = p0;
            while (!seen[c][p]) {
                seen[c][p] = true;
                int q = (p + 2) % 4;
                seen[c][q] = true;
                int a = d.crossings[c].arcs[q];
                auto other = ends[a][0] == std::pair{c, q} ? ends[a][1] : ends[a][0];
                c = other.first;
                p = other.second;
            }
        }
    }
    return n;
}

std::vector<std::vector<std::pair<int, int>>> faces(const LinkDiagram& d) {
    auto ends = arc_ends(d);
    auto mate = [&](int c, int p) {
        int a = d.crossings[c].arcs[p];
        return ends[a][0] == std::pair{c, p} ? ends[a][1] : ends[a][0];
    };
    std::vector<std::array<bool, 4>> seen(d.crossing_count(), {false, false, false, false});
    std::vector<std::vector<std::pair<int, int>>> out;
    for (int c0 = 0; c0 < d.crossing_count(); ++c0)
        for (int p0 = 0; p0 < 4; ++p0) {
            if (seen[c0][p0]) continue;
            std::vector<std::pair<int, int>> face;
            int c = c0, p = p0;
            while (!seen[c][p]) {
                seen[c][p] = true;
                face.emplace_back(c, p);
                auto [c2, p2] = mate(c, p);
                c = c2;
                p = (p2 + 1) % 4;
            }
            out.push_back(std::move(face));
        }
    return out;
}

DiagramDiagnostics validate(const LinkDiagram& d) {
    DiagramDiagnostics out;
    std::vector<int> cnt(d.arc_count(), 0);
    for (const auto& c : d.crossings)
        for (int a : c.arcs) ++cnt[a];
    for (int k : cnt)
        if (k != 2) {
            out.arc_incidence_ok = false;
            out.notes.push_back("arc with incidence != 2");
            break;
        }
    if (!out.arc_incidence_ok) return out;

    // connectivity over crossings joined by arcs
    if (d.crossing_count() > 0) {
        auto ends = arc_ends(d);
        std::vector<bool> vis(d.crossing_count(), false);
        std::vector<int> stack{0};
        vis[0] = true;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int p = 0; p < 4; ++p) {
                int a = d.crossings[c].arcs[p];
                for (const auto& e : ends[a])
                    if (!vis[e.first]) {
                        vis[e.first] = true;
                        stack.push_back(e.first);
                    }
            }
        }
        if (!std::all_of(vis.begin(), vis.end(), [](bool b) { return b; })) {
            out.connected = false;
            out.notes.push_back("split diagram");
        }
    }
    int V = d.crossing_count();
    int E = 2 * V;
    int F = static_cast<int>(faces(d).size());
    if (V - E + F != 2) {
        out.planar = false;
        out.notes.push_back("Euler characteristic violation");
    }
    // reduced: no arc with the same face on both sides
    auto fs = faces(d);
    std::vector<int> face_of(4 * std::max(1, d.crossing_count()), -1);
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (auto [c, p] : fs[i]) face_of[4 * c + p] = static_cast<int>(i);
    auto ends = arc_ends(d);
    for (int a = 0; a < d.arc_count(); ++a) {
        auto [c1, p1] = ends[a][0];
        auto [c2, p2] = ends[a][1];
        // the two faces flanking arc a at one end
        int fl = face_of[4 * c1 + (p1 + 1) % 4];
        int fr = face_of[4 * c1 + p1];
        if (fl == fr) {
            out.reduced = false;
            out.notes.push_back("nugatory arc (same face on both sides)");
            break;
        }
    }
    return out;
}

std::vector<int> crossing_signs(const LinkDiagram& d) {
    // Orient each component by traversal; sign from the frame
    // (over-direction, under-direction).
    auto ends = arc_ends(d);
    // direction[c][p]: +1 if strand leaves crossing c through port p
    std::vector<std::array<int, 4>> dir(d.crossing_count(), {0, 0, 0, 0});
    for (int c0 = 0; c0 < d.crossing_count(); ++c0)
        for (int p0 = 0; p0 < 4; ++p0) {
            if (dir[c0][p0] != 0) continue;
            int c = c0, p = p0;
            while (dir[c][p] == 0) {
                dir[c][p] = -1;  // entering through p
                int q = (p + 2) % 4;
                dir[c][q] = +1;  // leaving through q
                int a = d.crossings[c].arcs[q];
                auto other = ends[a][0] == std::pair{c, q} ? ends[a][1] : ends[a][0];
                c = other.first;
                p = other.second;
            }
        }
    std::vector<int> out(d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c) {
        int over_out = d.crossings[c].over02 ? (dir[c][0] > 0 ? 0 : 2)
                                             : (dir[c][1] > 0 ? 1 : 3);
        int under_out = d.crossings[c].over02 ? (dir[c][1] > 0 ? 1 : 3)
                                              : (dir[c][0] > 0 ? 0 : 2);
        // positive crossing: under direction is a +90 degree rotation of the
        // over direction (counterclockwise port order)
        out[c] = ((over_out + 1) % 4 == under_out) ? +1 : -1;
    }
    return out;
}

std::string pd_json(const LinkDiagram& d) {
    std::ostringstream os;
    auto signs = crossing_signs(d);
    os << "{\"crossings\":[";
    for (int c = 0; c < d.crossing_count(); ++c) {
        if (c) os << ',';
        // rotate so entry 0 is the incoming under-strand
        auto ends = d.crossings[c];
        int start = d.crossings[c].over02 ? 1 : 0;
        os << '[';
        for (int k = 0; k < 4; ++k) {
            if (k) os << ',';
            os << ends.arcs[(start + k) % 4];
        }
        os << ']';
    }
    os << "],\"signs\":[";
    for (int c = 0; c < d.crossing_count(); ++c) {
        if (c) os << ',';
        os << signs[c];
    }
    os << "]}";
    return os.str();
}

}  // namespace linkvol
