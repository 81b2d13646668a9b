#include "linkvol/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "linkvol/dilog.hpp"

namespace linkvol {

namespace {

constexpr double kPi = std::numbers::pi;
using C = std::complex<double>;
using VecC = Eigen::VectorXcd;
using MatC = Eigen::MatrixXcd;

constexpr std::array<std::array<int, 3>, 4> kFaceSlots = {{
    {1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2},
}};

struct EdgeRow {
    std::vector<std::pair<int, int>> entries;  // (tet, type)
};

struct CycleEntry {
    int tet;
    int type;
    int eps;
};
using Cycle = std::vector<CycleEntry>;

std::vector<EdgeRow> edge_rows(const IdealTriangulation& tri) {
    std::vector<EdgeRow> rows;
    for (const auto& ec : edge_classes(tri)) {
        EdgeRow r;
        for (const auto& ref : ec) r.entries.push_back({ref.tet, edge_type(ref.a, ref.b)});
        rows.push_back(std::move(r));
    }
    return rows;
}

int corner_sign(int v, int f_in, int x, int f_out) {
    std::array<int, 4> p{v, f_in, x, f_out};
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) inv ^= 1;
    return inv == 0 ? 1 : -1;
}

// Fundamental cycles of all cusp tori, as similarity-holonomy exponent lists.
std::vector<Cycle> cusp_cycles(const IdealTriangulation& tri) {
    auto vcl = vertex_classes(tri);
    auto adj = [&](int t, int v, int f) {
        const auto& g = tri.glue[t][f];
        return std::tuple{g.tet, g.perm[v], g.face};
    };
    std::vector<Cycle> out;
    for (const auto& vc : vcl) {
        std::map<std::pair<int, int>, std::tuple<std::pair<int, int>, int, int>> parent;
        std::pair<int, int> root = vc[0];
        parent[root] = {root, -1, -1};
        std::set<std::tuple<int, int, int>> tree_sides;
        std::vector<std::pair<int, int>> q{root};
        std::size_t qi = 0;
        while (qi < q.size()) {
            auto [t, v] = q[qi++];
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                auto [t2, v2, f2] = adj(t, v, f);
                std::pair<int, int> nxt{t2, v2};
                if (!parent.count(nxt)) {
                    parent[nxt] = {{t, v}, f, f2};
                    tree_sides.insert({t, v, f});
                    tree_sides.insert({t2, v2, f2});
                    q.push_back(nxt);
                }
            }
        }
        auto path_from_root = [&](std::pair<int, int> x) {
            std::vector<std::pair<std::pair<int, int>, int>> rev;  // (tri, exit face)
            auto cur = x;
            while (cur != root) {
                auto [par, fp, fc] = parent[cur];
                rev.push_back({par, fp});
                cur = par;
            }
            std::reverse(rev.begin(), rev.end());
            return rev;
        };
        std::set<std::set<std::tuple<int, int, int>>> seen;
        for (const auto& [t, v] : vc) {
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                if (tree_sides.count({t, v, f})) continue;
                auto [t2, v2, f2] = adj(t, v, f);
                std::set<std::tuple<int, int, int>> key{{t, v, f}, {t2, v2, f2}};
                if (seen.count(key)) continue;
                seen.insert(key);
                auto pa = path_from_root({t, v});
                auto pb = path_from_root({t2, v2});
                std::size_t k = 0;
                while (k < pa.size() && k < pb.size() && pa[k] == pb[k]) ++k;
                std::vector<std::pair<std::pair<int, int>, int>> steps(pa.begin() + k, pa.end());
                steps.push_back({{t, v}, f});
                {
                    std::vector<std::pair<std::pair<int, int>, int>> rev;
                    auto cur = std::pair{t2, v2};
                    while (cur != root) {
                        auto [par, fp, fc] = parent[cur];
                        rev.push_back({cur, fc});
                        cur = par;
                    }
                    for (std::size_t i = 0; i < pb.size() - k; ++i) steps.push_back(rev[i]);
                }
                std::size_t m = steps.size();
                Cycle entries;
                bool good = true;
                for (std::size_t i = 0; i < m && good; ++i) {
                    auto [tri_i, f_out] = steps[i];
                    auto [prev_tri, prev_f] = steps[(i + m - 1) % m];
                    auto [lt, lv, lf] = adj(prev_tri.first, prev_tri.second, prev_f);
                    if (std::pair{lt, lv} != tri_i) {
                        good = false;
                        break;
                    }
                    int f_in = lf;
                    if (f_in == f_out) continue;  // backtrack cancels
                    auto [tt, vv] = tri_i;
                    int x = -1;
                    for (int s = 0; s < 4; ++s)
                        if (s != vv && s != f_in && s != f_out) x = s;
                    entries.push_back({tt, edge_type(vv, x), corner_sign(vv, f_in, x, f_out)});
                }
                if (good && !entries.empty()) out.push_back(std::move(entries));
            }
        }
    }
    return out;
}

struct System {
    std::vector<EdgeRow> edges;
    std::vector<Cycle> cycles_used;
    std::vector<Cycle> cycles_all;
    int nt = 0;
};

// log-shape values zeta_0 = w, zeta_1 = -Log(1-z), zeta_2 = Log(1-z) - w + i*pi
std::array<VecC, 3> zetas(const VecC& w) {
    VecC z = w.array().exp();
    VecC l1z = (1.0 - z.array()).log();
    std::array<VecC, 3> out;
    out[0] = w;
    out[1] = -l1z;
    out[2] = l1z - w + VecC::Constant(w.size(), C(0.0, kPi));
    return out;
}

std::array<VecC, 3> dzetas(const VecC& w) {
    VecC z = w.array().exp();
    std::array<VecC, 3> out;
    out[0] = VecC::Ones(w.size());
    out[1] = (z.array() / (1.0 - z.array())).matrix();
    out[2] = (-1.0 / (1.0 - z.array())).matrix();
    return out;
}

VecC full_residual(const System& sys, const VecC& w) {
    auto zt = zetas(w);
    VecC r(sys.edges.size() + sys.cycles_used.size());
    for (std::size_t i = 0; i < sys.edges.size(); ++i) {
        C s = 0.0;
        for (auto [t, ty] : sys.edges[i].entries) s += zt[ty][t];
        r[i] = s - C(0.0, 2.0 * kPi);
    }
    for (std::size_t i = 0; i < sys.cycles_used.size(); ++i) {
        C s = 0.0;
        for (const auto& e : sys.cycles_used[i]) s += double(e.eps) * zt[e.type][e.tet];
        double k = std::round(s.imag() / kPi);
        r[sys.edges.size() + i] = s - C(0.0, kPi * k);
    }
    return r;
}

MatC full_jacobian(const System& sys, const VecC& w) {
    auto dz = dzetas(w);
    MatC J = MatC::Zero(sys.edges.size() + sys.cycles_used.size(), sys.nt);
    for (std::size_t i = 0; i < sys.edges.size(); ++i)
        for (auto [t, ty] : sys.edges[i].entries) J(i, t) += dz[ty][t];
    for (std::size_t i = 0; i < sys.cycles_used.size(); ++i)
        for (const auto& e : sys.cycles_used[i])
            J(sys.edges.size() + i, e.tet) += double(e.eps) * dz[e.type][e.tet];
    return J;
}

double resid_norm(const VecC& r) { return r.lpNorm<Eigen::Infinity>(); }

bool degenerate(const VecC& w) {
    for (int i = 0; i < w.size(); ++i) {
        C z = std::exp(w[i]);
        if (std::abs(z) < 1e-14 || std::abs(z - 1.0) < 1e-14) return true;
        if (std::abs(w[i].real()) > 30.0) return true;
    }
    return false;
}

struct NewtonOutcome {
    VecC w;
    double res;
    bool ok;
};

NewtonOutcome newton(const System& sys, VecC w, const SolverOptions& opts,
                     bool edges_only) {
    System s2 = sys;
    if (edges_only) s2.cycles_used.clear();
    double nr = 0.0;
    double lambda_ = 0.0;  // Levenberg damping, raised when plain steps stall
    for (int it = 0; it < opts.max_iterations; ++it) {
        VecC r = full_residual(s2, w);
        nr = resid_norm(r);
        if (nr < opts.tolerance) return {w, nr, true};
        MatC J = full_jacobian(s2, w);
        bool moved = false;
        for (int reg = 0; reg < 8 && !moved; ++reg) {
            VecC dw;
            if (lambda_ == 0.0) {
                dw = J.completeOrthogonalDecomposition().solve(-r);
            } else {
                MatC H = J.adjoint() * J;
                H.diagonal().array() += lambda_;
                dw = H.ldlt().solve(-(J.adjoint() * r));
            }
            double t = 1.0;
            for (int h = 0; h < opts.max_halvings; ++h) {
                VecC w2 = w + t * dw;
                if (degenerate(w2)) {
                    t *= 0.5;
                    continue;
                }
                VecC r2 = full_residual(s2, w2);
                if (resid_norm(r2) < nr * (1.0 - 1e-4 * t)) {
                    w = w2;
                    moved = true;
                    lambda_ *= 0.25;
                    if (lambda_ < 1e-12) lambda_ = 0.0;
                    break;
                }
                t *= 0.5;
            }
            if (!moved) lambda_ = lambda_ == 0.0 ? 1e-6 : lambda_ * 100.0;
        }
        if (!moved) return {w, nr, false};
    }
    VecC r = full_residual(s2, w);
    nr = resid_norm(r);
    return {w, nr, nr < opts.tolerance};
}

// select cycles that extend the rank of the edge exponent matrix
std::vector<Cycle> select_cycles(const std::vector<EdgeRow>& edges,
                                 const std::vector<Cycle>& cycles, int nt, int cusps) {
    auto expvec = [&](const EdgeRow* er, const Cycle* cy) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(3 * nt);
        if (er)
            for (auto [t, ty] : er->entries) v[3 * t + ty] += 1.0;
        if (cy)
            for (const auto& e : *cy) v[3 * e.tet + e.type] += e.eps;
        return v;
    };
    Eigen::MatrixXd M(edges.size(), 3 * nt);
    for (std::size_t i = 0; i < edges.size(); ++i) M.row(i) = expvec(&edges[i], nullptr);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
    qr.setThreshold(1e-9);
    int rank = static_cast<int>(qr.rank());
    int base = rank;

    std::vector<const Cycle*> sorted;
    for (const auto& c : cycles) sorted.push_back(&c);
    std::sort(sorted.begin(), sorted.end(),
              [](const Cycle* a, const Cycle* b) { return a->size() < b->size(); });

    std::vector<Cycle> use;
    Eigen::MatrixXd Mcur = M;
    for (const Cycle* c : sorted) {
        Eigen::MatrixXd M2(Mcur.rows() + 1, 3 * nt);
        M2 << Mcur, expvec(nullptr, c).transpose();
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr2(M2);
        qr2.setThreshold(1e-9);
        int r2 = static_cast<int>(qr2.rank());
        if (r2 > rank) {
            rank = r2;
            Mcur = M2;
            use.push_back(*c);
        }
        if (rank >= base + 2 * cusps) break;
    }
    return use;
}

}  // namespace

double edge_defect(const IdealTriangulation& tri,
                   const std::vector<std::complex<double>>& shapes) {
    VecC w(shapes.size());
    for (std::size_t i = 0; i < shapes.size(); ++i) w[i] = std::log(shapes[i]);
    System sys;
    sys.edges = edge_rows(tri);
    sys.nt = tri.ntets;
    VecC r = full_residual(sys, w);
    return resid_norm(r);
}

ShapeSolution solve(const IdealTriangulation& tri, const SolverOptions& opts) {
    auto info = inspect(tri);
    ShapeSolution best;
    best.converged = false;
    if (!info.ok() || info.cone_points != 0) return best;

    System sys;
    sys.edges = edge_rows(tri);
    sys.cycles_all = cusp_cycles(tri);
    sys.cycles_used = select_cycles(sys.edges, sys.cycles_all, tri.ntets, info.cusps);
    sys.nt = tri.ntets;

    std::mt19937 rng(opts.seed + 1234567u);
    std::uniform_real_distribution<double> uni(-0.3, 0.3);
    double best_vol = -1.0;
    const bool dbg = std::getenv("LINKVOL_DEBUG") != nullptr;
    if (dbg)
        std::fprintf(stderr, "[solve] T=%d edges=%zu cycles=%zu used=%zu\n", tri.ntets,
                     sys.edges.size(), sys.cycles_all.size(), sys.cycles_used.size());

    for (int attempt = 0; attempt <= opts.restarts; ++attempt) {
        VecC w0(tri.ntets);
        C center = attempt % 2 == 0 ? C(0.0, kPi / 3.0) : C(0.0, kPi / 2.0);
        double scale = attempt <= 4 ? 1.0 : (attempt <= 9 ? 2.0 : 3.5);
        for (int i = 0; i < tri.ntets; ++i) {
            C pert = attempt == 0 ? C(0.0, 0.0)
                                  : C(scale * uni(rng), scale * uni(rng));
            w0[i] = center + pert;
        }
        auto phase1 = newton(sys, w0, opts, /*edges_only=*/true);
        if (dbg)
            std::fprintf(stderr, "[solve] attempt %d phase1 ok=%d res=%.2e\n", attempt,
                         phase1.ok, phase1.res);
        if (!phase1.ok) continue;
        auto phase2 = newton(sys, phase1.w, opts, /*edges_only=*/false);
        if (dbg)
            std::fprintf(stderr, "[solve] attempt %d phase2 ok=%d res=%.2e\n", attempt,
                         phase2.ok, phase2.res);
        if (!phase2.ok) continue;

        // verify every cusp cycle is parabolic
        auto zt = zetas(phase2.w);
        double bad = 0.0;
        for (const auto& cyc : sys.cycles_all) {
            C s = 0.0;
            for (const auto& e : cyc) s += double(e.eps) * zt[e.type][e.tet];
            double k = std::round(s.imag() / kPi);
            bad = std::max(bad, std::abs(s - C(0.0, kPi * k)));
        }
        if (dbg) std::fprintf(stderr, "[solve] attempt %d cycle defect %.2e\n", attempt, bad);
        if (bad > 1e-7) continue;

        double vol = 0.0;
        for (int i = 0; i < tri.ntets; ++i) vol += bloch_wigner(std::exp(phase2.w[i]));
        if (vol > best_vol + 1e-12) {
            best_vol = vol;
            best.converged = true;
            best.residual = phase2.res;
            best.completeness_defect = bad;
            best.volume = vol;
            best.shapes.assign(tri.ntets, 0.0);
            best.orientation_signs.assign(tri.ntets, 0);
            best.flat_tets = 0;
            for (int i = 0; i < tri.ntets; ++i) {
                C z = std::exp(phase2.w[i]);
                best.shapes[i] = z;
                if (std::abs(z.imag()) < 1e-9) {
                    best.orientation_signs[i] = 0;
                    ++best.flat_tets;
                } else {
                    best.orientation_signs[i] = z.imag() > 0 ? 1 : -1;
                }
            }
        }
    }
    return best;
}

std::optional<std::string> classify_referential(double volume, double tol) {
    for (int m = 1; m <= 8; ++m) {
        if (std::abs(volume - m * ReferentialConstants::V0) < tol)
            return (m == 1 ? std::string("V0") : std::to_string(m) + "V0");
    }
    for (int m = 1; m <= 8; ++m) {
        if (std::abs(volume - m * ReferentialConstants::V1) < tol)
            return (m == 1 ? std::string("V1") : std::to_string(m) + "V1");
    }
    return std::nullopt;
}

std::optional<double> referential_value(const std::string& expr) {
    auto parse_mul = [&](const std::string& base, double val) -> std::optional<double> {
        if (expr == base) return val;
        auto pos = expr.find(base);
        if (pos == std::string::npos || pos + base.size() != expr.size()) return std::nullopt;
        std::string pre = expr.substr(0, pos);
        if (pre.empty()) return val;
        try {
            return std::stod(pre) * val;
        } catch (...) {
            return std::nullopt;
        }
    };
    if (auto v = parse_mul("V0", ReferentialConstants::V0)) return v;
    if (auto v = parse_mul("V1", ReferentialConstants::V1)) return v;
    if (auto v = parse_mul("V2", ReferentialConstants::V2)) return v;
    try {
        return std::stod(expr);
    } catch (...) {
        return std::nullopt;
    }
}

VolumeResult link_volume(const LinkDiagram& d, const SolverOptions& opts) {
    VolumeResult out;
    out.status = VolumeResult::Status::NoConvergence;
    IdealTriangulation raw;
    try {
        raw = octahedral_triangulation(d);
    } catch (const std::exception& ex) {
        out.detail = ex.what();
        return out;
    }
    auto oriented = orient_canonically(raw);
    // Different collapse sequences give different triangulations of the same
    // complement; when Newton fails on one, try another.
    bool any_triangulation = false;
    for (int variant = 0; variant < 6; ++variant) {
        auto clean = remove_cone_points(oriented, /*retries=*/12, variant);
        if (!clean) break;
        auto tri = orient_canonically(*clean);
        any_triangulation = true;
        out.tetrahedra = tri.ntets;
        SolverOptions o2 = opts;
        o2.seed = opts.seed + 7919u * variant;
        auto sol = solve(tri, o2);
        if (!sol.converged) continue;
        out.solution = sol;
        out.volume = sol.volume;
        if (std::abs(sol.volume) < 1e-6) {
            out.status = VolumeResult::Status::NotHyperbolic;
            out.volume = 0.0;
            out.detail = "degenerate solution (volume 0)";
            return out;
        }
        out.status = VolumeResult::Status::Hyperbolic;
        return out;
    }
    out.detail = any_triangulation
                     ? "gluing equations: no convergence (likely non-hyperbolic)"
                     : "cone-point removal failed (likely non-hyperbolic)";
    return out;
}

}  // namespace linkvol
