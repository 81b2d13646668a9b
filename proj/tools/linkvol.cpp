// linkvol: Conway-notation link toolkit command line.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "linkvol/bounds.hpp"
#include "linkvol/conway.hpp"
#include "linkvol/diagram.hpp"
#include "linkvol/family.hpp"
#include "linkvol/fit.hpp"
#include "linkvol/solver.hpp"
#include "linkvol/store.hpp"
#include "linkvol/tables.hpp"
#include "linkvol/triangulation.hpp"

using namespace linkvol;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSolver = 2;
constexpr int kExitParse = 3;

json tangle_json(const TanglePtr& t);

json symbol_json(const ConwaySymbol& sym) {
    json j;
    j["text"] = print(sym);
    if (sym.basis) {
        j["basis"] = *sym.basis;
        auto& fills = j["fills"] = json::array();
        for (const auto& f : sym.fills)
            fills.push_back(f ? print(f) : "1");
    } else {
        j["root"] = tangle_json(sym.root);
    }
    j["crossings"] = crossing_count(sym);
    return j;
}

json tangle_json(const TanglePtr& t) {
    json j;
    if (auto* c = std::get_if<Chain>(&t->node)) {
        j["chain"] = c->value;
    } else if (auto* p = std::get_if<Product>(&t->node)) {
        auto& a = j["product"] = json::array();
        for (const auto& f : p->factors) a.push_back(tangle_json(f));
    } else if (auto* r = std::get_if<Ramification>(&t->node)) {
        auto& a = j["ramification"] = json::array();
        for (const auto& x : r->terms) a.push_back(tangle_json(x));
    } else if (auto* pl = std::get_if<Plus>(&t->node)) {
        j["plus"] = pl->count;
        j["base"] = tangle_json(pl->base);
    } else if (auto* n = std::get_if<Negated>(&t->node)) {
        j["negated"] = tangle_json(n->base);
    }
    return j;
}

struct CachingVolume {
    VolumeStore store;
    SolverOptions opts;
    VolumeResult operator()(const ConwaySymbol& sym) {
        std::string key = print(sym);
        if (auto rec = store.get(key)) {
            VolumeResult r;
            r.status = rec->volume == 0.0 ? VolumeResult::Status::NotHyperbolic
                                          : VolumeResult::Status::Hyperbolic;
            r.volume = rec->volume;
            return r;
        }
        auto r = link_volume(build_diagram(sym), opts);
        if (r.status != VolumeResult::Status::NoConvergence) {
            VolumeRecord rec;
            rec.key = key;
            rec.volume = r.status == VolumeResult::Status::Hyperbolic ? r.volume : 0.0;
            rec.residual = r.solution.residual;
            rec.solver_seed = opts.seed;
            store.put(rec);
        }
        return r;
    }
};

std::vector<SweepRange> parse_ranges(const std::vector<std::string>& specs) {
    std::vector<SweepRange> out;
    for (const auto& s : specs) {
        auto eq = s.find('=');
        auto dots = s.find("..");
        if (eq == std::string::npos)
            throw std::runtime_error("range must look like p=2..6");
        SweepRange r;
        r.name = s.substr(0, eq);
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(s.substr(eq + 1));
        } else {
            r.lo = std::stoi(s.substr(eq + 1, dots - eq - 1));
            r.hi = std::stoi(s.substr(dots + 2));
        }
        // ranges are given as parameter values (p = base+offset, base 2)
        r.lo -= 2;
        r.hi -= 2;
        if (r.lo < 0 || r.hi < r.lo) throw std::runtime_error("bad range " + s);
        out.push_back(r);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linkvol: hyperbolic volumes of links in Conway notation"};
    app.require_subcommand(1);

    // ---- parse ----
    std::string parse_symbol;
    bool parse_json = false;
    auto* cmd_parse = app.add_subcommand("parse", "parse a Conway symbol");
    cmd_parse->add_option("symbol", parse_symbol)->required();
    cmd_parse->add_flag("--json", parse_json);

    // ---- diagram ----
    std::string diag_symbol;
    bool diag_pd = false;
    auto* cmd_diag = app.add_subcommand("diagram", "build the planar diagram");
    cmd_diag->add_option("symbol", diag_symbol)->required();
    cmd_diag->add_flag("--pd", diag_pd);

    // ---- triangulate ----
    std::string tri_symbol, tri_out;
    auto* cmd_tri = app.add_subcommand("triangulate", "octahedral ideal triangulation");
    cmd_tri->add_option("symbol", tri_symbol)->required();
    cmd_tri->add_option("--out", tri_out);

    // ---- vol ----
    std::string vol_symbol;
    double vol_tol = 1e-11;
    unsigned vol_seed = 0;
    bool vol_json = false;
    auto* cmd_vol = app.add_subcommand("vol", "hyperbolic volume of the complement");
    cmd_vol->add_option("symbol", vol_symbol)->required();
    cmd_vol->add_option("--tol", vol_tol);
    cmd_vol->add_option("--seed", vol_seed);
    cmd_vol->add_flag("--json", vol_json);

    // ---- family ----
    std::string fam_template, fam_out = "table";
    std::vector<std::string> fam_ranges;
    std::vector<std::string> fam_locks;
    unsigned fam_seed = 0;
    auto* cmd_fam = app.add_subcommand("family", "sweep a parameterized family");
    cmd_fam->add_option("template", fam_template)->required();
    cmd_fam->add_option("--range", fam_ranges)->expected(-1);
    cmd_fam->add_option("--lock", fam_locks)->expected(-1);
    cmd_fam->add_option("--out", fam_out)->check(CLI::IsMember({"table", "csv", "json"}));
    cmd_fam->add_option("--seed", fam_seed);

    // ---- bounds ----
    std::string bounds_template, bounds_subfamily;
    bool bounds_csv = false, bounds_json = false;
    auto* cmd_bounds = app.add_subcommand("bounds", "Theorem-1 style bound report");
    cmd_bounds->add_option("template", bounds_template)->required();
    cmd_bounds->add_option("--subfamily", bounds_subfamily);
    cmd_bounds->add_flag("--csv", bounds_csv);
    cmd_bounds->add_flag("--json", bounds_json);

    // ---- fit ----
    std::string fit_file, fit_model = "rational";
    int fit_n = 4;
    bool fit_json = false;
    auto* cmd_fit = app.add_subcommand("fit", "interpolate a volume sequence");
    cmd_fit->add_option("csv", fit_file)->required();
    cmd_fit->add_option("--model", fit_model)->check(CLI::IsMember({"rational", "inverse"}));
    cmd_fit->add_option("--n", fit_n);
    cmd_fit->add_flag("--json", fit_json);

    // ---- check ----
    std::string check_id;
    std::string check_family = "p q";
    std::string check_range = "2..6";
    int check_bound = 9;
    auto* cmd_check = app.add_subcommand("check", "verify theorem/conjecture statements");
    cmd_check->add_option("id", check_id)->required();
    cmd_check->add_option("--family", check_family);
    cmd_check->add_option("--range", check_range);
    cmd_check->add_option("--crossings", check_bound);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_parse) {
            auto sym = parse(parse_symbol);
            if (parse_json)
                std::cout << symbol_json(sym).dump(2) << "\n";
            else
                std::cout << print(sym) << "\n";
            return kExitOk;
        }
        if (*cmd_diag) {
            auto sym = parse(diag_symbol);
            auto d = build_diagram(sym);
            if (diag_pd) {
                std::cout << pd_json(d) << "\n";
            } else {
                auto diag = validate(d);
                std::cout << "crossings  " << d.crossing_count() << "\n"
                          << "components " << component_count(d) << "\n"
                          << "valid      " << (diag.ok() ? "yes" : "no") << "\n";
                for (const auto& n : diag.notes) std::cout << "  note: " << n << "\n";
            }
            return kExitOk;
        }
        if (*cmd_tri) {
            auto sym = parse(tri_symbol);
            auto tri = octahedral_triangulation(build_diagram(sym));
            auto info = inspect(tri);
            std::string js = to_json(tri);
            if (!tri_out.empty()) {
                std::ofstream out(tri_out);
                out << js << "\n";
            } else {
                std::cout << js << "\n";
            }
            std::cerr << "tets " << info.tets << " edges " << info.edge_classes
                      << " cusps " << info.cusps << " cone points " << info.cone_points
                      << "\n";
            return kExitOk;
        }
        if (*cmd_vol) {
            auto sym = parse(vol_symbol);
            SolverOptions opts;
            opts.tolerance = vol_tol;
            opts.seed = vol_seed;
            auto r = link_volume(build_diagram(sym), opts);
            if (vol_json) {
                json j;
                j["symbol"] = print(sym);
                j["status"] = r.status == VolumeResult::Status::Hyperbolic ? "hyperbolic"
                              : r.status == VolumeResult::Status::NotHyperbolic
                                  ? "not_hyperbolic"
                                  : "no_convergence";
                j["volume"] = r.volume;
                j["tetrahedra"] = r.tetrahedra;
                j["residual"] = r.solution.residual;
                j["completeness_defect"] = r.solution.completeness_defect;
                if (auto c = classify_referential(r.volume)) j["referential"] = *c;
                auto& sh = j["shapes"] = json::array();
                for (auto z : r.solution.shapes) sh.push_back({z.real(), z.imag()});
                std::cout << j.dump(2) << "\n";
            } else if (r.status == VolumeResult::Status::Hyperbolic) {
                printf("%.10f", r.volume);
                if (auto c = classify_referential(r.volume)) printf("  (%s)", c->c_str());
                printf("\n");
            } else {
                std::cout << "non-hyperbolic (volume 0)";
                if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
                std::cout << "\n";
            }
            return r.status == VolumeResult::Status::Hyperbolic ? kExitOk : kExitSolver;
        }
        if (*cmd_fam) {
            auto spec = parse_family(fam_template);
            auto ranges = parse_ranges(fam_ranges);
            std::map<std::string, std::string> locks;
            for (const auto& l : fam_locks) {
                auto eq = l.find('=');
                if (eq == std::string::npos) throw std::runtime_error("lock must be a=b");
                locks[l.substr(0, eq)] = l.substr(eq + 1);
            }
            CachingVolume vol;
            vol.opts.seed = fam_seed;
            auto rows = sweep(spec, ranges, locks);
            json jrows = json::array();
            for (const auto& [asn, sym] : rows) {
                auto r = vol(sym);
                json j;
                for (const auto& p : spec.params) {
                    auto it = asn.find(p.name);
                    int off = it == asn.end() ? 0 : it->second;
                    j[p.name] = std::abs(p.base) + off;
                }
                j["symbol"] = print(sym);
                j["volume"] = r.status == VolumeResult::Status::Hyperbolic ? r.volume : 0.0;
                j["hyperbolic"] = r.status == VolumeResult::Status::Hyperbolic;
                jrows.push_back(j);
            }
            if (fam_out == "json") {
                std::cout << jrows.dump(2) << "\n";
            } else if (fam_out == "csv") {
                for (const auto& p : spec.params) std::cout << p.name << ",";
                std::cout << "symbol,volume\n";
                for (const auto& j : jrows) {
                    for (const auto& p : spec.params) std::cout << j[p.name].get<int>() << ",";
                    std::cout << '"' << j["symbol"].get<std::string>() << '"' << ","
                              << j["volume"].get<double>() << "\n";
                }
            } else {
                for (const auto& j : jrows)
                    printf("%-24s %.10f\n", j["symbol"].get<std::string>().c_str(),
                           j["volume"].get<double>());
            }
            return kExitOk;
        }
        if (*cmd_bounds) {
            auto spec = parse_family(bounds_template);
            CachingVolume vol;
            auto volfn = [&vol](const ConwaySymbol& s) { return vol(s); };
            auto rep = bounds(spec, volfn);
            json j;
            j["family"] = rep.family_text;
            j["source"] = rep.source_symbol;
            j["augmented"] = rep.augmented_symbol;
            j["lower"] = rep.lower;
            j["upper"] = rep.upper;
            if (rep.lower_expr) j["lower_expr"] = *rep.lower_expr;
            if (rep.upper_expr) j["upper_expr"] = *rep.upper_expr;
            j["flags"] = rep.flags;
            if (!bounds_subfamily.empty()) {
                // e.g. q=2..5: vary p with q fixed over the range
                auto eq = bounds_subfamily.find('=');
                auto dots = bounds_subfamily.find("..");
                std::string fixed_name = bounds_subfamily.substr(0, eq);
                int lo = std::stoi(bounds_subfamily.substr(eq + 1, dots - eq - 1));
                int hi = std::stoi(bounds_subfamily.substr(dots + 2));
                std::string varying;
                for (const auto& p : spec.params)
                    if (p.name != fixed_name) varying = p.name;
                auto& arr = j["subfamilies"] = json::array();
                for (int q = lo; q <= hi; ++q) {
                    ParameterAssignment fixed{{fixed_name, q - 2}};
                    auto sb = subfamily_bounds(spec, fixed, varying, volfn);
                    arr.push_back({{"fixed", q},
                                   {"lower_symbol", sb.lower_symbol},
                                   {"upper_symbol", sb.upper_symbol},
                                   {"lower", sb.lower},
                                   {"upper", sb.upper}});
                }
            }
            if (bounds_json) {
                std::cout << j.dump(2) << "\n";
            } else if (bounds_csv) {
                std::cout << "family,source,augmented,lower,upper\n"
                          << '"' << rep.family_text << "\",\"" << rep.source_symbol
                          << "\",\"" << rep.augmented_symbol << "\"," << rep.lower << ","
                          << rep.upper << "\n";
            } else {
                printf("family     %s\n", rep.family_text.c_str());
                printf("source     %s\n", rep.source_symbol.c_str());
                printf("augmented  %s\n", rep.augmented_symbol.c_str());
                printf("lower      %.10f %s\n", rep.lower,
                       rep.lower_expr ? ("= " + *rep.lower_expr).c_str() : "");
                printf("upper      %.10f %s\n", rep.upper,
                       rep.upper_expr ? ("= " + *rep.upper_expr).c_str() : "");
                for (const auto& f : rep.flags) printf("note: %s\n", f.c_str());
                if (j.contains("subfamilies"))
                    for (const auto& s : j["subfamilies"])
                        printf("  fixed=%d  [%.10f, %.10f]\n", s["fixed"].get<int>(),
                               s["lower"].get<double>(), s["upper"].get<double>());
            }
            return kExitOk;
        }
        if (*cmd_fit) {
            std::ifstream in(fit_file);
            if (!in) throw std::runtime_error("cannot open " + fit_file);
            std::vector<FitPoint> pts;
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#' || line.find("x,") == 0) continue;
                auto comma = line.find(',');
                if (comma == std::string::npos) continue;
                pts.push_back({std::stod(line.substr(0, comma)),
                               std::stod(line.substr(comma + 1))});
            }
            RationalFitModel m = fit_model == "rational" ? fit_rational(pts, fit_n)
                                                         : fit_inverse(pts, fit_n);
            json j;
            j["model"] = fit_model;
            j["n"] = m.n;
            j["a"] = m.a;
            if (!m.b.empty()) j["b"] = m.b;
            j["c"] = m.c;
            j["max_residual"] = m.max_residual;
            j["asymptote"] = asymptote(m);
            if (fit_json)
                std::cout << j.dump(2) << "\n";
            else
                printf("asymptote %.6f   max residual %.3e\n", asymptote(m),
                       m.max_residual);
            return kExitOk;
        }
        if (*cmd_check) {
            CachingVolume vol;
            auto volfn = [&vol](const ConwaySymbol& s) { return vol(s); };
            auto range2 = [&]() {
                auto dots = check_range.find("..");
                return std::pair{std::stoi(check_range.substr(0, dots)),
                                 std::stoi(check_range.substr(dots + 2))};
            };
            bool pass = true;
            if (check_id == "thm3") {
                auto [lo, hi] = range2();
                for (int p = std::max(3, lo); p <= hi; ++p) {
                    auto a = vol(parse("2,2,-" + std::to_string(p)));
                    auto b = vol(parse("2 " + std::to_string(p - 2) + " 2"));
                    double da = a.volume, db = b.volume;
                    bool ok = a.status == VolumeResult::Status::Hyperbolic &&
                              b.status == VolumeResult::Status::Hyperbolic &&
                              std::abs(da - db) < 1e-8;
                    printf("p=%d  Vol(2,2,-p)=%.10f  Vol(2 %d 2)=%.10f  %s\n", p, da,
                           p - 2, db, ok ? "equal" : "DIFFER");
                    pass = pass && ok;
                }
            } else if (check_id == "thm2") {
                auto spec = parse_family(check_family);
                auto [lo, hi] = range2();
                std::vector<SweepRange> rs;
                for (const auto& p : spec.params) rs.push_back({p.name, lo - 2, hi - 2});
                auto rows = sweep(spec, rs);
                std::vector<std::pair<std::string, double>> vols;
                for (const auto& [asn, sym] : rows) {
                    auto r = vol(sym);
                    if (r.status == VolumeResult::Status::Hyperbolic)
                        vols.push_back({print(sym), r.volume});
                }
                for (std::size_t i = 0; i < vols.size(); ++i)
                    for (std::size_t j = i + 1; j < vols.size(); ++j)
                        if (std::abs(vols[i].second - vols[j].second) < 1e-9 &&
                            vols[i].first != vols[j].first) {
                            printf("coincidence: %s and %s at %.10f\n",
                                   vols[i].first.c_str(), vols[j].first.c_str(),
                                   vols[i].second);
                            pass = false;
                        }
                printf("%zu volumes, pairwise distinct: %s\n", vols.size(),
                       pass ? "yes" : "no");
            } else if (check_id == "thm2-counterexample") {
                for (int p = 8; p <= 10; ++p) {
                    auto a = vol(parse(std::to_string(p) + ",3,-2"));
                    auto b = vol(parse(std::to_string(p - 6) + ",2,-3"));
                    bool ok = std::abs(a.volume - b.volume) < 1e-8;
                    printf("p=%d  Vol(p,3,-2)=%.10f  Vol(p-6,2,-3)=%.10f  %s\n", p,
                           a.volume, b.volume, ok ? "equal" : "DIFFER");
                    pass = pass && ok;
                }
            } else if (check_id == "conj1") {
                auto spec = parse_family(check_family);
                auto tw = twist_number(spec.base_symbol);
                printf("t_D = %d, Conjecture 1 lower bound floor(t_D/2)+1 = %d\n", tw.t_D,
                       tw.conjecture1_lower);
            } else if (check_id == "conj3") {
                // pairwise distinct source-knot volumes up to the crossing bound
                std::set<std::string> seen;
                std::vector<std::pair<std::string, double>> knots;
                for (const auto& row : bounds_table()) {
                    auto sym = parse(row.source);
                    if (crossing_count(sym) > check_bound) continue;
                    if (component_count(build_diagram(sym)) != 1) continue;
                    if (!seen.insert(print(sym)).second) continue;
                    auto r = vol(sym);
                    if (r.status == VolumeResult::Status::Hyperbolic)
                        knots.push_back({print(sym), r.volume});
                }
                for (std::size_t i = 0; i < knots.size(); ++i)
                    for (std::size_t j = i + 1; j < knots.size(); ++j)
                        if (std::abs(knots[i].second - knots[j].second) < 1e-9) {
                            printf("coincidence: %s and %s\n", knots[i].first.c_str(),
                                   knots[j].first.c_str());
                            pass = false;
                        }
                printf("%zu source knots <= %d crossings, distinct volumes: %s\n",
                       knots.size(), check_bound, pass ? "yes" : "no");
            } else {
                std::cerr << "unknown check id " << check_id << "\n";
                return kExitUsage;
            }
            return pass ? kExitOk : kExitSolver;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error at " << e.position << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
