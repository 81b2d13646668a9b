#include "linkvol/family.hpp"

#include "linkvol/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace linkvol {

namespace {

void walk_chains(const TanglePtr& t, std::vector<int>& path,
                 const std::function<void(const std::vector<int>&, int)>& fn) {
    if (auto* c = std::get_if<Chain>(&t->node)) {
        fn(path, c->value);
        return;
    }
    auto recurse = [&](const std::vector<TanglePtr>& kids) {
        for (std::size_t i = 0; i < kids.size(); ++i) {
            path.push_back(static_cast<int>(i));
            walk_chains(kids[i], path, fn);
            path.pop_back();
        }
    };
    if (auto* p = std::get_if<Product>(&t->node)) recurse(p->factors);
    else if (auto* r = std::get_if<Ramification>(&t->node)) recurse(r->terms);
    else if (auto* pl = std::get_if<Plus>(&t->node)) {
        path.push_back(0);
        walk_chains(pl->base, path, fn);
        path.pop_back();
    } else if (auto* n = std::get_if<Negated>(&t->node)) {
        path.push_back(0);
        walk_chains(n->base, path, fn);
        path.pop_back();
    }
}

TanglePtr rewrite(const TanglePtr& t, const std::vector<int>& path, std::size_t depth,
                  const std::function<TanglePtr(const TanglePtr&)>& fn) {
    if (depth == path.size()) return fn(t);
    int k = path[depth];
    if (auto* p = std::get_if<Product>(&t->node)) {
        auto fs = p->factors;
        fs[k] = rewrite(fs[k], path, depth + 1, fn);
        return make_product(std::move(fs));
    }
    if (auto* r = std::get_if<Ramification>(&t->node)) {
        auto ts = r->terms;
        ts[k] = rewrite(ts[k], path, depth + 1, fn);
        return make_ram(std::move(ts));
    }
    if (auto* pl = std::get_if<Plus>(&t->node))
        return make_plus(rewrite(pl->base, path, depth + 1, fn), pl->count);
    if (auto* n = std::get_if<Negated>(&t->node))
        return make_neg(rewrite(n->base, path, depth + 1, fn));
    throw std::logic_error("bad chain path");
}

ConwaySymbol rewrite_at(const ConwaySymbol& sym, const ChainPos& pos,
                        const std::function<TanglePtr(const TanglePtr&)>& fn) {
    ConwaySymbol out = sym;
    if (pos.fill < 0) {
        out.root = rewrite(sym.root, pos.path, 0, fn);
    } else {
        TanglePtr f = sym.fills[pos.fill] ? sym.fills[pos.fill] : make_chain(1);
        out.fills[pos.fill] = rewrite(f, pos.path, 0, fn);
    }
    return out;
}

void for_each_expr(const ConwaySymbol& sym,
                   const std::function<void(int, const TanglePtr&)>& fn) {
    if (sym.root) fn(-1, sym.root);
    for (std::size_t i = 0; i < sym.fills.size(); ++i)
        if (sym.fills[i]) fn(static_cast<int>(i), sym.fills[i]);
}

}  // namespace

std::vector<ChainPos> parameters(const ConwaySymbol& sym) {
    std::vector<ChainPos> out;
    for_each_expr(sym, [&](int fill, const TanglePtr& t) {
        std::vector<int> path;
        walk_chains(t, path, [&](const std::vector<int>& p, int v) {
            if (std::abs(v) >= 2) out.push_back({fill, p});
        });
    });
    return out;
}

std::optional<int> chain_value_at(const ConwaySymbol& sym, const ChainPos& pos) {
    const TanglePtr* cur = nullptr;
    if (pos.fill < 0) cur = &sym.root;
    else {
        if (pos.fill >= static_cast<int>(sym.fills.size()) || !sym.fills[pos.fill])
            return std::nullopt;
        cur = &sym.fills[pos.fill];
    }
    TanglePtr t = *cur;
    for (int k : pos.path) {
        if (auto* p = std::get_if<Product>(&t->node)) t = p->factors[k];
        else if (auto* r = std::get_if<Ramification>(&t->node)) t = r->terms[k];
        else if (auto* pl = std::get_if<Plus>(&t->node)) t = pl->base;
        else if (auto* n = std::get_if<Negated>(&t->node)) t = n->base;
        else return std::nullopt;
    }
    if (auto* c = std::get_if<Chain>(&t->node)) return c->value;
    return std::nullopt;
}

FamilySpec parse_family(const std::string& text) {
    // Parameter names are single lowercase letters; an optional leading '-'
    // gives a negative base. Substitute sentinels, parse, then relocate.
    struct Found {
        char name;
        int sign;
        int sentinel;
    };
    std::string s;
    std::vector<Found> found;
    int next_sentinel = 900001;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isalpha(static_cast<unsigned char>(c)) && std::islower(static_cast<unsigned char>(c)) &&
            (i + 1 >= text.size() || !std::isalpha(static_cast<unsigned char>(text[i + 1])))) {
            int sign = 1;
            if (!s.empty() && s.back() == '-') {
                sign = -1;
                s.pop_back();
            }
            int sentinel = next_sentinel++;
            found.push_back({c, sign, sentinel});
            s += std::to_string(sign * sentinel);
        } else {
            s += c;
        }
    }
    FamilySpec spec;
    spec.text = text;
    spec.base_symbol = parse(s);
    // locate sentinels
    std::map<int, ChainPos> where;
    auto scan = [&](int fill, const TanglePtr& t) {
        std::vector<int> path;
        walk_chains(t, path, [&](const std::vector<int>& p, int v) {
            if (std::abs(v) >= 900001) where[std::abs(v)] = ChainPos{fill, p};
        });
    };
    for_each_expr(spec.base_symbol, scan);
    for (const auto& f : found) {
        auto it = where.find(f.sentinel);
        if (it == where.end()) throw std::runtime_error("parameter did not survive parse");
        FamilyParameter p;
        p.name = std::string(1, f.name);
        p.base = 2 * f.sign;
        p.pos = it->second;
        spec.params.push_back(p);
        spec.base_symbol = rewrite_at(spec.base_symbol, p.pos, [&](const TanglePtr&) {
            return make_chain(p.base);
        });
    }
    return spec;
}

ConwaySymbol instantiate(const FamilySpec& spec, const ParameterAssignment& asn) {
    ConwaySymbol out = spec.base_symbol;
    for (const auto& p : spec.params) {
        auto it = asn.find(p.name);
        int k = it == asn.end() ? 0 : it->second;
        if (k < 0) throw std::runtime_error("negative offset for " + p.name);
        int v = (p.base < 0 ? -1 : 1) * (std::abs(p.base) + k);
        out = rewrite_at(out, p.pos, [&](const TanglePtr&) { return make_chain(v); });
    }
    return out;
}

ConwaySymbol source_link(const ConwaySymbol& sym) {
    ConwaySymbol out = sym;
    for (const auto& pos : parameters(sym)) {
        int v = *chain_value_at(out, pos);
        int s = v < 0 ? -2 : 2;
        out = rewrite_at(out, pos, [&](const TanglePtr&) { return make_chain(s); });
    }
    return out;
}

namespace {

TanglePtr augmented_tangle() {
    return make_ram({make_chain(2), make_chain(-2)});
}

bool is_zero_chain(const TanglePtr& t) {
    auto* c = std::get_if<Chain>(&t->node);
    return c && c->value == 0;
}

}  // namespace

ConwaySymbol augment(const ConwaySymbol& sym, const ChainPos& pos) {
    auto v = chain_value_at(sym, pos);
    if (!v || std::abs(*v) < 2)
        throw std::runtime_error("position not augmentable");
    // Replace the chain by the clasp tangle (2,-2) 0 as a single grouped
    // factor. When the chain is directly followed by a 0 in a product ("p 0"
    // at a polyhedron vertex), the doubled zero cancels and the clasp is
    // spliced bare: "p 0" becomes "(2,-2)".
    if (!pos.path.empty()) {
        std::vector<int> parent_path(pos.path.begin(), pos.path.end() - 1);
        int idx = pos.path.back();
        bool cancelled = false;
        ChainPos ppos{pos.fill, parent_path};
        ConwaySymbol out =
            rewrite_at(sym, ppos, [&](const TanglePtr& parent) -> TanglePtr {
                auto* p = std::get_if<Product>(&parent->node);
                if (!p || idx + 1 >= static_cast<int>(p->factors.size()) ||
                    !is_zero_chain(p->factors[idx + 1]))
                    return parent;
                std::vector<TanglePtr> fs = p->factors;
                fs[idx] = augmented_tangle();
                fs.erase(fs.begin() + idx + 1);
                cancelled = true;
                if (fs.size() == 1) return fs[0];
                return make_product(std::move(fs));
            });
        if (cancelled) return out;
    }
    return rewrite_at(sym, pos, [&](const TanglePtr&) -> TanglePtr {
        return make_product({augmented_tangle(), make_chain(0)});
    });
}

AugmentationResult complete_augmentation(const ConwaySymbol& sym) {
    AugmentationResult res;
    ConwaySymbol cur = sym;
    auto has_negative = [](const ConwaySymbol& s) {
        for (const auto& pos : parameters(s))
            if (*chain_value_at(s, pos) < 0) return true;
        return false;
    };
    if (has_negative(cur)) {
        ConwaySymbol m = mirror(cur);
        if (!has_negative(m)) {
            cur = m;
            res.mirrored = true;
        } else {
            res.has_negative_chains = true;
        }
    }
    // Collect positions first (the spliced clasps contain 2 and -2 chains
    // that must not be augmented again) and rewrite deepest-last-first so
    // earlier positions stay valid.
    auto ps = parameters(cur);
    std::sort(ps.begin(), ps.end(), [](const ChainPos& a, const ChainPos& b) {
        return b < a;
    });
    for (const auto& pos : ps) cur = augment(cur, pos);
    res.symbol = cur;
    return res;
}

TwistReport twist_number(const ConwaySymbol& sym) {
    TwistReport r;
    int chains = 0, singles = 0;
    for_each_expr(sym, [&](int fill, const TanglePtr& t) {
        std::vector<int> path;
        walk_chains(t, path, [&](const std::vector<int>&, int v) {
            if (std::abs(v) >= 2) ++chains;
            else if (std::abs(v) == 1) ++singles;
        });
        // '+' suffixes are isolated crossings
        std::function<void(const TanglePtr&)> pluses = [&](const TanglePtr& x) {
            if (auto* pl = std::get_if<Plus>(&x->node)) {
                singles += pl->count;
                pluses(pl->base);
            } else if (auto* p = std::get_if<Product>(&x->node)) {
                for (const auto& f : p->factors) pluses(f);
            } else if (auto* rr = std::get_if<Ramification>(&x->node)) {
                for (const auto& f : rr->terms) pluses(f);
            } else if (auto* n = std::get_if<Negated>(&x->node)) {
                pluses(n->base);
            }
        };
        pluses(t);
    });
    if (sym.basis) {
        for (const auto& f : sym.fills)
            if (!f) ++singles;  // unfilled vertex = isolated crossing
        singles += basis_vertex_count(*sym.basis) - static_cast<int>(sym.fills.size());
    }
    r.t_D = chains + singles;
    r.conjecture1_lower = r.t_D / 2 + 1;
    return r;
}

namespace {

// Recognize (2,2)-reversal eligible subtangles: R = (±2,±2) possibly negated,
// or such a tangle followed by a single 0 in a product.
bool is_pm22_ram(const TanglePtr& t) {
    const TangleExpr* e = t.get();
    if (auto* n = std::get_if<Negated>(&e->node)) e = n->base.get();
    auto* r = std::get_if<Ramification>(&e->node);
    if (!r || r->terms.size() != 2) return false;
    for (const auto& x : r->terms) {
        auto* c = std::get_if<Chain>(&x->node);
        if (!c || std::abs(c->value) != 2) return false;
    }
    return true;
}

}  // namespace

bool reversal_eligible(const ConwaySymbol& sym, const ChainPos& pos) {
    // navigate to subtangle at pos (not necessarily a chain)
    TanglePtr t;
    if (pos.fill < 0) t = sym.root;
    else t = sym.fills[pos.fill];
    if (!t) return false;
    for (int k : pos.path) {
        if (auto* p = std::get_if<Product>(&t->node)) t = p->factors[k];
        else if (auto* r = std::get_if<Ramification>(&t->node)) t = r->terms[k];
        else if (auto* pl = std::get_if<Plus>(&t->node)) t = pl->base;
        else if (auto* n = std::get_if<Negated>(&t->node)) t = n->base;
        else return false;
    }
    if (is_pm22_ram(t)) return true;
    if (auto* p = std::get_if<Product>(&t->node)) {
        return p->factors.size() == 2 && is_pm22_ram(p->factors[0]) &&
               is_zero_chain(p->factors[1]);
    }
    return false;
}

ConwaySymbol reversal(const ConwaySymbol& sym, const ChainPos& pos) {
    if (!reversal_eligible(sym, pos))
        throw std::runtime_error("position does not hold a reversal-eligible subtangle");
    return rewrite_at(sym, pos, [&](const TanglePtr& t) -> TanglePtr {
        if (auto* p = std::get_if<Product>(&t->node)) {
            // (2,2) 0 -> (2,2)
            return p->factors[0];
        }
        // (2,2) -> (2,2) 0
        return make_product({t, make_chain(0)});
    });
}

std::vector<std::pair<ParameterAssignment, ConwaySymbol>> sweep(
    const FamilySpec& spec, const std::vector<SweepRange>& ranges,
    const std::map<std::string, std::string>& locks) {
    std::vector<std::pair<ParameterAssignment, ConwaySymbol>> out;
    // free parameters = those with a range and not locked to another
    std::vector<SweepRange> free;
    for (const auto& r : ranges)
        if (!locks.count(r.name)) free.push_back(r);
    std::vector<int> idx(free.size(), 0);
    if (free.empty()) return out;
    for (;;) {
        ParameterAssignment asn;
        for (std::size_t i = 0; i < free.size(); ++i)
            asn[free[i].name] = free[i].lo + idx[i];
        for (const auto& [slave, master] : locks) {
            auto it = asn.find(master);
            if (it == asn.end()) throw std::runtime_error("lock to unknown parameter");
            asn[slave] = it->second;
        }
        out.push_back({asn, instantiate(spec, asn)});
        // lexicographic increment (last fastest)
        int i = static_cast<int>(free.size()) - 1;
        while (i >= 0) {
            if (free[i].lo + idx[i] < free[i].hi) {
                ++idx[i];
                break;
            }
            idx[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

}  // namespace linkvol
