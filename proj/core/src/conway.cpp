#include "linkvol/conway.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace linkvol {

TanglePtr make_chain(int v) { return std::make_shared<TangleExpr>(TangleExpr{Chain{v}}); }
TanglePtr make_product(std::vector<TanglePtr> fs) {
    return std::make_shared<TangleExpr>(TangleExpr{Product{std::move(fs)}});
}
TanglePtr make_ram(std::vector<TanglePtr> ts) {
    return std::make_shared<TangleExpr>(TangleExpr{Ramification{std::move(ts)}});
}
TanglePtr make_plus(TanglePtr base, int count) {
    return std::make_shared<TangleExpr>(TangleExpr{Plus{std::move(base), count}});
}
TanglePtr make_neg(TanglePtr base) {
    return std::make_shared<TangleExpr>(TangleExpr{Negated{std::move(base)}});
}

namespace {

struct Token {
    enum Kind { Num, Space, Comma, LParen, RParen, PlusSign, Minus, Dot, Colon, End } kind;
    int value = 0;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ') {
            out.push_back({Token::Space, 0, i});
            while (i < s.size() && s[i] == ' ') ++i;
            continue;
        }
        switch (c) {
            case ',': out.push_back({Token::Comma, 0, i}); ++i; continue;
            case '(': out.push_back({Token::LParen, 0, i}); ++i; continue;
            case ')': out.push_back({Token::RParen, 0, i}); ++i; continue;
            case '+': out.push_back({Token::PlusSign, 0, i}); ++i; continue;
            case '.': out.push_back({Token::Dot, 0, i}); ++i; continue;
            case ':': out.push_back({Token::Colon, 0, i}); ++i; continue;
            default: break;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            bool neg = false;
            if (c == '-') { neg = true; ++j; }
            if (j >= s.size() || !std::isdigit(static_cast<unsigned char>(s[j]))) {
                out.push_back({Token::Minus, 0, i});
                ++i;
                continue;
            }
            long v = 0;
            std::size_t start = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                v = v * 10 + (s[j] - '0');
                ++j;
            }
            out.push_back({Token::Num, static_cast<int>(neg ? -v : v), start});
            i = j;
            continue;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Token::End, 0, s.size()});
    return out;
}

class ExprParser {
  public:
    explicit ExprParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    TanglePtr parse_full() {
        TanglePtr t = parse_ram();
        if (peek().kind != Token::End)
            throw parse_error("trailing input in tangle expression", peek().pos);
        return t;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& eat() { return toks_[pos_++]; }

    TanglePtr parse_atom() {
        const Token& t = peek();
        if (t.kind == Token::Num) {
            eat();
            return make_chain(t.value);
        }
        if (t.kind == Token::Minus) {
            eat();
            if (peek().kind != Token::LParen)
                throw parse_error("expected '(' after '-'", peek().pos);
            return make_neg(parse_atom());
        }
        if (t.kind == Token::LParen) {
            eat();
            TanglePtr inner = parse_ram();
            if (peek().kind != Token::RParen)
                throw parse_error("expected ')'", peek().pos);
            eat();
            return inner;
        }
        throw parse_error("expected tangle", t.pos);
    }

    TanglePtr parse_prod() {
        std::vector<TanglePtr> fs{parse_atom()};
        while (peek().kind == Token::Space) {
            eat();
            fs.push_back(parse_atom());
        }
        if (fs.size() == 1) return fs[0];
        return make_product(std::move(fs));
    }

    TanglePtr parse_ram() {
        std::vector<TanglePtr> ts{parse_prod()};
        while (peek().kind == Token::Comma) {
            eat();
            ts.push_back(parse_prod());
        }
        TanglePtr node = ts.size() == 1 ? ts[0] : make_ram(std::move(ts));
        int pluses = 0;
        while (peek().kind == Token::PlusSign) {
            eat();
            ++pluses;
        }
        if (pluses > 0) node = make_plus(node, pluses);
        return node;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

TanglePtr parse_tangle_text(const std::string& s, std::size_t offset) {
    try {
        return ExprParser(tokenize(s)).parse_full();
    } catch (const parse_error& e) {
        throw parse_error(e.what(), offset + e.position);
    }
}

const std::array<const char*, 4> kNamedBases = {"12F", "11**", "10**", "9*"};

}  // namespace

bool basis_known(const std::string& basis) {
    for (const char* n : kNamedBases)
        if (basis == n) return true;
    if (basis.size() >= 2 && basis.back() == '*') {
        std::string num = basis.substr(0, basis.size() - 1);
        if (!num.empty() && std::all_of(num.begin(), num.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            })) {
            int n = std::stoi(num);
            return n >= 4 && n <= 48 && n % 2 == 0;
        }
    }
    return false;
}

int basis_vertex_count(const std::string& basis) {
    if (basis == "12F") return 12;
    if (basis == "11**") return 11;
    if (basis == "10**") return 10;
    if (basis == "9*") return 9;
    return std::stoi(basis.substr(0, basis.size() - 1));
}

ConwaySymbol parse(const std::string& text) {
    // trim
    std::size_t b = text.find_first_not_of(' ');
    std::size_t e = text.find_last_not_of(' ');
    if (b == std::string::npos) throw parse_error("empty symbol", 0);
    std::string s = text.substr(b, e - b + 1);

    std::optional<std::string> basis;
    std::size_t body_at = 0;
    for (const char* name : kNamedBases) {
        if (s.rfind(name, 0) == 0) {
            basis = name;
            body_at = std::string(name).size();
            break;
        }
    }
    if (!basis) {
        // numeric "N*" or "N**" prefix
        std::size_t i = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i > 0 && i < s.size() && s[i] == '*') {
            std::size_t j = i + 1;
            if (j < s.size() && s[j] == '*') ++j;
            std::string name = s.substr(0, j);
            if (!basis_known(name))
                throw parse_error("unknown basic polyhedron " + name, 0);
            basis = name;
            body_at = j;
        }
    }
    if (!basis) {
        // implied 6* when a top-level '.' or ':' appears
        int depth = 0;
        for (char c : s) {
            if (c == '(') ++depth;
            else if (c == ')') --depth;
            else if ((c == '.' || c == ':') && depth == 0) {
                basis = "6*";
                break;
            }
        }
    }

    if (!basis) {
        ConwaySymbol sym;
        sym.root = parse_tangle_text(s, b);
        return sym;
    }

    ConwaySymbol sym;
    sym.basis = *basis;
    int nv = basis_vertex_count(*basis);
    sym.fills.assign(nv, nullptr);

    std::string body = s.substr(body_at);
    int v = 0;
    std::size_t pos = 0;
    while (pos < body.size()) {
        char c = body[pos];
        if (c == '.') { v += 1; ++pos; continue; }
        if (c == ':') { v += 2; ++pos; continue; }
        int depth = 0;
        std::size_t j = pos;
        while (j < body.size()) {
            char d = body[j];
            if (d == '(') ++depth;
            else if (d == ')') --depth;
            else if ((d == '.' || d == ':') && depth == 0) break;
            ++j;
        }
        std::string tok = body.substr(pos, j - pos);
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (tok.empty()) throw parse_error("empty vertex fill", b + body_at + pos);
        if (v >= nv) throw parse_error("vertex overflow", b + body_at + pos);
        sym.fills[v] = parse_tangle_text(tok, b + body_at + pos);
        pos = j;
        if (pos < body.size()) {
            v += body[pos] == '.' ? 1 : 2;
            ++pos;
        }
    }
    return sym;
}

namespace {

bool needs_parens(const TangleExpr& t) {
    return std::holds_alternative<Ramification>(t.node) ||
           std::holds_alternative<Plus>(t.node) ||
           std::holds_alternative<Product>(t.node);
}

void print_expr(const TangleExpr& t, std::ostringstream& os);

void print_factor(const TangleExpr& t, std::ostringstream& os) {
    if (needs_parens(t)) {
        os << '(';
        print_expr(t, os);
        os << ')';
    } else {
        print_expr(t, os);
    }
}

// vertex fills need parentheses only around commas and pluses
void print_fill(const TangleExpr& t, std::ostringstream& os) {
    if (std::holds_alternative<Ramification>(t.node) ||
        std::holds_alternative<Plus>(t.node)) {
        os << '(';
        print_expr(t, os);
        os << ')';
    } else {
        print_expr(t, os);
    }
}

void print_expr(const TangleExpr& t, std::ostringstream& os) {
    if (auto* c = std::get_if<Chain>(&t.node)) {
        os << c->value;
    } else if (auto* p = std::get_if<Product>(&t.node)) {
        bool first = true;
        for (const auto& f : p->factors) {
            if (!first) os << ' ';
            first = false;
            print_factor(*f, os);
        }
    } else if (auto* r = std::get_if<Ramification>(&t.node)) {
        bool first = true;
        for (const auto& x : r->terms) {
            if (!first) os << ',';
            first = false;
            print_expr(*x, os);
        }
    } else if (auto* pl = std::get_if<Plus>(&t.node)) {
        print_expr(*pl->base, os);
        for (int i = 0; i < pl->count; ++i) os << '+';
    } else if (auto* n = std::get_if<Negated>(&t.node)) {
        os << '-';
        if (std::holds_alternative<Chain>(n->base->node))
            print_expr(*n->base, os);
        else {
            os << '(';
            print_expr(*n->base, os);
            os << ')';
        }
    }
}

bool is_trivial_fill(const TanglePtr& f) {
    if (!f) return true;
    if (auto* c = std::get_if<Chain>(&f->node)) return c->value == 1;
    return false;
}

}  // namespace

std::string print(const TanglePtr& t) {
    std::ostringstream os;
    print_expr(*t, os);
    return os.str();
}

std::string print(const ConwaySymbol& sym) {
    if (!sym.basis) return print(sym.root);
    // separator encoding: '.' advances one vertex, ':' advances two, so a
    // gap G prints as colons then one dot when G is odd
    std::ostringstream body;
    bool any_sep = false;
    auto emit_gap = [&](int gap) {
        while (gap >= 2) {
            body << ':';
            gap -= 2;
            any_sep = true;
        }
        if (gap == 1) {
            body << '.';
            any_sep = true;
        }
    };
    int last = -1;
    for (std::size_t i = 0; i < sym.fills.size(); ++i)
        if (!is_trivial_fill(sym.fills[i])) last = static_cast<int>(i);
    int prev = -1;
    for (int v = 0; v <= last; ++v) {
        if (is_trivial_fill(sym.fills[v])) continue;
        emit_gap(prev < 0 ? v : v - prev);
        print_fill(*sym.fills[v], body);
        prev = v;
    }
    // 6* stays implicit when the body alone still parses polyhedrally
    if (*sym.basis == "6*" && any_sep) return body.str();
    return *sym.basis + body.str();
}

std::string canonical(const std::string& text) { return print(parse(text)); }

namespace {

TanglePtr mirror_expr(const TanglePtr& t) {
    if (auto* c = std::get_if<Chain>(&t->node)) return make_chain(-c->value);
    if (auto* p = std::get_if<Product>(&t->node)) {
        std::vector<TanglePtr> fs;
        fs.reserve(p->factors.size());
        for (const auto& f : p->factors) fs.push_back(mirror_expr(f));
        return make_product(std::move(fs));
    }
    if (auto* r = std::get_if<Ramification>(&t->node)) {
        std::vector<TanglePtr> ts;
        ts.reserve(r->terms.size());
        for (const auto& x : r->terms) ts.push_back(mirror_expr(x));
        return make_ram(std::move(ts));
    }
    if (auto* pl = std::get_if<Plus>(&t->node))
        return make_plus(mirror_expr(pl->base), pl->count);
    auto* n = std::get_if<Negated>(&t->node);
    return make_neg(mirror_expr(n->base));
}

int count_expr(const TanglePtr& t) {
    if (auto* c = std::get_if<Chain>(&t->node)) return std::abs(c->value);
    if (auto* p = std::get_if<Product>(&t->node)) {
        int s = 0;
        for (const auto& f : p->factors) s += count_expr(f);
        return s;
    }
    if (auto* r = std::get_if<Ramification>(&t->node)) {
        int s = 0;
        for (const auto& x : r->terms) s += count_expr(x);
        return s;
    }
    if (auto* pl = std::get_if<Plus>(&t->node)) return count_expr(pl->base) + pl->count;
    auto* n = std::get_if<Negated>(&t->node);
    return count_expr(n->base);
}

}  // namespace

ConwaySymbol mirror(const ConwaySymbol& sym) {
    ConwaySymbol out;
    out.basis = sym.basis;
    if (sym.root) out.root = mirror_expr(sym.root);
    out.fills.reserve(sym.fills.size());
    for (const auto& f : sym.fills) out.fills.push_back(f ? mirror_expr(f) : nullptr);
    return out;
}

int crossing_count(const ConwaySymbol& sym) {
    if (!sym.basis) return count_expr(sym.root);
    int s = 0;
    for (const auto& f : sym.fills) s += f ? count_expr(f) : 1;
    return s;
}

bool equal(const TanglePtr& a, const TanglePtr& b) {
    if (!a || !b) return !a && !b;
    return print(a) == print(b);
}

bool equal(const ConwaySymbol& a, const ConwaySymbol& b) {
    return print(a) == print(b);
}

}  // namespace linkvol
