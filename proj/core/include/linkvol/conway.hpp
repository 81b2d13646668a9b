#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace linkvol {

// Conway notation AST. A tangle expression is one of:
//   Chain        signed integer (0 allowed as positional placeholder)
//   Product      space-separated factors, left associative
//   Ramification comma-separated terms
//   Plus         trailing '+' repetitions on a tangle
//   Negated      leading '-' on a parenthesized tangle
struct TangleExpr;
using TanglePtr = std::shared_ptr<const TangleExpr>;

struct Chain {
    int value = 0;
};
struct Product {
    std::vector<TanglePtr> factors;
};
struct Ramification {
    std::vector<TanglePtr> terms;
};
struct Plus {
    TanglePtr base;
    int count = 1;
};
struct Negated {
    TanglePtr base;
};

struct TangleExpr {
    std::variant<Chain, Product, Ramification, Plus, Negated> node;
};

TanglePtr make_chain(int v);
TanglePtr make_product(std::vector<TanglePtr> fs);
TanglePtr make_ram(std::vector<TanglePtr> ts);
TanglePtr make_plus(TanglePtr base, int count);
TanglePtr make_neg(TanglePtr base);

// Polyhedral basis: name plus vertex count; braid templates live in
// polyhedra.cpp.
struct ConwaySymbol {
    TanglePtr root;                      // null for polyhedral symbols
    std::optional<std::string> basis;    // "6*", "8*", "9*", "10**", "12F", ...
    std::vector<TanglePtr> fills;        // size = vertex count; null = tangle 1
};

class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what), position(pos) {}
    std::size_t position;
};

ConwaySymbol parse(const std::string& text);
std::string print(const ConwaySymbol& sym);
std::string print(const TanglePtr& t);

// Canonical form of a symbol string: print(parse(s)).
std::string canonical(const std::string& text);

ConwaySymbol mirror(const ConwaySymbol& sym);
int crossing_count(const ConwaySymbol& sym);

int basis_vertex_count(const std::string& basis);
bool basis_known(const std::string& basis);

bool equal(const TanglePtr& a, const TanglePtr& b);
bool equal(const ConwaySymbol& a, const ConwaySymbol& b);

}  // namespace linkvol
