#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "equigrass/invariants.hpp"

namespace equigrass {

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off);
};

// expr   := term ('+' term)*
// term   := factor ('*' factor)*
// factor := primary ('^' INT)?
// primary:= w_i | w_i^(e) | c_i | wc_{i,j} | rho | tau | INT | '(' expr ')'
struct Expr {
    enum class Kind { Sum, Product, Power, W, C, WC, WE, Rho, Tau, Integer };
    Kind kind = Kind::Integer;
    std::vector<Expr> kids;
    int i = 0, j = 0;  // class indices, integer value, or exponent
    std::size_t offset = 0;
};

Expr parse_expression(const std::string& src);
InvariantElement evaluate(const Expr& e, int k);
InvariantElement evaluate(const std::string& src, int k);
std::string to_string(const Expr& e);

}  // namespace equigrass
