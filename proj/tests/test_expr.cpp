#include <doctest.h>

#include "equigrass/expr.hpp"

using namespace equigrass;

TEST_CASE("parse and print")
{
    CHECK(to_string(parse_expression("w_1")) == "w_1");
    CHECK(to_string(parse_expression("w_1 * w_2 + c_1")) == "((w_1 * w_2) + c_1)");
    CHECK(to_string(parse_expression("w_1^(2)")) == "w_1^(2)");
    CHECK(to_string(parse_expression("w_1^2")) == "w_1^2");
    CHECK(to_string(parse_expression("wc_{2,1}")) == "wc_{2,1}");
    CHECK(to_string(parse_expression("w_{10}")) == "w_10");
    CHECK(to_string(parse_expression("(rho + tau)^3")) == "(rho + tau)^3");
}

TEST_CASE("parse errors carry offsets")
{
    auto offset_of = [](const std::string& s) -> long {
        try {
            parse_expression(s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset);
        }
        return -1;
    };
    CHECK(offset_of("w_1^(") == 5);
    CHECK(offset_of("") == 0);
    CHECK(offset_of("w_1 +") == 5);
    CHECK(offset_of("w_1 w_2") == 4);
    CHECK(offset_of("x") == 0);
    CHECK(offset_of("(w_1") == 4);
    CHECK(offset_of("wc_{1 2}") == 6);
    try {
        parse_expression("w_1^(");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()) == "expected integer at offset 5");
    }
}

TEST_CASE("evaluation")
{
    CHECK(evaluate("w_1 + w_1", 2).is_zero());
    CHECK(evaluate("2", 3).is_zero());
    CHECK(evaluate("1", 3) == InvariantElement::unit(3));
    CHECK(evaluate("w_1^2", 2) == evaluate("rho*w_1 + tau*c_1", 2));
    CHECK(evaluate("w_1^(0)", 3) == class_w(1, 3));
    CHECK(evaluate("(w_1 + c_1)^2", 2) == evaluate("w_1*w_1 + c_1*c_1", 2));
    CHECK_THROWS_AS(evaluate("w_3", 2), std::out_of_range);
}
