#include "equigrass/expr.hpp"

#include <cctype>

namespace equigrass {

ParseError::ParseError(const std::string& msg, std::size_t off)
    : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off)
{
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Expr parse()
    {
        Expr e = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool keyword(const char* w)
    {
        skip();
        std::size_t n = std::char_traits<char>::length(w);
        if (s_.compare(pos_, n, w) != 0) return false;
        // identifiers must not run on into letters
        if (pos_ + n < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_ + n])) && w[n - 1] != '_') return false;
        pos_ += n;
        return true;
    }

    int integer()
    {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > 1000000) fail("integer too large");
        }
        return static_cast<int>(v);
    }

    // i or {i}
    int index()
    {
        if (eat('{')) {
            int v = integer();
            expect('}');
            return v;
        }
        return integer();
    }

    Expr sum()
    {
        skip();
        Expr first = product();
        if (!peek('+')) return first;
        std::size_t at = first.offset;
        Expr e{Expr::Kind::Sum, {std::move(first)}, 0, 0, at};
        while (eat('+')) e.kids.push_back(product());
        return e;
    }

    Expr product()
    {
        skip();
        Expr first = factor();
        if (!peek('*')) return first;
        std::size_t at = first.offset;
        Expr e{Expr::Kind::Product, {std::move(first)}, 0, 0, at};
        while (eat('*')) e.kids.push_back(factor());
        return e;
    }

    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    Expr factor()
    {
        Expr base = primary();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            std::size_t at = pos_++;
            Expr e{Expr::Kind::Power, {std::move(base)}, integer(), 0, at};
            return e;
        }
        return base;
    }

    Expr primary()
    {
        skip();
        std::size_t at = pos_;
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (eat('(')) {
            Expr e = sum();
            expect(')');
            return e;
        }
        if (keyword("wc_")) {
            expect('{');
            int i = integer();
            expect(',');
            int j = integer();
            expect('}');
            return {Expr::Kind::WC, {}, i, j, at};
        }
        if (keyword("w_")) {
            int i = index();
            // w_i^(e); a bare ^ followed by a number is a power, handled by factor()
            if (pos_ + 1 < s_.size() && s_[pos_] == '^' && s_[pos_ + 1] == '(') {
                pos_ += 2;
                int e = integer();
                expect(')');
                return {Expr::Kind::WE, {}, i, e, at};
            }
            return {Expr::Kind::W, {}, i, 0, at};
        }
        if (keyword("c_")) return {Expr::Kind::C, {}, index(), 0, at};
        if (keyword("rho")) return {Expr::Kind::Rho, {}, 0, 0, at};
        if (keyword("tau")) return {Expr::Kind::Tau, {}, 0, 0, at};
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) return {Expr::Kind::Integer, {}, integer(), 0, at};
        fail("expected a class, scalar, or '('");
    }
};

}  // namespace

Expr parse_expression(const std::string& src)
{
    return Parser(src).parse();
}

InvariantElement evaluate(const Expr& e, int k)
{
    switch (e.kind) {
    case Expr::Kind::Sum: {
        InvariantElement r(k);
        for (const auto& x : e.kids) r += evaluate(x, k);
        return r;
    }
    case Expr::Kind::Product: {
        InvariantElement r = InvariantElement::unit(k);
        for (const auto& x : e.kids) r = mul(r, evaluate(x, k));
        return r;
    }
    case Expr::Kind::Power:
        return evaluate(e.kids.front(), k).pow(e.i);
    case Expr::Kind::W:
        return class_w(e.i, k);
    case Expr::Kind::C:
        return class_c(e.i, k);
    case Expr::Kind::WC:
        return class_wc(e.i, e.j, k);
    case Expr::Kind::WE:
        return class_w_e(e.i, e.j, k);
    case Expr::Kind::Rho:
        return InvariantElement::scalar(k, M2Element::rho());
    case Expr::Kind::Tau:
        return InvariantElement::scalar(k, M2Element::tau());
    case Expr::Kind::Integer:
        return e.i % 2 ? InvariantElement::unit(k) : InvariantElement(k);
    }
    return InvariantElement(k);
}

InvariantElement evaluate(const std::string& src, int k)
{
    return evaluate(parse_expression(src), k);
}

std::string to_string(const Expr& e)
{
    auto join = [&](const char* sep) {
        std::string s;
        for (const auto& x : e.kids) s += (s.empty() ? "" : sep) + to_string(x);
        return "(" + s + ")";
    };
    switch (e.kind) {
    case Expr::Kind::Sum: return join(" + ");
    case Expr::Kind::Product: return join(" * ");
    case Expr::Kind::Power: return to_string(e.kids.front()) + "^" + std::to_string(e.i);
    case Expr::Kind::W: return "w_" + std::to_string(e.i);
    case Expr::Kind::C: return "c_" + std::to_string(e.i);
    case Expr::Kind::WC: return "wc_{" + std::to_string(e.i) + "," + std::to_string(e.j) + "}";
    case Expr::Kind::WE: return "w_" + std::to_string(e.i) + "^(" + std::to_string(e.j) + ")";
    case Expr::Kind::Rho: return "rho";
    case Expr::Kind::Tau: return "tau";
    case Expr::Kind::Integer: return std::to_string(e.i);
    }
    return {};
}

}  // namespace equigrass
