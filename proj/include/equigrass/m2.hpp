#pragma once

#include <compare>
#include <string>
#include <vector>

namespace equigrass {

struct Bidegree {
    int p = 0;
    int q = 0;
    auto operator<=>(const Bidegree&) const = default;
    Bidegree operator+(Bidegree o) const { return {p + o.p, q + o.q}; }
    Bidegree operator-(Bidegree o) const { return {p - o.p, q - o.q}; }
};

// tau^a rho^b (positive cone) or theta/(tau^a rho^b) (negative cone).
struct M2Monomial {
    bool neg = false;
    int a = 0;
    int b = 0;

    static M2Monomial pos(int tau_exp, int rho_exp) { return {false, tau_exp, rho_exp}; }
    static M2Monomial negative(int tau_div, int rho_div) { return {true, tau_div, rho_div}; }

    Bidegree bidegree() const;
    auto operator<=>(const M2Monomial&) const = default;
};

// true when M2 is nonzero in bidegree (p,q)
bool m2_supported(Bidegree d);

// product of two monomials; false when it vanishes
bool m2_monomial_mul(const M2Monomial& x, const M2Monomial& y, M2Monomial& out);

class M2Element {
public:
    M2Element() = default;
    M2Element(const M2Monomial& m) : terms_{m} {}

    static M2Element zero() { return {}; }
    static M2Element one() { return M2Monomial::pos(0, 0); }
    static M2Element tau(int n = 1) { return M2Monomial::pos(n, 0); }
    static M2Element rho(int n = 1) { return M2Monomial::pos(0, n); }
    static M2Element theta() { return M2Monomial::negative(0, 0); }
    static M2Element monomial(int tau_exp, int rho_exp) { return M2Monomial::pos(tau_exp, rho_exp); }

    const std::vector<M2Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    // coefficient of the unit monomial
    bool constant_term() const;

    M2Element& operator+=(const M2Element& o);
    M2Element operator+(const M2Element& o) const { M2Element r = *this; r += o; return r; }
    M2Element operator*(const M2Element& o) const;
    M2Element& operator*=(const M2Element& o) { return *this = *this * o; }

    bool operator==(const M2Element&) const = default;
    auto operator<=>(const M2Element& o) const { return terms_ <=> o.terms_; }

    void toggle(const M2Monomial& m);

private:
    std::vector<M2Monomial> terms_;  // sorted, distinct
};

// tau -> 1, rho -> 0, negative cone -> 0
bool m2_forget(const M2Element& x);

std::string to_string(const M2Monomial& m);
std::string to_string(const M2Element& x);

}  // namespace equigrass
