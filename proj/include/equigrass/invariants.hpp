#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "equigrass/f2poly.hpp"
#include "equigrass/m2.hpp"
#include "equigrass/partitions.hpp"
#include "equigrass/rank_chart.hpp"

namespace equigrass {

// Normal-form monomial of T_k = M2[a_i,b_i]/(a_i^2 = rho a_i + tau b_i).
// Index i carries a_i^(deg_i mod 2) b_i^(deg_i div 2).
struct TkMonomial {
    std::vector<int> deg;

    static TkMonomial from(const std::vector<int>& eps, const std::vector<int>& d);
    int k() const { return static_cast<int>(deg.size()); }
    int eps(int i) const { return deg[i] & 1; }
    int d(int i) const { return deg[i] >> 1; }
    Bidegree bidegree() const;
    auto operator<=>(const TkMonomial&) const = default;
};

// Monomial with unrestricted a-exponents, before rewriting.
struct RawMonomial {
    std::vector<int> a;
    std::vector<int> b;
};

using RawPolynomial = std::vector<std::pair<RawMonomial, M2Element>>;

class TkElement {
public:
    explicit TkElement(int k = 0) : k_(k) {}

    int k() const { return k_; }
    const std::map<TkMonomial, M2Element>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const TkMonomial& m, const M2Element& c);

    TkElement& operator+=(const TkElement& o);
    bool operator==(const TkElement&) const = default;

private:
    int k_;
    std::map<TkMonomial, M2Element> terms_;
};

// rewrite a_i^2 -> rho a_i + tau b_i until every a-exponent is at most 1
TkElement normalize(int k, const RawPolynomial& e);
TkElement tk_mul(const TkElement& x, const TkElement& y);

using BasisClass = Partition;

class InvariantElement {
public:
    explicit InvariantElement(int k = 0) : k_(k) {}

    static InvariantElement unit(int k);
    static InvariantElement basis(const BasisClass& c, const M2Element& coeff = M2Element::one());
    static InvariantElement scalar(int k, const M2Element& c);

    int k() const { return k_; }
    const std::map<BasisClass, M2Element>& coeffs() const { return coeffs_; }
    M2Element coeff(const BasisClass& c) const;
    bool is_zero() const { return coeffs_.empty(); }
    void add(const BasisClass& c, const M2Element& coeff);

    InvariantElement& operator+=(const InvariantElement& o);
    InvariantElement operator+(const InvariantElement& o) const { InvariantElement r = *this; r += o; return r; }
    InvariantElement operator*(const InvariantElement& o) const;
    InvariantElement operator*(const M2Element& c) const;
    InvariantElement pow(int e) const;

    // image modulo (rho, tau): keep basis classes whose coefficient has a unit term
    InvariantElement mod_rho_tau() const;
    // the bidegree of every term (coefficient times class) when homogeneous
    bool homogeneous(Bidegree* out = nullptr) const;

    bool operator==(const InvariantElement&) const = default;

private:
    int k_;
    std::map<BasisClass, M2Element> coeffs_;
};

Bidegree bidegree(const BasisClass& c);

struct NotInvariant : std::runtime_error {
    BasisClass orbit;
    std::vector<M2Element> witnesses;
    NotInvariant(BasisClass o, std::vector<M2Element> w);
};

enum class ToBasisMode { Strict, Canonical };

InvariantElement orbit_sum(const TkMonomial& m);
TkElement expand(const InvariantElement& x);
// Strict throws NotInvariant when an orbit is incomplete or its coefficients differ;
// Canonical reads each orbit's coefficient off its sorted representative.
InvariantElement to_basis(const TkElement& e, ToBasisMode mode = ToBasisMode::Strict);

InvariantElement mul(const InvariantElement& x, const InvariantElement& y);
// reference route: expand both factors, multiply in T_k, normalize, collect orbits
InvariantElement mul_by_expansion(const InvariantElement& x, const InvariantElement& y);

InvariantElement class_w(int i, int k);
InvariantElement class_c(int i, int k);
InvariantElement class_wc(int i, int j, int k);
InvariantElement class_w_e(int i, int e, int k);

// canonical rendering: one "coeff*[parts]" per class, sorted by partition
std::string to_string(const InvariantElement& x);

RankChart rank_chart_inv(int k, int p_max);
RankChart rank_chart_inv_enumerated(int k, int p_max);

// mod 2 Newton polynomial: sum_i b_i^n in the elementary symmetric c_1..c_k
F2Poly newton_power_sum(int n, int k);
// substitutes c_i = class_c(i, k)
InvariantElement evaluate_c_polynomial(const F2Poly& f, int k);

// w_1^(e-1) c_1 + ... + w_1^(e-k) c_k for e >= k
InvariantElement w1e_reduce(int e, int k);
InvariantElement square_w_e(int i, int e, int k);

// tau -> 1, rho -> 0, b_i -> a_i^2, expressed in the elementary symmetric w_1..w_k
F2Poly forgetful(const InvariantElement& x);

}  // namespace equigrass
