#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "equigrass/f2_linalg.hpp"
#include "equigrass/m2.hpp"
#include "equigrass/partitions.hpp"
#include "equigrass/report.hpp"

namespace equigrass {

// Orbit-sum basis of L_n = (Lambda(a_1..a_n) (x) F2[b_1..b_n])^{S_n}; a part x on an
// index stands for a^(x mod 2) b^(x div 2), so deg = sum of parts.
class LnElement {
public:
    explicit LnElement(int n = 0) : n_(n) {}

    static LnElement unit(int n) { return basis(Partition::zeros(n)); }
    static LnElement basis(const Partition& p);

    int n() const { return n_; }
    const std::set<Partition>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool contains(const Partition& p) const { return terms_.count(p) != 0; }
    void toggle(const Partition& p);

    LnElement& operator+=(const LnElement& o);
    LnElement operator+(const LnElement& o) const { LnElement r = *this; r += o; return r; }
    LnElement operator*(const LnElement& o) const;

    bool operator==(const LnElement&) const = default;

private:
    int n_;
    std::set<Partition> terms_;
};

LnElement ln_mul(const LnElement& x, const LnElement& y);
std::string to_string(const LnElement& x);

LnElement sigma_a(int r, int n);  // [a_1 ... a_r], zero if r > n
LnElement sigma_b(int r, int n);  // [b_1 ... b_r], zero if r > n
LnElement alpha_ie(int i, int e, int n);

struct NamedClass {
    std::string name;
    Partition orbit;
    int degree = 0;
    Bidegree bidegree;
};

// sigma_i(b), 1 <= i <= n, and alpha_{i,e} with 2^i <= n, e <= n/2^i - 1
std::vector<NamedClass> indecomposable_basis_Ln(int n);

// Basis of L_n in one bidegree together with the span of products of positive-degree
// basis elements landing there.
class DecomposableSpan {
public:
    DecomposableSpan(int n, Bidegree d);

    int n() const { return n_; }
    Bidegree bidegree() const { return d_; }
    const std::vector<Partition>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t rank() const { return span_.rank(); }
    std::size_t quotient_dim() const { return dim() - rank(); }

    BitVec vec(const LnElement& x) const;
    bool contains(const LnElement& x) const;
    // rank of decomposables together with extra elements
    std::size_t rank_with(const std::vector<LnElement>& extra) const;
    // products (x_j, y_j) of basis orbits whose sum is x
    std::optional<std::vector<std::pair<Partition, Partition>>> express(const LnElement& x) const;

private:
    int n_;
    Bidegree d_;
    std::vector<Partition> basis_;
    std::map<Partition, std::size_t> index_;
    std::vector<std::pair<Partition, Partition>> products_;
    EchelonBasis span_;
};

std::vector<Partition> ln_basis(int n, Bidegree d);
// nonzero bidegrees with 1 <= p <= deg_max
std::vector<Bidegree> ln_bidegrees(int n, int deg_max);

std::map<Bidegree, std::size_t> indecomposable_quotient_bigraded(int n, int deg_max);
std::map<int, std::size_t> jtilde_quotient_ranks(int n, int deg_max);

enum class Criterion {
    BoundAndFreeA,             // some a's bound, some free
    UnequalBoundExponents,     // no free a's, bound exponents differ
    BoundCountNotPowerOfTwo,   // bound only, equal exponents, count not a power of 2
    FreeCountNotPowerOfTwo,    // free a's only, count not a power of 2
    ExponentAboveStableRange,  // [a_1..a_k b_1^e..b_k^e] with e > n/k - 1
};

const char* criterion_name(Criterion c);

struct Certificate {
    Criterion criterion;
    Partition target;
    // x * y = target + sum of remainder orbits, each certified in turn
    std::vector<std::pair<Partition, Partition>> products;
    std::vector<Certificate> remainder;
};

struct NotDecomposable {
    Partition target;
};

std::variant<Certificate, NotDecomposable> decomposability_witness(const Partition& m, int n);
// recomputes every product with ln_mul
bool validate_certificate(const Certificate& c, int n);
std::string to_string(const Certificate& c);

struct AlphaCount {
    long long floor_sum;
    long long binary_form;
};
AlphaCount alpha_count_both(long long n);
long long alpha_count(long long n);  // throws if the two forms disagree

// nonzero parts, e.g. "v_1 v_3^2 v_4 v_9"
std::string eta_monomial(const Partition& p);
// sorted degrees padded with zeros to n parts
Partition eta_inverse(const std::vector<int>& degrees, int n);
std::uint64_t partition_number(int d);

Report eta_series_check(int deg_max, int n);
Report exterior_invariants_check(int n);
Report ln_identity_check(int n, int deg_max);
Report stable_iso_check(int n, int deg_max);
Report ln_basis_check(int n, int deg_max);
Report verify_exterior_ring(int n, int deg_max);

}  // namespace equigrass
