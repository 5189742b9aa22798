#include "equigrass/invariants.hpp"

#include <algorithm>

#include "orbit_product.hpp"

namespace equigrass {

TkMonomial TkMonomial::from(const std::vector<int>& eps, const std::vector<int>& d)
{
    if (eps.size() != d.size()) throw std::invalid_argument("eps and d lengths differ");
    TkMonomial m;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (eps[i] < 0 || eps[i] > 1 || d[i] < 0) throw std::invalid_argument("not a normal-form monomial");
        m.deg.push_back(eps[i] + 2 * d[i]);
    }
    return m;
}

Bidegree TkMonomial::bidegree() const
{
    Bidegree r;
    for (int x : deg) {
        r.p += x;
        r.q += (x + 1) / 2;
    }
    return r;
}

void TkElement::add(const TkMonomial& m, const M2Element& c)
{
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TkElement& TkElement::operator+=(const TkElement& o)
{
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

TkElement normalize(int k, const RawPolynomial& e)
{
    TkElement out(k);
    std::vector<std::pair<RawMonomial, M2Element>> work(e.begin(), e.end());
    while (!work.empty()) {
        auto [m, c] = std::move(work.back());
        work.pop_back();
        if (c.is_zero()) continue;
        if (static_cast<int>(m.a.size()) != k || static_cast<int>(m.b.size()) != k)
            throw std::invalid_argument("monomial has wrong number of indices");
        int i = 0;
        while (i < k && m.a[i] < 2) ++i;
        if (i == k) {
            TkMonomial t;
            for (int j = 0; j < k; ++j) t.deg.push_back(m.a[j] + 2 * m.b[j]);
            out.add(t, c);
            continue;
        }
        RawMonomial r = m;
        r.a[i] -= 1;
        work.push_back({r, c * M2Element::rho()});
        r.a[i] -= 1;
        r.b[i] += 1;
        work.push_back({r, c * M2Element::tau()});
    }
    return out;
}

TkElement tk_mul(const TkElement& x, const TkElement& y)
{
    if (x.k() != y.k()) throw std::invalid_argument("k mismatch");
    int k = x.k();
    RawPolynomial raw;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            M2Element c = cx * cy;
            if (c.is_zero()) continue;
            RawMonomial r{std::vector<int>(k), std::vector<int>(k)};
            for (int i = 0; i < k; ++i) {
                r.a[i] = mx.eps(i) + my.eps(i);
                r.b[i] = mx.d(i) + my.d(i);
            }
            raw.push_back({std::move(r), std::move(c)});
        }
    return normalize(k, raw);
}

Bidegree bidegree(const BasisClass& c)
{
    return {c.sum(), weight(c)};
}

InvariantElement InvariantElement::unit(int k)
{
    return basis(Partition::zeros(k));
}

InvariantElement InvariantElement::basis(const BasisClass& c, const M2Element& coeff)
{
    InvariantElement r(c.k());
    r.add(c, coeff);
    return r;
}

InvariantElement InvariantElement::scalar(int k, const M2Element& c)
{
    return basis(Partition::zeros(k), c);
}

M2Element InvariantElement::coeff(const BasisClass& c) const
{
    auto it = coeffs_.find(c);
    return it == coeffs_.end() ? M2Element() : it->second;
}

void InvariantElement::add(const BasisClass& c, const M2Element& coeff)
{
    if (coeff.is_zero()) return;
    if (c.k() != k_) throw std::invalid_argument("basis class has wrong number of parts");
    auto [it, fresh] = coeffs_.try_emplace(c, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

InvariantElement& InvariantElement::operator+=(const InvariantElement& o)
{
    if (o.k_ != k_) throw std::invalid_argument("k mismatch");
    for (const auto& [c, x] : o.coeffs_) add(c, x);
    return *this;
}

InvariantElement InvariantElement::operator*(const InvariantElement& o) const
{
    return mul(*this, o);
}

InvariantElement InvariantElement::operator*(const M2Element& c) const
{
    InvariantElement r(k_);
    for (const auto& [b, x] : coeffs_) r.add(b, x * c);
    return r;
}

InvariantElement InvariantElement::pow(int e) const
{
    InvariantElement r = unit(k_);
    for (int i = 0; i < e; ++i) r = mul(r, *this);
    return r;
}

InvariantElement InvariantElement::mod_rho_tau() const
{
    InvariantElement r(k_);
    for (const auto& [b, x] : coeffs_)
        if (x.constant_term()) r.add(b, M2Element::one());
    return r;
}

bool InvariantElement::homogeneous(Bidegree* out) const
{
    bool first = true;
    Bidegree d;
    for (const auto& [b, x] : coeffs_)
        for (const auto& t : x.terms()) {
            Bidegree e = bidegree(b) + t.bidegree();
            if (first) {
                d = e;
                first = false;
            } else if (e != d) {
                return false;
            }
        }
    if (out) *out = d;
    return true;
}

NotInvariant::NotInvariant(BasisClass o, std::vector<M2Element> w)
    : std::runtime_error("element is not invariant on orbit " + to_string(o)), orbit(std::move(o)), witnesses(std::move(w))
{
}

InvariantElement orbit_sum(const TkMonomial& m)
{
    return InvariantElement::basis(Partition(m.deg));
}

namespace {

std::uint64_t arrangement_count(const std::vector<int>& sorted)
{
    std::uint64_t r = 1;
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        for (std::size_t t = 1; t <= j - i; ++t) {
            ++n;
            r = r * n / t;
        }
        i = j;
    }
    return r;
}

}  // namespace

TkElement expand(const InvariantElement& x)
{
    TkElement out(x.k());
    for (const auto& [b, c] : x.coeffs()) {
        auto v = b.parts;
        do {
            out.add(TkMonomial{v}, c);
        } while (std::next_permutation(v.begin(), v.end()));
    }
    return out;
}

InvariantElement to_basis(const TkElement& e, ToBasisMode mode)
{
    std::map<Partition, std::vector<const M2Element*>> groups;
    std::map<Partition, M2Element> canonical;
    for (const auto& [m, c] : e.terms()) {
        Partition p(m.deg);
        groups[p].push_back(&c);
        if (m.deg == p.parts) canonical[p] = c;
    }
    InvariantElement out(e.k());
    for (const auto& [p, cs] : groups) {
        if (mode == ToBasisMode::Strict) {
            bool ok = cs.size() == arrangement_count(p.parts);
            for (const auto* c : cs) ok = ok && *c == *cs.front();
            if (!ok) {
                std::vector<M2Element> w;
                for (const auto* c : cs) w.push_back(*c);
                throw NotInvariant(p, std::move(w));
            }
        }
        auto it = canonical.find(p);
        if (it != canonical.end()) out.add(p, it->second);
    }
    return out;
}

InvariantElement mul(const InvariantElement& x, const InvariantElement& y)
{
    if (x.k() != y.k()) throw std::invalid_argument("k mismatch");
    InvariantElement out(x.k());
    for (const auto& [bx, cx] : x.coeffs())
        for (const auto& [by, cy] : y.coeffs()) {
            M2Element c = cx * cy;
            if (c.is_zero()) continue;
            Bidegree src = bidegree(bx) + bidegree(by);
            for (const auto& nu : detail::orbit_product(bx.parts, by.parts, true)) {
                Partition p;
                p.parts = nu;
                // leftover bidegree (B, A+B) is carried by tau^A rho^B
                Bidegree rest = src - bidegree(p);
                out.add(p, c * M2Element::monomial(rest.q - rest.p, rest.p));
            }
        }
    return out;
}

InvariantElement mul_by_expansion(const InvariantElement& x, const InvariantElement& y)
{
    return to_basis(tk_mul(expand(x), expand(y)), ToBasisMode::Strict);
}

namespace {

InvariantElement named(int k, int ones, int twos, int other_count, int other_part)
{
    std::vector<int> v(k, 0);
    int pos = 0;
    for (int i = 0; i < ones; ++i) v[pos++] = 1;
    for (int i = 0; i < twos; ++i) v[pos++] = 2;
    for (int i = 0; i < other_count; ++i) v[pos++] = other_part;
    return InvariantElement::basis(Partition(v));
}

void require(bool ok, const char* what)
{
    if (!ok) throw std::out_of_range(what);
}

}  // namespace

InvariantElement class_w(int i, int k)
{
    require(i >= 1 && i <= k, "w_i needs 1 <= i <= k");
    return named(k, i, 0, 0, 0);
}

InvariantElement class_c(int i, int k)
{
    require(i >= 1 && i <= k, "c_i needs 1 <= i <= k");
    return named(k, 0, i, 0, 0);
}

InvariantElement class_wc(int i, int j, int k)
{
    require(i >= 0 && j >= 0 && i + j <= k, "wc_{i,j} needs i + j <= k");
    return named(k, i, j, 0, 0);
}

InvariantElement class_w_e(int i, int e, int k)
{
    require(i >= 1 && i <= k && e >= 0, "w_i^(e) needs 1 <= i <= k and e >= 0");
    return named(k, 0, 0, i, 2 * e + 1);
}

std::string to_string(const InvariantElement& x)
{
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [b, c] : x.coeffs()) {
        if (!s.empty()) s += " + ";
        if (c == M2Element::one()) {
            s += to_string(b);
            continue;
        }
        std::string cs = to_string(c);
        s += (c.terms().size() > 1 ? "(" + cs + ")" : cs) + "*" + to_string(b);
    }
    return s;
}

RankChart rank_chart_inv(int k, int p_max)
{
    RankChart c(k, p_max);
    for (int p = 0; p <= p_max; ++p)
        for (int j = p % 2; j <= k; j += 2) c.add(p, (p + j) / 2, count_prt(p, k, j));
    return c;
}

RankChart rank_chart_inv_enumerated(int k, int p_max)
{
    RankChart c(k, p_max);
    for (int p = 0; p <= p_max; ++p)
        for (const auto& part : enumerate_partitions(p, k)) c.add(p, weight(part));
    return c;
}

F2Poly newton_power_sum(int n, int k)
{
    if (n < 1) throw std::invalid_argument("newton polynomial needs n >= 1");
    // p_m = c_1 p_{m-1} + c_2 p_{m-2} + ... + m c_m, signs vanish mod 2
    std::vector<F2Poly> p(n + 1, F2Poly(k));
    for (int m = 1; m <= n; ++m) {
        F2Poly r(k);
        for (int i = 1; i <= std::min(m - 1, k); ++i) r += F2Poly::var(k, i - 1) * p[m - i];
        if (m <= k && m % 2) r += F2Poly::var(k, m - 1);
        p[m] = r;
    }
    return p[n];
}

InvariantElement evaluate_c_polynomial(const F2Poly& f, int k)
{
    std::map<std::pair<int, int>, InvariantElement> powers;
    auto power = [&](auto&& self, int i, int e) -> InvariantElement {
        if (e == 0) return InvariantElement::unit(k);
        auto it = powers.find({i, e});
        if (it != powers.end()) return it->second;
        InvariantElement v = mul(self(self, i, e - 1), class_c(i, k));
        powers.emplace(std::make_pair(i, e), v);
        return v;
    };
    InvariantElement out(k);
    for (const auto& ex : f.terms()) {
        InvariantElement t = InvariantElement::unit(k);
        for (int i = 0; i < k; ++i)
            if (ex[i]) t = mul(t, power(power, i + 1, ex[i]));
        out += t;
    }
    return out;
}

InvariantElement w1e_reduce(int e, int k)
{
    if (e < k) throw std::invalid_argument("reduction needs e >= k");
    InvariantElement r(k);
    for (int j = 1; j <= k; ++j) r += mul(class_w_e(1, e - j, k), class_c(j, k));
    return r;
}

InvariantElement square_w_e(int i, int e, int k)
{
    auto x = class_w_e(i, e, k);
    return mul(x, x);
}

F2Poly forgetful(const InvariantElement& x)
{
    int k = x.k();
    F2Poly sym(k);
    for (const auto& [b, c] : x.coeffs()) {
        if (!m2_forget(c)) continue;
        auto v = b.parts;
        do {
            sym.toggle(v);
        } while (std::next_permutation(v.begin(), v.end()));
    }
    std::vector<F2Poly> e;
    for (int j = 1; j <= k; ++j) {
        F2Poly ej(k);
        std::vector<int> v(k, 0);
        std::fill(v.end() - j, v.end(), 1);
        do {
            ej.toggle(v);
        } while (std::next_permutation(v.begin(), v.end()));
        e.push_back(std::move(ej));
    }
    F2Poly out(k);
    while (!sym.is_zero()) {
        const auto alpha = *sym.terms().rbegin();
        std::vector<int> ex(k);
        for (int j = 0; j < k; ++j) {
            int next = j + 1 < k ? alpha[j + 1] : 0;
            if (alpha[j] < next) throw std::logic_error("forgetful image is not symmetric");
            ex[j] = alpha[j] - next;
        }
        out.toggle(ex);
        F2Poly prod = F2Poly::one(k);
        for (int j = 0; j < k; ++j)
            if (ex[j]) prod = prod * e[j].pow(ex[j]);
        sym += prod;
    }
    return out;
}

}  // namespace equigrass
