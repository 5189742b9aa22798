#include "equigrass/m2.hpp"

#include <algorithm>

namespace equigrass {

Bidegree M2Monomial::bidegree() const
{
    if (neg) return {-b, -2 - a - b};
    return {b, a + b};
}

bool m2_supported(Bidegree d)
{
    return (d.q >= 0 && d.p >= 0 && d.p <= d.q) || (d.p <= 0 && d.q <= d.p - 2);
}

bool m2_monomial_mul(const M2Monomial& x, const M2Monomial& y, M2Monomial& out)
{
    if (x.neg && y.neg) return false;
    if (!x.neg && !y.neg) {
        out = M2Monomial::pos(x.a + y.a, x.b + y.b);
        return true;
    }
    const M2Monomial& p = x.neg ? y : x;
    const M2Monomial& n = x.neg ? x : y;
    // theta/(t^k r^l) times t^a r^b survives only while the target stays in the negative cone
    if (p.a > n.a || p.b > n.b) return false;
    out = M2Monomial::negative(n.a - p.a, n.b - p.b);
    return true;
}

bool M2Element::is_homogeneous() const
{
    for (const auto& t : terms_)
        if (t.bidegree() != terms_.front().bidegree()) return false;
    return true;
}

bool M2Element::constant_term() const
{
    return std::binary_search(terms_.begin(), terms_.end(), M2Monomial::pos(0, 0));
}

void M2Element::toggle(const M2Monomial& m)
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m);
    if (it != terms_.end() && *it == m)
        terms_.erase(it);
    else
        terms_.insert(it, m);
}

M2Element& M2Element::operator+=(const M2Element& o)
{
    std::vector<M2Monomial> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                  std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
}

M2Element M2Element::operator*(const M2Element& o) const
{
    if (terms_.size() == 1 && o.terms_.size() == 1) {
        M2Element r;
        M2Monomial m;
        if (m2_monomial_mul(terms_[0], o.terms_[0], m)) r.terms_.push_back(m);
        return r;
    }
    std::vector<M2Monomial> acc;
    for (const auto& x : terms_)
        for (const auto& y : o.terms_) {
            M2Monomial m;
            if (m2_monomial_mul(x, y, m)) acc.push_back(m);
        }
    std::sort(acc.begin(), acc.end());
    M2Element r;
    for (std::size_t i = 0; i < acc.size();) {
        std::size_t j = i;
        while (j < acc.size() && acc[j] == acc[i]) ++j;
        if ((j - i) % 2) r.terms_.push_back(acc[i]);
        i = j;
    }
    return r;
}

bool m2_forget(const M2Element& x)
{
    bool r = false;
    for (const auto& t : x.terms())
        if (!t.neg && t.b == 0) r = !r;
    return r;
}

namespace {

std::string power(const char* var, int e)
{
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

std::string tau_rho(int a, int b)
{
    std::string s;
    if (a > 0) s += power("t", a);
    if (b > 0) {
        if (!s.empty()) s += " ";
        s += power("r", b);
    }
    return s;
}

}  // namespace

std::string to_string(const M2Monomial& m)
{
    std::string tr = tau_rho(m.a, m.b);
    if (!m.neg) return tr.empty() ? "1" : tr;
    if (tr.empty()) return "Q";
    if (m.a > 0 && m.b > 0) return "Q/(" + tr + ")";
    return "Q/" + tr;
}

std::string to_string(const M2Element& x)
{
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& t : x.terms()) {
        if (!s.empty()) s += " + ";
        s += to_string(t);
    }
    return s;
}

}  // namespace equigrass
