#include "equigrass/f2poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace equigrass {

F2Poly F2Poly::one(int nvars)
{
    F2Poly p(nvars);
    p.terms_.insert(Exponents(nvars, 0));
    return p;
}

F2Poly F2Poly::var(int nvars, int i, int e)
{
    Exponents x(nvars, 0);
    x.at(i) = e;
    return monomial(std::move(x));
}

F2Poly F2Poly::monomial(Exponents e)
{
    F2Poly p(static_cast<int>(e.size()));
    p.terms_.insert(std::move(e));
    return p;
}

void F2Poly::toggle(const Exponents& e)
{
    auto [it, fresh] = terms_.insert(e);
    if (!fresh) terms_.erase(it);
}

F2Poly& F2Poly::operator+=(const F2Poly& o)
{
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& t : o.terms_) toggle(t);
    return *this;
}

F2Poly F2Poly::operator*(const F2Poly& o) const
{
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    F2Poly r(nvars_);
    Exponents e(nvars_);
    for (const auto& x : terms_)
        for (const auto& y : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = x[i] + y[i];
            r.toggle(e);
        }
    return r;
}

F2Poly F2Poly::pow(int e) const
{
    F2Poly r = one(nvars_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::string F2Poly::to_string(const std::string& name, const std::vector<int>& weights) const
{
    if (terms_.empty()) return "0";
    auto degree = [&](const Exponents& e) {
        int d = 0;
        for (int i = 0; i < nvars_; ++i) d += e[i] * (weights.empty() ? 1 : weights[i]);
        return d;
    };
    std::vector<Exponents> order(terms_.begin(), terms_.end());
    // higher degree first, then lexicographically larger exponents first
    std::sort(order.begin(), order.end(), [&](const Exponents& a, const Exponents& b) {
        if (degree(a) != degree(b)) return degree(a) > degree(b);
        return a > b;
    });
    std::string s;
    for (const auto& e : order) {
        if (!s.empty()) s += " + ";
        std::string m;
        for (int i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (!m.empty()) m += " ";
            m += name + "_" + std::to_string(i + 1);
            if (e[i] > 1) m += "^" + std::to_string(e[i]);
        }
        s += m.empty() ? "1" : m;
    }
    return s;
}

}  // namespace equigrass
