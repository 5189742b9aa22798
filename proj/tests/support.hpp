#pragma once

#include <random>
#include <stdexcept>

#include "equigrass/derham.hpp"
#include "equigrass/invariants.hpp"
#include "oracles.hpp"

// Bridges from library values to the oracle representations.

inline oracle::TPoly to_tpoly(const equigrass::InvariantElement& x)
{
    oracle::TPoly out{x.k(), {}};
    for (const auto& [c, coef] : x.coeffs())
        for (const auto& m : coef.terms()) {
            if (m.neg) throw std::logic_error("oracle handles the positive cone only");
            out += oracle::orbit_sum(c.parts, m.a, m.b);
        }
    return out;
}

inline oracle::KPoly to_kpoly(const equigrass::LnElement& x)
{
    oracle::KPoly out{x.n(), {}};
    for (const auto& p : x.terms())
        for (const auto& e : oracle::korbit(p.parts).terms) out.toggle(e);
    return out;
}

// random homogeneous element: a few basis classes of one bidegree with random
// positive-cone coefficients padding them to a common total bidegree
inline equigrass::InvariantElement random_homogeneous(std::mt19937& rng, int k, int p_max)
{
    using namespace equigrass;
    std::uniform_int_distribution<int> pick_p(0, p_max);
    for (;;) {
        int p = pick_p(rng);
        auto parts = enumerate_partitions(p, k);
        if (parts.empty()) continue;
        InvariantElement x(k);
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        Bidegree target = bidegree(parts[pick(rng)]);
        int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            const auto& c = parts[pick(rng)];
            Bidegree d = bidegree(c);
            // tau^a rho^b has bidegree (b, a+b)
            int b = target.p - d.p, a = target.q - d.q - b;
            if (b < 0 || a < 0) continue;
            x.add(c, M2Element::monomial(a, b));
        }
        if (!x.is_zero()) return x;
    }
}
