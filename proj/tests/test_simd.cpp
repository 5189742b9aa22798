#include <doctest.h>

#include <stdexcept>

#include <random>
#include <vector>

#include "equigrass/bitops.hpp"
#include "equigrass/f2_linalg.hpp"

using namespace equigrass;
namespace s = equigrass::simd;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n, double density)
{
    std::bernoulli_distribution zero(1.0 - density);
    std::vector<std::uint64_t> w(n);
    for (auto& x : w) x = zero(rng) ? 0 : rng();
    return w;
}

// every compiled-in kernel set that the CPU can run
std::vector<s::Isa> runnable()
{
    std::vector<s::Isa> v{s::Isa::Scalar};
    for (auto isa : {s::Isa::Avx2, s::Isa::Neon})
        if (s::isa_supported(isa)) v.push_back(isa);
    return v;
}

struct IsaGuard {
    s::Isa saved = s::active_isa();
    ~IsaGuard() { s::set_active_isa(saved); }
};

}  // namespace

TEST_CASE("vector kernels agree with the scalar reference")
{
    std::mt19937_64 rng(7);
    IsaGuard guard;
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 17u, 64u, 129u})
        for (double density : {0.0, 0.05, 0.5, 1.0})
            for (int rep = 0; rep < 20; ++rep) {
                auto a = random_words(rng, n, density);
                auto b = random_words(rng, n, density);
                auto ref = a;
                s::scalar::xor_into(ref.data(), b.data(), n);
                bool any_ref = s::scalar::any(a.data(), n);
                auto pop_ref = s::scalar::popcount(a.data(), n);
                for (auto isa : runnable()) {
                    s::set_active_isa(isa);
                    auto got = a;
                    s::xor_into(got.data(), b.data(), n);
                    CHECK(got == ref);
                    CHECK(s::any(a.data(), n) == any_ref);
                    CHECK(s::popcount(a.data(), n) == pop_ref);
                    for (std::size_t from = 0; from <= n; ++from)
                        CHECK(s::first_set(a.data(), n, from) == s::scalar::first_set(a.data(), n, from));
                }
            }
}

TEST_CASE("first_set reports bit indices")
{
    std::vector<std::uint64_t> w(6, 0);
    CHECK(s::scalar::first_set(w.data(), w.size(), 0) == s::npos);
    w[4] = std::uint64_t{1} << 9;
    CHECK(s::scalar::first_set(w.data(), w.size(), 0) == 4 * 64 + 9);
    CHECK(s::scalar::first_set(w.data(), w.size(), 5) == s::npos);
}

TEST_CASE("unsupported kernels are refused")
{
    for (auto isa : {s::Isa::Avx2, s::Isa::Neon})
        if (!s::isa_supported(isa)) CHECK_THROWS_AS(s::set_active_isa(isa), std::invalid_argument);
    CHECK(std::string(s::isa_name(s::Isa::Scalar)) == "scalar");
}

TEST_CASE("bit vectors")
{
    BitVec v(130);
    v.set(3);
    v.set(129);
    CHECK(v.popcount() == 2);
    CHECK(v.first_set() == 3);
    CHECK(v.first_set(4) == 129);
    CHECK(v.ones() == std::vector<std::size_t>{3, 129});
    BitVec u = v;
    u ^= v;
    CHECK_FALSE(u.any());
}

TEST_CASE("echelon rank matches dense elimination under every kernel set")
{
    std::mt19937_64 rng(11);
    IsaGuard guard;
    for (int rep = 0; rep < 30; ++rep) {
        std::size_t bits = 1 + rng() % 300, rows = 1 + rng() % 40;
        std::vector<BitVec> m;
        for (std::size_t r = 0; r < rows; ++r) {
            BitVec v(bits);
            for (std::size_t i = 0; i < bits; ++i)
                if (rng() % 7 == 0) v.set(i);
            // duplicate rows now and then to force dependence
            if (!m.empty() && rng() % 4 == 0) v = m[rng() % m.size()];
            m.push_back(v);
        }
        // plain Gaussian elimination on bools
        std::vector<std::vector<bool>> d(rows, std::vector<bool>(bits));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t i = 0; i < bits; ++i) d[r][i] = m[r].test(i);
        std::size_t rank = 0;
        for (std::size_t c = 0; c < bits && rank < rows; ++c) {
            std::size_t piv = rank;
            while (piv < rows && !d[piv][c]) ++piv;
            if (piv == rows) continue;
            std::swap(d[piv], d[rank]);
            for (std::size_t r = 0; r < rows; ++r)
                if (r != rank && d[r][c])
                    for (std::size_t i = 0; i < bits; ++i) d[r][i] = d[r][i] != d[rank][i];
            ++rank;
        }
        for (auto isa : runnable()) {
            s::set_active_isa(isa);
            CHECK(f2_rank(m) == rank);
        }
    }
}

TEST_CASE("tagged insertion expresses members of the span")
{
    EchelonBasis e(8, 3);
    BitVec a(8), b(8), c(8);
    a.set(0);
    a.set(3);
    b.set(3);
    b.set(5);
    c = a;
    c ^= b;
    CHECK(e.insert(a, 0));
    CHECK(e.insert(b, 1));
    CHECK_FALSE(e.insert(c, 2));
    CHECK(e.rank() == 2);
    auto t = e.express(c);
    REQUIRE(t.has_value());
    CHECK(t->ones() == std::vector<std::size_t>{0, 1});
    BitVec z(8);
    z.set(7);
    CHECK_FALSE(e.express(z).has_value());
}
