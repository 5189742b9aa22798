#include <doctest.h>

#include <random>

#include "equigrass/expr.hpp"
#include "equigrass/invariants.hpp"
#include "equigrass/verify.hpp"
#include "support.hpp"

using namespace equigrass;

namespace {

TkElement raw(int k, std::vector<int> a, std::vector<int> b, M2Element c = M2Element::one())
{
    return normalize(k, {{RawMonomial{std::move(a), std::move(b)}, c}});
}

TkElement tk(int k, std::vector<int> eps, std::vector<int> d, M2Element c = M2Element::one())
{
    TkElement e(k);
    e.add(TkMonomial::from(eps, d), c);
    return e;
}

}  // namespace

TEST_CASE("normal form rewriting")
{
    auto t = M2Element::tau(), r = M2Element::rho();
    TkElement sq = tk(1, {1}, {0}, r);
    sq += tk(1, {0}, {1}, t);
    CHECK(raw(1, {2}, {0}) == sq);

    TkElement cube = tk(1, {1}, {0}, M2Element::rho(2));
    cube += tk(1, {0}, {1}, M2Element::monomial(1, 1));
    cube += tk(1, {1}, {1}, t);
    CHECK(raw(1, {3}, {0}) == cube);
    // both association orders of a*a*a
    auto a = tk(1, {1}, {0});
    CHECK(tk_mul(tk_mul(a, a), a) == cube);
    CHECK(tk_mul(a, tk_mul(a, a)) == cube);

    CHECK(raw(1, {0}, {5}) == tk(1, {0}, {5}));
}

TEST_CASE("orbit sums")
{
    auto x = orbit_sum(TkMonomial::from({1, 0, 0}, {1, 0, 0}));
    auto e = expand(x);
    TkElement want(3);
    for (int i = 0; i < 3; ++i) {
        std::vector<int> eps(3, 0), d(3, 0);
        eps[i] = d[i] = 1;
        want.add(TkMonomial::from(eps, d), M2Element::one());
    }
    CHECK(e == want);
    CHECK(orbit_sum(TkMonomial::from({1, 1, 0, 0}, {0, 0, 0, 0})) == class_w(2, 4));
    CHECK(orbit_sum(TkMonomial::from({0, 0}, {0, 0})) == InvariantElement::unit(2));
}

TEST_CASE("collecting orbits")
{
    // a_1^2 b_2 + a_2^2 b_1 = rho [a_1 b_2], the tau b_1 b_2 terms cancel
    RawPolynomial p = {{RawMonomial{{2, 0}, {0, 1}}, M2Element::one()}, {RawMonomial{{0, 2}, {1, 0}}, M2Element::one()}};
    auto x = to_basis(normalize(2, p));
    InvariantElement want(2);
    want.add(Partition({1, 2}), M2Element::rho());
    CHECK(x == want);

    CHECK_THROWS_AS(to_basis(tk(2, {1, 0}, {0, 1})), NotInvariant);
    try {
        to_basis(tk(2, {1, 0}, {0, 1}));
    } catch (const NotInvariant& e) {
        CHECK(e.orbit == Partition({1, 2}));
    }
    // canonical mode reads the sorted representative only
    CHECK(to_basis(tk(2, {1, 0}, {0, 1}), ToBasisMode::Canonical) == class_wc(1, 1, 2));
    CHECK(to_basis(tk(2, {0, 1}, {1, 0}), ToBasisMode::Canonical).is_zero());
}

TEST_CASE("products of elementary classes")
{
    auto t = M2Element::tau(), r = M2Element::rho();
    for (int k = 1; k <= 5; ++k) CHECK(class_w(1, k) * class_w(1, k) == class_w(1, k) * r + class_c(1, k) * t);
    for (int k = 3; k <= 5; ++k) CHECK(class_w(1, k) * class_w(2, k) == class_wc(1, 1, k) * t + class_w(3, k));
    for (int k = 4; k <= 5; ++k) CHECK(class_w(1, k) * class_w(3, k) == class_w(3, k) * r + class_wc(2, 1, k) * t);
    CHECK(class_w(2, 3) * class_w(2, 3) ==
          class_w(2, 3) * M2Element::rho(2) + class_wc(1, 1, 3) * M2Element::monomial(1, 1) + class_c(2, 3) * M2Element::tau(2));
}

TEST_CASE("products agree with explicit polynomial expansion")
{
    std::mt19937 rng(3);
    for (int rep = 0; rep < 120; ++rep) {
        int k = 1 + rng() % 4;
        auto x = random_homogeneous(rng, k, 7);
        auto y = random_homogeneous(rng, k, 7);
        auto z = x * y;
        CHECK(to_tpoly(z) == oracle::mul(to_tpoly(x), to_tpoly(y)));
        CHECK(mul_by_expansion(x, y) == z);
    }
}

TEST_CASE("named classes")
{
    CHECK(class_wc(2, 0, 3) == class_w(2, 3));
    CHECK(class_wc(0, 2, 3) == class_c(2, 3));
    CHECK(class_w_e(2, 0, 3) == class_w(2, 3));
    Bidegree d;
    REQUIRE(class_w_e(2, 3, 4).homogeneous(&d));
    CHECK(d == Bidegree{14, 8});
    REQUIRE(class_wc(1, 2, 4).homogeneous(&d));
    CHECK(d == Bidegree{5, 3});
    REQUIRE(class_c(3, 4).homogeneous(&d));
    CHECK(d == Bidegree{6, 3});
    CHECK_THROWS_AS(class_w(0, 3), std::out_of_range);
    CHECK_THROWS_AS(class_w(4, 3), std::out_of_range);
    CHECK_THROWS_AS(class_wc(2, 2, 3), std::out_of_range);
    CHECK_THROWS_AS(class_w_e(1, -1, 3), std::out_of_range);
}

TEST_CASE("rank chart from counting equals rank chart from enumeration")
{
    for (int k = 1; k <= 5; ++k) CHECK(rank_chart_inv(k, 16) == rank_chart_inv_enumerated(k, 16));
    auto c1 = rank_chart_inv(1, 7);
    std::vector<std::pair<int, int>> cells;
    for (const auto& [pq, n] : c1.entries()) {
        CHECK(n == 1);
        cells.push_back(pq);
    }
    CHECK(cells == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 3}, {6, 3}, {7, 4}});
    auto c5 = rank_chart_inv(5, 14);
    CHECK(c5.at(12, 7) == 25);
    CHECK(c5.at(11, 6) == 18);
}

TEST_CASE("Newton polynomials")
{
    std::vector<int> w3 = {1, 2, 3};
    CHECK(newton_power_sum(1, 3).to_string("c", w3) == "c_1");
    CHECK(newton_power_sum(2, 3).to_string("c", w3) == "c_1^2");
    CHECK(newton_power_sum(5, 3).to_string("c", w3) == "c_1^5 + c_1^3 c_2 + c_1^2 c_3 + c_1 c_2^2 + c_2 c_3");

    // substitute c_i = e_i(b_1..b_k) and compare with b_1^n + ... + b_k^n
    for (int k = 1; k <= 4; ++k)
        for (int n = 1; n <= 8; ++n) {
            auto f = newton_power_sum(n, k);
            oracle::BPoly got;
            for (const auto& e : f.terms()) {
                oracle::BPoly term{std::vector<int>(k, 0)};
                for (int i = 0; i < k; ++i)
                    for (int p = 0; p < e[i]; ++p) term = oracle::bmul(term, oracle::elementary(i + 1, k));
                for (const auto& m : term) oracle::btoggle(got, m);
            }
            oracle::BPoly want;
            for (int i = 0; i < k; ++i) {
                std::vector<int> m(k, 0);
                m[i] = n;
                oracle::btoggle(want, m);
            }
            CHECK(got == want);
        }
}

TEST_CASE("reducing w_1^(e)")
{
    CHECK(w1e_reduce(2, 2) == evaluate("w_1^(1)*c_1 + w_1*c_2", 2));
    CHECK(class_w_e(1, 2, 2) == evaluate("w_1^(1)*c_1 + w_1*c_2", 2));
    CHECK(class_w_e(1, 4, 3) == evaluate("w_1^(2)*(c_1^2 + c_2) + w_1^(1)*(c_1*c_2 + c_3) + w_1*c_1*c_3", 3));
    for (int k = 1; k <= 4; ++k) CHECK(w1e_reduce(k, k) == class_w_e(1, k, k));
    CHECK_THROWS(w1e_reduce(1, 2));
}

TEST_CASE("squares")
{
    CHECK(square_w_e(2, 0, 2) == evaluate("rho^2*w_2 + rho*tau*wc_{1,1} + tau^2*c_2", 2));
    CHECK(square_w_e(1, 1, 2) == evaluate("rho*(w_1^(1)*c_1 + w_1*c_2) + tau*(c_1^3 + c_1*c_2)", 2));
    CHECK(square_w_e(1, 0, 3) == evaluate("rho*w_1 + tau*c_1", 3));
}

TEST_CASE("forgetful images")
{
    auto w = [](int i, int e) { return F2Poly::var(2, i, e); };
    CHECK(forgetful(class_c(1, 2)) == w(0, 2));
    CHECK(forgetful(class_c(2, 2)) == w(1, 2));
    CHECK(forgetful(class_w_e(1, 1, 2)) == w(0, 1) * w(1, 1) + w(0, 3));
    CHECK(forgetful(class_w(2, 2)) == w(1, 1));
    CHECK(forgetful(class_w(1, 2) * M2Element::rho()).is_zero());

    std::mt19937 rng(5);
    for (int rep = 0; rep < 60; ++rep) {
        int k = 1 + rng() % 3;
        auto x = random_homogeneous(rng, k, 6);
        auto y = random_homogeneous(rng, k, 6);
        CHECK(forgetful(x * y) == forgetful(x) * forgetful(y));
    }
}

TEST_CASE("indecomposable ranks")
{
    auto c1 = indecomposable_ranks(1, 14);
    CHECK(c1.total() == 2);
    CHECK(c1.at(1, 1) == 1);
    CHECK(c1.at(2, 1) == 1);
    CHECK(indecomposable_ranks(4, 14).total() == 11);
    CHECK(indecomposable_ranks(5, 14).total() == 13);
}

TEST_CASE("rendering of elements")
{
    CHECK(to_string(class_w(1, 2) * class_w(1, 2)) == "r*[0,1] + t*[0,2]");
    CHECK(to_string(InvariantElement(3)) == "0");
    auto x = class_w(1, 2) * (M2Element::tau() + M2Element::rho());
    CHECK(to_string(x) == "(r + t)*[0,1]");
}
