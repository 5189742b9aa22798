#include "equigrass/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "equigrass/derham.hpp"
#include "equigrass/expr.hpp"
#include "equigrass/f2_linalg.hpp"
#include "equigrass/figures.hpp"
#include "equigrass/invariants.hpp"
#include "equigrass/parallel.hpp"
#include "equigrass/partitions.hpp"
#include "equigrass/schubert.hpp"

namespace equigrass {

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

std::string bideg(Bidegree d) { return "(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")"; }

int binom2(int i) { return i * (i - 1) / 2; }

bool power_of_two(int x) { return x > 0 && !(x & (x - 1)); }

int ones(int n)
{
    int c = 0;
    for (; n; n >>= 1) c += n & 1;
    return c;
}

std::string join(const std::vector<std::string>& v, const std::string& sep = " ")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string cells(const RankChart& c)
{
    std::vector<std::string> v;
    for (const auto& [pq, n] : c.entries()) v.push_back(bideg({pq.first, pq.second}) + "=" + str(n));
    return join(v);
}

void relation(Report& r, const std::string& lhs, const std::string& rhs, int k)
{
    auto L = evaluate(lhs, k);
    auto R = evaluate(rhs, k);
    auto& c = r.add(lhs + " = " + rhs, L == R, to_string(R), to_string(L));
    if (!(L == R)) c.note = "difference " + to_string(L + R);
}

// relation stated modulo (rho, tau); the full remainder is computed, not asserted
void relation_mod(Report& r, const std::string& lhs, const std::string& rhs, int k)
{
    auto D = evaluate(lhs, k) + evaluate(rhs, k);
    auto red = D.mod_rho_tau();
    r.add(lhs + " = " + rhs + " modulo (rho, tau)", red.is_zero(), "0", to_string(red),
          "computed remainder: " + to_string(D));
}

// Bidegree-indexed images in Inv_k / (rho, tau), i.e. in L_k.
class ReducedSpace {
public:
    ReducedSpace(int k, Bidegree d) : basis_(ln_basis(k, d)), span_(basis_.size())
    {
        for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
    }

    std::size_t dim() const { return basis_.size(); }
    std::size_t rank() const { return span_.rank(); }

    bool insert(const InvariantElement& x)
    {
        BitVec v(basis_.size());
        auto red = x.mod_rho_tau();
        for (const auto& [c, coef] : red.coeffs()) {
            auto it = index_.find(c);
            if (it != index_.end()) v.flip(it->second);
        }
        return span_.insert(v);
    }

private:
    std::vector<Partition> basis_;
    std::map<Partition, std::size_t> index_;
    EchelonBasis span_;
};

struct Generated {
    InvariantElement x;
    Bidegree d;
};

// c^alpha * g for every generator g and c-monomial with p <= deg_max
std::vector<Generated> c_multiples(int k, const std::vector<InvariantElement>& gens, int deg_max)
{
    std::vector<InvariantElement> cs;
    for (int i = 1; i <= k; ++i) cs.push_back(class_c(i, k));
    std::vector<Generated> out;
    std::function<void(int, const InvariantElement&, Bidegree)> rec = [&](int start, const InvariantElement& cur, Bidegree d) {
        out.push_back({cur, d});
        for (int i = start; i < k; ++i) {
            Bidegree nd = d + Bidegree{2 * (i + 1), i + 1};
            if (nd.p <= deg_max) rec(i, cur * cs[i], nd);
        }
    };
    for (const auto& g : gens) {
        Bidegree d;
        if (!g.homogeneous(&d)) throw std::invalid_argument("generator is not homogeneous");
        if (d.p <= deg_max) rec(0, g, d);
    }
    return out;
}

// Free M2[c]-module on gens equals Inv_k (restricted to the j-line when given): the
// rank charts agree and the images modulo (rho, tau) are independent in each bidegree.
void free_module_check(Report& r, const std::string& what, int k, const std::vector<std::string>& gens, int deg_max,
                       std::optional<int> line = std::nullopt)
{
    std::vector<InvariantElement> g;
    for (const auto& s : gens) g.push_back(evaluate(s, k));
    auto elems = c_multiples(k, g, deg_max);

    auto on_line = [&](Bidegree d) { return !line || 2 * d.q - d.p == *line; };
    RankChart predicted(k, deg_max), actual(k, deg_max);
    std::map<Bidegree, std::vector<const InvariantElement*>> by_degree;
    for (const auto& e : elems) {
        if (!on_line(e.d)) continue;
        predicted.add(e.d.p, e.d.q);
        by_degree[e.d].push_back(&e.x);
    }
    auto inv = rank_chart_inv(k, deg_max);
    for (const auto& [pq, c] : inv.entries())
        if (on_line({pq.first, pq.second})) actual.add(pq.first, pq.second, c);

    r.add(what + ": rank chart of the free module equals the rank chart through degree " + std::to_string(deg_max),
          predicted == actual, str(actual.total()) + " basis classes", str(predicted.total()) + " module generators");

    std::vector<Bidegree> degs;
    for (const auto& [d, xs] : by_degree) degs.push_back(d);
    auto ok = parallel_map(degs.size(), [&](std::size_t i) {
        ReducedSpace s(k, degs[i]);
        bool indep = true;
        for (auto* x : by_degree.at(degs[i])) indep = s.insert(*x) && indep;
        return indep && s.rank() == s.dim();
    });
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < degs.size(); ++i)
        if (!ok[i]) bad.push_back(bideg(degs[i]));
    r.add(what + ": images modulo (rho, tau) form a basis in every bidegree", bad.empty(), "", join(bad),
          std::to_string(degs.size()) + " bidegrees");
}

void forgetful_image(Report& r, const std::string& src, int k, const F2Poly& expected)
{
    auto img = forgetful(evaluate(src, k));
    std::vector<int> w(k);
    for (int i = 0; i < k; ++i) w[i] = i + 1;
    r.add("forget " + src, img == expected, expected.to_string("w", w), img.to_string("w", w));
}

void compare_figure(Report& r, const std::string& name, const FigureChart& fig, const RankChart& computed)
{
    std::vector<std::string> bad;
    std::size_t cells = 0;
    for (int p = 0; p <= fig.p_max; ++p)
        for (int q = 0; q <= fig.q_max; ++q) {
            ++cells;
            auto e = fig.chart.at(p, q), c = computed.at(p, q);
            if (e != c) bad.push_back(bideg({p, q}) + " expected " + str(e) + " computed " + str(c));
        }
    r.add(name, bad.empty(), str(fig.chart.total()) + " in " + str(cells) + " cells",
          bad.empty() ? "all cells agree" : join(bad, "; "));
}

}  // namespace

RankChart indecomposable_ranks(int k, int deg_max)
{
    RankChart c(k, deg_max);
    for (const auto& [d, n] : indecomposable_quotient_bigraded(k, deg_max)) c.add(d.p, d.q, n);
    return c;
}

Report verify_figures()
{
    Report r{"reference charts", {}};
    auto inv4 = figure_inv4(), inv5 = figure_inv5(), gr5 = figure_gr5_cells();
    compare_figure(r, "Inv_4 rank chart, p <= 14, q <= 8", inv4, rank_chart_inv(4, inv4.p_max));
    compare_figure(r, "Inv_5 rank chart, p <= 21, q <= 13", inv5, rank_chart_inv(5, inv5.p_max));
    compare_figure(r, "Gr_5 Schubert cells, p <= 21, q <= 18", gr5, e1_rank_chart(5, gr5.p_max));

    std::vector<Bidegree> got;
    for (const auto& c : enumerate_cells_in_ambient(2, 6)) got.push_back(c.bidegree);
    auto want = figure_gr2_u6();
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    auto render = [](const std::vector<Bidegree>& v) {
        std::vector<std::string> s;
        for (auto d : v) s.push_back(bideg(d));
        return join(s);
    };
    r.expect_eq("Gr_2 in a 6-dimensional ambient: cell bidegrees", render(want), render(got));

    std::vector<std::string> starts;
    for (const auto& t : minimal_patterns(5)) starts.push_back(bideg(cell_bidegree(t)));
    std::vector<std::string> expect_starts;
    for (int i = 1; i <= 6; ++i) expect_starts.push_back(bideg({binom2(i), binom2(i)}));
    r.expect_eq("Gr_5 ray starts", join(expect_starts), join(starts));
    return r;
}

Report verify_presentation(int k, int deg_max)
{
    Report r{"presentation of Inv_" + std::to_string(k), {}};
    if (k == 2) {
        relation(r, "w_1*w_1", "rho*w_1 + tau*c_1", 2);
        relation(r, "w_2*w_2", "rho^2*w_2 + rho*tau*(w_1*c_1 + w_1^(1)) + tau^2*c_2", 2);
        relation(r, "w_1^(1)*w_1^(1)", "rho*(w_1^(1)*c_1 + w_1*c_2) + tau*(c_1^3 + c_1*c_2)", 2);
        // the sum of the two rho a_1 a_2 terms vanishes, so no rho w_2 term appears
        relation(r, "w_1*w_2", "tau*(w_1*c_1 + w_1^(1))", 2);
        {
            auto D = evaluate("w_1*w_2 + rho*w_2 + tau*(w_1*c_1 + w_1^(1))", 2);
            r.expect_eq("w_1*w_2 + rho*w_2 + tau*(w_1*c_1 + w_1^(1)) is exactly rho*w_2", to_string(evaluate("rho*w_2", 2)),
                        to_string(D), "the variant with a rho*w_2 term does not hold");
        }
        relation(r, "w_1*w_1^(1)", "rho*w_1^(1) + tau*c_1^2 + w_2*c_1", 2);
        relation(r, "w_2*w_1^(1)", "rho*w_2*c_1 + tau*(w_1*c_1^2 + w_1^(1)*c_1 + w_1*c_2)", 2);
        free_module_check(r, "basis 1, w_1, w_2, w_1^(1) over M2[c_1,c_2]", 2, {"1", "w_1", "w_2", "w_1^(1)"}, deg_max);
        auto w = [](int i, int e) { return F2Poly::var(2, i, e); };
        forgetful_image(r, "c_1", 2, w(0, 2));
        forgetful_image(r, "c_2", 2, w(1, 2));
        forgetful_image(r, "w_1^(1)", 2, w(0, 1) * w(1, 1) + w(0, 3));
        forgetful_image(r, "w_1", 2, w(0, 1));
        forgetful_image(r, "w_2", 2, w(1, 1));
        forgetful_image(r, "rho*w_1", 2, F2Poly(2));
        forgetful_image(r, "tau", 2, F2Poly::one(2));
    } else if (k == 3) {
        relation(r, "w_1*w_1", "rho*w_1 + tau*c_1", 3);
        relation(r, "w_2*w_2", "rho^2*w_2 + rho*tau*(w_1*c_1 + w_1^(1)) + tau^2*c_2", 3);
        relation(r, "w_1^(1)*w_1^(1)", "rho*w_1^(2) + tau*(c_1^3 + c_1*c_2 + c_3)", 3);
        relation(r, "w_1^(2)*w_1^(2)",
                 "rho*(w_1^(2)*(c_1^2 + c_2) + w_1^(1)*(c_1*c_2 + c_3) + w_1*c_1*c_3)"
                 " + tau*(c_1^5 + c_1^3*c_2 + c_1^2*c_3 + c_1*c_2^2 + c_2*c_3)",
                 3);
        relation_mod(r, "w_2*w_1^(1)", "w_1*w_2*c_1", 3);
        relation_mod(r, "w_2*w_1^(2)", "w_1*w_2*c_1^2", 3);
        relation_mod(r, "w_1^(1)*w_1^(2)", "w_2*c_3 + w_2*c_1*c_2 + w_1*w_1^(1)*c_1^2 + w_1*w_1^(2)*c_1", 3);
        free_module_check(r, "basis of 8 products over M2[c_1,c_2,c_3]", 3,
                          {"1", "w_1", "w_1^(1)", "w_1^(2)", "w_2", "w_1*w_1^(1)", "w_1*w_1^(2)", "w_1*w_2"}, deg_max);
    } else {
        throw std::invalid_argument("presentation is available for k = 2 and k = 3");
    }
    return r;
}

Report verify_gr4()
{
    Report r{"relation in Inv_4", {}};
    const std::vector<std::string> terms = {"w_1*w_1^(3)", "w_1^(1)*w_1^(2)", "w_1*w_1^(2)*c_1",
                                            "w_2^(1)*c_1", "w_2*c_3",        "w_1*w_1^(1)*c_2"};
    InvariantElement sum(4);
    for (const auto& t : terms) {
        auto x = evaluate(t, 4);
        Bidegree d;
        bool hom = x.homogeneous(&d);
        r.add(t + " decomposes in the basis", hom && !x.is_zero(), "", to_string(x), hom ? "bidegree " + bideg(d) : "");
        sum += x;
    }
    auto red = sum.mod_rho_tau();
    r.add(join(terms, " + ") + " = 0 modulo (rho, tau)", red.is_zero(), "0", to_string(red),
          "computed remainder: " + to_string(sum));

    const std::vector<std::uint64_t> two_line = {1, 2, 5, 8, 14, 20, 30, 40, 55};
    std::vector<std::string> want, got;
    for (std::size_t r2 = 0; r2 < two_line.size(); ++r2) {
        want.push_back(str(two_line[r2]));
        int p = 2 + 2 * static_cast<int>(r2);
        got.push_back(str(count_prt(p, 4, 2)));
    }
    r.expect_eq("2-line ranks rank^{2+2r,2+r}", join(want, ","), join(got, ","));
    free_module_check(r, "1-line free on w_1^(e), e < 4", 4, {"w_1", "w_1^(1)", "w_1^(2)", "w_1^(3)"}, 17, 1);
    return r;
}

Report verify_chart_sums(int k, int p_max)
{
    Report r{"cell chart against Inv_" + std::to_string(k), {}};
    auto inv = rank_chart_inv(k, p_max);
    auto e1 = e1_rank_chart(k, p_max);

    std::vector<std::string> bad;
    for (int p = 0; p <= p_max; ++p) {
        auto a = e1.column_sum(p), b = inv.column_sum(p), n = enumerate_partitions(p, k).size();
        if (a != b || a != n) bad.push_back("p=" + std::to_string(p) + ": " + str(a) + " vs " + str(b));
    }
    r.add("column sums agree for p <= " + std::to_string(p_max), bad.empty(), "", join(bad, "; "));

    // diagonal p - q = d ends at p = 2d + C(k+1,2) on the cell side and 2d + k on the other
    bad.clear();
    int reach = 2 * p_max + binom2(k + 1);
    auto inv_far = rank_chart_inv(k, reach);
    auto e1_far = e1_rank_chart(k, reach);
    for (int d = 0; d <= p_max; ++d)
        if (e1_far.diagonal_sum(d) != inv_far.diagonal_sum(d))
            bad.push_back("d=" + std::to_string(d) + ": " + str(e1_far.diagonal_sum(d)) + " vs " + str(inv_far.diagonal_sum(d)));
    r.add("diagonal sums agree for p - q <= " + std::to_string(p_max), bad.empty(), "", join(bad, "; "));

    bad.clear();
    for (int p = 0; 2 * p + k <= p_max; ++p)
        for (int j = 0; j <= k; ++j)
            if (inv.at(2 * p + j, p + j) != inv.at(2 * p + k - j, p + k - j))
                bad.push_back(bideg({2 * p + j, p + j}));
    r.add("duality rank^{2p+r,p+r} = rank^{2p+k-r,p+k-r}", bad.empty(), "", join(bad));

    bad.clear();
    for (int p = 0; 2 * p + 1 <= p_max; ++p) {
        std::uint64_t s = 0;
        for (int i = 0; i < k; ++i) s += inv.at(2 * p - 2 * i, p - i);
        if (s != inv.at(2 * p + 1, p + 1)) bad.push_back("p=" + std::to_string(p));
    }
    r.add("1-line rank is the sum of k consecutive 0-line ranks", bad.empty(), "", join(bad));

    bad.clear();
    for (const auto& [pq, c] : inv.entries()) {
        auto [a, b] = pq;
        bool in = 2 * b >= a && (a <= k ? b <= a : 2 * b <= a + k);
        if (!in) bad.push_back(bideg({a, b}));
    }
    r.add("Inv_k support between y = x/2, y = x and y = x/2 + k/2", bad.empty(), "", join(bad));

    bad.clear();
    int top = binom2(k + 1);
    for (const auto& [pq, c] : e1.entries()) {
        auto [a, b] = pq;
        if (!(2 * b >= a && b <= a && 2 * b <= a + top)) bad.push_back(bideg({a, b}));
    }
    r.add("cell support between y = x/2, y = x and y = (x + C(k+1,2))/2", bad.empty(), "", join(bad));

    if (k == 2) {
        std::vector<std::string> want, got;
        for (int p = 0; 2 * p + 2 <= p_max; ++p) {
            std::uint64_t v = p % 2 == 0 ? p / 2 + 1 : (p + 1) / 2;
            want.push_back(str(v) + "/" + str(v) + "/" + str(p + 1));
            got.push_back(str(inv.at(2 * p, p)) + "/" + str(inv.at(2 * p + 2, p + 2)) + "/" + str(inv.at(2 * p + 1, p + 1)));
        }
        r.expect_eq("k=2 ranks rank^{2p,p} / rank^{2p+2,p+2} / rank^{2p+1,p+1}", join(want), join(got));
    }
    return r;
}

Report verify_duality(int k, int p_max)
{
    Report r{"partition duality, k=" + std::to_string(k), {}};
    std::vector<std::string> bad;
    std::size_t checked = 0;
    for (int n = 0; n <= p_max; ++n) {
        std::map<int, std::set<Partition>> by_j;
        for (auto& p : enumerate_partitions(n, k)) by_j[p.odd_count()].insert(p);
        for (int j = 0; j <= k; ++j) {
            int m = n + k - 2 * j;
            if (m < 0) continue;
            ++checked;
            auto target = count_prt(m, k, k - j);
            std::set<Partition> image;
            bool shape = true;
            for (const auto& p : by_j[j]) {
                auto q = duality_bijection(p);
                shape = shape && q.sum() == m && q.odd_count() == k - j;
                image.insert(q);
            }
            if (count_prt(n, k, j) != target || !shape || image.size() != by_j[j].size() || image.size() != target)
                bad.push_back("prt(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(j) + ")");
        }
    }
    r.add("prt(n,k,j) = prt(n+k-2j,k,k-j) with the odd-minus/even-plus bijection", bad.empty(), "",
          bad.empty() ? str(checked) + " pairs" : join(bad));
    return r;
}

Report verify_rays(int k, int r_max)
{
    Report r{"cell rays, k=" + std::to_string(k), {}};
    int top = binom2(k + 1);
    auto e1 = e1_rank_chart(k, top + 2 * r_max + 10);
    std::map<int, int> start_of;  // j = C(i,2) -> i
    for (int i = 1; i <= k + 1; ++i) start_of[binom2(i)] = i;
    std::vector<std::string> bad;
    std::size_t checked = 0;
    for (int j = 0; j <= top + 10; ++j)
        for (int rr = 0; rr <= r_max; ++rr) {
            auto it = start_of.find(j);
            std::uint64_t want = it == start_of.end() ? 0 : count_prt(2 * rr + gamma(it->second, k), k, gamma(it->second, k));
            auto got = e1.at(j + 2 * rr, j + rr);
            ++checked;
            if (want != got) bad.push_back(bideg({j + 2 * rr, j + rr}));
        }
    r.add("rank^{j+2r,j+r} is prt(2r+gamma_i,k,gamma_i) for j = C(i,2), else 0; r <= " + std::to_string(r_max), bad.empty(),
          "", bad.empty() ? str(checked) + " cells" : join(bad));

    std::vector<std::string> want, got;
    for (int i = 1; i <= k + 1; ++i) want.push_back(bideg({binom2(i), binom2(i)}));
    for (const auto& t : minimal_patterns(k)) got.push_back(bideg(cell_bidegree(t)));
    r.expect_eq("minimal patterns sit at (C(i,2),C(i,2))", join(want), join(got));

    // brute force: patterns without a predecessor are exactly the minimal ones
    auto mins = minimal_patterns(k);
    std::set<StarPattern> minimal(mins.begin(), mins.end());
    std::set<StarPattern> all, has_pred;
    for (const auto& c : enumerate_cells_by_dimension(k, top + 8)) all.insert(to_pattern(c.symbol));
    for (const auto& t : all)
        for (const auto& s : pattern_successors(t)) has_pred.insert(s);
    std::size_t found = 0;
    bool subset = true;
    for (const auto& t : all)
        if (!has_pred.count(t)) {
            ++found;
            subset = subset && minimal.count(t);
        }
    r.add("patterns with no predecessor are the k+1 minimal ones", subset && found == minimal.size(), str(minimal.size()),
          str(found));
    return r;
}

Report verify_products(int k_max, int e_max)
{
    Report r{"products of w-classes", {}};
    std::vector<std::string> bad;
    std::size_t n = 0;
    // w_j^2 = sum_s tau^{j-s} rho^s wc_{s,j-s}
    for (int k = 1; k <= k_max; ++k)
        for (int j = 1; j <= k; ++j) {
            InvariantElement rhs(k);
            for (int s = 0; s <= j; ++s) rhs += class_wc(s, j - s, k) * M2Element::monomial(j - s, s);
            auto w = class_w(j, k);
            ++n;
            if (!(w * w == rhs)) bad.push_back("k=" + std::to_string(k) + " j=" + std::to_string(j));
        }
    r.add("w_j^2 = sum_s tau^(j-s) rho^s wc_{s,j-s}", bad.empty(), "", bad.empty() ? str(n) + " cases" : join(bad));

    bad.clear();
    n = 0;
    for (int k = 1; k <= k_max; ++k) {
        auto w1 = class_w(1, k);
        for (int i = 1; 2 * i <= k; ++i) {
            auto rhs = class_wc(2 * i - 1, 1, k) * M2Element::tau();
            if (2 * i + 1 <= k) rhs += class_w(2 * i + 1, k);
            ++n;
            if (!(w1 * class_w(2 * i, k) == rhs)) bad.push_back("k=" + std::to_string(k) + " w_" + std::to_string(2 * i));
        }
        for (int i = 0; 2 * i + 1 <= k; ++i) {
            auto rhs = class_wc(2 * i, 1, k) * M2Element::tau() + class_w(2 * i + 1, k) * M2Element::rho();
            ++n;
            if (!(w1 * class_w(2 * i + 1, k) == rhs)) bad.push_back("k=" + std::to_string(k) + " w_" + std::to_string(2 * i + 1));
        }
    }
    r.add("w_1 w_2i = tau wc_{2i-1,1} + w_{2i+1} and w_1 w_{2i+1} = tau wc_{2i,1} + rho w_{2i+1}", bad.empty(), "",
          bad.empty() ? str(n) + " cases" : join(bad));

    bad.clear();
    n = 0;
    for (int k = 1; k <= k_max; ++k)
        for (int e = k; e <= k + e_max; ++e) {
            ++n;
            if (!(w1e_reduce(e, k) == class_w_e(1, e, k))) bad.push_back("k=" + std::to_string(k) + " e=" + std::to_string(e));
        }
    r.add("w_1^(e) = w_1^(e-1) c_1 + ... + w_1^(e-k) c_k for e >= k", bad.empty(), "",
          bad.empty() ? str(n) + " cases" : join(bad));

    bad.clear();
    n = 0;
    for (int k = 1; k <= k_max; ++k)
        for (int e = 0; e <= e_max; ++e) {
            auto w = class_w_e(1, e, k);
            auto rhs = class_w_e(1, 2 * e, k) * M2Element::rho() + evaluate_c_polynomial(newton_power_sum(2 * e + 1, k), k) * M2Element::tau();
            ++n;
            if (!(w * w == rhs) || !(square_w_e(1, e, k) == rhs))
                bad.push_back("k=" + std::to_string(k) + " e=" + std::to_string(e));
        }
    r.add("[w_1^(e)]^2 = rho w_1^(2e) + tau N_{2e+1}(c)", bad.empty(), "", bad.empty() ? str(n) + " cases" : join(bad));

    bad.clear();
    n = 0;
    for (int k = 1; k <= k_max; ++k)
        for (int i = 1; i <= k; ++i)
            for (int e = 0; e <= e_max; ++e) {
                auto w = class_w_e(i, e, k);
                ++n;
                if (!(w * w == square_w_e(i, e, k))) bad.push_back("k=" + std::to_string(k) + " i=" + std::to_string(i) + " e=" + std::to_string(e));
            }
    r.add("square_w_e agrees with the product for every w_i^(e)", bad.empty(), "", bad.empty() ? str(n) + " cases" : join(bad));
    return r;
}

Report verify_newton(int n_max, int k_max)
{
    Report r{"mod 2 Newton polynomials", {}};
    std::vector<std::string> bad;
    for (int k = 1; k <= k_max; ++k)
        for (int n = 1; n <= n_max; ++n) {
            std::vector<int> parts(k, 0);
            parts.back() = 2 * n;
            auto want = InvariantElement::basis(Partition(parts));
            if (!(evaluate_c_polynomial(newton_power_sum(n, k), k) == want))
                bad.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    r.add("N_n(c_1..c_k) = [b_1^n] for n <= " + std::to_string(n_max) + ", k <= " + std::to_string(k_max), bad.empty(), "",
          join(bad));
    std::vector<int> w = {1, 2, 3};
    r.expect_eq("N_5 for k=3", "c_1^5 + c_1^3 c_2 + c_1^2 c_3 + c_1 c_2^2 + c_2 c_3", newton_power_sum(5, 3).to_string("c", w));
    return r;
}

Report verify_indecomposables(int k, int deg_max)
{
    Report r{"indecomposables of Inv_" + std::to_string(k), {}};
    auto computed = indecomposable_ranks(k, deg_max);

    // c_j at (2j, j); w_{2^i}^(e) at (2^i(2e+1), 2^i(e+1)) for e <= k/2^i - 1
    RankChart predicted(k, deg_max);
    std::vector<std::string> names;
    for (int j = 1; j <= k; ++j) {
        names.push_back("c_" + std::to_string(j));
        if (2 * j <= deg_max) predicted.add(2 * j, j);
    }
    for (int m = 1; m <= k; m *= 2)
        for (int e = 0; e <= k / m - 1; ++e) {
            names.push_back(e ? "w_" + std::to_string(m) + "^(" + std::to_string(e) + ")" : "w_" + std::to_string(m));
            int p = m * (2 * e + 1);
            if (p <= deg_max) predicted.add(p, m * (e + 1));
        }
    r.expect_eq("bigraded ranks through degree " + std::to_string(deg_max), cells(predicted), cells(computed));

    bool shape = true;
    for (const auto& [pq, c] : computed.entries()) {
        auto [p, q] = pq;
        if (p % 2) {
            shape = shape && q == (p + 1) / 2 && c == 1;
        } else {
            bool ok = q == p / 2 && c == 1;
            for (int m = 2; m <= k; m *= 2) ok = ok || (q == p / 2 + m / 2 && c == 1 && (p / m) % 2 == 1);
            shape = shape && ok;
        }
    }
    r.add("one class per odd p at q=(p+1)/2; even p at q=p/2 and q=p/2+2^(i-1)", shape);

    std::uint64_t want = 3 * k - ones(k);
    r.add("count 3k - ones(k)", computed.total() == want, str(want), str(computed.total()),
          (2 * k > deg_max ? "degree bound cuts off generators; " : "") + std::string("generators ") + join(names, ", "));

    std::vector<std::string> want_dec, got_dec;
    for (int j = 1; j <= k; ++j) {
        std::vector<int> parts(k - j, 0);
        parts.insert(parts.end(), j, 1);
        bool dec = DecomposableSpan(k, {j, j}).contains(LnElement::basis(Partition(parts)));
        want_dec.push_back("w_" + std::to_string(j) + (power_of_two(j) ? " indecomposable" : " decomposable"));
        got_dec.push_back("w_" + std::to_string(j) + (dec ? " decomposable" : " indecomposable"));
    }
    r.expect_eq("w_j is indecomposable exactly when j is a power of 2", join(want_dec, ", "), join(got_dec, ", "));
    return r;
}

Report verify_stable_presentation(int k, int deg_max)
{
    Report r{"square-free monomials span Inv_" + std::to_string(k), {}};
    std::vector<InvariantElement> ws;
    std::vector<std::string> names;
    for (int m = 1; m <= k; m *= 2)
        for (int e = 0; e <= k / m - 1; ++e) {
            ws.push_back(class_w_e(m, e, k));
            names.push_back("w_" + std::to_string(m) + "^(" + std::to_string(e) + ")");
        }

    std::vector<std::string> bad;
    for (std::size_t i = 0; i < ws.size(); ++i)
        if (!(ws[i] * ws[i]).mod_rho_tau().is_zero()) bad.push_back(names[i]);
    r.add("squares of the w-generators lie in (rho, tau)", bad.empty(), "", join(bad));

    // square-free products of w-generators, reduced modulo (rho, tau) as we go
    std::vector<InvariantElement> prods;
    std::function<void(std::size_t, const InvariantElement&, int)> rec = [&](std::size_t start, const InvariantElement& cur, int p) {
        prods.push_back(cur);
        for (std::size_t i = start; i < ws.size(); ++i) {
            Bidegree d;
            ws[i].homogeneous(&d);
            if (p + d.p <= deg_max) rec(i + 1, (cur * ws[i]).mod_rho_tau(), p + d.p);
        }
    };
    rec(0, InvariantElement::unit(k), 0);

    std::vector<InvariantElement> nonzero;
    for (auto& x : prods)
        if (!x.is_zero()) nonzero.push_back(x);
    // each product is homogeneous, so c-multiples stay within a single bidegree
    auto elems = c_multiples(k, nonzero, deg_max);
    std::map<Bidegree, std::vector<const InvariantElement*>> by_degree;
    for (const auto& e : elems) by_degree[e.d].push_back(&e.x);

    bad.clear();
    std::size_t cells = 0;
    auto inv = rank_chart_inv(k, deg_max);
    for (const auto& [pq, c] : inv.entries()) {
        Bidegree d{pq.first, pq.second};
        ReducedSpace s(k, d);
        auto it = by_degree.find(d);
        if (it != by_degree.end())
            for (auto* x : it->second) s.insert(x->mod_rho_tau());
        ++cells;
        if (s.rank() != s.dim()) bad.push_back(bideg(d) + " rank " + str(s.rank()) + " of " + str(s.dim()));
    }
    r.add("c-monomials times square-free w-monomials span every bidegree through " + std::to_string(deg_max), bad.empty(),
          str(cells) + " bidegrees", bad.empty() ? "spanning" : join(bad, "; "), "generators " + join(names, ", "));
    return r;
}

Report verify_all(const VerifyAllOptions& o)
{
    Report all{"all", {}};
    all.append(verify_figures());
    for (int k = 2; k <= 3; ++k) all.append(verify_presentation(k, 14));
    all.append(verify_gr4());
    for (int k = 1; k <= o.k_max; ++k) {
        all.append(verify_chart_sums(k, o.p_max));
        all.append(verify_duality(k, o.p_max));
        all.append(verify_rays(k, 10));
    }
    all.append(verify_products(std::min(o.k_max, 5), 4));
    all.append(verify_newton(8, std::min(o.k_max, 5)));
    for (int k = 1; k <= std::min(o.k_max, 5); ++k) all.append(verify_indecomposables(k, 14));
    for (int k = 1; k <= std::min(o.k_max, 4); ++k) all.append(verify_stable_presentation(k, 12));
    for (int n = 1; n <= std::min(o.k_max, 5); ++n) all.append(verify_exterior_ring(n, 14));
    return all;
}

}  // namespace equigrass
