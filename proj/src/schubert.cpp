#include "equigrass/schubert.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace equigrass {

int SchubertSymbol::dimension() const
{
    return std::accumulate(sigma.begin(), sigma.end(), 0);
}

std::vector<int> SchubertSymbol::a_sequence() const
{
    std::vector<int> a(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) a[i] = sigma[i] + static_cast<int>(i) + 1;
    return a;
}

StarPattern to_pattern(const SchubertSymbol& s)
{
    return {s.a_sequence()};
}

SchubertSymbol to_symbol(const StarPattern& t)
{
    SchubertSymbol s;
    for (int i = 0; i < t.k(); ++i) s.sigma.push_back(t.stars[i] - i - 1);
    return s;
}

Bidegree cell_bidegree(const StarPattern& t)
{
    Bidegree d;
    std::size_t next = 0;
    int plus = 0, minus = 0;  // unstarred boxes seen so far
    for (int m = 1; next < t.stars.size(); ++m) {
        if (m == t.stars[next]) {
            d.q += (m % 2 == 0) ? plus : minus;
            d.p += m - static_cast<int>(next) - 1;
            ++next;
        } else if (m % 2) {
            ++plus;
        } else {
            ++minus;
        }
    }
    return d;
}

Bidegree cell_bidegree(const SchubertSymbol& s)
{
    return cell_bidegree(to_pattern(s));
}

std::vector<Cell> enumerate_cells_by_dimension(int k, int p_max)
{
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    std::vector<Cell> out;
    for (int n = 0; n <= p_max; ++n)
        for (const auto& p : enumerate_partitions(n, k)) {
            SchubertSymbol s{p.parts};
            out.push_back({s, cell_bidegree(s)});
        }
    return out;
}

std::vector<Cell> enumerate_cells_in_ambient(int k, int n)
{
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    std::vector<Cell> out;
    if (n < k) return out;
    std::vector<int> a(k);
    std::iota(a.begin(), a.end(), 1);
    while (true) {
        StarPattern t{a};
        out.push_back({to_symbol(t), cell_bidegree(t)});
        int i = k - 1;
        while (i >= 0 && a[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++a[i];
        for (int j = i + 1; j < k; ++j) a[j] = a[j - 1] + 1;
    }
    return out;
}

RankChart cell_chart(int k, const std::vector<Cell>& cells)
{
    RankChart c(k, 0);
    for (const auto& cell : cells) c.add(cell.bidegree.p, cell.bidegree.q);
    return c;
}

RankChart e1_rank_chart(int k, int p_max)
{
    RankChart c(k, p_max);
    c.merge(cell_chart(k, enumerate_cells_by_dimension(k, p_max)));
    return c;
}

std::vector<StarPattern> pattern_successors(const StarPattern& t)
{
    std::vector<StarPattern> out;
    for (int i = 0; i < t.k(); ++i) {
        int target = t.stars[i] + 2;
        if (std::binary_search(t.stars.begin(), t.stars.end(), target)) continue;
        auto v = t.stars;
        v[i] = target;
        std::sort(v.begin(), v.end());
        out.push_back({v});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StarPattern> minimal_patterns(int k)
{
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    std::vector<StarPattern> out;
    // first k-j stars packed at the left, the remaining j spaced two apart; the last one is 2,4,...,2k
    for (int j = 0; j < k; ++j) {
        std::vector<int> a(k);
        for (int i = 1; i <= k; ++i) a[i - 1] = i <= k - j ? i : (k - j) + 2 * (i - (k - j));
        out.push_back({a});
    }
    std::vector<int> even(k);
    for (int i = 1; i <= k; ++i) even[i - 1] = 2 * i;
    out.push_back({even});
    return out;
}

StarPattern partition_to_pattern(const Partition& p)
{
    std::vector<int> stars;
    int ne = 0, no = 0;
    for (int x : p.parts) {
        if (x % 2 == 0)
            stars.push_back(x + 2 * ++ne);
        else
            stars.push_back(x + 2 * ++no - 2);
    }
    std::sort(stars.begin(), stars.end());
    return {stars};
}

Partition pattern_to_partition(const StarPattern& t)
{
    std::vector<int> v;
    int ne = 0, no = 0;
    for (int s : t.stars) {
        if (s % 2 == 0)
            v.push_back(s - 2 * ++ne);
        else
            v.push_back(s - 2 * ++no + 2);
    }
    return Partition(std::move(v));
}

int gamma(int i, int k)
{
    if (i < 1 || i > k + 1) throw std::out_of_range("gamma index out of range");
    return (k - i) % 2 == 0 ? (k + i) / 2 : (k + 1 - i) / 2;
}

std::string to_string(const StarPattern& t)
{
    std::string s = "{";
    for (int i = 0; i < t.k(); ++i) {
        if (i) s += ",";
        s += std::to_string(t.stars[i]);
    }
    return s + "}";
}

std::string render_pattern(const StarPattern& t)
{
    std::string s;
    int last = t.stars.empty() ? 0 : t.stars.back();
    for (int m = 1; m <= last; ++m)
        s += std::binary_search(t.stars.begin(), t.stars.end(), m) ? '*' : (m % 2 ? '+' : '-');
    return s;
}

StarPattern parse_pattern(const std::string& s)
{
    std::vector<int> v;
    bool glyphs = s.find('*') != std::string::npos;
    if (glyphs) {
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] == '*') v.push_back(static_cast<int>(i) + 1);
    } else {
        // bare digit strings like "125" are single-digit shorthand; anything bracketed is not
        bool has_sep = s.find_first_of(",{[( ") != std::string::npos;
        for (std::size_t i = 0; i < s.size();) {
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                int x = 0;
                if (!has_sep)
                    x = s[i++] - '0';
                else
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) x = x * 10 + (s[i++] - '0');
                v.push_back(x);
            } else if (std::string("{}[](), ").find(s[i]) != std::string::npos) {
                ++i;
            } else {
                throw std::invalid_argument("bad character in pattern: " + s);
            }
        }
    }
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end() || (!v.empty() && v.front() < 1))
        throw std::invalid_argument("pattern positions must be distinct and positive");
    return {v};
}

}  // namespace equigrass
