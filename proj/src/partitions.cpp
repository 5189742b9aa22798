#include "equigrass/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace equigrass {

Partition::Partition(std::vector<int> p) : parts(std::move(p))
{
    for (int x : parts)
        if (x < 0) throw std::invalid_argument("negative part");
    std::sort(parts.begin(), parts.end());
}

int Partition::sum() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::odd_count() const
{
    return static_cast<int>(std::count_if(parts.begin(), parts.end(), [](int x) { return x % 2; }));
}

int weight(const Partition& p)
{
    int w = 0;
    for (int x : p.parts) w += (x + 1) / 2;
    return w;
}

namespace {

// nondecreasing sequences of length k, entries >= lo, summing to n
template <class F>
void each_partition(int n, int k, int lo, std::vector<int>& cur, F&& f)
{
    if (k == 0) {
        if (n == 0) f(cur);
        return;
    }
    for (int x = lo; x * k <= n; ++x) {
        cur.push_back(x);
        each_partition(n - x, k - 1, x, cur, f);
        cur.pop_back();
    }
}

// partitions of s into at most m parts
std::uint64_t at_most_parts(int s, int m)
{
    if (s < 0 || m < 0) return 0;
    std::vector<std::vector<std::uint64_t>> t(m + 1, std::vector<std::uint64_t>(s + 1, 0));
    for (int j = 0; j <= m; ++j) t[j][0] = 1;
    for (int j = 1; j <= m; ++j)
        for (int x = 1; x <= s; ++x)
            t[j][x] = t[j - 1][x] + (x >= j ? t[j][x - j] : 0);
    return t[m][s];
}

}  // namespace

std::uint64_t count_prt_enumerate(int n, int k, int j)
{
    if (n < 0 || k < 0 || j < 0 || j > k) return 0;
    std::uint64_t c = 0;
    std::vector<int> cur;
    each_partition(n, k, 0, cur, [&](const std::vector<int>& v) {
        int odd = 0;
        for (int x : v) odd += x % 2;
        if (odd == j) ++c;
    });
    return c;
}

std::uint64_t count_prt_dp(int n, int k, int j)
{
    if (n < 0 || k < 0 || j < 0 || j > k || (n - j) % 2 != 0 || n < j) return 0;
    // odd parts 2x+1 (j of them), even parts 2y (k-j of them): split (n-j)/2 between x's and y's
    int half = (n - j) / 2;
    std::uint64_t c = 0;
    for (int s = 0; s <= half; ++s)
        c += at_most_parts(s, j) * at_most_parts(half - s, k - j);
    return c;
}

std::uint64_t count_prt(int n, int k, int j)
{
    return n <= 30 ? count_prt_enumerate(n, k, j) : count_prt_dp(n, k, j);
}

std::vector<Partition> enumerate_partitions(int n, int k)
{
    std::vector<Partition> out;
    if (n < 0 || k < 0) return out;
    std::vector<int> cur;
    each_partition(n, k, 0, cur, [&](const std::vector<int>& v) {
        Partition p;
        p.parts = v;
        out.push_back(std::move(p));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> successors(const Partition& p)
{
    std::vector<Partition> out;
    for (int i = 0; i < p.k(); ++i) {
        if (i + 1 < p.k() && p.parts[i] == p.parts[i + 1]) continue;
        auto v = p.parts;
        v[i] += 2;
        out.emplace_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Partition minimal_root(const Partition& p)
{
    auto v = p.parts;
    for (int& x : v) x %= 2;
    return Partition(std::move(v));
}

Partition duality_bijection(const Partition& p)
{
    auto v = p.parts;
    for (int& x : v) x += (x % 2) ? -1 : 1;
    return Partition(std::move(v));
}

std::string to_string(const Partition& p)
{
    std::string s = "[";
    for (int i = 0; i < p.k(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.parts[i]);
    }
    return s + "]";
}

std::string orbit_string(const Partition& c)
{
    // odd parts take the low indices, largest first, then even parts
    std::vector<int> order;
    for (int odd = 1; odd >= 0; --odd)
        for (int i = c.k() - 1; i >= 0; --i)
            if (c.parts[i] % 2 == odd && c.parts[i]) order.push_back(c.parts[i]);
    std::string as, bs;
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::string idx = std::to_string(i + 1);
        if (order[i] % 2) as += (as.empty() ? "a" : " a") + idx;
        int d = order[i] / 2;
        if (d) bs += (bs.empty() ? "b" : " b") + idx + (d > 1 ? "^" + std::to_string(d) : "");
    }
    std::string s = as + (!as.empty() && !bs.empty() ? " " : "") + bs;
    return "[" + (s.empty() ? std::string("1") : s) + "]";
}

Partition parse_partition(const std::string& s)
{
    std::vector<int> v;
    bool has_sep = s.find_first_of(",[ ") != std::string::npos;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if (!has_sep) {
                v.push_back(c - '0');
                ++i;
                continue;
            }
            int x = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) x = x * 10 + (s[i++] - '0');
            v.push_back(x);
        } else if (c == '[' || c == ']' || c == ',' || c == ' ') {
            ++i;
        } else {
            throw std::invalid_argument("bad character in partition: " + s);
        }
    }
    return Partition(std::move(v));
}

}  // namespace equigrass
