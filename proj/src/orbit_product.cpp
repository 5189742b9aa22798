#include "orbit_product.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace equigrass::detail {

namespace {

struct Multiset {
    std::vector<int> vals;
    std::vector<int> cnt;

    explicit Multiset(const std::vector<int>& sorted)
    {
        for (int x : sorted) {
            if (!vals.empty() && vals.back() == x)
                ++cnt.back();
            else {
                vals.push_back(x);
                cnt.push_back(1);
            }
        }
    }
};

struct Search {
    Multiset l, m;
    bool deformed;
    int k;
    std::vector<int> nu;
    std::map<std::vector<int>, bool> parity;

    void place(int lo)
    {
        int i = static_cast<int>(nu.size());
        if (i == k) {
            parity[nu] ^= true;
            return;
        }
        for (std::size_t a = 0; a < l.vals.size(); ++a) {
            if (!l.cnt[a]) continue;
            int x = l.vals[a];
            --l.cnt[a];
            for (std::size_t b = 0; b < m.vals.size(); ++b) {
                if (!m.cnt[b]) continue;
                int y = m.vals[b];
                --m.cnt[b];
                bool both_odd = (x & 1) && (y & 1);
                if (!both_odd) {
                    emit(x + y, lo);
                } else if (deformed) {
                    emit(x + y - 1, lo);
                    emit(x + y, lo);
                }
                ++m.cnt[b];
            }
            ++l.cnt[a];
        }
    }

    void emit(int z, int lo)
    {
        if (z < lo) return;
        nu.push_back(z);
        place(z);
        nu.pop_back();
    }
};

using Key = std::tuple<std::vector<int>, std::vector<int>, bool>;

std::mutex cache_mu;
std::map<Key, std::vector<std::vector<int>>>& cache()
{
    static std::map<Key, std::vector<std::vector<int>>> c;
    return c;
}

}  // namespace

std::vector<std::vector<int>> orbit_product(const std::vector<int>& lam, const std::vector<int>& mu, bool deformed)
{
    Key key = lam <= mu ? Key{lam, mu, deformed} : Key{mu, lam, deformed};
    {
        std::lock_guard<std::mutex> g(cache_mu);
        auto it = cache().find(key);
        if (it != cache().end()) return it->second;
    }
    Search s{Multiset(lam), Multiset(mu), deformed, static_cast<int>(lam.size()), {}, {}};
    s.nu.reserve(lam.size());
    s.place(0);
    std::vector<std::vector<int>> out;
    for (auto& [nu, odd] : s.parity)
        if (odd) out.push_back(nu);
    std::lock_guard<std::mutex> g(cache_mu);
    cache().emplace(std::move(key), out);
    return out;
}

}  // namespace equigrass::detail
