#include "equigrass/rank_chart.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace equigrass {

std::uint64_t RankChart::at(int p, int q) const
{
    auto it = entries_.find({p, q});
    return it == entries_.end() ? 0 : it->second;
}

void RankChart::add(int p, int q, std::uint64_t c)
{
    if (c == 0) return;
    entries_[{p, q}] += c;
    p_max_ = std::max(p_max_, p);
}

void RankChart::merge(const RankChart& o)
{
    for (const auto& [pq, c] : o.entries_) add(pq.first, pq.second, c);
}

std::uint64_t RankChart::total() const
{
    std::uint64_t t = 0;
    for (const auto& e : entries_) t += e.second;
    return t;
}

std::uint64_t RankChart::column_sum(int p) const
{
    std::uint64_t t = 0;
    for (auto it = entries_.lower_bound({p, INT32_MIN}); it != entries_.end() && it->first.first == p; ++it)
        t += it->second;
    return t;
}

std::uint64_t RankChart::diagonal_sum(int d) const
{
    std::uint64_t t = 0;
    for (const auto& [pq, c] : entries_)
        if (pq.first - pq.second == d) t += c;
    return t;
}

int RankChart::max_q() const
{
    int m = 0;
    for (const auto& e : entries_) m = std::max(m, e.first.second);
    return m;
}

RankChart RankChart::truncated(int p_max) const
{
    RankChart r(k_, p_max);
    for (const auto& [pq, c] : entries_)
        if (pq.first <= p_max) r.entries_[pq] = c;
    return r;
}

ChartFormat parse_chart_format(const std::string& s)
{
    if (s == "ascii") return ChartFormat::Ascii;
    if (s == "csv") return ChartFormat::Csv;
    if (s == "json") return ChartFormat::Json;
    throw std::invalid_argument("unknown chart format: " + s);
}

namespace {

std::string render_ascii(const RankChart& c)
{
    int pm = c.p_max();
    int qm = std::max(c.max_q(), 0);
    std::size_t w = 1;
    for (const auto& e : c.entries()) w = std::max(w, std::to_string(e.second).size());
    w = std::max(w, std::to_string(pm).size());
    std::size_t lw = std::to_string(qm).size();

    auto pad = [](const std::string& s, std::size_t n) { return std::string(n - s.size(), ' ') + s; };
    std::ostringstream os;
    for (int q = qm; q >= 0; --q) {
        os << pad(std::to_string(q), lw) << " |";
        std::string line;
        for (int p = 0; p <= pm; ++p) {
            auto v = c.at(p, q);
            line += " " + pad(v ? std::to_string(v) : "", w);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    os << std::string(lw, ' ') << " •";
    for (int p = 0; p <= pm; ++p) os << std::string(w + 1, '-');
    os << "\n" << std::string(lw + 2, ' ');
    for (int p = 0; p <= pm; ++p) os << " " << pad(std::to_string(p), w);
    os << "\n";
    return os.str();
}

}  // namespace

std::string render_chart(const RankChart& c, ChartFormat f)
{
    switch (f) {
    case ChartFormat::Ascii:
        return render_ascii(c);
    case ChartFormat::Csv: {
        std::ostringstream os;
        os << "p,q,count\n";
        for (const auto& [pq, n] : c.entries()) os << pq.first << "," << pq.second << "," << n << "\n";
        return os.str();
    }
    case ChartFormat::Json: {
        nlohmann::ordered_json j;
        j["k"] = c.k();
        j["p_max"] = c.p_max();
        auto arr = nlohmann::ordered_json::array();
        for (const auto& [pq, n] : c.entries()) arr.push_back({pq.first, pq.second, n});
        j["entries"] = arr;
        return j.dump() + "\n";
    }
    }
    return {};
}

RankChart parse_chart_json(const std::string& s)
{
    auto j = nlohmann::json::parse(s);
    RankChart c(j.at("k").get<int>(), j.at("p_max").get<int>());
    for (const auto& e : j.at("entries")) c.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::uint64_t>());
    return c;
}

RankChart parse_chart_csv(const std::string& s, int k, int p_max)
{
    RankChart c(k, p_max);
    std::istringstream is(s);
    std::string line;
    std::getline(is, line);
    if (line != "p,q,count") throw std::invalid_argument("missing csv header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        int p, q;
        unsigned long long n;
        char c1, c2;
        std::istringstream ls(line);
        if (!(ls >> p >> c1 >> q >> c2 >> n) || c1 != ',' || c2 != ',') throw std::invalid_argument("bad csv row: " + line);
        c.add(p, q, n);
    }
    return c;
}

}  // namespace equigrass
