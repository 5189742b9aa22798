#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace equigrass {

class RankChart {
public:
    using Map = std::map<std::pair<int, int>, std::uint64_t>;

    RankChart() = default;
    RankChart(int k, int p_max) : k_(k), p_max_(p_max) {}

    int k() const { return k_; }
    int p_max() const { return p_max_; }

    std::uint64_t at(int p, int q) const;
    void add(int p, int q, std::uint64_t c = 1);
    void merge(const RankChart& o);

    const Map& entries() const { return entries_; }
    std::uint64_t total() const;
    std::uint64_t column_sum(int p) const;
    // sum over p of rank(p, p - d)
    std::uint64_t diagonal_sum(int d) const;
    int max_q() const;

    // entries with p <= p_max only
    RankChart truncated(int p_max) const;

    bool operator==(const RankChart& o) const { return entries_ == o.entries_; }

private:
    int k_ = 0;
    int p_max_ = 0;
    Map entries_;  // nonzero only
};

enum class ChartFormat { Ascii, Csv, Json };

ChartFormat parse_chart_format(const std::string& s);
std::string render_chart(const RankChart& c, ChartFormat f);
RankChart parse_chart_json(const std::string& s);
RankChart parse_chart_csv(const std::string& s, int k, int p_max);

}  // namespace equigrass
