#pragma once

#include <string>
#include <vector>

#include "equigrass/m2.hpp"
#include "equigrass/partitions.hpp"
#include "equigrass/rank_chart.hpp"

namespace equigrass {

// sigma_1 <= ... <= sigma_k
struct SchubertSymbol {
    std::vector<int> sigma;

    int k() const { return static_cast<int>(sigma.size()); }
    int dimension() const;
    std::vector<int> a_sequence() const;  // a_i = sigma_i + i
    auto operator<=>(const SchubertSymbol&) const = default;
};

// 1-indexed star positions, strictly increasing
struct StarPattern {
    std::vector<int> stars;

    int k() const { return static_cast<int>(stars.size()); }
    auto operator<=>(const StarPattern&) const = default;
};

StarPattern to_pattern(const SchubertSymbol& s);
SchubertSymbol to_symbol(const StarPattern& t);

// dimension and cell weight; box m carries + iff m is odd
Bidegree cell_bidegree(const SchubertSymbol& s);
Bidegree cell_bidegree(const StarPattern& t);

struct Cell {
    SchubertSymbol symbol;
    Bidegree bidegree;
};

std::vector<Cell> enumerate_cells_by_dimension(int k, int p_max);
std::vector<Cell> enumerate_cells_in_ambient(int k, int n);

RankChart e1_rank_chart(int k, int p_max);
RankChart cell_chart(int k, const std::vector<Cell>& cells);

std::vector<StarPattern> pattern_successors(const StarPattern& t);
std::vector<StarPattern> minimal_patterns(int k);

StarPattern partition_to_pattern(const Partition& p);
Partition pattern_to_partition(const StarPattern& t);

int gamma(int i, int k);

std::string to_string(const StarPattern& t);
std::string render_pattern(const StarPattern& t);  // e.g. "+-+-**"
StarPattern parse_pattern(const std::string& s);

}  // namespace equigrass
