#include "equigrass/figures.hpp"

#include <initializer_list>
#include <tuple>

namespace equigrass {

namespace {

FigureChart make(int k, int p_max, int q_max, std::initializer_list<std::tuple<int, int, int>> cells)
{
    FigureChart f{RankChart(k, p_max), p_max, q_max};
    for (auto [p, q, c] : cells) f.chart.add(p, q, c);
    return f;
}

}  // namespace

FigureChart figure_inv4()
{
    return make(4, 14, 8, {
        {0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {4, 4, 1},
        {2, 1, 1}, {3, 2, 2}, {4, 3, 2}, {5, 4, 2}, {4, 2, 2},
        {5, 3, 4}, {6, 3, 3}, {6, 4, 5}, {6, 5, 1}, {7, 4, 7},
        {7, 5, 4}, {8, 4, 5}, {8, 5, 8}, {8, 6, 2}, {9, 5, 11},
        {9, 6, 7}, {10, 5, 6}, {10, 6, 14}, {10, 7, 3}, {11, 6, 16},
        {11, 7, 11}, {12, 6, 9}, {12, 7, 20}, {12, 8, 5}, {13, 7, 23},
        {13, 8, 16}, {14, 7, 11}, {14, 8, 30},
    });
}

FigureChart figure_inv5()
{
    return make(5, 21, 13, {
        {0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {4, 4, 1}, {5, 5, 1},
        {2, 1, 1}, {3, 2, 2}, {4, 3, 2}, {5, 4, 2}, {6, 5, 2}, {7, 6, 1},
        {4, 2, 2}, {9, 7, 2}, {5, 3, 4}, {8, 6, 4}, {6, 4, 5}, {7, 5, 5},
        {6, 3, 3}, {11, 8, 3}, {7, 4, 7}, {10, 7, 7}, {8, 5, 9}, {9, 6, 9},
        {8, 4, 5}, {13, 9, 5}, {9, 5, 12}, {12, 8, 12}, {10, 6, 16}, {11, 7, 16},
        {10, 5, 7}, {15, 10, 7}, {11, 6, 18}, {14, 9, 18}, {12, 7, 25}, {13, 8, 25},
        {12, 6, 10}, {17, 11, 10}, {13, 7, 27}, {16, 10, 27}, {14, 8, 39}, {15, 9, 39},
        {14, 7, 13}, {19, 12, 13}, {15, 8, 38}, {18, 11, 38}, {16, 9, 56}, {17, 10, 56},
        {16, 8, 18}, {21, 13, 18}, {17, 9, 53}, {20, 12, 53}, {18, 10, 80}, {19, 11, 80},
        {18, 9, 23}, {19, 10, 71}, {20, 11, 109}, {21, 12, 109}, {20, 10, 30}, {21, 11, 94},
    });
}

FigureChart figure_gr5_cells()
{
    // the chart is a union of rays (j + 2r, j + r) starting at j = 0, 1, 3, 6, 10, 15
    struct Ray {
        int j;
        std::initializer_list<int> values;
    };
    const Ray rays[] = {
        {0, {1, 2, 5, 9, 16, 25, 39, 56, 80, 109, 147}},
        {1, {1, 2, 5, 9, 16, 25, 39, 56, 80, 109, 147}},
        {3, {1, 2, 4, 7, 12, 18, 27, 38, 53, 71}},
        {6, {1, 2, 4, 7, 12, 18, 27, 38}},
        {10, {1, 1, 2, 3, 5, 7}},
        {15, {1, 1, 2, 3}},
    };
    FigureChart f{RankChart(5, 21), 21, 18};
    for (const auto& ray : rays) {
        int r = 0;
        for (int v : ray.values) {
            f.chart.add(ray.j + 2 * r, ray.j + r, v);
            ++r;
        }
    }
    return f;
}

std::vector<Bidegree> figure_gr2_u6()
{
    return {{0, 0}, {1, 1}, {2, 1}, {2, 1}, {3, 2}, {3, 3}, {4, 2}, {4, 2},
            {4, 2}, {5, 3}, {5, 4}, {6, 3}, {6, 3}, {7, 5}, {8, 4}};
}

}  // namespace equigrass
