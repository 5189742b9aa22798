#pragma once

#include <vector>

#include "equigrass/m2.hpp"
#include "equigrass/rank_chart.hpp"

namespace equigrass {

// Reference rank charts, entered cell by cell. Cells inside the window and
// absent from the chart are zero.
struct FigureChart {
    RankChart chart;
    int p_max = 0;
    int q_max = 0;
};

FigureChart figure_inv4();
FigureChart figure_inv5();
FigureChart figure_gr5_cells();
// bidegrees of the 15 cells of Gr_2 in a 6-dimensional ambient, with multiplicity
std::vector<Bidegree> figure_gr2_u6();

}  // namespace equigrass
