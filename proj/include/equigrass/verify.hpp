#pragma once

#include "equigrass/rank_chart.hpp"
#include "equigrass/report.hpp"

namespace equigrass {

// I/I^2 of Inv_k by bidegree, computed in the reduction mod (rho, tau)
RankChart indecomposable_ranks(int k, int deg_max);

Report verify_figures();
Report verify_presentation(int k, int deg_max = 14);
Report verify_gr4();
Report verify_chart_sums(int k, int p_max);
Report verify_duality(int k, int p_max);
Report verify_rays(int k, int r_max);
Report verify_products(int k_max, int e_max);
Report verify_newton(int n_max, int k_max);
Report verify_indecomposables(int k, int deg_max = 14);
Report verify_stable_presentation(int k, int deg_max);

struct VerifyAllOptions {
    int k_max = 6;
    int p_max = 20;
};
Report verify_all(const VerifyAllOptions& o = {});

}  // namespace equigrass
