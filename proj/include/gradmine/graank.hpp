#pragma once

#include "gradmine/gradcore.hpp"

#include <vector>

namespace gradmine {

struct GraankOptions {
    double min_sup = 0.5;
};

// Level-wise mining over concordance matrices. Candidates grow one attribute
// at a time and every join is pruned the moment its support drops below the
// threshold. Returns canonical patterns of size >= 2 sorted by items; each
// result stands for itself and its complement.
std::vector<GradualPattern> mine_graank(const NumericDataset& ds, const GraankOptions& opts = {});

// Same traversal evaluated with longest-chain support instead of
// concordant pairs.
std::vector<GradualPattern> mine_grite(const NumericDataset& ds, const GraankOptions& opts = {});

// Every frequent pattern of size >= 2 by direct enumeration, for cross
// checking the mined output. Exponential; intended for small inputs.
std::vector<GradualPattern> brute_force_patterns(const NumericDataset& ds, double min_sup);

} // namespace gradmine
