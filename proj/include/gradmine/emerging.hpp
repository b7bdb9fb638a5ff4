#pragma once

#include "gradmine/aco.hpp"
#include "gradmine/gradcore.hpp"
#include "gradmine/temporal.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gradmine {

// Support ratio in favor of the destination side. A vanished denominator
// gives +infinity when anything survives on top, and 0 when both sides are
// empty.
double growth_rate(double sup_from, double sup_to);
double growth_rate(const Support& sup_from, const Support& sup_to);

// All unordered pairs of a pattern's items, each as a 2-item pattern.
std::vector<GradualPattern> decompose_maximal(const GradualPattern& p);

// Border algebra over opaque element ids. A border <L, R> stands for every
// set that contains some member of L and fits inside some member of R.
using IdSet = std::vector<std::uint32_t>; // sorted, unique

bool id_subset(const IdSet& a, const IdSet& b);

struct Border {
    std::vector<IdSet> left;
    std::vector<IdSet> right;
};

// Def-style validity: both sides are antichains and each member of one side
// bounds some member of the other.
bool border_valid(const Border& b);

// Minimal subsets of universe that escape every one of the given sets;
// the building block of the border differential.
std::vector<IdSet> border_diff(const IdSet& universe, const std::vector<IdSet>& covered);

// Differential of two left-rooted borders: one border per 'to'-side maximal
// set with a nonempty collection of subsets that fall outside the 'from'
// collection. Left bounds are the minimal such subsets.
std::vector<Border> mbd_llborder(const Border& from, const Border& to);

struct TemporalGradualEmergingPattern {
    std::vector<GradualItem> items; // source attribute indices, sorted
    double growth = 0.0;            // may be +infinity
    std::optional<double> lag_from_seconds;
    std::optional<double> lag_to_seconds;
    std::optional<double> lag_mean_seconds;
    double support_from = 0.0;
    double support_to = 0.0;
    std::size_t step_from = 0;
    std::size_t step_to = 0;
};

struct BtGraankOptions {
    double min_sup = 0.5;
    double min_rep = 0.5;
    std::size_t threads = 0;
};

// Border-based emerging patterns: mine temporal patterns per step, keep the
// maximal ones, and for each consecutive step pair compute the border
// differential over their 2-item decompositions. Flattened differential sets
// frequent at the later step but not the earlier one become emerging
// patterns, reported with both steps' supports and lags.
std::vector<TemporalGradualEmergingPattern> mine_bt_graank(const NumericDataset& ds,
                                                           std::size_t ref_attribute,
                                                           const BtGraankOptions& opts = {});

// q x 3 accumulators of estimated lags (seconds); reported as means.
class TimeLagMatrix {
public:
    TimeLagMatrix() = default;
    explicit TimeLagMatrix(std::size_t attribute_count);

    std::size_t attribute_count() const { return sums_.size() / 3; }
    void add(std::size_t attribute, std::size_t column, double seconds);
    double mean(std::size_t attribute, std::size_t column) const; // 0 when empty
    std::int64_t count(std::size_t attribute, std::size_t column) const;

private:
    std::vector<double> sums_;
    std::vector<std::int64_t> counts_;
};

struct SupportMatrices {
    AttributePheromones pheromones; // normalized by the run's iteration count
    TimeLagMatrix lags;
    std::size_t iterations = 0;
};

// Ant-guided survey of one step view: winners deposit their support value on
// their items' trails and on absent attributes' skip trails, and their
// estimated lags accumulate in the lag matrix. The trails are normalized by
// the iteration count so runs of different lengths stay comparable.
SupportMatrices build_support_matrices(const TransformedDataset& tds, double min_sup,
                                       std::uint64_t seed);

struct GrowthRateMatrix {
    std::vector<double> up;
    std::vector<double> down;
    std::vector<double> skip;

    std::size_t attribute_count() const { return up.size(); }
};

GrowthRateMatrix growth_matrix(const AttributePheromones& from, const AttributePheromones& to);

// The one maximal pattern the growth matrix supports: every attribute whose
// rising or falling cell clears min_growth contributes its stronger
// variation (ties pick rising). Needs at least two such attributes; the
// pattern's growth is the weakest member cell and its lags are the member
// cells' mean lags from each side.
std::vector<TemporalGradualEmergingPattern> construct_tgeps(const GrowthRateMatrix& growth,
                                                            const SupportMatrices& from,
                                                            const SupportMatrices& to,
                                                            double min_growth,
                                                            std::size_t step_from,
                                                            std::size_t step_to);

struct TrencOptions {
    double min_sup = 0.5;
    double min_rep = 0.5;
    double min_growth = 1.0;
    std::size_t base_step = 1;
    std::uint64_t seed = 0;
    std::size_t threads = 0;
};

// Matrix-based emerging patterns: build support matrices per step, divide
// every other step's matrix by the base step's element-wise, and construct
// patterns from the qualifying growth cells.
std::vector<TemporalGradualEmergingPattern> mine_trenc(const NumericDataset& ds,
                                                       std::size_t ref_attribute,
                                                       const TrencOptions& opts = {});

} // namespace gradmine
