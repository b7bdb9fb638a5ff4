#pragma once

#include "gradmine/gradcore.hpp"

#include <cstdint>
#include <vector>

namespace gradmine {

// Step-s view of a timestamped dataset: the reference attribute keeps rows
// 0..n-s-1 while every other attribute is read s rows later, so a pattern on
// the view relates reference changes to later changes elsewhere. Column 0 of
// data is the reference attribute; source_attributes maps view columns back
// to the source dataset.
struct TransformedDataset {
    NumericDataset data;
    std::vector<double> time_diffs; // seconds between paired rows, per view row
    std::vector<std::size_t> source_attributes;
    std::size_t step = 1;
    Support representativity; // view rows over source rows
};

// Highest step that keeps the representativity at or above min_rep,
// never below 1.
std::size_t max_transform_steps(std::size_t tuple_count, double min_rep);

TransformedDataset transform_dataset(const NumericDataset& ds, std::size_t ref_attribute,
                                     std::size_t step);

struct TimeLag {
    bool valid = false;
    double seconds = 0.0; // signed; positive means the change follows later
    Support sup;          // members with positive membership over members

    char sign() const { return seconds < 0.0 ? '-' : '+'; }
};

// Interpolated quartile of the values at the given fraction (0.25, 0.5, 0.75).
double sample_quartile(std::vector<double> values, double fraction);

// Fits a triangular membership function over all_diffs (quartiles when there
// are at least 8 values, full span with the median peak otherwise) and slides
// it in 0.1-median slices, leftward up to 10 times then rightward up to 10
// times, until the fraction of selected_diffs with membership above 0.5
// reaches min_sup. Returns the accepted center; invalid when no position
// reaches the threshold.
TimeLag estimate_time_lag(const std::vector<double>& selected_diffs,
                          const std::vector<double>& all_diffs, double min_sup);

struct TemporalGradualPattern {
    GradualItem reference;  // on source attribute indices
    GradualPattern pattern; // includes the reference item, sorted by attribute
    std::size_t step = 1;
    Support representativity;
    TimeLag lag;
};

enum class TemporalEngine { Exhaustive, Aco };

struct TGraankOptions {
    double min_sup = 0.5;
    double min_rep = 0.5;
    TemporalEngine engine = TemporalEngine::Exhaustive;
    std::uint64_t seed = 0;
    std::size_t threads = 0; // 0 = hardware concurrency
};

// For each step up to the representativity limit: build the step view, mine
// longest-chain frequent patterns that include the reference attribute, and
// estimate each pattern's time lag from the chain rows. Only patterns with a
// valid lag are returned; items are reported on source attribute indices with
// the reference direction fixed to Up.
std::vector<TemporalGradualPattern> mine_tgraank(const NumericDataset& ds,
                                                 std::size_t ref_attribute,
                                                 const TGraankOptions& opts = {});

} // namespace gradmine
