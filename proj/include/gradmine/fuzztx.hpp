#pragma once

#include "gradmine/dataset.hpp"

#include <vector>

namespace gradmine {

struct TriangularMF {
    double a = 0.0; // left foot
    double b = 0.0; // center
    double c = 0.0; // right foot
};

// Piecewise-linear degree in [0,1]; degenerate feet collapse to one-sided
// ramps and a zero-width triangle is 1 exactly at its center.
double membership(const TriangularMF& mf, double t);

// One output tuple per accepted center: the consumed tuple index per source.
struct CrossedDataset {
    NumericDataset data; // time column first, then every source's attributes
    std::vector<std::vector<std::size_t>> provenance; // [row][source]
};

// Fuzzy crossing of unrelated time series: sweep a triangular window from the
// earliest to the latest timestamp in steps of the largest per-source minimum
// adjacent gap; at each stop every source contributes its unconsumed tuple
// with the highest positive membership, and a row is emitted only when all
// sources contribute. Consumed tuples never appear twice.
CrossedDataset cross(const std::vector<NumericDataset>& sources);

} // namespace gradmine
