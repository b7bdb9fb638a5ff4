#include "gradmine/temporal.hpp"

#include "gradmine/aco.hpp"
#include "gradmine/graank.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

namespace gradmine {

namespace {

void check_fraction(double value, const char* name) {
    if (!(value > 0.0) || value > 1.0)
        throw std::invalid_argument(std::string(name) + " must be in (0,1]");
}

double triangle_membership(double a, double b, double c, double x) {
    if (x == b) return 1.0;
    if (x < b) return b > a && x > a ? (x - a) / (b - a) : 0.0;
    return c > b && x < c ? (c - x) / (c - b) : 0.0;
}

} // namespace

std::size_t max_transform_steps(std::size_t tuple_count, double min_rep) {
    check_fraction(min_rep, "min_rep");
    if (tuple_count < 2) throw std::invalid_argument("transformation needs at least 2 tuples");
    double raw = static_cast<double>(tuple_count) * (1.0 - min_rep);
    auto steps = static_cast<std::size_t>(std::floor(raw + 1e-9));
    steps = std::max<std::size_t>(steps, 1);
    return std::min(steps, tuple_count - 1);
}

TransformedDataset transform_dataset(const NumericDataset& ds, std::size_t ref_attribute,
                                     std::size_t step) {
    ds.validate();
    if (!ds.has_time()) throw std::invalid_argument("transformation needs a time column");
    if (ref_attribute >= ds.attributes.size() || ds.is_time_column(ref_attribute))
        throw std::invalid_argument("reference attribute must be a numeric column");
    if (step < 1 || step >= ds.tuple_count)
        throw std::invalid_argument("step must be in [1, tuple_count)");

    const std::vector<double>& times = ds.time_values();
    std::size_t rows = ds.tuple_count - step;

    TransformedDataset td;
    td.step = step;
    td.representativity = {static_cast<std::int64_t>(rows),
                           static_cast<std::int64_t>(ds.tuple_count)};
    td.source_attributes.push_back(ref_attribute);
    for (std::size_t a : ds.numeric_columns())
        if (a != ref_attribute) td.source_attributes.push_back(a);

    td.data.name = ds.name;
    td.data.tuple_count = rows;
    for (std::size_t k = 0; k < td.source_attributes.size(); ++k) {
        const Attribute& src = ds.attributes[td.source_attributes[k]];
        Attribute col;
        col.name = src.name;
        std::size_t offset = k == 0 ? 0 : step;
        col.values.assign(src.values.begin() + static_cast<std::ptrdiff_t>(offset),
                          src.values.begin() + static_cast<std::ptrdiff_t>(offset + rows));
        td.data.attributes.push_back(std::move(col));
    }
    td.time_diffs.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) td.time_diffs[i] = std::abs(times[i + step] - times[i]);
    return td;
}

double sample_quartile(std::vector<double> values, double fraction) {
    if (values.empty()) throw std::invalid_argument("quartile of an empty sample");
    std::sort(values.begin(), values.end());
    double h = static_cast<double>(values.size() - 1) * fraction;
    auto lo = static_cast<std::size_t>(std::floor(h));
    std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

TimeLag estimate_time_lag(const std::vector<double>& selected_diffs,
                          const std::vector<double>& all_diffs, double min_sup) {
    if (all_diffs.empty()) throw std::invalid_argument("no time differences to estimate from");

    double median = sample_quartile(all_diffs, 0.5);
    double a, b, c;
    if (all_diffs.size() < 8) {
        a = *std::min_element(all_diffs.begin(), all_diffs.end());
        b = median;
        c = *std::max_element(all_diffs.begin(), all_diffs.end());
    } else {
        a = sample_quartile(all_diffs, 0.25);
        b = median;
        c = sample_quartile(all_diffs, 0.75);
    }
    double slice = 0.1 * median;

    // A member counts only when it sits clearly inside the function, above
    // the half-membership line.
    auto try_offset = [&](double offset) {
        std::int64_t strong = 0;
        for (double x : selected_diffs)
            if (triangle_membership(a + offset, b + offset, c + offset, x) > 0.5) ++strong;
        return Support{strong, static_cast<std::int64_t>(selected_diffs.size())};
    };

    std::vector<double> offsets;
    offsets.push_back(0.0);
    for (int k = 1; k <= 10; ++k) offsets.push_back(-slice * k);
    for (int k = 1; k <= 10; ++k) offsets.push_back(slice * k);

    for (double offset : offsets) {
        Support sup = try_offset(offset);
        if (meets_threshold(sup, min_sup)) return {true, b + offset, sup};
    }
    return {};
}

namespace {

std::vector<TemporalGradualPattern> mine_step(const NumericDataset& ds, std::size_t ref_attribute,
                                              std::size_t step, const TGraankOptions& opts) {
    std::vector<TemporalGradualPattern> found;
    TransformedDataset td = transform_dataset(ds, ref_attribute, step);
    if (td.data.tuple_count < 2) return found;

    std::vector<GradualPattern> candidates;
    if (opts.engine == TemporalEngine::Exhaustive) {
        GraankOptions mine_opts;
        mine_opts.min_sup = opts.min_sup;
        candidates = mine_grite(td.data, mine_opts);
    } else {
        AcoRunConfig config;
        config.attribute_count = td.data.attributes.size();
        config.min_sup = opts.min_sup;
        config.seed = Rng::derive(opts.seed, step).next_u64();
        auto evaluate = [&](const GradualPattern& p) { return grite_support(td.data, p); };
        candidates = run_attribute_aco(config, evaluate).winners;
    }

    for (const GradualPattern& p : candidates) {
        if (!p.contains_attribute(0)) continue;

        ConcordanceMatrix m = build_pattern_matrix(td.data, p);
        std::vector<double> selected;
        for (std::size_t row : longest_chain_rows(m)) selected.push_back(td.time_diffs[row]);
        TimeLag lag = estimate_time_lag(selected, td.time_diffs, opts.min_sup);
        if (!lag.valid) continue;

        TemporalGradualPattern tgp;
        tgp.step = step;
        tgp.representativity = td.representativity;
        tgp.lag = lag;
        tgp.pattern.support = p.support;
        for (GradualItem it : p.items) {
            it.attribute = td.source_attributes[it.attribute];
            tgp.pattern.items.push_back(it);
        }
        std::sort(tgp.pattern.items.begin(), tgp.pattern.items.end());
        tgp.reference = {ref_attribute, Variation::Up};
        found.push_back(std::move(tgp));
    }

    std::sort(found.begin(), found.end(),
              [](const TemporalGradualPattern& x, const TemporalGradualPattern& y) {
                  return x.pattern.items < y.pattern.items;
              });
    return found;
}

} // namespace

std::vector<TemporalGradualPattern> mine_tgraank(const NumericDataset& ds,
                                                 std::size_t ref_attribute,
                                                 const TGraankOptions& opts) {
    check_fraction(opts.min_sup, "min_sup");
    check_fraction(opts.min_rep, "min_rep");
    ds.validate();
    if (!ds.has_time()) throw std::invalid_argument("temporal mining needs a time column");
    if (ds.tuple_count < 2) throw std::invalid_argument("mining needs at least 2 tuples");

    std::size_t steps = max_transform_steps(ds.tuple_count, opts.min_rep);
    std::vector<TemporalGradualPattern> results;

    if (opts.threads == 1 || steps == 1) {
        for (std::size_t s = 1; s <= steps; ++s) {
            std::vector<TemporalGradualPattern> part = mine_step(ds, ref_attribute, s, opts);
            results.insert(results.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
        }
        return results;
    }

    std::vector<std::future<std::vector<TemporalGradualPattern>>> futures;
    futures.reserve(steps);
    for (std::size_t s = 1; s <= steps; ++s)
        futures.push_back(std::async(std::launch::async, mine_step, std::cref(ds), ref_attribute,
                                     s, std::cref(opts)));
    for (auto& f : futures) {
        std::vector<TemporalGradualPattern> part = f.get();
        results.insert(results.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
    }
    return results;
}

} // namespace gradmine
