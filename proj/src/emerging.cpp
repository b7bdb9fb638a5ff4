#include "gradmine/emerging.hpp"

#include "gradmine/graank.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace gradmine {

namespace {

void check_fraction(double value, const char* name) {
    if (!(value > 0.0) || value > 1.0)
        throw std::invalid_argument(std::string(name) + " must be in (0,1]");
}

constexpr double kInfinity = std::numeric_limits<double>::infinity();

} // namespace

double growth_rate(double sup_from, double sup_to) {
    if (sup_from > 0.0) return sup_to / sup_from;
    return sup_to > 0.0 ? kInfinity : 0.0;
}

double growth_rate(const Support& sup_from, const Support& sup_to) {
    if (sup_from.num <= 0) return sup_to.num > 0 ? kInfinity : 0.0;
    return static_cast<double>(sup_to.num * sup_from.den) /
           static_cast<double>(sup_to.den * sup_from.num);
}

std::vector<GradualPattern> decompose_maximal(const GradualPattern& p) {
    if (p.size() < 2) throw std::invalid_argument("decomposition needs at least 2 items");
    std::vector<GradualPattern> pairs;
    pairs.reserve(p.size() * (p.size() - 1) / 2);
    for (std::size_t i = 0; i < p.items.size(); ++i)
        for (std::size_t j = i + 1; j < p.items.size(); ++j) {
            GradualPattern pair;
            pair.items = {p.items[i], p.items[j]};
            pairs.push_back(std::move(pair));
        }
    return pairs;
}

bool id_subset(const IdSet& a, const IdSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

bool antichain(const std::vector<IdSet>& sets) {
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j)
            if (i != j && id_subset(sets[i], sets[j])) return false;
    return true;
}

// Keeps only sets that contain no other set of the collection.
std::vector<IdSet> minimal_sets(std::vector<IdSet> sets) {
    std::sort(sets.begin(), sets.end(), [](const IdSet& a, const IdSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<IdSet> kept;
    for (const IdSet& s : sets) {
        bool dominated = std::any_of(kept.begin(), kept.end(),
                                     [&](const IdSet& k) { return id_subset(k, s); });
        if (!dominated) kept.push_back(s);
    }
    return kept;
}

} // namespace

bool border_valid(const Border& b) {
    if (!antichain(b.left) || !antichain(b.right)) return false;
    for (const IdSet& l : b.left) {
        bool bounded = std::any_of(b.right.begin(), b.right.end(),
                                   [&](const IdSet& r) { return id_subset(l, r); });
        if (!bounded) return false;
    }
    for (const IdSet& r : b.right) {
        bool anchored = std::any_of(b.left.begin(), b.left.end(),
                                    [&](const IdSet& l) { return id_subset(l, r); });
        if (!anchored) return false;
    }
    return true;
}

std::vector<IdSet> border_diff(const IdSet& universe, const std::vector<IdSet>& covered) {
    std::vector<std::vector<std::uint32_t>> escapes;
    escapes.reserve(covered.size());
    for (const IdSet& s : covered) {
        std::vector<std::uint32_t> escape;
        std::set_difference(universe.begin(), universe.end(), s.begin(), s.end(),
                            std::back_inserter(escape));
        if (escape.empty()) return {};
        escapes.push_back(std::move(escape));
    }
    if (escapes.empty()) return {};

    std::vector<IdSet> result;
    for (std::uint32_t x : escapes.front()) result.push_back({x});
    for (std::size_t i = 1; i < escapes.size(); ++i) {
        std::vector<IdSet> grown;
        for (const IdSet& t : result) {
            bool hits = std::any_of(escapes[i].begin(), escapes[i].end(), [&](std::uint32_t x) {
                return std::binary_search(t.begin(), t.end(), x);
            });
            if (hits) {
                grown.push_back(t);
                continue;
            }
            for (std::uint32_t x : escapes[i]) {
                IdSet extended = t;
                extended.insert(std::upper_bound(extended.begin(), extended.end(), x), x);
                grown.push_back(std::move(extended));
            }
        }
        result = minimal_sets(std::move(grown));
    }
    return minimal_sets(std::move(result));
}

std::vector<Border> mbd_llborder(const Border& from, const Border& to) {
    if (from.left.size() != 1 || to.left.size() != 1)
        throw std::invalid_argument("border differential needs left-rooted borders");

    std::vector<Border> differentials;
    for (const IdSet& u : to.right) {
        bool covered_whole = false;
        std::vector<IdSet> intersections;
        for (const IdSet& s : from.right) {
            IdSet inter;
            std::set_intersection(u.begin(), u.end(), s.begin(), s.end(),
                                  std::back_inserter(inter));
            if (inter.size() == u.size()) {
                covered_whole = true;
                break;
            }
            if (!inter.empty()) intersections.push_back(std::move(inter));
        }
        if (covered_whole) continue;

        // Only the maximal intersections constrain the escaping sets.
        std::sort(intersections.begin(), intersections.end());
        intersections.erase(std::unique(intersections.begin(), intersections.end()),
                            intersections.end());
        std::vector<IdSet> maximal;
        for (std::size_t i = 0; i < intersections.size(); ++i) {
            bool inside = false;
            for (std::size_t j = 0; j < intersections.size() && !inside; ++j)
                inside = i != j && id_subset(intersections[i], intersections[j]);
            if (!inside) maximal.push_back(intersections[i]);
        }
        if (maximal.empty()) maximal.push_back({});

        std::vector<IdSet> escaping = border_diff(u, maximal);
        if (escaping.empty()) continue;
        differentials.push_back({std::move(escaping), {u}});
    }
    return differentials;
}

TimeLagMatrix::TimeLagMatrix(std::size_t attribute_count)
    : sums_(attribute_count * 3, 0.0), counts_(attribute_count * 3, 0) {}

void TimeLagMatrix::add(std::size_t attribute, std::size_t column, double seconds) {
    sums_[attribute * 3 + column] += seconds;
    ++counts_[attribute * 3 + column];
}

double TimeLagMatrix::mean(std::size_t attribute, std::size_t column) const {
    std::int64_t n = counts_[attribute * 3 + column];
    return n == 0 ? 0.0 : sums_[attribute * 3 + column] / static_cast<double>(n);
}

std::int64_t TimeLagMatrix::count(std::size_t attribute, std::size_t column) const {
    return counts_[attribute * 3 + column];
}

SupportMatrices build_support_matrices(const TransformedDataset& tds, double min_sup,
                                       std::uint64_t seed) {
    check_fraction(min_sup, "min_sup");
    std::size_t q = tds.data.attributes.size();

    SupportMatrices out;
    out.lags = TimeLagMatrix(q);

    AcoRunConfig config;
    config.attribute_count = q;
    config.min_sup = min_sup;
    config.seed = seed;
    config.support_weighted = true;
    config.reward_skip = true;
    config.canonical_rewards = true;

    auto evaluate = [&](const GradualPattern& p) { return grite_support(tds.data, p); };
    auto on_winner = [&](const GradualPattern& p) {
        ConcordanceMatrix m = build_pattern_matrix(tds.data, p);
        std::vector<double> selected;
        for (std::size_t row : longest_chain_rows(m)) selected.push_back(tds.time_diffs[row]);
        TimeLag lag = estimate_time_lag(selected, tds.time_diffs, min_sup);
        if (!lag.valid) return;
        for (const GradualItem& it : p.items)
            out.lags.add(it.attribute, it.variation == Variation::Up ? 0 : 1, lag.seconds);
    };

    AcoRunResult run = run_attribute_aco(config, evaluate, on_winner);
    out.iterations = run.iterations;

    double scale = 1.0 / static_cast<double>(std::max<std::size_t>(run.iterations, 1));
    for (std::size_t a = 0; a < q; ++a) {
        run.trails.up_ref(a) *= scale;
        run.trails.down_ref(a) *= scale;
        run.trails.skip_ref(a) *= scale;
    }
    out.pheromones = std::move(run.trails);
    return out;
}

GrowthRateMatrix growth_matrix(const AttributePheromones& from, const AttributePheromones& to) {
    std::size_t q = from.attribute_count();
    if (to.attribute_count() != q)
        throw std::invalid_argument("growth needs matrices over the same attributes");
    GrowthRateMatrix g;
    g.up.resize(q);
    g.down.resize(q);
    g.skip.resize(q);
    for (std::size_t a = 0; a < q; ++a) {
        g.up[a] = growth_rate(from.up(a), to.up(a));
        g.down[a] = growth_rate(from.down(a), to.down(a));
        g.skip[a] = growth_rate(from.skip(a), to.skip(a));
    }
    return g;
}

std::vector<TemporalGradualEmergingPattern> construct_tgeps(const GrowthRateMatrix& growth,
                                                            const SupportMatrices& from,
                                                            const SupportMatrices& to,
                                                            double min_growth,
                                                            std::size_t step_from,
                                                            std::size_t step_to) {
    if (!(min_growth > 0.0)) throw std::invalid_argument("min_growth must be positive");

    TemporalGradualEmergingPattern tgep;
    tgep.step_from = step_from;
    tgep.step_to = step_to;
    tgep.growth = kInfinity;

    double sup_from_sum = 0.0;
    double sup_to_sum = 0.0;
    double lag_from_sum = 0.0;
    double lag_to_sum = 0.0;
    std::size_t lag_from_n = 0;
    std::size_t lag_to_n = 0;

    for (std::size_t a = 0; a < growth.attribute_count(); ++a) {
        bool up_ok = growth.up[a] >= min_growth;
        bool down_ok = growth.down[a] >= min_growth;
        if (!up_ok && !down_ok) continue;

        bool rising = up_ok && (!down_ok || growth.up[a] >= growth.down[a]);
        std::size_t col = rising ? 0 : 1;
        double rate = rising ? growth.up[a] : growth.down[a];

        tgep.items.push_back({a, rising ? Variation::Up : Variation::Down});
        tgep.growth = std::min(tgep.growth, rate);
        sup_from_sum += rising ? from.pheromones.up(a) : from.pheromones.down(a);
        sup_to_sum += rising ? to.pheromones.up(a) : to.pheromones.down(a);
        if (from.lags.count(a, col) > 0) {
            lag_from_sum += from.lags.mean(a, col);
            ++lag_from_n;
        }
        if (to.lags.count(a, col) > 0) {
            lag_to_sum += to.lags.mean(a, col);
            ++lag_to_n;
        }
    }

    if (tgep.items.size() < 2) return {};

    double members = static_cast<double>(tgep.items.size());
    tgep.support_from = sup_from_sum / members;
    tgep.support_to = sup_to_sum / members;
    if (lag_from_n > 0) tgep.lag_from_seconds = lag_from_sum / static_cast<double>(lag_from_n);
    if (lag_to_n > 0) tgep.lag_to_seconds = lag_to_sum / static_cast<double>(lag_to_n);
    if (tgep.lag_from_seconds && tgep.lag_to_seconds)
        tgep.lag_mean_seconds = (*tgep.lag_from_seconds + *tgep.lag_to_seconds) / 2.0;
    return {std::move(tgep)};
}

namespace {

// Ids name 2-item patterns so border algebra can work over integers.
struct PairIds {
    std::map<std::vector<GradualItem>, std::uint32_t> ids;
    std::vector<std::vector<GradualItem>> items;

    IdSet decompose(const GradualPattern& p) {
        IdSet set;
        for (const GradualPattern& pair : decompose_maximal(p)) {
            auto [it, fresh] = ids.try_emplace(pair.items, static_cast<std::uint32_t>(items.size()));
            if (fresh) items.push_back(pair.items);
            set.push_back(it->second);
        }
        std::sort(set.begin(), set.end());
        return set;
    }
};

std::vector<const TemporalGradualPattern*> maximal_patterns(
    const std::vector<TemporalGradualPattern>& tgps) {
    std::vector<const TemporalGradualPattern*> maximal;
    for (const TemporalGradualPattern& p : tgps) {
        bool dominated = std::any_of(tgps.begin(), tgps.end(), [&](const TemporalGradualPattern& q) {
            return q.pattern.items != p.pattern.items && p.pattern.subset_of(q.pattern);
        });
        if (!dominated) maximal.push_back(&p);
    }
    return maximal;
}

GradualPattern to_view(const std::vector<GradualItem>& items,
                       const std::vector<std::size_t>& source_attributes) {
    GradualPattern view;
    for (const GradualItem& it : items) {
        auto pos = std::find(source_attributes.begin(), source_attributes.end(), it.attribute);
        view.items.push_back({static_cast<std::size_t>(pos - source_attributes.begin()),
                              it.variation});
    }
    std::sort(view.items.begin(), view.items.end());
    return view;
}

TimeLag view_lag(const TransformedDataset& td, const GradualPattern& view, double min_sup) {
    ConcordanceMatrix m = build_pattern_matrix(td.data, view);
    std::vector<double> selected;
    for (std::size_t row : longest_chain_rows(m)) selected.push_back(td.time_diffs[row]);
    return estimate_time_lag(selected, td.time_diffs, min_sup);
}

} // namespace

std::vector<TemporalGradualEmergingPattern> mine_bt_graank(const NumericDataset& ds,
                                                           std::size_t ref_attribute,
                                                           const BtGraankOptions& opts) {
    check_fraction(opts.min_sup, "min_sup");
    check_fraction(opts.min_rep, "min_rep");
    ds.validate();
    if (!ds.has_time()) throw std::invalid_argument("emerging mining needs a time column");

    std::size_t steps = max_transform_steps(ds.tuple_count, opts.min_rep);
    if (steps < 2)
        throw std::invalid_argument("emerging mining needs at least 2 transformation steps");

    TGraankOptions tgp_opts;
    tgp_opts.min_sup = opts.min_sup;
    tgp_opts.min_rep = opts.min_rep;
    tgp_opts.threads = opts.threads;
    std::vector<TemporalGradualPattern> tgps = mine_tgraank(ds, ref_attribute, tgp_opts);

    std::vector<std::vector<TemporalGradualPattern>> per_step(steps + 1);
    for (TemporalGradualPattern& p : tgps) per_step[p.step].push_back(std::move(p));

    std::vector<TransformedDataset> views(steps + 1);
    for (std::size_t s = 1; s <= steps; ++s) views[s] = transform_dataset(ds, ref_attribute, s);

    std::vector<TemporalGradualEmergingPattern> results;
    for (std::size_t s = 1; s + 1 <= steps; ++s) {
        const auto& to_tgps = per_step[s + 1];
        if (to_tgps.empty()) continue;

        PairIds pairs;
        Border from_border{{{}}, {}};
        Border to_border{{{}}, {}};
        for (const TemporalGradualPattern* p : maximal_patterns(per_step[s]))
            from_border.right.push_back(pairs.decompose(p->pattern));
        for (const TemporalGradualPattern* p : maximal_patterns(to_tgps))
            to_border.right.push_back(pairs.decompose(p->pattern));

        std::set<std::vector<GradualItem>> seen;
        std::vector<TemporalGradualEmergingPattern> batch;
        for (const Border& diff : mbd_llborder(from_border, to_border)) {
            for (const IdSet& idset : diff.left) {
                std::set<GradualItem> merged;
                for (std::uint32_t id : idset)
                    merged.insert(pairs.items[id].begin(), pairs.items[id].end());
                std::vector<GradualItem> items(merged.begin(), merged.end());
                if (!seen.insert(items).second) continue;

                GradualPattern from_view = to_view(items, views[s].source_attributes);
                GradualPattern to_view_p = to_view(items, views[s + 1].source_attributes);
                Support sup_from = grite_support(views[s].data, from_view);
                Support sup_to = grite_support(views[s + 1].data, to_view_p);
                if (!meets_threshold(sup_to, opts.min_sup)) continue;
                if (meets_threshold(sup_from, opts.min_sup)) continue;

                TemporalGradualEmergingPattern tgep;
                tgep.items = std::move(items);
                tgep.growth = growth_rate(sup_from, sup_to);
                tgep.support_from = sup_from.value();
                tgep.support_to = sup_to.value();
                tgep.step_from = s;
                tgep.step_to = s + 1;
                TimeLag lag_from = view_lag(views[s], from_view, opts.min_sup);
                TimeLag lag_to = view_lag(views[s + 1], to_view_p, opts.min_sup);
                if (lag_from.valid) tgep.lag_from_seconds = lag_from.seconds;
                if (lag_to.valid) tgep.lag_to_seconds = lag_to.seconds;
                if (tgep.lag_from_seconds && tgep.lag_to_seconds)
                    tgep.lag_mean_seconds = (*tgep.lag_from_seconds + *tgep.lag_to_seconds) / 2.0;
                batch.push_back(std::move(tgep));
            }
        }
        std::sort(batch.begin(), batch.end(),
                  [](const TemporalGradualEmergingPattern& x,
                     const TemporalGradualEmergingPattern& y) { return x.items < y.items; });
        results.insert(results.end(), std::make_move_iterator(batch.begin()),
                       std::make_move_iterator(batch.end()));
    }
    return results;
}

std::vector<TemporalGradualEmergingPattern> mine_trenc(const NumericDataset& ds,
                                                       std::size_t ref_attribute,
                                                       const TrencOptions& opts) {
    check_fraction(opts.min_sup, "min_sup");
    check_fraction(opts.min_rep, "min_rep");
    if (!(opts.min_growth > 0.0)) throw std::invalid_argument("min_growth must be positive");
    ds.validate();
    if (!ds.has_time()) throw std::invalid_argument("emerging mining needs a time column");

    std::size_t steps = max_transform_steps(ds.tuple_count, opts.min_rep);
    if (opts.base_step < 1 || opts.base_step > steps)
        throw std::invalid_argument("base_step must be within the transformation steps");

    auto survey = [&](std::size_t s) {
        TransformedDataset td = transform_dataset(ds, ref_attribute, s);
        SupportMatrices m;
        if (td.data.tuple_count >= 2)
            m = build_support_matrices(td, opts.min_sup, Rng::derive(opts.seed, s).next_u64());
        else
            m.lags = TimeLagMatrix(td.data.attributes.size());
        return std::make_pair(std::move(m), std::move(td));
    };

    std::vector<std::pair<SupportMatrices, TransformedDataset>> surveys(steps + 1);
    if (opts.threads == 1 || steps == 1) {
        for (std::size_t s = 1; s <= steps; ++s) surveys[s] = survey(s);
    } else {
        std::vector<std::future<std::pair<SupportMatrices, TransformedDataset>>> futures;
        for (std::size_t s = 1; s <= steps; ++s)
            futures.push_back(std::async(std::launch::async, survey, s));
        for (std::size_t s = 1; s <= steps; ++s) surveys[s] = futures[s - 1].get();
    }

    const auto& [base, base_view] = surveys[opts.base_step];
    std::vector<TemporalGradualEmergingPattern> results;
    for (std::size_t s = 1; s <= steps; ++s) {
        if (s == opts.base_step) continue;
        const auto& [other, view] = surveys[s];
        if (base.iterations == 0 || other.iterations == 0) continue;
        GrowthRateMatrix growth = growth_matrix(base.pheromones, other.pheromones);
        for (TemporalGradualEmergingPattern& tgep :
             construct_tgeps(growth, base, other, opts.min_growth, opts.base_step, s)) {
            for (GradualItem& it : tgep.items) it.attribute = view.source_attributes[it.attribute];
            std::sort(tgep.items.begin(), tgep.items.end());
            results.push_back(std::move(tgep));
        }
    }
    return results;
}

} // namespace gradmine
