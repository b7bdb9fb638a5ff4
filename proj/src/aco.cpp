#include "gradmine/aco.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace gradmine {

namespace {

void check_min_sup(double min_sup) {
    if (!(min_sup > 0.0) || min_sup > 1.0) throw std::invalid_argument("min_sup must be in (0,1]");
}

Support chain_support_of(const std::vector<std::size_t>& tids,
                         const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                         std::size_t tuple_count) {
    ConcordanceMatrix m(tuple_count);
    for (std::size_t tid : tids) m.set(pairs[tid].first, pairs[tid].second);
    return {static_cast<std::int64_t>(longest_chain_length(m)),
            static_cast<std::int64_t>(tuple_count)};
}

} // namespace

AttributePheromones::AttributePheromones(std::size_t attribute_count)
    : up_(attribute_count, 1.0), down_(attribute_count, 1.0), skip_(attribute_count, 1.0) {}

std::vector<double> AttributePheromones::option_weights(std::size_t a) const {
    return {up_[a], down_[a], skip_[a]};
}

void AttributePheromones::reward(const GradualPattern& p, double amount, bool reward_skip) {
    for (const GradualItem& it : p.items) {
        if (it.variation == Variation::Up)
            up_[it.attribute] += amount;
        else
            down_[it.attribute] += amount;
    }
    if (!reward_skip) return;
    for (std::size_t a = 0; a < skip_.size(); ++a)
        if (!p.contains_attribute(a)) skip_[a] += amount;
}

std::array<double, 3> option_probabilities(const AttributePheromones& trails, std::size_t a) {
    double up = trails.up(a);
    double down = trails.down(a);
    double skip = trails.skip(a);
    double total = up + down + skip;
    if (!(total > 0.0)) return {0.0, 0.0, 0.0};
    return {up / total, down / total, skip / total};
}

GradualPattern sample_candidate(AttributePheromones& trails, Rng& rng) {
    GradualPattern p;
    for (std::size_t a = 0; a < trails.attribute_count(); ++a) {
        std::vector<double> weights = trails.option_weights(a);
        if (!(weights[0] + weights[1] + weights[2] > 0.0)) continue;
        switch (rng.next_weighted(weights)) {
        case 0: p.items.push_back({a, Variation::Up}); break;
        case 1: p.items.push_back({a, Variation::Down}); break;
        default: break;
        }
    }
    return p;
}

AcoRunResult run_attribute_aco(const AcoRunConfig& config,
                               const std::function<Support(const GradualPattern&)>& evaluate,
                               const std::function<void(const GradualPattern&)>& on_winner) {
    AcoRunResult result;
    result.trails = AttributePheromones(config.attribute_count);
    if (config.attribute_count == 0) return result;

    Rng rng(config.seed);
    std::size_t cap = config.max_iterations
                          ? config.max_iterations
                          : std::max<std::size_t>(100, 10 * config.attribute_count);
    std::set<std::vector<GradualItem>> won;
    std::vector<GradualPattern> losers;

    while (result.iterations < cap) {
        ++result.iterations;
        GradualPattern sampled = sample_candidate(result.trails, rng);
        if (sampled.size() < 2) continue;
        GradualPattern candidate = canonical(sampled);
        if (won.count(candidate.items)) break;

        bool dominated = std::any_of(losers.begin(), losers.end(),
                                     [&](const GradualPattern& l) { return l.subset_of(candidate); });
        if (!dominated)
            dominated = std::any_of(result.winners.begin(), result.winners.end(),
                                    [&](const GradualPattern& w) { return candidate.subset_of(w); });
        if (dominated) continue;

        Support sup = evaluate(candidate);
        if (meets_threshold(sup, config.min_sup)) {
            candidate.support = sup;
            won.insert(candidate.items);
            result.winners.push_back(candidate);
            if (on_winner) on_winner(candidate);
            double amount = config.support_weighted ? sup.value() : 1.0;
            result.trails.reward(config.canonical_rewards ? candidate : sampled, amount,
                                 config.reward_skip);
            ++result.winner_updates;
        } else {
            losers.push_back(candidate);
        }
    }

    std::sort(result.winners.begin(), result.winners.end());
    return result;
}

std::vector<GradualPattern> mine_aco_graank(const NumericDataset& ds, const AcoGraankOptions& opts,
                                            AcoMiningStats* stats) {
    check_min_sup(opts.min_sup);
    ds.validate();
    if (ds.tuple_count < 2) throw std::invalid_argument("mining needs at least 2 tuples");

    std::vector<std::size_t> attrs = ds.numeric_columns();
    AcoRunConfig config;
    config.attribute_count = attrs.size();
    config.min_sup = opts.min_sup;
    config.seed = opts.seed;
    config.max_iterations = opts.max_iterations;

    auto remap = [&](GradualPattern p) {
        for (GradualItem& it : p.items) it.attribute = attrs[it.attribute];
        return p;
    };
    auto evaluate = [&](const GradualPattern& p) {
        return kendall_support(build_pattern_matrix(ds, remap(p)));
    };

    AcoRunResult run = run_attribute_aco(config, evaluate);
    if (stats) *stats = {run.iterations, run.winner_updates};
    std::vector<GradualPattern> winners = std::move(run.winners);
    for (GradualPattern& w : winners) w = remap(std::move(w));
    return winners;
}

SquareMatrix::SquareMatrix(std::size_t n, double fill) : n_(n), cells_(n * n, fill) {}

NodeStructures build_node_structures(const NumericDataset& ds,
                                     std::optional<std::int64_t> min_len) {
    NodeStructures ns;
    ns.transactions = reduce_dataset(encode_transactions(ds));
    std::size_t n = ns.transactions.tuple_count;
    std::int64_t retain = min_len.value_or(static_cast<std::int64_t>(n) - 1);
    ns.items = sort_filter_items(ns.transactions, retain);

    ns.cost = SquareMatrix(n, 1.0);
    ns.pheromone = SquareMatrix(n, 1.0);
    std::vector<std::size_t> coverage(ns.transactions.pairs.size(), 0);
    for (const ItemTids& entry : ns.items)
        for (std::size_t tid : entry.tids) ++coverage[tid];
    for (std::size_t id = 0; id < coverage.size(); ++id) {
        auto [i, j] = ns.transactions.pairs[id];
        double c = 1.0 / (1.0 + static_cast<double>(coverage[id]));
        ns.cost.at(i, j) = c;
        ns.cost.at(j, i) = c;
    }
    return ns;
}

std::vector<GradualPattern> mine_aco_paraminer(const NumericDataset& ds,
                                               const AcoParaMinerOptions& opts,
                                               AcoMiningStats* stats) {
    check_min_sup(opts.min_sup);
    if (!(opts.evaporation > 0.0) || !(opts.evaporation < 1.0))
        throw std::invalid_argument("evaporation must be in (0,1)");

    NodeStructures ns = build_node_structures(ds);
    std::size_t n = ns.transactions.tuple_count;
    std::int64_t bound = frequency_bound(n, opts.min_sup);

    std::vector<std::size_t> pair_id(n * n, static_cast<std::size_t>(-1));
    for (std::size_t id = 0; id < ns.transactions.pairs.size(); ++id) {
        auto [i, j] = ns.transactions.pairs[id];
        pair_id[i * n + j] = id;
    }

    Rng rng(opts.seed);
    std::size_t cap = opts.max_iterations ? opts.max_iterations : std::max<std::size_t>(100, n);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::set<std::vector<GradualItem>> emitted;
    std::vector<GradualPattern> results;

    std::vector<std::pair<std::size_t, std::size_t>> nodes;
    nodes.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) nodes.emplace_back(i, j);

    std::size_t accepted_count = 0;
    std::size_t iterations = 0;
    std::vector<double> weights(nodes.size(), 0.0);
    for (std::size_t iter = 0; iter < cap; ++iter) {
        ++iterations;
        double total = 0.0;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            auto [i, j] = nodes[k];
            weights[k] = ns.pheromone.at(i, j) / ns.cost.at(i, j);
            total += weights[k];
        }
        if (!(total > 0.0)) break;

        auto node = nodes[rng.next_weighted(weights)];
        if (!seen.insert(node).second) break;

        std::size_t id = pair_id[node.first * n + node.second];
        std::vector<const ItemTids*> covering;
        if (id != static_cast<std::size_t>(-1))
            for (const ItemTids& entry : ns.items)
                if (std::binary_search(entry.tids.begin(), entry.tids.end(), id))
                    covering.push_back(&entry);

        std::vector<std::size_t> shared;
        if (!covering.empty()) {
            shared = covering.front()->tids;
            std::vector<std::size_t> next;
            for (std::size_t k = 1; k < covering.size(); ++k) {
                next.clear();
                std::set_intersection(shared.begin(), shared.end(), covering[k]->tids.begin(),
                                      covering[k]->tids.end(), std::back_inserter(next));
                shared.swap(next);
            }
        }

        Support sup = chain_support_of(shared, ns.transactions.pairs, n);
        bool accepted = covering.size() >= 2 && sup.num - 1 >= bound;
        if (accepted) {
            GradualPattern p;
            for (const ItemTids* entry : covering) p.items.push_back(entry->item);
            std::sort(p.items.begin(), p.items.end());
            p.support = sup;
            if (emitted.insert(p.items).second) results.push_back(std::move(p));
            ++accepted_count;
            for (std::size_t tid : shared) {
                auto [i, j] = ns.transactions.pairs[tid];
                ns.pheromone.at(i, j) += 1.0;
            }
        } else if (!shared.empty()) {
            for (std::size_t tid : shared) {
                auto [i, j] = ns.transactions.pairs[tid];
                ns.pheromone.at(i, j) *= 1.0 - opts.evaporation;
            }
        } else {
            ns.pheromone.at(node.first, node.second) *= 1.0 - opts.evaporation;
        }
    }

    if (stats) *stats = {iterations, accepted_count};
    std::sort(results.begin(), results.end());
    return results;
}

} // namespace gradmine
