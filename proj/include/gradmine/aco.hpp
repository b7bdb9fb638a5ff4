#pragma once

#include "gradmine/gradcore.hpp"
#include "gradmine/paraminer.hpp"
#include "gradmine/rng.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace gradmine {

// Per-attribute pheromone trails over the three choices an ant makes for an
// attribute: rising, falling, or left out of the candidate.
class AttributePheromones {
public:
    AttributePheromones() = default;
    explicit AttributePheromones(std::size_t attribute_count);

    std::size_t attribute_count() const { return up_.size(); }
    double up(std::size_t a) const { return up_[a]; }
    double down(std::size_t a) const { return down_[a]; }
    double skip(std::size_t a) const { return skip_[a]; }

    // Weights {up, down, skip} for one attribute; sampling normalizes them.
    std::vector<double> option_weights(std::size_t a) const;

    // Deposits amount on each item's chosen trail; when reward_skip is set the
    // attributes absent from the pattern get the same amount on their skip
    // trail.
    void reward(const GradualPattern& p, double amount, bool reward_skip);

    double& up_ref(std::size_t a) { return up_[a]; }
    double& down_ref(std::size_t a) { return down_[a]; }
    double& skip_ref(std::size_t a) { return skip_[a]; }

private:
    std::vector<double> up_;
    std::vector<double> down_;
    std::vector<double> skip_;
};

// Normalized {up, down, skip} share of one attribute's trails; all zero when
// the row carries no mass.
std::array<double, 3> option_probabilities(const AttributePheromones& trails, std::size_t a);

// One candidate drawn from the trails: each attribute independently picks
// rising, falling, or absent. The result is not canonicalized.
GradualPattern sample_candidate(AttributePheromones& trails, Rng& rng);

struct AcoRunConfig {
    std::size_t attribute_count = 0;
    double min_sup = 0.5;
    std::uint64_t seed = 0;
    std::size_t max_iterations = 0; // 0 picks max(100, 10 * attribute_count)
    bool support_weighted = false;  // deposit the support value instead of 1
    bool reward_skip = false;       // also reward the skip trail of absent attributes
    bool canonical_rewards = false; // deposit on the canonical orientation, not the sampled one
};

struct AcoRunResult {
    std::vector<GradualPattern> winners; // canonical, deduped, sorted by items
    AttributePheromones trails;
    std::size_t iterations = 0;
    std::size_t winner_updates = 0; // successful trail deposits
};

// Stochastic search shared by the attribute-based variants: sample candidates
// from the trails, evaluate the new ones, reward the frequent, remember the
// infrequent, and stop on the first candidate that already won or when the
// iteration budget runs out. evaluate must return the support of a size >= 2
// candidate; on_winner, when set, fires once per frequent evaluation before
// the deposit.
AcoRunResult run_attribute_aco(
    const AcoRunConfig& config,
    const std::function<Support(const GradualPattern&)>& evaluate,
    const std::function<void(const GradualPattern&)>& on_winner = nullptr);

struct AcoGraankOptions {
    double min_sup = 0.5;
    std::uint64_t seed = 0;
    std::size_t max_iterations = 0;
};

// Run counters for the stochastic miners, filled when the caller passes one.
struct AcoMiningStats {
    std::size_t iterations = 0;
    std::size_t winner_updates = 0;
};

// Ant-guided counterpart of the level-wise miner: same acceptance test per
// candidate, but candidates come from pheromone trails instead of joins.
// Returns canonical patterns of size >= 2 sorted by items.
std::vector<GradualPattern> mine_aco_graank(const NumericDataset& ds, const AcoGraankOptions& opts = {},
                                            AcoMiningStats* stats = nullptr);

class SquareMatrix {
public:
    SquareMatrix() = default;
    SquareMatrix(std::size_t n, double fill);

    std::size_t size() const { return n_; }
    double at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
    double& at(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }

private:
    std::size_t n_ = 0;
    std::vector<double> cells_;
};

// Search structures over tuple pairs: the cost of a pair falls with the
// number of retained items that cover it, and the pheromone matrix starts
// uniform. min_len is the minimum covered-pair count an item needs to be
// retained; it defaults to tuple_count - 1, the pair count a chain over all
// tuples needs from every item.
struct NodeStructures {
    EncodedTransactions transactions;
    std::vector<ItemTids> items; // retained items with their pair ids
    SquareMatrix cost;           // tuple_count x tuple_count
    SquareMatrix pheromone;      // tuple_count x tuple_count, init 1
};

NodeStructures build_node_structures(const NumericDataset& ds,
                                     std::optional<std::int64_t> min_len = std::nullopt);

struct AcoParaMinerOptions {
    double min_sup = 0.5;
    double evaporation = 0.5;
    std::uint64_t seed = 0;
    std::size_t max_iterations = 0; // 0 picks max(100, tuple_count)
};

// Ant-guided search over tuple pairs: draw a pair with probability rising in
// pheromone and falling in cost, collect every retained item covering it, and
// accept the collection when its pair set is large enough. Accepted pairs
// reinforce the trail over their whole pair set; rejected ones evaporate it.
// Returns patterns of size >= 2 in mined orientation sorted by items, with
// longest-chain support.
std::vector<GradualPattern> mine_aco_paraminer(const NumericDataset& ds,
                                               const AcoParaMinerOptions& opts = {},
                                               AcoMiningStats* stats = nullptr);

} // namespace gradmine
