#pragma once

#include "gradmine/gradcore.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gradmine {

// A transaction is the set of gradual items one ordered tuple pair satisfies;
// after reduction a transaction stands for every pair that produced the same
// item set, with its weight counting them.
struct Transaction {
    std::vector<std::size_t> tids; // pair ids grouped into this row
    std::vector<GradualItem> items;
    std::int64_t weight = 1;
};

struct EncodedTransactions {
    std::size_t tuple_count = 0;
    std::size_t attribute_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs; // pair id -> (i, j), i < j
    std::vector<Transaction> transactions;

    std::string pair_label(std::size_t pair_id) const; // "t12" style
};

EncodedTransactions encode_transactions(const NumericDataset& ds);

// Collapses identical item sets; weights count the grouped pairs and tid
// lists keep them recoverable.
EncodedTransactions reduce_dataset(const EncodedTransactions& enc);

struct ItemTids {
    GradualItem item;
    std::vector<std::size_t> tids; // ascending pair ids
};

// Items ordered by falling occurrence count.
using ItemTidMap = std::vector<ItemTids>;

// Drops items covering fewer than min_len pairs; the survivors are sorted by
// descending coverage.
ItemTidMap sort_filter_items(const EncodedTransactions& enc, std::int64_t min_len);

// Pair count a pattern must cover to be frequent: a chain of
// ceil(min_sup * n) tuples produces one fewer adjacent pairs, never less
// than 1.
std::int64_t frequency_bound(std::size_t tuple_count, double min_sup);

struct ParaMinerOptions {
    double min_sup = 0.5;
};

// Closed frequent gradual patterns of size >= 2 via depth-first closure
// extension over the encoded pairs. Patterns keep the orientation they were
// mined in; the reported support is the longest tuple chain through the
// pattern's pairs, over the tuple count.
std::vector<GradualPattern> mine_paraminer(const NumericDataset& ds,
                                           const ParaMinerOptions& opts = {});

// Direct enumeration of the same closed set, for cross checking.
std::vector<GradualPattern> brute_force_closed_patterns(const NumericDataset& ds, double min_sup);

} // namespace gradmine
