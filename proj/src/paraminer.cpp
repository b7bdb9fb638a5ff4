#include "gradmine/paraminer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace gradmine {

namespace {

std::vector<std::size_t> intersect_sorted(const std::vector<std::size_t>& a,
                                          const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains_sorted(const std::vector<std::size_t>& haystack,
                     const std::vector<std::size_t>& needle) {
    return std::includes(haystack.begin(), haystack.end(), needle.begin(), needle.end());
}

Support chain_support(const std::vector<std::size_t>& tids,
                      const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                      std::size_t tuple_count) {
    ConcordanceMatrix m(tuple_count);
    for (std::size_t tid : tids) m.set(pairs[tid].first, pairs[tid].second);
    return {static_cast<std::int64_t>(longest_chain_length(m)),
            static_cast<std::int64_t>(tuple_count)};
}

} // namespace

std::string EncodedTransactions::pair_label(std::size_t pair_id) const {
    const auto& [i, j] = pairs.at(pair_id);
    return "t" + std::to_string(i + 1) + std::to_string(j + 1);
}

EncodedTransactions encode_transactions(const NumericDataset& ds) {
    ds.validate();
    if (ds.tuple_count < 2) throw std::invalid_argument("encoding needs at least 2 tuples");

    EncodedTransactions enc;
    enc.tuple_count = ds.tuple_count;
    std::vector<std::size_t> attrs = ds.numeric_columns();
    enc.attribute_count = attrs.size();

    for (std::size_t i = 0; i < ds.tuple_count; ++i) {
        for (std::size_t j = i + 1; j < ds.tuple_count; ++j) {
            Transaction t;
            t.tids = {enc.pairs.size()};
            for (std::size_t a : attrs) {
                double vi = ds.attributes[a].values[i];
                double vj = ds.attributes[a].values[j];
                if (vi < vj)
                    t.items.push_back({a, Variation::Up});
                else if (vi > vj)
                    t.items.push_back({a, Variation::Down});
            }
            enc.pairs.emplace_back(i, j);
            enc.transactions.push_back(std::move(t));
        }
    }
    return enc;
}

EncodedTransactions reduce_dataset(const EncodedTransactions& enc) {
    EncodedTransactions out;
    out.tuple_count = enc.tuple_count;
    out.attribute_count = enc.attribute_count;
    out.pairs = enc.pairs;

    std::map<std::vector<GradualItem>, std::size_t> groups;
    for (const auto& t : enc.transactions) {
        auto [it, inserted] = groups.try_emplace(t.items, out.transactions.size());
        if (inserted) {
            out.transactions.push_back(Transaction{{}, t.items, 0});
        }
        Transaction& row = out.transactions[it->second];
        row.tids.insert(row.tids.end(), t.tids.begin(), t.tids.end());
        row.weight += t.weight;
    }
    for (auto& row : out.transactions) std::sort(row.tids.begin(), row.tids.end());
    return out;
}

ItemTidMap sort_filter_items(const EncodedTransactions& enc, std::int64_t min_len) {
    if (min_len < 1) throw std::invalid_argument("min_len must be at least 1");
    std::map<GradualItem, std::vector<std::size_t>> tids_by_item;
    for (const auto& t : enc.transactions)
        for (const auto& item : t.items)
            for (std::size_t tid : t.tids) tids_by_item[item].push_back(tid);

    ItemTidMap out;
    for (auto& [item, tids] : tids_by_item) {
        std::sort(tids.begin(), tids.end());
        tids.erase(std::unique(tids.begin(), tids.end()), tids.end());
        if (static_cast<std::int64_t>(tids.size()) >= min_len)
            out.push_back({item, std::move(tids)});
    }
    std::stable_sort(out.begin(), out.end(), [](const ItemTids& a, const ItemTids& b) {
        return a.tids.size() > b.tids.size();
    });
    return out;
}

std::int64_t frequency_bound(std::size_t tuple_count, double min_sup) {
    if (!(min_sup > 0.0) || min_sup > 1.0) throw std::invalid_argument("min_sup must be in (0,1]");
    auto needed = static_cast<std::int64_t>(std::ceil(min_sup * static_cast<double>(tuple_count) - 1e-9));
    return std::max<std::int64_t>(1, needed - 1);
}

namespace {

struct ClosedMiner {
    const ItemTidMap& items;
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs;
    std::size_t tuple_count;
    std::int64_t bound;
    std::vector<GradualPattern> results;

    std::vector<std::size_t> closure_of(const std::vector<std::size_t>& tids) const {
        std::vector<std::size_t> closed;
        for (std::size_t k = 0; k < items.size(); ++k)
            if (contains_sorted(items[k].tids, tids)) closed.push_back(k);
        return closed;
    }

    void emit(const std::vector<std::size_t>& members, const std::vector<std::size_t>& tids) {
        if (members.size() < 2) return;
        GradualPattern p;
        for (std::size_t k : members) p.items.push_back(items[k].item);
        std::sort(p.items.begin(), p.items.end(),
                  [](const GradualItem& a, const GradualItem& b) {
                      return a.attribute < b.attribute;
                  });
        p.support = chain_support(tids, pairs, tuple_count);
        results.push_back(std::move(p));
    }

    // Closure extension: grow only past the pivot and reject closures that
    // pull in an item before it, so every closed set is reached exactly once.
    void grow(const std::vector<std::size_t>& members, const std::vector<std::size_t>& tids,
              std::size_t pivot_end) {
        for (std::size_t k = pivot_end; k < items.size(); ++k) {
            if (std::binary_search(members.begin(), members.end(), k)) continue;
            std::vector<std::size_t> extended = intersect_sorted(tids, items[k].tids);
            if (static_cast<std::int64_t>(extended.size()) < bound) continue;
            std::vector<std::size_t> closed = closure_of(extended);
            bool prefix_ok = true;
            for (std::size_t member : closed) {
                if (member >= k) break;
                if (!std::binary_search(members.begin(), members.end(), member)) {
                    prefix_ok = false;
                    break;
                }
            }
            if (!prefix_ok) continue;
            emit(closed, extended);
            grow(closed, extended, k + 1);
        }
    }
};

} // namespace

std::vector<GradualPattern> mine_paraminer(const NumericDataset& ds, const ParaMinerOptions& opts) {
    EncodedTransactions enc = reduce_dataset(encode_transactions(ds));
    std::int64_t bound = frequency_bound(ds.tuple_count, opts.min_sup);
    ItemTidMap items = sort_filter_items(enc, bound);

    std::vector<std::size_t> all_tids;
    for (std::size_t t = 0; t < enc.pairs.size(); ++t) all_tids.push_back(t);

    ClosedMiner miner{items, enc.pairs, ds.tuple_count, bound, {}};
    if (static_cast<std::int64_t>(all_tids.size()) >= bound) {
        std::vector<std::size_t> root = miner.closure_of(all_tids);
        miner.emit(root, all_tids);
        miner.grow(root, all_tids, 0);
    }
    std::sort(miner.results.begin(), miner.results.end());
    return miner.results;
}

std::vector<GradualPattern> brute_force_closed_patterns(const NumericDataset& ds, double min_sup) {
    EncodedTransactions enc = reduce_dataset(encode_transactions(ds));
    std::int64_t bound = frequency_bound(ds.tuple_count, min_sup);
    ItemTidMap items = sort_filter_items(enc, bound);

    std::vector<std::size_t> all_tids;
    for (std::size_t t = 0; t < enc.pairs.size(); ++t) all_tids.push_back(t);

    std::vector<GradualPattern> results;
    std::size_t m = items.size();
    if (m > 24) throw std::invalid_argument("instance too large for brute force");
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        std::vector<std::size_t> members;
        std::vector<std::size_t> tids = all_tids;
        for (std::size_t k = 0; k < m; ++k) {
            if (!(mask & (std::size_t{1} << k))) continue;
            members.push_back(k);
            tids = intersect_sorted(tids, items[k].tids);
        }
        if (members.size() < 2) continue;
        if (static_cast<std::int64_t>(tids.size()) < bound) continue;

        bool closed = true;
        for (std::size_t k = 0; k < m && closed; ++k) {
            if (std::binary_search(members.begin(), members.end(), k)) continue;
            if (contains_sorted(items[k].tids, tids)) closed = false;
        }
        if (!closed) continue;

        GradualPattern p;
        for (std::size_t k : members) p.items.push_back(items[k].item);
        std::sort(p.items.begin(), p.items.end(),
                  [](const GradualItem& a, const GradualItem& b) {
                      return a.attribute < b.attribute;
                  });
        p.support = chain_support(tids, enc.pairs, ds.tuple_count);
        results.push_back(std::move(p));
    }
    std::sort(results.begin(), results.end());
    return results;
}

} // namespace gradmine
