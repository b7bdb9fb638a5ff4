#include "gradmine/graank.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace gradmine {

namespace {

struct Candidate {
    GradualPattern pattern;
    ConcordanceMatrix matrix;
};

void check_min_sup(double min_sup) {
    if (!(min_sup > 0.0) || min_sup > 1.0) throw std::invalid_argument("min_sup must be in (0,1]");
}

Support evaluate(const ConcordanceMatrix& m, bool chain_based, std::size_t tuple_count) {
    if (!chain_based) return kendall_support(m);
    return {static_cast<std::int64_t>(longest_chain_length(m)),
            static_cast<std::int64_t>(tuple_count)};
}

std::vector<GradualPattern> mine_levelwise(const NumericDataset& ds, double min_sup,
                                           bool chain_based) {
    check_min_sup(min_sup);
    ds.validate();
    if (ds.tuple_count < 2) throw std::invalid_argument("mining needs at least 2 tuples");

    std::vector<std::size_t> attrs = ds.numeric_columns();
    std::vector<Candidate> level;
    for (std::size_t a : attrs) {
        GradualItem item{a, Variation::Up};
        Candidate c{GradualPattern{{item}, {}}, build_item_matrix(ds, item)};
        c.pattern.support = evaluate(c.matrix, chain_based, ds.tuple_count);
        if (meets_threshold(c.pattern.support, min_sup)) level.push_back(std::move(c));
    }

    std::vector<GradualPattern> results;
    std::set<std::vector<GradualItem>> frequent_sets;

    // Single attributes expand into both relative orientations; beyond that
    // the standard prefix join applies, since every frequent pattern's
    // sub-patterns are frequent and already canonical.
    std::vector<Candidate> next;
    for (std::size_t x = 0; x < level.size(); ++x) {
        for (std::size_t y = x + 1; y < level.size(); ++y) {
            std::size_t ax = level[x].pattern.items[0].attribute;
            std::size_t ay = level[y].pattern.items[0].attribute;
            for (Variation v : {Variation::Up, Variation::Down}) {
                GradualItem right{ay, v};
                ConcordanceMatrix m = join_matrices(
                    level[x].matrix,
                    v == Variation::Up ? level[y].matrix : build_item_matrix(ds, complement(
                                                               level[y].pattern.items[0])));
                Candidate c{GradualPattern{{{ax, Variation::Up}, right}, {}}, std::move(m)};
                c.pattern.support = evaluate(c.matrix, chain_based, ds.tuple_count);
                if (meets_threshold(c.pattern.support, min_sup)) next.push_back(std::move(c));
            }
        }
    }
    level = std::move(next);

    while (!level.empty()) {
        for (const auto& c : level) {
            results.push_back(c.pattern);
            frequent_sets.insert(c.pattern.items);
        }
        std::vector<Candidate> grown;
        for (std::size_t x = 0; x < level.size(); ++x) {
            for (std::size_t y = x + 1; y < level.size(); ++y) {
                const auto& px = level[x].pattern.items;
                const auto& py = level[y].pattern.items;
                if (!std::equal(px.begin(), px.end() - 1, py.begin(), py.end() - 1)) continue;
                if (px.back().attribute >= py.back().attribute) continue;

                GradualPattern joined;
                joined.items = px;
                joined.items.push_back(py.back());

                bool subsets_frequent = true;
                for (std::size_t drop = 0; drop + 2 < joined.items.size() && subsets_frequent;
                     ++drop) {
                    GradualPattern sub;
                    for (std::size_t k = 0; k < joined.items.size(); ++k)
                        if (k != drop) sub.items.push_back(joined.items[k]);
                    sub = canonical(std::move(sub));
                    if (!frequent_sets.count(sub.items)) subsets_frequent = false;
                }
                if (!subsets_frequent) continue;

                Candidate c{std::move(joined), join_matrices(level[x].matrix, level[y].matrix)};
                c.pattern.support = evaluate(c.matrix, chain_based, ds.tuple_count);
                if (meets_threshold(c.pattern.support, min_sup)) grown.push_back(std::move(c));
            }
        }
        level = std::move(grown);
    }

    std::sort(results.begin(), results.end());
    return results;
}

} // namespace

std::vector<GradualPattern> mine_graank(const NumericDataset& ds, const GraankOptions& opts) {
    return mine_levelwise(ds, opts.min_sup, false);
}

std::vector<GradualPattern> mine_grite(const NumericDataset& ds, const GraankOptions& opts) {
    return mine_levelwise(ds, opts.min_sup, true);
}

std::vector<GradualPattern> brute_force_patterns(const NumericDataset& ds, double min_sup) {
    check_min_sup(min_sup);
    std::vector<std::size_t> attrs = ds.numeric_columns();
    std::vector<GradualPattern> results;

    std::size_t q = attrs.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << q); ++mask) {
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < q; ++i)
            if (mask & (std::size_t{1} << i)) chosen.push_back(attrs[i]);
        if (chosen.size() < 2) continue;

        std::size_t variants = std::size_t{1} << (chosen.size() - 1);
        for (std::size_t bits = 0; bits < variants; ++bits) {
            GradualPattern p;
            p.items.push_back({chosen[0], Variation::Up});
            for (std::size_t k = 1; k < chosen.size(); ++k) {
                bool down = bits & (std::size_t{1} << (k - 1));
                p.items.push_back({chosen[k], down ? Variation::Down : Variation::Up});
            }
            p.support = kendall_support(build_pattern_matrix(ds, p));
            if (meets_threshold(p.support, min_sup)) results.push_back(std::move(p));
        }
    }
    std::sort(results.begin(), results.end());
    return results;
}

} // namespace gradmine
