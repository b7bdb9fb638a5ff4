#include "gradmine/gradcore.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gradmine {

std::string Support::text() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

bool meets_threshold(const Support& s, double min_sup) {
    return s.value() + 1e-9 >= min_sup;
}

bool GradualPattern::contains(const GradualItem& it) const {
    return std::find(items.begin(), items.end(), it) != items.end();
}

bool GradualPattern::contains_attribute(std::size_t attribute) const {
    return std::any_of(items.begin(), items.end(),
                       [&](const GradualItem& it) { return it.attribute == attribute; });
}

bool GradualPattern::subset_of(const GradualPattern& other) const {
    return std::all_of(items.begin(), items.end(),
                       [&](const GradualItem& it) { return other.contains(it); });
}

GradualItem complement(const GradualItem& item) {
    return {item.attribute, flipped(item.variation)};
}

GradualPattern complement(const GradualPattern& p) {
    GradualPattern out;
    out.items.reserve(p.items.size());
    for (const auto& it : p.items) out.items.push_back(complement(it));
    out.support = p.support;
    return out;
}

GradualPattern canonical(GradualPattern p) {
    std::sort(p.items.begin(), p.items.end(),
              [](const GradualItem& a, const GradualItem& b) { return a.attribute < b.attribute; });
    for (std::size_t i = 1; i < p.items.size(); ++i)
        if (p.items[i].attribute == p.items[i - 1].attribute)
            throw std::invalid_argument("pattern repeats an attribute");
    if (!p.items.empty() && p.items.front().variation == Variation::Down) return complement(p);
    return p;
}

bool is_canonical(const GradualPattern& p) {
    if (p.items.empty()) return true;
    for (std::size_t i = 1; i < p.items.size(); ++i)
        if (p.items[i].attribute <= p.items[i - 1].attribute) return false;
    return p.items.front().variation == Variation::Up;
}

std::string item_text(const NumericDataset& ds, const GradualItem& item) {
    return ds.attributes.at(item.attribute).name + (item.variation == Variation::Up ? "+" : "-");
}

std::string pattern_text(const NumericDataset& ds, const GradualPattern& p) {
    std::string out;
    for (std::size_t i = 0; i < p.items.size(); ++i) {
        if (i) out.push_back(',');
        out += item_text(ds, p.items[i]);
    }
    return out;
}

ConcordanceMatrix::ConcordanceMatrix(std::size_t n)
    : n_(n), words_per_row_((n + 63) / 64), bits_(n * words_per_row_, 0) {}

bool ConcordanceMatrix::get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_per_row_ + j / 64] >> (j % 64)) & 1u;
}

void ConcordanceMatrix::set(std::size_t i, std::size_t j) {
    bits_[i * words_per_row_ + j / 64] |= std::uint64_t{1} << (j % 64);
}

void ConcordanceMatrix::and_assign(const ConcordanceMatrix& other) {
    if (other.n_ != n_) throw std::invalid_argument("matrix sizes differ");
    for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] &= other.bits_[w];
}

std::int64_t ConcordanceMatrix::count_upper() const {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (get(i, j)) ++total;
    return total;
}

std::int64_t ConcordanceMatrix::count_lower() const {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (get(i, j)) ++total;
    return total;
}

ConcordanceMatrix ConcordanceMatrix::transposed() const {
    ConcordanceMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (get(i, j)) out.set(j, i);
    return out;
}

ConcordanceMatrix build_item_matrix(const NumericDataset& ds, const GradualItem& item) {
    const auto& values = ds.attributes.at(item.attribute).values;
    std::size_t n = ds.tuple_count;
    ConcordanceMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            bool ordered = item.variation == Variation::Up ? values[i] < values[j]
                                                           : values[i] > values[j];
            if (ordered) m.set(i, j);
        }
    }
    return m;
}

ConcordanceMatrix build_pattern_matrix(const NumericDataset& ds, const GradualPattern& p) {
    if (p.items.empty()) throw std::invalid_argument("empty pattern has no matrix");
    ConcordanceMatrix m = build_item_matrix(ds, p.items.front());
    for (std::size_t k = 1; k < p.items.size(); ++k)
        m.and_assign(build_item_matrix(ds, p.items[k]));
    return m;
}

ConcordanceMatrix join_matrices(const ConcordanceMatrix& m1, const ConcordanceMatrix& m2) {
    ConcordanceMatrix out = m1;
    out.and_assign(m2);
    return out;
}

Support kendall_support(const ConcordanceMatrix& m) {
    std::int64_t n = static_cast<std::int64_t>(m.size());
    std::int64_t pairs = n * (n - 1) / 2;
    if (pairs == 0) return {0, 1};
    return {std::max(m.count_upper(), m.count_lower()), pairs};
}

namespace {

// Chain length starting at each row, over a strict order; throws if the edge
// relation has a cycle.
std::vector<std::size_t> chain_lengths(const ConcordanceMatrix& m) {
    std::size_t n = m.size();
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && m.get(i, j)) ++indegree[j];

    std::vector<std::size_t> order;
    order.reserve(n);
    std::vector<std::size_t> frontier;
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0) frontier.push_back(i);
    while (!frontier.empty()) {
        std::size_t i = frontier.back();
        frontier.pop_back();
        order.push_back(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !m.get(i, j)) continue;
            if (--indegree[j] == 0) frontier.push_back(j);
        }
    }
    if (order.size() != n) throw std::invalid_argument("order matrix has a cycle");

    std::vector<std::size_t> down(n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::size_t i = *it;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && m.get(i, j)) down[i] = std::max(down[i], down[j] + 1);
    }
    return down;
}

} // namespace

std::vector<std::size_t> longest_chain_rows(const ConcordanceMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) return {};
    std::vector<std::size_t> down = chain_lengths(m);
    std::size_t best = *std::max_element(down.begin(), down.end());

    std::vector<std::size_t> rows;
    std::size_t current = n;
    for (std::size_t i = 0; i < n; ++i)
        if (down[i] == best) {
            current = i;
            break;
        }
    rows.push_back(current);
    for (std::size_t remaining = best - 1; remaining > 0; --remaining) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j != current && m.get(current, j) && down[j] == remaining) {
                current = j;
                rows.push_back(j);
                break;
            }
        }
    }
    return rows;
}

std::size_t longest_chain_length(const ConcordanceMatrix& m) {
    if (m.size() == 0) return 0;
    std::vector<std::size_t> down = chain_lengths(m);
    return *std::max_element(down.begin(), down.end());
}

Support grite_support(const NumericDataset& ds, const GradualPattern& p) {
    std::int64_t n = static_cast<std::int64_t>(ds.tuple_count);
    if (n == 0) return {0, 1};
    ConcordanceMatrix m = build_pattern_matrix(ds, p);
    return {static_cast<std::int64_t>(longest_chain_length(m)), n};
}

} // namespace gradmine
