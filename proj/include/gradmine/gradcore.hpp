#pragma once

#include "gradmine/dataset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gradmine {

enum class Variation : std::uint8_t { Up, Down };

inline Variation flipped(Variation v) {
    return v == Variation::Up ? Variation::Down : Variation::Up;
}

struct GradualItem {
    std::size_t attribute = 0;
    Variation variation = Variation::Up;

    friend bool operator==(const GradualItem&, const GradualItem&) = default;
    friend auto operator<=>(const GradualItem&, const GradualItem&) = default;
};

// Exact rational support: count of witnessing structures over the total.
struct Support {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
    std::string text() const;

    friend bool operator==(const Support&, const Support&) = default;
};

// True when the rational support clears the threshold, with a hair of slack
// so decimal thresholds equal to the support (0.5 vs 2/4) are not lost to
// floating-point representation.
bool meets_threshold(const Support& s, double min_sup);

struct GradualPattern {
    std::vector<GradualItem> items; // sorted by attribute, one per attribute
    Support support;

    std::size_t size() const { return items.size(); }
    bool contains(const GradualItem& it) const;
    bool contains_attribute(std::size_t attribute) const;
    bool subset_of(const GradualPattern& other) const;

    friend bool operator==(const GradualPattern& a, const GradualPattern& b) {
        return a.items == b.items;
    }
    friend bool operator<(const GradualPattern& a, const GradualPattern& b) {
        return a.items < b.items;
    }
};

GradualItem complement(const GradualItem& item);
GradualPattern complement(const GradualPattern& p);

// Sorts items by attribute and flips the whole pattern if needed so that the
// lowest attribute carries Up; of a complement pair exactly one form exists.
GradualPattern canonical(GradualPattern p);
bool is_canonical(const GradualPattern& p);

// "temp-" / "hum+" rendering; pattern text joins items in attribute order.
std::string item_text(const NumericDataset& ds, const GradualItem& item);
std::string pattern_text(const NumericDataset& ds, const GradualPattern& p);

// n x n bit matrix; entry (a,b) = 1 when the tuple pair ordered a -> b
// respects every item of the pattern the matrix stands for.
class ConcordanceMatrix {
public:
    ConcordanceMatrix() = default;
    explicit ConcordanceMatrix(std::size_t n);

    std::size_t size() const { return n_; }
    bool get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j);
    void and_assign(const ConcordanceMatrix& other);

    std::int64_t count_upper() const; // ones with i < j
    std::int64_t count_lower() const; // ones with i > j
    std::int64_t count_all() const { return count_upper() + count_lower(); }

    ConcordanceMatrix transposed() const;

    friend bool operator==(const ConcordanceMatrix&, const ConcordanceMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

ConcordanceMatrix build_item_matrix(const NumericDataset& ds, const GradualItem& item);
ConcordanceMatrix build_pattern_matrix(const NumericDataset& ds, const GradualPattern& p);
ConcordanceMatrix join_matrices(const ConcordanceMatrix& m1, const ConcordanceMatrix& m2);

// Concordant-pair support: the better direction's pair count over n(n-1)/2.
// Taking the dominant direction keeps the value equal for complementary
// patterns and reproduces the published single-item values on tied data.
Support kendall_support(const ConcordanceMatrix& m);

// Longest chain of tuples totally ordered under every item, over n.
Support grite_support(const NumericDataset& ds, const GradualPattern& p);

// Rows of one longest chain through the matrix edges, deterministic:
// starts at the smallest row reaching the maximum length and always steps to
// the smallest successor that preserves it. Empty matrix -> single row {0}
// when n > 0.
std::vector<std::size_t> longest_chain_rows(const ConcordanceMatrix& m);
std::size_t longest_chain_length(const ConcordanceMatrix& m);

} // namespace gradmine
