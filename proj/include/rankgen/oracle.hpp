#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rankgen/rational.hpp"
#include "rankgen/report.hpp"

namespace rankgen::oracle {

// Default enumeration guard: Catalan(14) ~= 2.67M trees of size 15.
inline constexpr int kDefaultSizeCap = 15;

// Rooted tree with significant child order; no labels.
struct PlaneTree {
    std::vector<PlaneTree> children;

    bool is_leaf() const { return children.empty(); }
    int size() const;

    static PlaneTree leaf() { return {}; }
    static PlaneTree path(int n);  // n >= 1 vertices in a single chain
    // One '(' ')' pair per vertex, children nested in order: "(()(()))".
    static PlaneTree from_parens(std::string_view text);
    std::string to_parens() const;
};

// rank(leaf) = 0, rank(v) = 1 + min over children; the rank of a vertex is
// the length of its shortest downward path to a leaf.
struct RankProfile {
    std::vector<int> ranks;  // preorder, root first
    int root_rank = 0;
    int leaf_count = 0;
};
RankProfile vertex_ranks(const PlaneTree& t);

// Exact aggregate counts over every tree of one size.
struct RankTally {
    int n = 0;
    BigInt tree_count;
    std::map<int, BigInt> vertex_counts;   // k -> #k-protected vertices (k >= 0)
    std::map<int, BigInt> root_counts;     // k -> #trees whose root is k-protected (k >= 1)
    std::map<int, BigInt> rank_histogram;  // k -> #vertices of exact rank k
    std::map<int, BigInt> bivariate;       // m -> #trees with exactly m leaves
    BigInt leaf_total;
    BigInt root_rank_sum;
    BigInt vertex_rank_sum;

    BigInt vertex_count_at(int k) const;
    BigInt root_count_at(int k) const;
    BigInt rank_count_at(int k) const;
    BigInt bivariate_at(int m) const;
};

// Visits every plane tree on n vertices exactly once, in a fixed
// deterministic order (ascending first-subtree size, then recursively).
// Throws SizeCapExceeded when n > size_cap.
void enumerate_trees(int n, const std::function<void(const PlaneTree&)>& visit,
                     int size_cap = kDefaultSizeCap);

// Convenience for small n; materializes the whole level.
std::vector<PlaneTree> all_trees(int n, int size_cap = kDefaultSizeCap);

// Aggregates vertex ranks over every tree of size n.
RankTally tally(int n, int size_cap = kDefaultSizeCap);

// Compares every tally field for n <= n_max, k <= k_max against the
// corresponding generating-function coefficients. The build's primary
// correctness gate.
VerificationReport cross_check(int n_max, int k_max, int size_cap = kDefaultSizeCap);

}  // namespace rankgen::oracle
