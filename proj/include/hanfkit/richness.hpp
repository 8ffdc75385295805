#pragma once

#include "hanfkit/ints.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hanfkit {

// A complete labeled ordered binary tree of height h: nodes are the binary
// words of length <= h, edges E0/E1 are implied, X is the label set.
// A tree is marked iff the empty word is labeled.
class LabeledTree {
public:
    explicit LabeledTree(int height, std::vector<bool> labels = {});

    int height() const { return height_; }
    std::size_t node_count() const { return labels_.size(); }
    bool labeled(std::size_t node) const { return labels_[node]; }
    bool marked() const { return labels_[0]; }

    LabeledTree marked_copy() const;    // mu
    LabeledTree unmarked_copy() const;  // mu-bar

    std::string key() const;
    bool operator==(const LabeledTree& o) const { return height_ == o.height_ && labels_ == o.labels_; }

    // 2^{h+1} - 1
    static std::size_t node_count_for_height(int height);

private:
    int height_;
    std::vector<bool> labels_;  // nodes in (length, lex) order; index 0 is the root
};

// Multiset of same-height trees.
class Forest {
public:
    void add(const LabeledTree& t, std::size_t copies = 1);
    std::size_t multiplicity(const LabeledTree& t) const;
    const std::map<std::string, std::pair<LabeledTree, std::size_t>>& trees() const { return trees_; }
    bool empty() const { return trees_.empty(); }

private:
    std::map<std::string, std::pair<LabeledTree, std::size_t>> trees_;
};

// P_R: the number of unmarked trees T in F (with multiplicity) whose marked
// twin also appears in F lies in R.
bool property_pr(const Forest& f, const std::function<bool(const Int&)>& r_member);
Int pr_count(const Forest& f);

// The explicit witness of the large-gaps lemma: for 1 <= j <= s, B > j,
// D = 4s * sum_{1<=i<=j+1} B^i and q > D*j*B^{j+2}, the vector
//   x_i = q_i - sum_{k=1..j} B^k + j*B^i   (i <= j),   x_i = q + B  (i > j)
// satisfies (a)-(c) for all a-bar in {0..B-1}^s, c in {0..B-1}.
struct LargeGapsWitness {
    std::vector<Int> x;
    Int q;
    Int d;  // the bound parameter D
    bool verified = false;
    long long combinations_checked = 0;
    std::string failure;  // first violated condition if any
};

Int large_gaps_d(int j, int s, const Int& b);
Int smallest_admissible_q(int j, int s, const Int& b);
LargeGapsWitness large_gaps_witness(int j, int s, const Int& b, const Int& q);

// Smallest q in R within [0,N] with [floor(q/k), k*q] intersecting R only
// at q; requires k*q <= N to accept q.
std::optional<Int> find_gap(const std::function<bool(const Int&)>& r_member, const Int& window_max,
                            const Int& k);

} // namespace hanfkit
