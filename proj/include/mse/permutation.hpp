#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mse/errors.hpp"

namespace mse {

/// A sequence of distinct nonnegative integer labels.  Represents one
/// path over its label set; identified with a permutation of that set.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> order) : order_(std::move(order)) {
        std::unordered_set<int> seen;
        for (int label : order_) {
            if (label < 0) throw Error("permutation labels must be nonnegative");
            if (!seen.insert(label).second) throw Error("permutation repeats a label");
        }
    }

    const std::vector<int>& order() const { return order_; }
    std::size_t size() const { return order_.size(); }
    int operator[](std::size_t i) const { return order_[i]; }

    bool contains(int label) const {
        return std::find(order_.begin(), order_.end(), label) != order_.end();
    }

    std::set<int> label_set() const { return {order_.begin(), order_.end()}; }

    /// 1-based rank of a label (its position in the sequence).
    std::size_t rank(int label) const {
        for (std::size_t i = 0; i < order_.size(); ++i) {
            if (order_[i] == label) return i + 1;
        }
        throw Error("label not in permutation");
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> order_;
};

/// Subsequence of p consisting of the labels in s, order preserved.
inline Permutation restrict(const Permutation& p, const std::set<int>& s) {
    for (int label : s) {
        if (!p.contains(label)) throw Error("restrict: label not in permutation");
    }
    std::vector<int> sub;
    sub.reserve(s.size());
    for (int label : p.order()) {
        if (s.count(label)) sub.push_back(label);
    }
    return Permutation(std::move(sub));
}

inline Permutation reverse(const Permutation& p) {
    std::vector<int> rev(p.order().rbegin(), p.order().rend());
    return Permutation(std::move(rev));
}

/// Concatenation of blocks with pairwise disjoint label sets.
inline Permutation concat_blocks(const std::vector<Permutation>& blocks) {
    std::vector<int> cat;
    std::unordered_set<int> seen;
    for (const Permutation& block : blocks) {
        for (int label : block.order()) {
            if (!seen.insert(label).second) throw Error("concat_blocks: overlapping labels");
            cat.push_back(label);
        }
    }
    return Permutation(std::move(cat));
}

} // namespace mse
