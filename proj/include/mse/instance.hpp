#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mse/errors.hpp"
#include "mse/permutation.hpp"

namespace mse {

/// Metadata attached to generated counterexamples: a block of labels
/// together with the restriction behaviour the generator built into it.
///
/// Two flavours are used.  Partition groups list the permutation indices
/// (1-based) that see the ascending pattern (pi1) versus the descending
/// one (pi2), with the last permutation always playing the special role;
/// the expected restrictions are derived from that split.  Pattern groups
/// instead spell out the expected restriction of every permutation as a
/// sequence of member indices.  Either flavour may add a per-permutation
/// reversal bit-vector for copies embedded with some paths flipped.
struct GroupSpec {
    std::vector<int> members;                             // labels, in pattern order
    std::vector<int> pi1, pi2;                            // partition flavour
    std::optional<std::vector<std::vector<int>>> patterns; // pattern flavour (member indices)
    std::optional<std::vector<bool>> reversal;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// k paths over one shared label set, with optional generator metadata.
struct Instance {
    std::vector<int> labels;              // the ordered label set V
    std::vector<Permutation> perms;       // k permutations of V
    std::vector<GroupSpec> groups;        // optional counterexample structure
    std::optional<int> dimension;         // ambient dimension the instance targets
    std::string family;                   // generator family tag, empty for ad-hoc instances
    std::vector<int> original_labels;     // positional map dense label -> source label
    std::vector<std::string> label_names; // positional display names for the labels

    std::size_t k() const { return perms.size(); }
    std::size_t n() const { return labels.size(); }
};

inline Instance make_instance(std::vector<std::vector<int>> perms) {
    Instance inst;
    if (perms.empty()) throw Error("instance needs at least one permutation");
    std::set<int> labels(perms[0].begin(), perms[0].end());
    inst.labels.assign(labels.begin(), labels.end());
    for (auto& p : perms) inst.perms.push_back(Permutation(std::move(p)));
    return inst;
}

/// True iff every permutation is a bijection on exactly the label set and
/// the permutations are pairwise distinct.
inline bool validate_instance(const Instance& inst) {
    if (inst.perms.empty()) return false;
    const std::set<int> labels(inst.labels.begin(), inst.labels.end());
    if (labels.size() != inst.labels.size()) return false;
    for (const Permutation& p : inst.perms) {
        if (p.label_set() != labels) return false;
    }
    for (std::size_t i = 0; i < inst.perms.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.perms.size(); ++j) {
            if (inst.perms[i] == inst.perms[j]) return false;
        }
    }
    return true;
}

/// The instance with permutation j replaced by its reverse wherever
/// flags[j] is set.  Metadata is dropped: group patterns describe the
/// unflipped instance only.
inline Instance apply_reversal(const Instance& inst, const std::vector<bool>& flags) {
    if (flags.size() != inst.perms.size()) throw Error("apply_reversal: flag count mismatch");
    Instance out;
    out.labels = inst.labels;
    out.dimension = inst.dimension;
    for (std::size_t j = 0; j < inst.perms.size(); ++j) {
        out.perms.push_back(flags[j] ? reverse(inst.perms[j]) : inst.perms[j]);
    }
    return out;
}

} // namespace mse
