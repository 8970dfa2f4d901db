#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "mse/errors.hpp"
#include "mse/instance.hpp"
#include "mse/permutation.hpp"

namespace mse {

/// Generators for the counterexample families: sets of d+1 paths with no
/// parallel (dual families) or no monotone (primal families) simultaneous
/// embedding in d dimensions.  Output is deterministic, labels are dense
/// nonnegative integers, and every instance carries group metadata that
/// records the restriction structure its refutation rests on.

namespace detail {

/// Three-element patterns seen by the lines of a partition group: lines
/// in pi1 see tau1, lines in pi2 see tau2, the last line sees tau3.
inline const std::vector<int>& tau_pattern(int which) {
    static const std::vector<int> tau1{1, 0, 2}, tau2{2, 1, 0}, tau3{0, 2, 1};
    switch (which) {
        case 1: return tau1;
        case 2: return tau2;
        default: return tau3;
    }
}

inline std::vector<int> map_pattern(const std::vector<int>& members, const std::vector<int>& pattern) {
    std::vector<int> mapped;
    mapped.reserve(pattern.size());
    for (int idx : pattern) mapped.push_back(members.at(static_cast<std::size_t>(idx)));
    return mapped;
}

/// Expected restriction of permutation j (1-based of k) to a group.
inline std::vector<int> expected_restriction(const GroupSpec& g, std::size_t j, std::size_t k) {
    std::vector<int> pattern;
    if (g.patterns) {
        pattern = g.patterns->at(j - 1);
    } else {
        int which = 3;
        if (j < k) {
            const bool in_pi1 = std::find(g.pi1.begin(), g.pi1.end(), static_cast<int>(j)) != g.pi1.end();
            which = in_pi1 ? 1 : 2;
        }
        pattern = tau_pattern(which);
    }
    std::vector<int> expected = map_pattern(g.members, pattern);
    if (g.reversal && g.reversal->at(j - 1)) {
        std::reverse(expected.begin(), expected.end());
    }
    return expected;
}

} // namespace detail

/// 3 paths on {0,1,2} with no parallel simultaneous embedding in 2D.
inline Instance gen_dual_2d() {
    Instance inst = make_instance({{1, 0, 2}, {2, 1, 0}, {0, 2, 1}});
    inst.dimension = 2;
    inst.family = "dual2d";
    inst.groups.push_back({{0, 1, 2}, {1}, {2}, std::nullopt, std::nullopt});
    return inst;
}

/// 3 paths on 6 vertices with no monotone simultaneous embedding in 2D.
/// Labels 0..5 stand for a..f.  Each group names the three labels whose
/// restriction, after flipping the paths marked in its reversal vector,
/// reads as the 2D dual counterexample.
inline Instance gen_primal_2d() {
    Instance inst = make_instance({{5, 1, 3, 4, 0, 2},   // (f,b,d,e,a,c)
                                   {3, 5, 2, 1, 4, 0},   // (d,f,c,b,e,a)
                                   {5, 0, 3, 2, 4, 1}}); // (f,a,d,c,e,b)
    inst.dimension = 2;
    inst.family = "primal2d";
    inst.label_names = {"a", "b", "c", "d", "e", "f"};
    using Rev = std::vector<bool>;
    inst.groups.push_back({{0, 1, 2}, {1}, {2}, std::nullopt, Rev{false, false, false}}); // (a,b,c)
    inst.groups.push_back({{0, 2, 3}, {1}, {2}, std::nullopt, Rev{true, false, false}});  // (a,c,d)
    inst.groups.push_back({{3, 1, 4}, {1}, {2}, std::nullopt, Rev{false, true, false}});  // (d,b,e)
    inst.groups.push_back({{1, 5, 3}, {1}, {2}, std::nullopt, Rev{false, false, true}});  // (b,f,d)
    return inst;
}

/// 4 paths on 5 vertices with no parallel simultaneous embedding in 3D.
/// The groups record the four restrictions that pin down the region
/// argument, each with the restriction patterns it exhibits.
inline Instance gen_dual_3d() {
    Instance inst = make_instance({{0, 1, 2, 3, 4},
                                   {2, 3, 4, 0, 1},
                                   {3, 4, 0, 1, 2},
                                   {1, 3, 2, 0, 4}});
    inst.dimension = 3;
    inst.family = "dual3d";
    using Pat = std::vector<std::vector<int>>;
    inst.groups.push_back({{0, 2, 3}, {}, {}, Pat{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}, std::nullopt});
    inst.groups.push_back({{1, 2, 3}, {}, {}, Pat{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}}, std::nullopt});
    inst.groups.push_back({{0, 2, 4}, {}, {}, Pat{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}}, std::nullopt});
    inst.groups.push_back({{0, 1}, {}, {}, Pat{{0, 1}, {0, 1}, {0, 1}, {1, 0}}, std::nullopt});
    return inst;
}

/// 4 paths on 40 vertices with no monotone simultaneous embedding in 3D:
/// eight blocks, one per way of reversing paths 2..4, each restricting to
/// the 3D dual counterexample once the marked paths are flipped back.
/// Source labels are 10*block + r; they are stored densely as 5*block + r
/// with the original numbering kept in original_labels.
inline Instance gen_primal_3d() {
    const std::vector<std::vector<int>> base{{0, 1, 2, 3, 4},
                                             {2, 3, 4, 0, 1},
                                             {3, 4, 0, 1, 2},
                                             {1, 3, 2, 0, 4}};
    Instance inst;
    inst.dimension = 3;
    inst.family = "primal3d";
    std::vector<std::vector<int>> perms(4);
    for (int block = 0; block < 8; ++block) {
        const std::vector<bool> rev{false, (block & 4) != 0, (block & 2) != 0, (block & 1) != 0};
        for (std::size_t j = 0; j < 4; ++j) {
            std::vector<int> part = base[j];
            if (rev[j]) std::reverse(part.begin(), part.end());
            for (int r : part) perms[j].push_back(5 * block + r);
        }
        std::vector<int> members;
        for (int r = 0; r < 5; ++r) {
            members.push_back(5 * block + r);
            inst.labels.push_back(5 * block + r);
            inst.original_labels.push_back(10 * block + r);
        }
        inst.groups.push_back({std::move(members), {}, {},
                               std::vector<std::vector<int>>(base.begin(), base.end()), rev});
    }
    for (auto& p : perms) inst.perms.push_back(Permutation(std::move(p)));
    return inst;
}

/// d+1 paths on 3*2^d vertices with no parallel simultaneous embedding in
/// d dimensions: one fresh three-label group per subset of the first d
/// lines, enumerated by binary counting on membership, so that every
/// split of the lines is obstructed somewhere.
inline Instance gen_dual_general(int d) {
    if (d < 2) throw Error("gen_dual_general: need d >= 2");
    const std::size_t k = static_cast<std::size_t>(d) + 1;
    const std::size_t num_groups = std::size_t{1} << d;
    Instance inst;
    inst.dimension = d;
    inst.family = "dual-general";
    std::vector<std::vector<int>> perms(k);
    for (std::size_t s = 0; s < num_groups; ++s) {
        const int g0 = static_cast<int>(3 * s), g1 = g0 + 1, g2 = g0 + 2;
        GroupSpec group;
        group.members = {g0, g1, g2};
        for (int i = 1; i <= d; ++i) {
            const bool in_pi1 = (s >> (i - 1)) & 1;
            (in_pi1 ? group.pi1 : group.pi2).push_back(i);
            if (in_pi1) {
                perms[i - 1].insert(perms[i - 1].end(), {g1, g0, g2});
            } else {
                perms[i - 1].insert(perms[i - 1].end(), {g2, g1, g0});
            }
        }
        perms[k - 1].insert(perms[k - 1].end(), {g0, g2, g1});
        inst.labels.insert(inst.labels.end(), {g0, g1, g2});
        inst.groups.push_back(std::move(group));
    }
    for (auto& p : perms) inst.perms.push_back(Permutation(std::move(p)));
    return inst;
}

/// d+1 paths on 3*2^{2d} vertices with no monotone simultaneous embedding
/// in d dimensions: one fresh copy of gen_dual_general(d) per way of
/// reversing paths 2..d+1 (the first path stays fixed; reversing all
/// paths is the mirror symmetry).  In copy sigma the block of path j is
/// written reversed exactly when sigma_j is set, so flipping the full
/// paths by sigma restores the dual counterexample on that copy.
inline Instance gen_primal_general(int d) {
    if (d < 2) throw Error("gen_primal_general: need d >= 2");
    const Instance base = gen_dual_general(d);
    const std::size_t k = base.perms.size();
    const std::size_t num_copies = std::size_t{1} << d;
    const int stride = static_cast<int>(base.labels.size());
    Instance inst;
    inst.dimension = d;
    inst.family = "primal-general";
    std::vector<std::vector<int>> perms(k);
    for (std::size_t c = 0; c < num_copies; ++c) {
        std::vector<bool> sigma(k, false);
        for (std::size_t j = 2; j <= k; ++j) {
            sigma[j - 1] = (c >> (k - j)) & 1;
        }
        const int offset = static_cast<int>(c) * stride;
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<int> block = base.perms[j].order();
            if (sigma[j]) std::reverse(block.begin(), block.end());
            for (int label : block) perms[j].push_back(label + offset);
        }
        for (int label : base.labels) inst.labels.push_back(label + offset);
        for (const GroupSpec& g : base.groups) {
            GroupSpec copy = g;
            for (int& label : copy.members) label += offset;
            copy.reversal = sigma;
            inst.groups.push_back(std::move(copy));
        }
    }
    for (auto& p : perms) inst.perms.push_back(Permutation(std::move(p)));
    return inst;
}

/// Checks every group of a generated instance against its declared
/// restriction structure: the restriction of each path to the group's
/// members must equal the group's pattern for that path, reversed where
/// the group's reversal vector says so.
inline bool validate_structure(const Instance& inst) {
    if (inst.groups.empty()) throw Error("validate_structure: instance carries no group metadata");
    const std::size_t k = inst.perms.size();
    for (const GroupSpec& g : inst.groups) {
        const std::set<int> members(g.members.begin(), g.members.end());
        for (std::size_t j = 1; j <= k; ++j) {
            std::vector<int> expected;
            try {
                expected = detail::expected_restriction(g, j, k);
            } catch (const std::out_of_range&) {
                return false;
            }
            if (!(restrict(inst.perms[j - 1], members).order() == expected)) return false;
        }
    }
    return true;
}

} // namespace mse
