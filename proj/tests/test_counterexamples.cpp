#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "mse/counterexamples.hpp"
#include "mse/instance.hpp"
#include "mse/permutation.hpp"

using namespace mse;

namespace {

// The four 40-vertex paths, transcribed with their source labels
// (10*block + r).  Some of the block leaders appear braced in the source
// tables; the braces are typography, not content.
const std::vector<std::vector<int>> kPrimal3dSource{
    {0,  1,  2,  3,  4,  10, 11, 12, 13, 14, 20, 21, 22, 23, 24, 30, 31, 32, 33, 34,
     40, 41, 42, 43, 44, 50, 51, 52, 53, 54, 60, 61, 62, 63, 64, 70, 71, 72, 73, 74},
    {2,  3,  4,  0,  1,  12, 13, 14, 10, 11, 22, 23, 24, 20, 21, 32, 33, 34, 30, 31,
     41, 40, 44, 43, 42, 51, 50, 54, 53, 52, 61, 60, 64, 63, 62, 71, 70, 74, 73, 72},
    {3,  4,  0,  1,  2,  13, 14, 10, 11, 12, 22, 21, 20, 24, 23, 32, 31, 30, 34, 33,
     43, 44, 40, 41, 42, 53, 54, 50, 51, 52, 62, 61, 60, 64, 63, 72, 71, 70, 74, 73},
    {1,  3,  2,  0,  4,  14, 10, 12, 13, 11, 21, 23, 22, 20, 24, 34, 30, 32, 33, 31,
     41, 43, 42, 40, 44, 54, 50, 52, 53, 51, 61, 63, 62, 60, 64, 74, 70, 72, 73, 71}};

int dense(int source_label) { return 5 * (source_label / 10) + source_label % 10; }

std::vector<int> to_pattern(const Permutation& p, const std::vector<int>& ordered_members) {
    std::vector<int> pattern;
    for (int label : p.order()) {
        const auto it = std::find(ordered_members.begin(), ordered_members.end(), label);
        REQUIRE(it != ordered_members.end());
        pattern.push_back(static_cast<int>(it - ordered_members.begin()));
    }
    return pattern;
}

} // namespace

TEST_CASE("the 2D dual family is the fixed three-path instance") {
    const Instance inst = gen_dual_2d();
    CHECK(inst.n() == 3);
    CHECK(inst.k() == 3);
    CHECK(inst.perms[0] == Permutation({1, 0, 2}));
    CHECK(inst.perms[1] == Permutation({2, 1, 0}));
    CHECK(inst.perms[2] == Permutation({0, 2, 1}));
    CHECK(validate_instance(inst));
    CHECK(validate_structure(inst));
}

TEST_CASE("the 2D primal family restricts onto the dual family") {
    const Instance inst = gen_primal_2d();
    CHECK(inst.n() == 6);
    CHECK(inst.k() == 3);
    CHECK(inst.perms[0] == Permutation({5, 1, 3, 4, 0, 2}));
    CHECK(inst.perms[1] == Permutation({3, 5, 2, 1, 4, 0}));
    CHECK(inst.perms[2] == Permutation({5, 0, 3, 2, 4, 1}));
    CHECK(validate_instance(inst));
    CHECK(validate_structure(inst));

    const Instance dual = gen_dual_2d();
    // restriction to {a,b,c} = {0,1,2} gives the dual patterns directly
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(restrict(inst.perms[j], {0, 1, 2}) == dual.perms[j]);
    }
    // reversing only the first path and restricting to {a,c,d} does too,
    // reading the members in the order (a,c,d)
    const std::vector<int> acd{0, 2, 3};
    CHECK(to_pattern(restrict(reverse(inst.perms[0]), {0, 2, 3}), acd) == std::vector<int>{1, 0, 2});
    CHECK(to_pattern(restrict(inst.perms[1], {0, 2, 3}), acd) == std::vector<int>{2, 1, 0});
    CHECK(to_pattern(restrict(inst.perms[2], {0, 2, 3}), acd) == std::vector<int>{0, 2, 1});
}

TEST_CASE("the 3D dual family matches its stated paths and restrictions") {
    const Instance inst = gen_dual_3d();
    CHECK(inst.n() == 5);
    CHECK(inst.k() == 4);
    CHECK(inst.perms[0] == Permutation({0, 1, 2, 3, 4}));
    CHECK(inst.perms[1] == Permutation({2, 3, 4, 0, 1}));
    CHECK(inst.perms[2] == Permutation({3, 4, 0, 1, 2}));
    CHECK(inst.perms[3] == Permutation({1, 3, 2, 0, 4}));
    CHECK(validate_instance(inst));
    CHECK(validate_structure(inst));

    REQUIRE(inst.groups.size() == 4);
    CHECK(inst.groups[0].members == std::vector<int>{0, 2, 3});
    CHECK(inst.groups[1].members == std::vector<int>{1, 2, 3});
    CHECK(inst.groups[2].members == std::vector<int>{0, 2, 4});
    CHECK(inst.groups[3].members == std::vector<int>{0, 1});

    // restriction to {0,1} flips only the last path
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(restrict(inst.perms[j], {0, 1}) == Permutation({0, 1}));
    }
    CHECK(restrict(inst.perms[3], {0, 1}) == Permutation({1, 0}));
}

TEST_CASE("the 3D primal family is the 40-vertex table") {
    const Instance inst = gen_primal_3d();
    CHECK(inst.n() == 40);
    CHECK(inst.k() == 4);
    CHECK(validate_instance(inst));
    CHECK(validate_structure(inst));

    REQUIRE(inst.original_labels.size() == 40);
    for (std::size_t j = 0; j < 4; ++j) {
        std::vector<int> expected;
        for (int source : kPrimal3dSource[j]) expected.push_back(dense(source));
        CHECK(inst.perms[j].order() == expected);
        // and the metadata reproduces the source labels positionally
        std::vector<int> relabeled;
        for (int label : inst.perms[j].order()) {
            relabeled.push_back(inst.original_labels[static_cast<std::size_t>(label)]);
        }
        CHECK(relabeled == kPrimal3dSource[j]);
    }

    // block 0 restricts to the 3D dual family unchanged
    const Instance dual = gen_dual_3d();
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(restrict(inst.perms[j], {0, 1, 2, 3, 4}) == dual.perms[j]);
    }
    // block 1 restricts to it after reversing exactly the last path
    const std::set<int> block1{5, 6, 7, 8, 9};
    auto relabel = [](const Permutation& p) {
        std::vector<int> shifted;
        for (int label : p.order()) shifted.push_back(label - 5);
        return Permutation(shifted);
    };
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(relabel(restrict(inst.perms[j], block1)) == dual.perms[j]);
    }
    CHECK(relabel(restrict(reverse(inst.perms[3]), block1)) == dual.perms[3]);
}

TEST_CASE("general dual family: tau patterns per partition group") {
    for (int d : {2, 3, 4}) {
        const Instance inst = gen_dual_general(d);
        CHECK(inst.n() == 3u << d);
        CHECK(inst.k() == static_cast<std::size_t>(d) + 1);
        CHECK(validate_instance(inst));
        CHECK(validate_structure(inst));
        REQUIRE(inst.groups.size() == 1u << d);
        for (std::size_t s = 0; s < inst.groups.size(); ++s) {
            const GroupSpec& g = inst.groups[s];
            const std::set<int> members(g.members.begin(), g.members.end());
            for (int i = 1; i <= d; ++i) {
                const bool in_pi1 = (s >> (i - 1)) & 1;
                const std::vector<int> expected = in_pi1 ? std::vector<int>{1, 0, 2}
                                                         : std::vector<int>{2, 1, 0};
                CHECK(to_pattern(restrict(inst.perms[static_cast<std::size_t>(i) - 1], members),
                                 g.members) == expected);
            }
            CHECK(to_pattern(restrict(inst.perms[inst.k() - 1], members), g.members) ==
                  std::vector<int>{0, 2, 1});
        }
    }
    CHECK_THROWS_AS(gen_dual_general(1), Error);
}

TEST_CASE("general primal family: every reversal pattern has its copy") {
    for (int d : {2, 3}) {
        const Instance inst = gen_primal_general(d);
        const Instance base = gen_dual_general(d);
        CHECK(inst.n() == 3u << (2 * d));
        CHECK(inst.k() == static_cast<std::size_t>(d) + 1);
        CHECK(validate_instance(inst));
        CHECK(validate_structure(inst));

        const int stride = static_cast<int>(base.n());
        const std::size_t copies = std::size_t{1} << d;
        for (std::size_t c = 0; c < copies; ++c) {
            std::vector<bool> sigma(inst.k(), false);
            for (std::size_t j = 2; j <= inst.k(); ++j) sigma[j - 1] = (c >> (inst.k() - j)) & 1;

            std::set<int> copy_labels;
            for (int label : base.labels) copy_labels.insert(label + static_cast<int>(c) * stride);

            // reversing the full paths by sigma and restricting to the
            // copy recovers the dual family up to the label offset
            const Instance flipped = apply_reversal(inst, sigma);
            for (std::size_t j = 0; j < inst.k(); ++j) {
                std::vector<int> shifted;
                for (int label : restrict(flipped.perms[j], copy_labels).order()) {
                    shifted.push_back(label - static_cast<int>(c) * stride);
                }
                CHECK(Permutation(shifted) == base.perms[j]);
            }
        }
        // the identity copy needs no reversal at all
        std::set<int> first_copy(base.labels.begin(), base.labels.end());
        for (std::size_t j = 0; j < inst.k(); ++j) {
            CHECK(restrict(inst.perms[j], first_copy) == base.perms[j]);
        }
    }
    CHECK_THROWS_AS(gen_primal_general(1), Error);
}

TEST_CASE("structure validation catches mutations") {
    {
        Instance inst = gen_dual_2d();
        std::vector<int> order = inst.perms[0].order();
        std::swap(order[0], order[1]);
        inst.perms[0] = Permutation(order);
        CHECK_FALSE(validate_structure(inst));
    }
    {
        // un-reverse the last path's second block
        Instance inst = gen_primal_3d();
        std::vector<int> order = inst.perms[3].order();
        std::reverse(order.begin() + 5, order.begin() + 10);
        inst.perms[3] = Permutation(order);
        CHECK_FALSE(validate_structure(inst));
    }
    {
        Instance plain = make_instance({{0, 1}, {1, 0}});
        CHECK_THROWS_AS(validate_structure(plain), Error);
    }
}
