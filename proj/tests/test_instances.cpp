#include <catch2/catch_amalgamated.hpp>

#include "mse/counterexamples.hpp"
#include "mse/instance.hpp"
#include "mse/io.hpp"
#include "mse/permutation.hpp"
#include "mse/prng.hpp"

using namespace mse;

namespace {

Permutation perm(std::initializer_list<int> labels) { return Permutation(std::vector<int>(labels)); }

Permutation random_perm(std::size_t size, SplitMix64& rng) {
    std::vector<int> order(size);
    for (std::size_t i = 0; i < size; ++i) order[i] = static_cast<int>(i);
    for (std::size_t i = size; i > 1; --i) {
        std::swap(order[i - 1], order[static_cast<std::size_t>(rng.range(0, static_cast<long>(i) - 1))]);
    }
    return Permutation(std::move(order));
}

} // namespace

TEST_CASE("restriction keeps the order of the kept labels") {
    // (f,b,d,e,a,c) and (d,f,c,b,e,a) with a..f as 0..5
    const Permutation p1 = perm({5, 1, 3, 4, 0, 2});
    const Permutation p2 = perm({3, 5, 2, 1, 4, 0});
    CHECK(restrict(p1, {0, 1, 2}) == perm({1, 0, 2}));
    CHECK(restrict(p2, {0, 1, 2}) == perm({2, 1, 0}));
    CHECK(restrict(p1, p1.label_set()) == p1);
    CHECK_THROWS_AS(restrict(p1, {9}), Error);
}

TEST_CASE("reversal and the restriction commutation") {
    CHECK(reverse(perm({1, 0, 2})) == perm({2, 0, 1}));
    SplitMix64 rng(3);
    for (int round = 0; round < 100; ++round) {
        const Permutation p = random_perm(2 + static_cast<std::size_t>(rng.range(0, 8)), rng);
        CHECK(reverse(reverse(p)) == p);
        std::set<int> s;
        for (int label : p.order()) {
            if (rng.range(0, 1)) s.insert(label);
        }
        CHECK(restrict(reverse(p), s) == reverse(restrict(p, s)));
    }
}

TEST_CASE("block concatenation and recovery") {
    const Permutation joined = concat_blocks({perm({0, 1}), perm({2, 3})});
    CHECK(joined == perm({0, 1, 2, 3}));
    CHECK(restrict(joined, {0, 1}) == perm({0, 1}));
    CHECK(restrict(joined, {2, 3}) == perm({2, 3}));
    CHECK(concat_blocks({perm({4, 2, 7})}) == perm({4, 2, 7}));
    CHECK_THROWS_AS(concat_blocks({perm({0, 1}), perm({1, 2})}), Error);
}

TEST_CASE("instance validation") {
    CHECK(validate_instance(gen_dual_2d()));
    {
        Instance inst = make_instance({{0, 1, 2}, {0, 1, 2}});
        CHECK_FALSE(validate_instance(inst)); // duplicate permutation
    }
    {
        Instance inst = make_instance({{0, 1, 2}, {2, 1, 0}});
        inst.perms[1] = perm({2, 1}); // missing label
        CHECK_FALSE(validate_instance(inst));
    }
}

TEST_CASE("instance files round-trip byte-stably") {
    for (const Instance& inst :
         {gen_dual_2d(), gen_primal_2d(), gen_dual_3d(), gen_primal_3d(), gen_dual_general(3)}) {
        const std::string once = dump_json(instance_to_json(inst));
        const Instance reread = instance_from_json(Json::parse(once));
        CHECK(dump_json(instance_to_json(reread)) == once);
        CHECK(reread.labels == inst.labels);
        CHECK(reread.perms == inst.perms);
        CHECK(reread.groups == inst.groups);
        CHECK(reread.family == inst.family);
    }
}

TEST_CASE("malformed instance files are rejected") {
    CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"labels": [0]})")), Error);
    CHECK_THROWS_AS(instance_from_json(Json::parse(R"([1,2,3])")), Error);
    CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"labels": [0,0], "permutations": [[0,0]]})")),
                    Error);
}
