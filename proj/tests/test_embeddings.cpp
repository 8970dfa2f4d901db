#include <catch2/catch_amalgamated.hpp>

#include "mse/counterexamples.hpp"
#include "mse/embedding.hpp"
#include "mse/io.hpp"

#include "test_support.hpp"

using namespace mse;
using testsupport::random_instance;
using testsupport::random_verified_monotone;
using testsupport::random_verified_parallel;
using testsupport::rational;

namespace {

Instance two_path_instance() { return make_instance({{1, 2, 3}, {3, 2, 1}}); }

} // namespace

TEST_CASE("monotone verification on a line of points") {
    Instance inst = make_instance({{1, 2, 3}});
    MonotoneEmbedding emb;
    emb.dimension = 2;
    emb.points.emplace(1, Point({Scalar(0), Scalar(0)}));
    emb.points.emplace(2, Point({Scalar(1), Scalar(0)}));
    emb.points.emplace(3, Point({Scalar(2), Scalar(0)}));
    emb.directions.push_back(Direction({Scalar(1), Scalar(0)}));
    CHECK(verify_monotone(emb, inst));

    Instance reversed_inst = make_instance({{3, 2, 1}});
    CHECK_FALSE(verify_monotone(emb, reversed_inst));

    emb.directions[0] = Direction({Scalar(1)});
    CHECK_THROWS_AS(verify_monotone(emb, inst), Error); // dimension mismatch
}

TEST_CASE("induced order along vertical lines") {
    std::map<int, Hyperplane> planes;
    planes.emplace(0, Hyperplane({Scalar(1)}, Scalar(0)));   // x2 = x1
    planes.emplace(1, Hyperplane({Scalar(-1)}, Scalar(-2))); // x2 = -x1 + 2
    CHECK(induced_order(planes, VerticalLine({Scalar(0)})) == Permutation({0, 1}));
    CHECK(induced_order(planes, VerticalLine({Scalar(2)})) == Permutation({1, 0}));
    CHECK_THROWS_AS(induced_order(planes, VerticalLine({Scalar(1)})), DegeneracyError);
}

TEST_CASE("parallel verification flags ties as failures, not crashes") {
    ParallelEmbedding emb;
    emb.dimension = 2;
    emb.hyperplanes.emplace(0, Hyperplane({Scalar(1)}, Scalar(0)));
    emb.hyperplanes.emplace(1, Hyperplane({Scalar(-1)}, Scalar(-2)));
    emb.lines.push_back(VerticalLine({Scalar(1)})); // crossing point
    Instance inst = make_instance({{0, 1}});
    std::string diagnostic;
    CHECK_FALSE(verify_parallel(emb, inst, &diagnostic));
    CHECK(diagnostic.find("coincident") != std::string::npos);
}

TEST_CASE("rank construction reproduces the worked example") {
    Instance inst = make_instance({{2, 1, 3}, {1, 3, 2}});
    const MonotoneEmbedding emb = embed_rank(inst, 2);
    CHECK(emb.points.at(1) == Point({Scalar(2), Scalar(1)}));
    CHECK(emb.points.at(2) == Point({Scalar(1), Scalar(3)}));
    CHECK(emb.points.at(3) == Point({Scalar(3), Scalar(2)}));
    CHECK(emb.directions[0] == Direction({Scalar(1), Scalar(0)}));
    CHECK(emb.directions[1] == Direction({Scalar(0), Scalar(1)}));
    CHECK(verify_monotone(emb, inst));

    CHECK_THROWS_WITH(embed_rank(inst, 1), "use search module");

    Instance single = make_instance({{2, 0, 1}});
    CHECK(verify_monotone(embed_rank(single, 2), single));
}

TEST_CASE("dual rank construction fits hyperplanes through rank heights") {
    Instance inst = make_instance({{0, 1}, {1, 0}});
    const ParallelEmbedding emb = embed_rank_dual(inst, 2);
    REQUIRE(emb.lines.size() == 2);
    CHECK(emb.lines[0] == VerticalLine({Scalar(0)}));
    CHECK(emb.lines[1] == VerticalLine({Scalar(1)}));
    // worked 2x2 systems: H_a: x2 = x1 + 1, H_b: x2 = -x1 + 2
    CHECK(emb.hyperplanes.at(0) == Hyperplane({Scalar(1)}, Scalar(-1)));
    CHECK(emb.hyperplanes.at(1) == Hyperplane({Scalar(-1)}, Scalar(-2)));
    CHECK(verify_parallel(emb, inst));
}

TEST_CASE("dual rank construction with one path gives horizontal hyperplanes") {
    Instance inst = make_instance({{2, 0, 1}});
    const ParallelEmbedding emb = embed_rank_dual(inst, 2);
    for (const auto& [label, h] : emb.hyperplanes) {
        CHECK(h.alpha == std::vector<Scalar>{Scalar(0)});
    }
    CHECK(verify_parallel(emb, inst));
}

TEST_CASE("rank constructions verify on random instances, and compose through duality") {
    SplitMix64 rng(101);
    for (int round = 0; round < 60; ++round) {
        const std::size_t d = 2 + static_cast<std::size_t>(rng.range(0, 2));
        const std::size_t n = 3 + static_cast<std::size_t>(rng.range(0, 9));
        const std::size_t k = 1 + static_cast<std::size_t>(rng.range(0, static_cast<long>(d) - 1));
        const Instance inst = random_instance(n, k, rng);
        CHECK(verify_monotone(embed_rank(inst, d), inst));
        const ParallelEmbedding dual = embed_rank_dual(inst, d);
        CHECK(verify_parallel(dual, inst));
        CHECK(verify_monotone(dual_to_primal(dual), inst));
    }
}

TEST_CASE("dual-to-primal follows the duality formula") {
    ParallelEmbedding emb;
    emb.dimension = 2;
    emb.hyperplanes.emplace(7, Hyperplane({Scalar(3)}, Scalar(5))); // x2 = 3x1 - 5
    emb.lines.push_back(VerticalLine({Scalar(0)}));
    const MonotoneEmbedding primal = dual_to_primal(emb);
    CHECK(primal.points.at(7) == Point({Scalar(3), Scalar(5)}));
    CHECK(primal.directions[0] == Direction({Scalar(0), Scalar(-1)}));

    // single hyperplane: no consecutive pairs, trivially monotone
    Instance inst;
    inst.labels = {7};
    inst.perms.push_back(Permutation({7}));
    CHECK(verify_monotone(primal, inst));
}

TEST_CASE("verified parallel embeddings stay verified across dual_to_primal") {
    SplitMix64 rng(211);
    for (int round = 0; round < 100; ++round) {
        const std::size_t d = 2 + static_cast<std::size_t>(rng.range(0, 1));
        const auto [emb, inst] = random_verified_parallel(
            2 + static_cast<std::size_t>(rng.range(0, 5)),
            1 + static_cast<std::size_t>(rng.range(0, 3)), d, rng);
        REQUIRE(verify_parallel(emb, inst));
        CHECK(verify_monotone(dual_to_primal(emb), inst));
    }
}

TEST_CASE("primal-to-dual reversal flags follow the vertical sign") {
    Instance inst = two_path_instance();
    MonotoneEmbedding emb;
    emb.dimension = 2;
    emb.points.emplace(1, Point({Scalar(0), Scalar(0)}));
    emb.points.emplace(2, Point({Scalar(1), Scalar(-1)}));
    emb.points.emplace(3, Point({Scalar(2), Scalar(-2)}));
    emb.directions.push_back(Direction({Scalar(1), Scalar(-1)})); // downward: kept
    emb.directions.push_back(Direction({Scalar(-1), Scalar(1)})); // upward: reversed
    REQUIRE(verify_monotone(emb, inst));
    const auto result = primal_to_dual(emb, inst);
    CHECK(result.reversed == std::vector<bool>{false, true});
    const Instance adjusted = apply_reversal(inst, result.reversed);
    CHECK(verify_parallel(result.embedding, adjusted));

    MonotoneEmbedding vertical = emb;
    vertical.directions[0] = Direction({Scalar(1), Scalar(0)});
    CHECK_THROWS_WITH(primal_to_dual(vertical, inst),
                      "vertical dual direction; apply tilt_directions first");
}

TEST_CASE("tilt lowers flat directions and leaves conforming ones alone") {
    Instance inst = make_instance({{0, 1}});
    MonotoneEmbedding emb;
    emb.dimension = 2;
    emb.points.emplace(0, Point({Scalar(0), Scalar(0)}));
    emb.points.emplace(1, Point({Scalar(1), Scalar(0)}));
    emb.directions.push_back(Direction({Scalar(1), Scalar(0)}));
    const MonotoneEmbedding tilted = tilt_directions(emb, inst);
    CHECK(tilted.directions[0] == Direction({Scalar(1), Scalar(-1)}));
    CHECK(verify_monotone(tilted, inst));
    // idempotent on a conforming embedding
    const MonotoneEmbedding again = tilt_directions(tilted, inst);
    CHECK(again.directions[0] == tilted.directions[0]);
}

TEST_CASE("tilted random embeddings convert and round-trip through the dual") {
    SplitMix64 rng(307);
    for (int round = 0; round < 100; ++round) {
        const std::size_t d = 2 + static_cast<std::size_t>(rng.range(0, 1));
        const auto [emb, inst] = random_verified_monotone(
            3 + static_cast<std::size_t>(rng.range(0, 4)),
            1 + static_cast<std::size_t>(rng.range(0, static_cast<long>(d) - 1)), d, rng);
        const MonotoneEmbedding tilted = tilt_directions(emb, inst);
        REQUIRE(verify_monotone(tilted, inst));

        const auto dual = primal_to_dual(tilted, inst);
        const Instance adjusted = apply_reversal(inst, dual.reversed);
        CHECK(verify_parallel(dual.embedding, adjusted));

        // round trip: back to the primal side, against the adjusted instance
        CHECK(verify_monotone(dual_to_primal(dual.embedding), adjusted));
    }
}

TEST_CASE("embedding files round-trip") {
    SplitMix64 rng(401);
    const auto [emb, inst] = random_verified_parallel(4, 2, 3, rng);
    const std::string text = dump_json(parallel_to_json(emb));
    const ParallelEmbedding back = parallel_from_json(Json::parse(text));
    CHECK(dump_json(parallel_to_json(back)) == text);
    CHECK(back.hyperplanes == emb.hyperplanes);
    CHECK(back.lines == emb.lines);

    const MonotoneEmbedding primal = dual_to_primal(emb);
    const std::string mono_text = dump_json(monotone_to_json(primal));
    const MonotoneEmbedding mono_back = monotone_from_json(Json::parse(mono_text));
    CHECK(dump_json(monotone_to_json(mono_back)) == mono_text);
    CHECK(mono_back.points == primal.points);
}
