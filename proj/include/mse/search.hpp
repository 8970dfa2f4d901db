#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mse/embedding.hpp"
#include "mse/errors.hpp"
#include "mse/geometry.hpp"
#include "mse/instance.hpp"
#include "mse/lp.hpp"
#include "mse/prng.hpp"

namespace mse {

/// One-sided embedding search: exact feasibility for fixed directions,
/// iterated over deterministically sampled direction tuples.  A Found
/// result is verified; NotFound is a budget report, never a proof.

struct PointsForDirections {
    std::optional<MonotoneEmbedding> embedding;
    std::size_t pivots = 0;
};

/// Exact feasibility of placing the points for the given directions:
/// (p_next - p_prev) . v_j >= 1 over all consecutive pairs.  The unit gap
/// loses nothing because any strictly monotone point set scales into it.
inline PointsForDirections lp_feasible_points(const Instance& inst,
                                              const std::vector<Direction>& directions,
                                              std::size_t d) {
    if (directions.size() != inst.perms.size()) throw Error("lp_feasible_points: need one direction per path");
    for (const Direction& v : directions) {
        if (v.dim() != d) throw Error("lp_feasible_points: direction dimension mismatch");
    }
    std::map<int, std::size_t> index;
    for (int label : inst.labels) index.emplace(label, index.size());

    LinearSystem sys(inst.labels.size() * d);
    for (std::size_t j = 0; j < inst.perms.size(); ++j) {
        const auto& order = inst.perms[j].order();
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            std::vector<Scalar> row(sys.num_vars, Scalar(0));
            const std::size_t prev = index.at(order[i]) * d;
            const std::size_t next = index.at(order[i + 1]) * d;
            for (std::size_t c = 0; c < d; ++c) {
                row[next + c] += directions[j][c];
                row[prev + c] -= directions[j][c];
            }
            sys.add_ge(std::move(row), Scalar(1));
        }
    }

    const FeasibilityResult res = solve_feasibility(sys);
    PointsForDirections out;
    out.pivots = res.pivots;
    if (!res.feasible) return out;

    MonotoneEmbedding emb;
    emb.dimension = d;
    emb.directions = directions;
    for (const auto& [label, idx] : index) {
        std::vector<Scalar> coords(res.point.begin() + static_cast<std::ptrdiff_t>(idx * d),
                                   res.point.begin() + static_cast<std::ptrdiff_t>((idx + 1) * d));
        emb.points.emplace(label, Point(std::move(coords)));
    }
    if (!verify_monotone(emb, inst)) throw Error("internal: searched embedding failed verification");
    out.embedding = std::move(emb);
    return out;
}

namespace detail {

/// One sampled direction: the stereographic image of a grid point, in
/// integer coordinates.  For t = a/b in Q^{d-1} the sphere point
/// (2t, |t|^2 - 1) / (|t|^2 + 1) clears denominators to
/// (2 a b, |a|^2 - b^2), which is never the zero vector and covers every
/// sign pattern once |a/b| ranges on both sides of 1.
inline Direction sample_direction(std::size_t d, SplitMix64& rng) {
    constexpr long kGrid = 16;
    std::vector<Scalar> coords(d);
    Scalar norm2 = 0;
    const long b = rng.range(1, kGrid);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const long a = rng.range(-kGrid, kGrid);
        coords[i] = Scalar(2 * a * b);
        norm2 += Scalar(a) * Scalar(a);
    }
    coords[d - 1] = norm2 - Scalar(b) * Scalar(b);
    return Direction(std::move(coords));
}

} // namespace detail

/// Deterministic direction tuples: count tuples of k directions in R^d,
/// reproducible from the seed.
inline std::vector<std::vector<Direction>> sample_directions(std::size_t d, std::size_t k,
                                                             std::size_t count, std::uint64_t seed) {
    if (count < 1) throw Error("sample_directions: count must be at least 1");
    SplitMix64 rng(seed);
    std::vector<std::vector<Direction>> tuples;
    tuples.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        std::vector<Direction> tuple;
        tuple.reserve(k);
        for (std::size_t j = 0; j < k; ++j) tuple.push_back(detail::sample_direction(d, rng));
        tuples.push_back(std::move(tuple));
    }
    return tuples;
}

struct SearchReport {
    enum class Outcome { Found, NotFound };
    Outcome outcome = Outcome::NotFound;
    std::optional<MonotoneEmbedding> embedding;
    std::size_t samples_tried = 0;
    std::size_t budget = 0;
    std::uint64_t seed = 0;
    std::size_t lp_pivots = 0;
};

/// Searches for a monotone simultaneous embedding in d dimensions.  With
/// k <= d the rank construction settles it outright; otherwise sampled
/// direction tuples are tried through the exact LP until the budget runs
/// out.  The report is a pure function of (instance, d, budget, seed).
inline SearchReport search_embedding(const Instance& inst, std::size_t d,
                                     std::size_t budget, std::uint64_t seed) {
    SearchReport report;
    report.budget = budget;
    report.seed = seed;
    if (inst.perms.size() <= d) {
        report.outcome = SearchReport::Outcome::Found;
        report.embedding = embed_rank(inst, d);
        return report;
    }
    SplitMix64 rng(seed);
    for (std::size_t s = 0; s < budget; ++s) {
        std::vector<Direction> tuple;
        tuple.reserve(inst.perms.size());
        for (std::size_t j = 0; j < inst.perms.size(); ++j) {
            tuple.push_back(detail::sample_direction(d, rng));
        }
        PointsForDirections attempt = lp_feasible_points(inst, tuple, d);
        report.lp_pivots += attempt.pivots;
        report.samples_tried = s + 1;
        if (attempt.embedding) {
            report.outcome = SearchReport::Outcome::Found;
            report.embedding = std::move(attempt.embedding);
            return report;
        }
    }
    report.outcome = SearchReport::Outcome::NotFound;
    return report;
}

} // namespace mse
