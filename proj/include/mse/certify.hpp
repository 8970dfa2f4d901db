#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "mse/convex.hpp"
#include "mse/counterexamples.hpp"
#include "mse/embedding.hpp"
#include "mse/errors.hpp"
#include "mse/geometry.hpp"
#include "mse/instance.hpp"
#include "mse/lp.hpp"

namespace mse {

/// Sound refutation machinery.  A refutation here is a proof; "not
/// refuted" is never a claim that an embedding exists.

/// Violation of one weak order of the lines: either a vertex pair whose
/// above/below sign sequence flips more than once (two non-vertical
/// hyperplane graphs cross at most once), or a tie block of coincident
/// lines whose paths disagree.
struct PairViolation {
    int u = 0, v = 0;
    std::vector<int> signs;  // sign of (height of u) - (height of v), one per block
};

struct WeakOrderCheck {
    std::vector<std::vector<int>> order;  // blocks of 1-based line indices, left to right
    bool violated = false;
    std::optional<PairViolation> pair;
    std::vector<int> tie_block;           // nonempty when violated by a tie
};

struct Certificate2D {
    bool refuted = false;                 // every weak order carries a violation
    std::vector<WeakOrderCheck> orders;
};

namespace detail {

/// All weak orders (ordered set partitions) of {1..k}, enumerated as
/// surjections onto {0..t-1} for t = 1..k in lexicographic order.
inline std::vector<std::vector<std::vector<int>>> weak_orders(std::size_t k) {
    std::vector<std::vector<std::vector<int>>> all;
    std::vector<std::size_t> f(k, 0);
    for (std::size_t t = 1; t <= k; ++t) {
        std::fill(f.begin(), f.end(), 0);
        for (;;) {
            std::vector<bool> hit(t, false);
            for (std::size_t x : f) hit[x] = true;
            if (std::find(hit.begin(), hit.end(), false) == hit.end()) {
                std::vector<std::vector<int>> blocks(t);
                for (std::size_t j = 0; j < k; ++j) blocks[f[j]].push_back(static_cast<int>(j) + 1);
                all.push_back(std::move(blocks));
            }
            std::size_t pos = k;
            while (pos > 0 && f[pos - 1] == t - 1) f[--pos] = 0;
            if (pos == 0) break;
            ++f[pos - 1];
        }
    }
    return all;
}

} // namespace detail

/// Exact 2D refuter for parallel simultaneous embeddings.  Enumerates
/// every weak order of the k vertical lines by x position.  Coincident
/// lines must agree on every pair, and across distinct positions each
/// pair's sign sequence may change at most once.  The instance is refuted
/// when every weak order is violated; each violation is recorded.
inline Certificate2D certify_dual_2d(const Instance& inst) {
    if (!validate_instance(inst)) {
        throw Error("certify_dual_2d: instance invalid (bad bijections or duplicate permutations)");
    }
    const std::size_t k = inst.perms.size();
    Certificate2D cert;
    cert.refuted = true;

    // 1-based rank of each label in each permutation, for O(1) pair signs
    std::vector<std::map<int, std::size_t>> rank(k);
    for (std::size_t j = 0; j < k; ++j) {
        for (int label : inst.labels) rank[j][label] = inst.perms[j].rank(label);
    }

    for (auto& blocks : detail::weak_orders(k)) {
        WeakOrderCheck check;
        check.order = blocks;

        for (const auto& block : blocks) {
            for (std::size_t i = 1; i < block.size() && !check.violated; ++i) {
                if (!(inst.perms[block[i] - 1] == inst.perms[block[0] - 1])) {
                    check.violated = true;
                    check.tie_block = block;
                }
            }
            if (check.violated) break;
        }

        if (!check.violated) {
            for (std::size_t a = 0; a < inst.labels.size() && !check.violated; ++a) {
                for (std::size_t b = a + 1; b < inst.labels.size() && !check.violated; ++b) {
                    const int u = inst.labels[a], v = inst.labels[b];
                    std::vector<int> signs;
                    signs.reserve(blocks.size());
                    int changes = 0;
                    for (const auto& block : blocks) {
                        const std::size_t line = static_cast<std::size_t>(block[0]) - 1;
                        const int s = rank[line][u] > rank[line][v] ? 1 : -1;
                        if (!signs.empty() && signs.back() != s) ++changes;
                        signs.push_back(s);
                    }
                    if (changes >= 2) {
                        check.violated = true;
                        check.pair = PairViolation{u, v, std::move(signs)};
                    }
                }
            }
        }

        cert.refuted = cert.refuted && check.violated;
        cert.orders.push_back(std::move(check));
    }
    return cert;
}

struct PatternCertificate {
    std::vector<bool> reversed;   // per permutation; the first is never reversed
    Certificate2D certificate;
};

struct MonotoneCertificate {
    bool not_embeddable = false;  // every normalized reversal pattern refuted
    std::vector<PatternCertificate> patterns;
};

/// Monotone refuter for 2D: a monotone simultaneous embedding would give
/// a parallel one for some way of reversing the paths, and reversing all
/// paths at once is the mirror symmetry, so the 2^{k-1} patterns keeping
/// the first path fixed are exhaustive.  NOT-EMBEDDABLE when every
/// pattern's parallel instance is refuted.
inline MonotoneCertificate certify_monotone_2d(const Instance& inst) {
    const std::size_t k = inst.perms.size();
    MonotoneCertificate result;
    result.not_embeddable = true;
    const std::size_t count = std::size_t{1} << (k - 1);
    for (std::size_t c = 0; c < count; ++c) {
        std::vector<bool> flags(k, false);
        for (std::size_t j = 2; j <= k; ++j) flags[j - 1] = (c >> (k - j)) & 1;
        const Instance flipped = apply_reversal(inst, flags);
        PatternCertificate pattern;
        pattern.reversed = flags;
        if (c > 0 && !validate_instance(flipped)) {
            // the pattern collided a path with another one's reverse;
            // coincident lines realize equal paths, so the pattern cannot
            // be refuted
            pattern.certificate.refuted = false;
        } else {
            pattern.certificate = certify_dual_2d(flipped);
        }
        result.not_embeddable = result.not_embeddable && pattern.certificate.refuted;
        result.patterns.push_back(std::move(pattern));
    }
    return result;
}

/// The strict separation system behind a placement witness: is there a
/// direction u with the bases of pi1 strictly above the candidate and the
/// rest strictly below?  Strictness is normalized to a unit gap, which
/// costs nothing by homogeneity.
inline LinearSystem separation_system(const std::vector<Point>& bases,
                                      const Point& candidate,
                                      const std::vector<int>& pi1) {
    const std::size_t dim = candidate.dim();
    const std::set<int> above(pi1.begin(), pi1.end());
    LinearSystem sys(dim);
    for (std::size_t i = 0; i < bases.size(); ++i) {
        std::vector<Scalar> row = sub(bases[i].coords, candidate.coords);
        if (!above.count(static_cast<int>(i) + 1)) {
            for (Scalar& c : row) c = -c;
        }
        sys.add_ge(std::move(row), Scalar(1));
    }
    return sys;
}

/// True iff no hyperplane through the candidate strictly separates the
/// pi1 bases from the others, decided by exact LP with a revalidated
/// Farkas certificate.
inline bool validate_witness(const std::vector<Point>& bases,
                             const Point& candidate,
                             const std::vector<int>& pi1) {
    const LinearSystem sys = separation_system(bases, candidate, pi1);
    const FeasibilityResult res = solve_feasibility(sys);
    return !res.feasible;
}

/// Refutation evidence for one candidate placement of the last line: a
/// partition of the first d lines that no hyperplane through the
/// candidate can split, with the Farkas certificate of the separation
/// system and the labels of the instance group built for that partition.
struct PlacementWitness {
    std::vector<int> pi1, pi2;      // 1-based line indices
    std::vector<int> group_labels;
    std::vector<Scalar> farkas;
};

/// Refutes a candidate placement of line d+1 against gen_dual_general(d).
/// Inside the hull of the bases the empty partition already has no
/// splitting hyperplane.  Outside, project the bases from the candidate
/// onto an exactly computed separating screen; a Radon partition of the
/// d projected points in R^{d-2} gives two sets whose separating
/// hyperplane would have to cross the intersection of their hulls.
inline PlacementWitness refute_placement(const Instance& inst,
                                         const std::vector<Point>& bases,
                                         const Point& candidate) {
    const std::size_t d = bases.size();
    if (d < 3) throw Error("refute_placement: d=2 routes to certify_dual_2d");
    if (inst.groups.empty()) throw Error("refute_placement: instance carries no group metadata");
    for (const Point& base : bases) {
        if (base == candidate) throw DegeneracyError("degenerate placement");
    }

    std::vector<int> pi1;
    if (!in_convex_hull(candidate, bases)) {
        // exact strictly separating screen: n.base >= c+1, n.candidate <= c-1
        const std::size_t m = candidate.dim();
        LinearSystem sep(m + 1);
        for (const Point& base : bases) {
            std::vector<Scalar> row = base.coords;
            row.push_back(Scalar(-1));
            sep.add_ge(std::move(row), Scalar(1));
        }
        {
            std::vector<Scalar> row;
            for (const Scalar& c : candidate.coords) row.push_back(-c);
            row.push_back(Scalar(1));
            sep.add_ge(std::move(row), Scalar(1));
        }
        const FeasibilityResult res = solve_feasibility(sep);
        if (!res.feasible) throw Error("internal: no separating screen for exterior candidate");
        std::vector<Scalar> normal(res.point.begin(), res.point.end() - 1);
        const AffineHyperplane screen(std::move(normal), res.point.back());

        const std::vector<Point> shadow = central_project(bases, candidate, screen);
        const RadonPartition radon = radon_partition(shadow);
        for (std::size_t idx : radon.a) pi1.push_back(static_cast<int>(idx) + 1);
    }

    PlacementWitness witness;
    witness.pi1 = pi1;
    for (std::size_t i = 1; i <= d; ++i) {
        if (std::find(pi1.begin(), pi1.end(), static_cast<int>(i)) == pi1.end()) {
            witness.pi2.push_back(static_cast<int>(i));
        }
    }

    const FeasibilityResult res = solve_feasibility(separation_system(bases, candidate, witness.pi1));
    if (res.feasible) throw Error("internal: placement witness admits a separating hyperplane");
    witness.farkas = res.farkas;

    const std::set<int> want(witness.pi1.begin(), witness.pi1.end());
    for (const GroupSpec& g : inst.groups) {
        if (std::set<int>(g.pi1.begin(), g.pi1.end()) == want && !g.reversal) {
            witness.group_labels = g.members;
            return witness;
        }
    }
    throw Error("refute_placement: no group for the witness partition");
}

/// The compact 3D refuter: with the bases at (0,0), (1,0), (0,1), each of
/// the four recorded restrictions confines the candidate to a closed
/// region, and the regions have empty intersection.  Returns the label
/// sets of all violated restrictions, most specific first; there is
/// always at least one.
inline std::vector<std::vector<int>> refute_placement_3d_compact(const Point& candidate) {
    if (candidate.dim() != 2) throw Error("refute_placement_3d_compact: candidate must lie in the base plane");
    const Scalar& x = candidate[0];
    const Scalar& y = candidate[1];
    const bool in_triangle = x >= 0 && y >= 0 && x + y <= 1;

    std::vector<std::vector<int>> violated;
    // triangle or beyond the edge opposite the first base
    if (!(x + y >= 1 || (x >= 0 && y >= 0)))
        violated.push_back({0, 2, 3});
    // triangle or beyond the edge opposite the third base
    if (y > 0 && !(x >= 0 && x + y <= 1))
        violated.push_back({0, 2, 4});
    // triangle or beyond the edge opposite the second base
    if (x > 0 && !(y >= 0 && x + y <= 1))
        violated.push_back({1, 2, 3});
    // strictly outside the closed triangle
    if (in_triangle)
        violated.push_back({0, 1});

    if (violated.empty()) throw Error("internal: compact refuter found no violated region");
    return violated;
}

} // namespace mse
