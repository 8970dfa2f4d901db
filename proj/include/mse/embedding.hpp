#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mse/errors.hpp"
#include "mse/geometry.hpp"
#include "mse/instance.hpp"
#include "mse/linalg.hpp"
#include "mse/scalar.hpp"

namespace mse {

/// Primal object: one point per label plus one direction per path.
struct MonotoneEmbedding {
    std::size_t dimension = 0;
    std::map<int, Point> points;
    std::vector<Direction> directions;
};

/// Dual object: one non-vertical hyperplane per label plus one vertical
/// line per path.
struct ParallelEmbedding {
    std::size_t dimension = 0;
    std::map<int, Hyperplane> hyperplanes;
    std::vector<VerticalLine> lines;
};

namespace detail {

inline void check_labels(const std::map<int, Point>& points, const Instance& inst) {
    if (points.size() != inst.labels.size()) throw Error("embedding labels do not match instance");
    for (int label : inst.labels) {
        if (!points.count(label)) throw Error("embedding labels do not match instance");
    }
}

} // namespace detail

/// True iff every consecutive pair of every path strictly advances along
/// that path's direction: (p_w - p_u) . v_j > 0, exactly.
inline bool verify_monotone(const MonotoneEmbedding& emb, const Instance& inst) {
    detail::check_labels(emb.points, inst);
    if (emb.directions.size() != inst.perms.size()) throw Error("direction count does not match instance");
    for (const auto& [label, p] : emb.points) {
        if (p.dim() != emb.dimension) throw Error("dimension mismatch");
    }
    for (const Direction& v : emb.directions) {
        if (v.dim() != emb.dimension) throw Error("dimension mismatch");
    }
    for (std::size_t j = 0; j < inst.perms.size(); ++j) {
        const auto& order = inst.perms[j].order();
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            const Point& u = emb.points.at(order[i]);
            const Point& w = emb.points.at(order[i + 1]);
            if (dot(sub(w.coords, u.coords), emb.directions[j].coords) <= 0) return false;
        }
    }
    return true;
}

/// Labels sorted by ascending height over the line's base.  A tie means
/// two hyperplanes meet the line in one point; that violates general
/// position and is a hard error, never silently broken.
inline Permutation induced_order(const std::map<int, Hyperplane>& hyperplanes,
                                 const VerticalLine& line) {
    std::vector<std::pair<Scalar, int>> heights;
    heights.reserve(hyperplanes.size());
    for (const auto& [label, h] : hyperplanes) {
        heights.emplace_back(height_at(h, line), label);
    }
    std::sort(heights.begin(), heights.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> order;
    order.reserve(heights.size());
    for (std::size_t i = 0; i < heights.size(); ++i) {
        if (i > 0 && heights[i].first == heights[i - 1].first) {
            throw DegeneracyError("degenerate: coincident intersection");
        }
        order.push_back(heights[i].second);
    }
    return Permutation(std::move(order));
}

/// True iff line j meets the hyperplanes in exactly the order of
/// permutation j, for every j.  A height tie yields false (with a
/// diagnostic when requested), not an exception.
inline bool verify_parallel(const ParallelEmbedding& emb, const Instance& inst,
                            std::string* diagnostic = nullptr) {
    if (emb.hyperplanes.size() != inst.labels.size()) throw Error("embedding labels do not match instance");
    for (int label : inst.labels) {
        if (!emb.hyperplanes.count(label)) throw Error("embedding labels do not match instance");
    }
    if (emb.lines.size() != inst.perms.size()) throw Error("line count does not match instance");
    for (const auto& [label, h] : emb.hyperplanes) {
        if (h.dim() != emb.dimension) throw Error("dimension mismatch");
    }
    for (std::size_t j = 0; j < emb.lines.size(); ++j) {
        if (emb.lines[j].dim() != emb.dimension) throw Error("dimension mismatch");
        try {
            if (!(induced_order(emb.hyperplanes, emb.lines[j]) == inst.perms[j])) return false;
        } catch (const DegeneracyError& e) {
            if (diagnostic) *diagnostic = "line " + std::to_string(j + 1) + ": " + e.what();
            return false;
        }
    }
    return true;
}

/// Duality transform, parallel to monotone: each hyperplane becomes its
/// dual point and line j becomes the direction (ell_j, -1).  The height of
/// a hyperplane over ell_j equals the scalar product of its dual point
/// with (ell_j, -1), so bottom-to-top order along L_j turns into strict
/// advance along v_j: a verified parallel embedding maps to a verified
/// monotone embedding of the same instance.
inline MonotoneEmbedding dual_to_primal(const ParallelEmbedding& emb) {
    MonotoneEmbedding out;
    out.dimension = emb.dimension;
    for (const auto& [label, h] : emb.hyperplanes) {
        out.points.emplace(label, dual_of_hyperplane(h));
    }
    for (const VerticalLine& line : emb.lines) {
        std::vector<Scalar> v = line.base;
        v.push_back(Scalar(-1));
        out.directions.push_back(Direction(std::move(v)));
    }
    return out;
}

struct PrimalToDualResult {
    ParallelEmbedding embedding;
    /// flag j set: line j lists the labels in the reverse of permutation
    /// j (the direction's last coordinate points upward).
    std::vector<bool> reversed;
};

/// Reciprocal duality transform, monotone to parallel: points become
/// their dual hyperplanes; direction v_j (with v_{j,d} != 0) becomes the
/// vertical line through the dual of any hyperplane normal to v_j, i.e.
/// the base (-v_{j,1}/v_{j,d}, ..., -v_{j,d-1}/v_{j,d}).  Along that line
/// the heights are positive multiples of the projections onto v_j when
/// v_{j,d} < 0 and negative multiples when v_{j,d} > 0, whence the flag.
inline PrimalToDualResult primal_to_dual(const MonotoneEmbedding& emb, const Instance& inst) {
    detail::check_labels(emb.points, inst);
    PrimalToDualResult out;
    out.embedding.dimension = emb.dimension;
    for (const auto& [label, p] : emb.points) {
        out.embedding.hyperplanes.emplace(label, dual_of_point(p));
    }
    for (const Direction& v : emb.directions) {
        const Scalar& last = v.coords.back();
        if (last == 0) throw Error("vertical dual direction; apply tilt_directions first");
        std::vector<Scalar> base(v.coords.begin(), v.coords.end() - 1);
        for (Scalar& c : base) c = -c / last;
        out.embedding.lines.push_back(VerticalLine(std::move(base)));
        out.reversed.push_back(last > 0);
    }
    return out;
}

/// Lower every direction whose last coordinate is nonnegative, keeping
/// all monotonicity constraints strictly satisfied, by the deterministic
/// tilt v' = v - delta e_d with delta the midpoint of the exact safe
/// interval.  A direction whose constraints put a finite ceiling on the
/// tilt below the required amount is returned unchanged (its sign is
/// handled by the reversal flag downstream); a direction with no ceiling
/// tilts to last coordinate -1.
inline MonotoneEmbedding tilt_directions(const MonotoneEmbedding& emb, const Instance& inst) {
    if (!verify_monotone(emb, inst)) throw Error("tilt_directions: embedding is not monotone");
    MonotoneEmbedding out = emb;
    const std::size_t d = emb.dimension;
    for (std::size_t j = 0; j < out.directions.size(); ++j) {
        const Direction& v = out.directions[j];
        if (v.coords.back() < 0) continue;
        bool has_ceiling = false;
        Scalar ceiling = 0;
        const auto& order = inst.perms[j].order();
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            const std::vector<Scalar> edge = sub(emb.points.at(order[i + 1]).coords,
                                                 emb.points.at(order[i]).coords);
            const Scalar grow = edge[d - 1];
            if (grow <= 0) continue;
            const Scalar bound = dot(edge, v.coords) / grow;
            if (!has_ceiling || bound < ceiling) {
                has_ceiling = true;
                ceiling = bound;
            }
        }
        Scalar delta;
        if (!has_ceiling) {
            delta = v.coords.back() + 1;
        } else if (ceiling > v.coords.back()) {
            delta = (v.coords.back() + ceiling) / 2;
        } else {
            continue; // no downward tilt keeps this path monotone
        }
        std::vector<Scalar> tilted = v.coords;
        tilted.back() -= delta;
        out.directions[j] = Direction(std::move(tilted));
    }
    return out;
}

/// Rank construction: label v maps to (rank in pi_1, ..., rank in pi_k,
/// 0, ..., 0) and path j advances along the j-th coordinate axis.  Valid
/// whenever k <= d; the result always verifies.
inline MonotoneEmbedding embed_rank(const Instance& inst, std::size_t d) {
    if (inst.perms.size() > d) throw Error("use search module");
    MonotoneEmbedding emb;
    emb.dimension = d;
    for (int label : inst.labels) {
        std::vector<Scalar> coords(d, Scalar(0));
        for (std::size_t j = 0; j < inst.perms.size(); ++j) {
            coords[j] = Scalar(static_cast<long>(inst.perms[j].rank(label)));
        }
        emb.points.emplace(label, Point(std::move(coords)));
    }
    for (std::size_t j = 0; j < inst.perms.size(); ++j) {
        std::vector<Scalar> axis(d, Scalar(0));
        axis[j] = 1;
        emb.directions.push_back(Direction(std::move(axis)));
    }
    return emb;
}

/// Canonical simplex of line bases in R^{d-1}: the origin followed by the
/// standard basis vectors.  All constructions and refuters place their
/// first d lines here; any other generic placement is an affine image.
inline std::vector<Point> canonical_bases(std::size_t d) {
    if (d < 2) throw Error("canonical_bases: need d >= 2");
    std::vector<Point> bases;
    bases.reserve(d);
    bases.push_back(Point(std::vector<Scalar>(d - 1, Scalar(0))));
    for (std::size_t i = 0; i + 1 < d; ++i) {
        std::vector<Scalar> e(d - 1, Scalar(0));
        e[i] = 1;
        bases.push_back(Point(std::move(e)));
    }
    return bases;
}

/// Dual rank construction: lines at the canonical bases; the hyperplane
/// of a label passes through height (its rank in pi_j) over base j.  For
/// k < d the surplus coefficients are pinned to zero, which makes the fit
/// system square; it is nonsingular because the bases are affinely
/// independent.  The result always verifies.
inline ParallelEmbedding embed_rank_dual(const Instance& inst, std::size_t d) {
    const std::size_t k = inst.perms.size();
    if (k > d) throw Error("use search module");
    ParallelEmbedding emb;
    emb.dimension = d;
    const std::vector<Point> bases = canonical_bases(d);
    for (std::size_t j = 0; j < k; ++j) {
        emb.lines.push_back(VerticalLine(bases[j].coords));
    }
    for (int label : inst.labels) {
        // unknowns (alpha_1 .. alpha_{d-1}, alpha0)
        Matrix sys;
        std::vector<Scalar> rhs;
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<Scalar> row(d, Scalar(0));
            if (j < k) {
                for (std::size_t c = 0; c + 1 < d; ++c) row[c] = bases[j][c];
                row[d - 1] = -1;
                rhs.push_back(Scalar(static_cast<long>(inst.perms[j].rank(label))));
            } else {
                row[j - 1] = 1;
                rhs.push_back(Scalar(0));
            }
            sys.push_back(std::move(row));
        }
        const auto sol = solve_square(std::move(sys), rhs);
        if (!sol) throw Error("internal: singular hyperplane fit");
        std::vector<Scalar> alpha(sol->begin(), sol->end() - 1);
        emb.hyperplanes.emplace(label, Hyperplane(std::move(alpha), sol->back()));
    }
    return emb;
}

} // namespace mse
