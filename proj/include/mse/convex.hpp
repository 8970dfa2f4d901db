#pragma once

#include <cstddef>
#include <vector>

#include "mse/errors.hpp"
#include "mse/geometry.hpp"
#include "mse/linalg.hpp"
#include "mse/lp.hpp"
#include "mse/scalar.hpp"

namespace mse {

/// Closed convex hull membership, decided by exact linear feasibility:
/// lambda >= 0, sum lambda_i = 1, sum lambda_i q_i = p.
inline bool in_convex_hull(const Point& p, const std::vector<Point>& pts) {
    if (pts.empty()) return false;
    const std::size_t m = p.dim(), count = pts.size();
    for (const Point& q : pts) {
        if (q.dim() != m) throw Error("in_convex_hull: dimension mismatch");
    }
    LinearSystem sys(count);
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<Scalar> row(count);
        for (std::size_t i = 0; i < count; ++i) row[i] = pts[i][c];
        sys.add_eq(std::move(row), p[c]);
    }
    sys.add_eq(std::vector<Scalar>(count, Scalar(1)), Scalar(1));
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Scalar> row(count, Scalar(0));
        row[i] = 1;
        sys.add_ge(std::move(row), Scalar(0));
    }
    return solve_feasibility(sys).feasible;
}

struct RadonPartition {
    std::vector<std::size_t> a, b;      // 0-based indices into the input
    std::vector<Scalar> dependence;     // the affine dependence behind the split
};

/// Radon partition of at least m+2 points in R^m: a split (A, B) of all
/// indices whose convex hulls intersect.  Computed from the deterministic
/// kernel vector of the affine dependence system (coefficients sum to
/// zero, weighted points sum to zero); indices with a positive coefficient
/// go to A, the rest -- including zero coefficients -- to B.
inline RadonPartition radon_partition(const std::vector<Point>& pts) {
    if (pts.empty()) throw Error("insufficient points for Radon");
    const std::size_t m = pts[0].dim(), count = pts.size();
    for (const Point& q : pts) {
        if (q.dim() != m) throw Error("radon_partition: dimension mismatch");
    }
    if (count < m + 2) throw Error("insufficient points for Radon");

    Matrix sys(m + 1, std::vector<Scalar>(count));
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t i = 0; i < count; ++i) sys[c][i] = pts[i][c];
    }
    for (std::size_t i = 0; i < count; ++i) sys[m][i] = 1;

    RadonPartition part;
    part.dependence = kernel_vector(std::move(sys));
    for (std::size_t i = 0; i < count; ++i) {
        (part.dependence[i] > 0 ? part.a : part.b).push_back(i);
    }
    return part;
}

/// True iff conv(points[a]) and conv(points[b]) intersect; exact LP check.
inline bool hulls_intersect(const std::vector<Point>& pts,
                            const std::vector<std::size_t>& a,
                            const std::vector<std::size_t>& b) {
    if (a.empty() || b.empty() || pts.empty()) return false;
    const std::size_t m = pts[0].dim();
    const std::size_t vars = a.size() + b.size();
    LinearSystem sys(vars);
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<Scalar> row(vars);
        for (std::size_t i = 0; i < a.size(); ++i) row[i] = pts[a[i]][c];
        for (std::size_t i = 0; i < b.size(); ++i) row[a.size() + i] = -pts[b[i]][c];
        sys.add_eq(std::move(row), Scalar(0));
    }
    {
        std::vector<Scalar> row(vars, Scalar(0));
        for (std::size_t i = 0; i < a.size(); ++i) row[i] = 1;
        sys.add_eq(std::move(row), Scalar(1));
    }
    {
        std::vector<Scalar> row(vars, Scalar(0));
        for (std::size_t i = 0; i < b.size(); ++i) row[a.size() + i] = 1;
        sys.add_eq(std::move(row), Scalar(1));
    }
    for (std::size_t i = 0; i < vars; ++i) {
        std::vector<Scalar> row(vars, Scalar(0));
        row[i] = 1;
        sys.add_ge(std::move(row), Scalar(0));
    }
    return solve_feasibility(sys).feasible;
}

/// General affine hyperplane { x : normal . x = offset } in R^m, used as a
/// projection screen.  Unlike Hyperplane it may be vertical.
struct AffineHyperplane {
    std::vector<Scalar> normal;
    Scalar offset;

    AffineHyperplane(std::vector<Scalar> n, Scalar c) : normal(std::move(n)), offset(std::move(c)) {
        bool nonzero = false;
        for (const Scalar& x : normal) nonzero = nonzero || x != 0;
        if (!nonzero) throw Error("affine hyperplane: zero normal");
    }

    Scalar eval(const Point& p) const { return dot(normal, p.coords) - offset; }
};

/// Central projection of points from a center onto a screen hyperplane,
/// written in an affine coordinate frame of the screen, so the images live
/// in R^{m-1}.  The frame is canonical: with j* the first coordinate on
/// which the normal is nonzero, the screen point (u_1,..,u_{m-1}) is the
/// unique screen point whose coordinates other than j* equal u.
inline std::vector<Point> central_project(const std::vector<Point>& pts,
                                          const Point& center,
                                          const AffineHyperplane& screen) {
    const std::size_t m = center.dim();
    if (screen.normal.size() != m) throw Error("central_project: dimension mismatch");
    std::size_t drop = 0;
    while (screen.normal[drop] == 0) ++drop;

    const Scalar gc = screen.eval(center);
    std::vector<Point> images;
    images.reserve(pts.size());
    for (const Point& q : pts) {
        if (q.dim() != m) throw Error("central_project: dimension mismatch");
        if (q == center) throw DegeneracyError("degenerate projection: point coincides with center");
        const Scalar gq = screen.eval(q);
        if (gq == gc) throw DegeneracyError("degenerate projection: ray parallel to screen");
        const Scalar t = gc / (gc - gq);
        std::vector<Scalar> img;
        img.reserve(m - 1);
        for (std::size_t c = 0; c < m; ++c) {
            if (c == drop) continue;
            img.push_back(center[c] + t * (q[c] - center[c]));
        }
        images.push_back(Point(std::move(img)));
    }
    return images;
}

} // namespace mse
