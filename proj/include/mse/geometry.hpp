#pragma once

#include <cstddef>
#include <vector>

#include "mse/errors.hpp"
#include "mse/scalar.hpp"

namespace mse {

/// Throughout the library the last coordinate axis x_d plays the role of
/// the vertical axis: hyperplanes are graphs over the first d-1
/// coordinates and vertical lines are parallel to x_d.

struct Point {
    std::vector<Scalar> coords;

    Point() = default;
    explicit Point(std::vector<Scalar> c) : coords(std::move(c)) {}

    std::size_t dim() const { return coords.size(); }
    const Scalar& operator[](std::size_t i) const { return coords[i]; }
    Scalar& operator[](std::size_t i) { return coords[i]; }

    friend bool operator==(const Point&, const Point&) = default;
};

/// A nonzero vector; the zero vector is rejected at construction.
struct Direction {
    std::vector<Scalar> coords;

    Direction() = default;
    explicit Direction(std::vector<Scalar> c) : coords(std::move(c)) {
        bool nonzero = false;
        for (const Scalar& x : coords) nonzero = nonzero || x != 0;
        if (!nonzero) throw Error("direction must be a nonzero vector");
    }

    std::size_t dim() const { return coords.size(); }
    const Scalar& operator[](std::size_t i) const { return coords[i]; }

    friend bool operator==(const Direction&, const Direction&) = default;
};

/// Non-vertical hyperplane  x_d = (sum_i alpha_i x_i) - alpha0  in R^d,
/// where alpha has length d-1.  The representation is unique: there is no
/// scaling freedom, and vertical hyperplanes are unrepresentable by type.
struct Hyperplane {
    std::vector<Scalar> alpha;
    Scalar alpha0;

    Hyperplane() = default;
    Hyperplane(std::vector<Scalar> a, Scalar a0) : alpha(std::move(a)), alpha0(std::move(a0)) {}

    /// Ambient dimension d.
    std::size_t dim() const { return alpha.size() + 1; }

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Vertical line in R^d, stored as its base point in the hyperplane
/// x_d = 0 (so the base has d-1 coordinates).
struct VerticalLine {
    std::vector<Scalar> base;

    VerticalLine() = default;
    explicit VerticalLine(std::vector<Scalar> b) : base(std::move(b)) {}

    std::size_t dim() const { return base.size() + 1; }

    friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};

inline Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.size() != b.size()) throw Error("dot: length mismatch");
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::vector<Scalar> sub(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.size() != b.size()) throw Error("sub: length mismatch");
    std::vector<Scalar> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

/// The point-hyperplane duality map:  H: x_d = (sum alpha_i x_i) - alpha0
/// corresponds to the point H* = (alpha_1, ..., alpha_{d-1}, alpha0).
/// It sends families of parallel hyperplanes to vertically aligned points
/// and is an involution together with dual_of_point.
inline Point dual_of_hyperplane(const Hyperplane& h) {
    std::vector<Scalar> c = h.alpha;
    c.push_back(h.alpha0);
    return Point(std::move(c));
}

inline Hyperplane dual_of_point(const Point& p) {
    if (p.dim() < 2) throw Error("dual_of_point: need dimension >= 2");
    std::vector<Scalar> a(p.coords.begin(), p.coords.end() - 1);
    return Hyperplane(std::move(a), p.coords.back());
}

/// Height of hyperplane h over the base point ell of a vertical line:
/// (sum alpha_i ell_i) - alpha0.  Equals dual_of_hyperplane(h) . (ell, -1).
inline Scalar height_at(const Hyperplane& h, const std::vector<Scalar>& ell) {
    if (h.alpha.size() != ell.size()) throw Error("height_at: length mismatch");
    return dot(h.alpha, ell) - h.alpha0;
}

inline Scalar height_at(const Hyperplane& h, const VerticalLine& line) {
    return height_at(h, line.base);
}

} // namespace mse
