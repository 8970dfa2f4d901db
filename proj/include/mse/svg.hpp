#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "mse/embedding.hpp"
#include "mse/errors.hpp"
#include "mse/geometry.hpp"
#include "mse/instance.hpp"
#include "mse/scalar.hpp"

namespace mse {

/// Deterministic SVG rendering of 2D embeddings.  All layout arithmetic
/// is rational; pixel values are printed as exactly rounded hundredths,
/// so equal inputs give byte-identical output.

namespace svg_detail {

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

/// Fixed two-decimal rendering of a rational, rounding half up.
inline std::string num(const Scalar& x) {
    Integer hundredths = floor_div(200 * numerator(x) + denominator(x), 2 * denominator(x));
    std::string sign;
    if (hundredths < 0) {
        sign = "-";
        hundredths = -hundredths;
    }
    const Integer whole = hundredths / 100;
    const int frac = static_cast<int>(hundredths % 100);
    std::string f = std::to_string(frac);
    if (f.size() < 2) f = "0" + f;
    return sign + whole.str() + "." + f;
}

inline const std::array<const char*, 8>& palette() {
    static const std::array<const char*, 8> colors{
        "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
        "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
    return colors;
}

struct Frame {
    Scalar xmin, xmax, ymin, ymax, scale;

    // content box 60..740 x 60..540 inside the 800x600 view
    Scalar rx(const Scalar& x) const { return Scalar(60) + (x - xmin) * scale; }
    Scalar ry(const Scalar& y) const { return Scalar(540) - (y - ymin) * scale; }
    std::string px(const Scalar& x) const { return num(rx(x)); }
    std::string py(const Scalar& y) const { return num(ry(y)); }
};

inline Frame fit(Scalar xmin, Scalar xmax, Scalar ymin, Scalar ymax) {
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const Scalar sx = Scalar(680) / (xmax - xmin);
    const Scalar sy = Scalar(480) / (ymax - ymin);
    return Frame{xmin, xmax, ymin, ymax, std::min(sx, sy)};
}

inline void open_document(std::string& out) {
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" "
           "font-family=\"monospace\" font-size=\"13\">\n";
    out += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
}

inline void line(std::string& out, const std::string& x1, const std::string& y1,
                 const std::string& x2, const std::string& y2,
                 const std::string& color, const char* extra = "") {
    out += "<line x1=\"" + x1 + "\" y1=\"" + y1 + "\" x2=\"" + x2 + "\" y2=\"" + y2 +
           "\" stroke=\"" + color + "\" stroke-width=\"2\"" + extra + "/>\n";
}

inline void label_text(std::string& out, const std::string& x, const std::string& y,
                       const std::string& text, const std::string& fill = "#333333") {
    out += "<text x=\"" + x + "\" y=\"" + y + "\" fill=\"" + fill + "\">" + text + "</text>\n";
}

/// Arrow for a direction, L-infinity normalized to a fixed pixel length.
inline void arrow(std::string& out, const Scalar& ax, const Scalar& ay,
                  const Direction& v, const std::string& color) {
    Scalar mag = 0;
    for (const Scalar& c : v.coords) mag = std::max(mag, Scalar(abs(c)));
    const Scalar ux = Scalar(36) * v[0] / mag;
    const Scalar uy = Scalar(36) * v[1] / mag;
    const Scalar tx = ax + ux, ty = ay - uy;
    line(out, num(ax), num(ay), num(tx), num(ty), color);
    // arrowhead: tip plus two backswept barbs
    const Scalar bx = ux / 4, by = uy / 4;      // back along the shaft
    const Scalar px = -uy / 8, py = ux / 8;     // perpendicular offset
    line(out, num(tx), num(ty), num(tx - bx + px), num(ty + by + py), color);
    line(out, num(tx), num(ty), num(tx - bx - px), num(ty + by - py), color);
}

} // namespace svg_detail

/// Renders a 2D monotone embedding: labeled points, one polyline per
/// path in a fixed palette, and one arrow per direction in the legend.
inline std::string render_monotone_svg(const MonotoneEmbedding& emb, const Instance& inst) {
    if (emb.dimension != 2) throw Error("render supports d=2 only");
    if (emb.points.empty()) throw Error("render: empty embedding");
    using namespace svg_detail;

    Scalar xmin = emb.points.begin()->second[0], xmax = xmin;
    Scalar ymin = emb.points.begin()->second[1], ymax = ymin;
    for (const auto& [label, p] : emb.points) {
        xmin = std::min(xmin, p[0]);
        xmax = std::max(xmax, p[0]);
        ymin = std::min(ymin, p[1]);
        ymax = std::max(ymax, p[1]);
    }
    const Frame frame = fit(xmin, xmax, ymin, ymax);

    std::string out;
    open_document(out);
    for (std::size_t j = 0; j < inst.perms.size(); ++j) {
        const std::string color = palette()[j % palette().size()];
        out += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\" points=\"";
        const auto& order = inst.perms[j].order();
        for (std::size_t i = 0; i < order.size(); ++i) {
            const Point& p = emb.points.at(order[i]);
            if (i) out += ' ';
            out += frame.px(p[0]) + "," + frame.py(p[1]);
        }
        out += "\"/>\n";
    }
    for (const auto& [label, p] : emb.points) {
        const Scalar x = frame.rx(p[0]), y = frame.ry(p[1]);
        out += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"4\" fill=\"#222222\"/>\n";
        std::string name = std::to_string(label);
        if (static_cast<std::size_t>(label) < inst.label_names.size()) {
            name = inst.label_names[static_cast<std::size_t>(label)];
        }
        label_text(out, num(x + 6), num(y - 6), name);
    }
    for (std::size_t j = 0; j < emb.directions.size(); ++j) {
        const std::string color = palette()[j % palette().size()];
        const Scalar ax = Scalar(70) + Scalar(90) * Scalar(static_cast<long>(j));
        arrow(out, ax, Scalar(30), emb.directions[j], color);
        label_text(out, num(ax - 8), num(Scalar(48)), "v" + std::to_string(j + 1), color);
    }
    out += "</svg>\n";
    return out;
}

/// Renders a 2D parallel embedding: hyperplanes as solid lines across the
/// view, vertical lines dashed, both labeled.
inline std::string render_parallel_svg(const ParallelEmbedding& emb) {
    if (emb.dimension != 2) throw Error("render supports d=2 only");
    if (emb.hyperplanes.empty() || emb.lines.empty()) throw Error("render: empty embedding");
    using namespace svg_detail;

    Scalar xlo = emb.lines.front().base[0], xhi = xlo;
    for (const VerticalLine& line : emb.lines) {
        xlo = std::min(xlo, line.base[0]);
        xhi = std::max(xhi, line.base[0]);
    }
    xlo -= 1;
    xhi += 1;
    Scalar ylo = height_at(emb.hyperplanes.begin()->second, std::vector<Scalar>{xlo});
    Scalar yhi = ylo;
    for (const auto& [label, h] : emb.hyperplanes) {
        for (const Scalar& x : {xlo, xhi}) {
            const Scalar y = height_at(h, std::vector<Scalar>{x});
            ylo = std::min(ylo, y);
            yhi = std::max(yhi, y);
        }
    }
    const Frame frame = fit(xlo, xhi, ylo, yhi);

    std::string out;
    open_document(out);
    std::size_t color_index = 0;
    for (const auto& [label, h] : emb.hyperplanes) {
        const std::string color = palette()[color_index++ % palette().size()];
        const Scalar y1 = height_at(h, std::vector<Scalar>{xlo});
        const Scalar y2 = height_at(h, std::vector<Scalar>{xhi});
        line(out, frame.px(xlo), frame.py(y1), frame.px(xhi), frame.py(y2), color);
        label_text(out, num(frame.rx(xhi) - 18), num(frame.ry(y2) - 6),
                   "H" + std::to_string(label), color);
    }
    for (std::size_t j = 0; j < emb.lines.size(); ++j) {
        const Scalar x = frame.rx(emb.lines[j].base[0]);
        line(out, num(x), num(Scalar(60)), num(x), num(Scalar(540)), "#555555",
             " stroke-dasharray=\"6 4\"");
        label_text(out, num(x - 10), num(Scalar(558)), "L" + std::to_string(j + 1));
    }
    out += "</svg>\n";
    return out;
}

} // namespace mse
