// Static SVG rendering in the style of the published figures: bold
// fundamental parallelogram, curve segments clipped to it, weight labels for
// weights above one, x / + glyphs for marked points. Element order is fixed,
// so identical inputs give byte-identical output.
#pragma once

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "curve.hpp"
#include "numeric.hpp"

namespace trop {

namespace svg_detail {

struct Seg {
    V2q a, b;     // Lambda-coordinates inside the unit square
    Rat t0;       // arc parameter of the piece start (for ordering)
    Rat span;     // parameter length of the piece
};

/// Clip a + t(b - a), t in [0,1], against the unit square shifted by -nu.
inline bool clip_unit(const V2q& a, const V2q& b, const V2i& nu, Seg& out) {
    V2q a0 = a - V2q(nu), d = b - a;
    Rat lo = 0, hi = 1;
    auto narrow = [&](const Rat& p0, const Rat& dp) {
        // 0 <= p0 + t dp <= 1
        if (dp == 0) return p0 >= 0 && p0 <= 1;
        Rat t_enter = (Rat(0) - p0) / dp, t_exit = (Rat(1) - p0) / dp;
        if (dp < 0) std::swap(t_enter, t_exit);
        lo = std::max(lo, t_enter);
        hi = std::min(hi, t_exit);
        return true;
    };
    if (!narrow(a0.x, d.x) || !narrow(a0.y, d.y)) return false;
    if (lo >= hi) return false;
    out.a = a0 + d * lo;
    out.b = a0 + d * hi;
    out.t0 = lo;
    out.span = hi - lo;
    return true;
}

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

}  // namespace svg_detail

/// Deterministic SVG of a (possibly marked) curve inside its fundamental
/// parallelogram.
inline std::string render_svg(const MarkedCurve& mc) {
    const auto& torus = mc.curve.torus;
    const auto& s = torus.period();
    auto sd = [](const Rat& q) { return mpq_get_d(q.get_mpq_t()); };

    // parallelogram corners in N-coordinates
    double cx[4] = {0, sd(s.a), sd(s.a) + sd(s.b), sd(s.b)};
    double cy[4] = {0, sd(s.c), sd(s.c) + sd(s.d), sd(s.d)};
    double minx = *std::min_element(cx, cx + 4), maxx = *std::max_element(cx, cx + 4);
    double miny = *std::min_element(cy, cy + 4), maxy = *std::max_element(cy, cy + 4);
    const double target = 420.0, margin = 24.0;
    double scale = (target - 2 * margin) / std::max(maxx - minx, maxy - miny);
    double w = (maxx - minx) * scale + 2 * margin, h = (maxy - miny) * scale + 2 * margin;
    auto px = [&](double x) { return margin + (x - minx) * scale; };
    auto py = [&](double y) { return h - margin - (y - miny) * scale; };
    auto pt = [&](const V2q& lambda_coords) {
        V2q n = torus.to_n(lambda_coords);
        return std::pair<double, double>(px(sd(n.x)), py(sd(n.y)));
    };

    using svg_detail::fmt;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\""
        << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n";
    out << " <path class=\"domain\" d=\"M " << fmt(px(cx[0])) << " " << fmt(py(cy[0]));
    for (int i = 1; i < 4; ++i) out << " L " << fmt(px(cx[i])) << " " << fmt(py(cy[i]));
    out << " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"2.5\"/>\n";

    for (std::size_t ei = 0; ei < mc.curve.graph.edges.size(); ++ei) {
        const auto& e = mc.curve.graph.edges[ei];
        V2q a = mc.curve.positions[e.tail].as_vec();
        V2q b = mc.curve.positions[e.head].as_vec() + V2q(e.winding);
        std::vector<svg_detail::Seg> segs;
        long x_lo = static_cast<long>(floor_rat(std::min(a.x, b.x)).get_si()) - 1;
        long x_hi = static_cast<long>(floor_rat(std::max(a.x, b.x)).get_si()) + 1;
        long y_lo = static_cast<long>(floor_rat(std::min(a.y, b.y)).get_si()) - 1;
        long y_hi = static_cast<long>(floor_rat(std::max(a.y, b.y)).get_si()) + 1;
        for (long nx = x_lo; nx <= x_hi; ++nx)
            for (long ny = y_lo; ny <= y_hi; ++ny) {
                svg_detail::Seg seg;
                if (svg_detail::clip_unit(a, b, V2i{nx, ny}, seg)) segs.push_back(seg);
            }
        std::sort(segs.begin(), segs.end(),
                  [](const svg_detail::Seg& p, const svg_detail::Seg& q) { return p.t0 < q.t0; });
        out << " <g class=\"edge\" data-edge=\"" << ei << "\" stroke=\"black\" stroke-width=\""
            << (e.weight > 1 ? "2.4" : "1.4") << "\">\n";
        for (const auto& seg : segs) {
            auto [x1, y1] = pt(seg.a);
            auto [x2, y2] = pt(seg.b);
            out << "  <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
                << "\" y2=\"" << fmt(y2) << "\"/>\n";
        }
        out << " </g>\n";
        if (e.weight > 1 && !segs.empty()) {
            // label the longest piece (first by parameter on ties)
            std::size_t best = 0;
            for (std::size_t i = 1; i < segs.size(); ++i)
                if (segs[i].span > segs[best].span) best = i;
            V2q mid = (segs[best].a + segs[best].b) * Rat(1, 2);
            auto [lx, ly] = pt(mid);
            out << " <text class=\"weight\" x=\"" << fmt(lx + 5) << "\" y=\"" << fmt(ly - 5)
                << "\" font-size=\"13\">" << e.weight << "</text>\n";
        }
    }

    for (std::size_t v = 0; v < mc.curve.positions.size(); ++v) {
        auto [x, y] = pt(mc.curve.positions[v].as_vec());
        out << " <circle class=\"vertex\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
            << "\" r=\"2.4\"/>\n";
    }

    for (std::size_t i = 0; i < mc.marks.size(); ++i) {
        TorusPoint p = point_on_edge(mc.curve, mc.marks[i].edge, mc.marks[i].t);
        auto [x, y] = pt(p.as_vec());
        out << " <text class=\"mark\" x=\"" << fmt(x - 4) << "\" y=\"" << fmt(y + 4)
            << "\" font-size=\"14\">" << (i % 2 == 0 ? "&#215;" : "+") << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

inline std::string render_svg(const ParamCurve& c) { return render_svg(MarkedCurve{c, {}}); }

}  // namespace trop
