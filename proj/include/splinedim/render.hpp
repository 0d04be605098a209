#pragma once

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>

#include "ledges.hpp"

namespace splinedim {

struct RenderOptions {
    bool highlight_te = false;
    bool labels = false;
};

namespace detail {

inline std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s(buf);
    if (s == "-0.0000") s = "0.0000";
    return s;
}

} // namespace detail

/// Static SVG of a partition. The y axis points up (coordinates are
/// mirrored into SVG space). Output depends only on the partition and options.
inline std::string render_svg(const Partition& p, const RenderOptions& opt = {}) {
    using detail::fmt_num;
    const auto& vs = p.vertices();
    double minx = vs[0].x.get_d(), maxx = minx, miny = vs[0].y.get_d(), maxy = miny;
    for (const auto& v : vs) {
        minx = std::min(minx, v.x.get_d());
        maxx = std::max(maxx, v.x.get_d());
        miny = std::min(miny, v.y.get_d());
        maxy = std::max(maxy, v.y.get_d());
    }
    const double w = maxx - minx, h = maxy - miny;
    const double span = std::max(std::max(w, h), 1e-9);
    const double mx = 0.05 * (w > 0 ? w : span), my = 0.05 * (h > 0 ? h : span);
    const double stroke = span * 0.004, dot = span * 0.008;

    std::set<std::size_t> te_edges;
    if (opt.highlight_te)
        for (const auto& l : te_component(p).ledges) te_edges.insert(l.edges.begin(), l.edges.end());

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt_num(minx - mx) << " " << fmt_num(-maxy - my)
       << " " << fmt_num(w + 2 * mx) << " " << fmt_num(h + 2 * my) << "\">\n";
    if (p.name()) os << "  <title>" << *p.name() << "</title>\n";
    os << "  <g stroke-linecap=\"round\" fill=\"none\">\n";
    for (std::size_t e = 0; e < p.edge_count(); ++e) {
        const auto& a = vs[p.edges()[e].u];
        const auto& b = vs[p.edges()[e].v];
        const bool te = te_edges.count(e) > 0;
        os << "    <line x1=\"" << fmt_num(a.x.get_d()) << "\" y1=\"" << fmt_num(-a.y.get_d()) << "\" x2=\""
           << fmt_num(b.x.get_d()) << "\" y2=\"" << fmt_num(-b.y.get_d()) << "\" stroke=\""
           << (te ? "#d62728" : "#222222") << "\" stroke-width=\"" << fmt_num(te ? 2.5 * stroke : stroke) << "\"";
        if (te) os << " class=\"te\"";
        os << "/>\n";
    }
    os << "  </g>\n  <g fill=\"#000000\">\n";
    for (std::size_t v = 0; v < vs.size(); ++v)
        os << "    <circle cx=\"" << fmt_num(vs[v].x.get_d()) << "\" cy=\"" << fmt_num(-vs[v].y.get_d()) << "\" r=\""
           << fmt_num(dot) << "\"/>\n";
    os << "  </g>\n";
    if (opt.labels) {
        os << "  <g font-family=\"sans-serif\" font-size=\"" << fmt_num(span * 0.03) << "\" fill=\"#1f4e9c\">\n";
        for (std::size_t v = 0; v < vs.size(); ++v)
            os << "    <text x=\"" << fmt_num(vs[v].x.get_d() + dot * 1.5) << "\" y=\""
               << fmt_num(-vs[v].y.get_d() - dot * 1.5) << "\">" << v << "</text>\n";
        os << "  </g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace splinedim
