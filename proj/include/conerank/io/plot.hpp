#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "conerank/io/json.hpp"

// 2D scatter description (points, rank shades, cone wedge) and a static SVG
// rendered from that description alone.
namespace conerank::io {

inline Json plot_json(const AlternativeSet& x, const PolyhedralCone& cone, const std::vector<std::size_t>& ranks)
{
    require(x.dim() == 2, ErrorKind::validation, "plots need d = 2, got d = " + std::to_string(x.dim()));
    std::size_t lo = *std::min_element(ranks.begin(), ranks.end());
    std::size_t hi = *std::max_element(ranks.begin(), ranks.end());
    Json pts = Json::array();
    double cx = 0;
    double cy = 0;
    double span = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double px = x.point(i)[0].get_d();
        double py = x.point(i)[1].get_d();
        cx += px / static_cast<double>(x.size());
        cy += py / static_cast<double>(x.size());
        // shade 0 = lowest rank, 1 = highest
        double shade = hi == lo ? 1.0 : static_cast<double>(ranks[i] - lo) / static_cast<double>(hi - lo);
        pts.push_back(Json{{"id", x.id(i)}, {"x", px}, {"y", py}, {"rank", ranks[i]}, {"shade", shade}});
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        span = std::max({span, std::abs(x.point(i)[0].get_d() - cx), std::abs(x.point(i)[1].get_d() - cy)});
    }
    span = span > 0 ? span : 1;
    // Wedge: the cone translated to the centroid, rays scaled to half the data spread.
    Json wedge = Json::array();
    wedge.push_back(Json::array({cx, cy}));
    for (const auto& r : cone.rays()) {
        double rx = r[0].get_d();
        double ry = r[1].get_d();
        double n = std::hypot(rx, ry);
        wedge.push_back(Json::array({cx + 0.5 * span * rx / n, cy + 0.5 * span * ry / n}));
    }
    Json out;
    out["points"] = std::move(pts);
    out["rank_range"] = Json::array({lo, hi});
    out["cone"] = Json{{"rays", doubles_list(cone.rays())}, {"dual_rays", doubles_list(cone.dual_rays())}};
    out["wedge"] = std::move(wedge);
    return out;
}

inline std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

inline std::string plot_svg(const Json& plot)
{
    const double size = 480;
    const double pad = 40;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto widen = [&](double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };
    for (const auto& p : plot["points"]) {
        widen(p["x"].get<double>(), p["y"].get<double>());
    }
    for (const auto& w : plot["wedge"]) {
        widen(w[0].get<double>(), w[1].get<double>());
    }
    double sx = xmax > xmin ? (size - 2 * pad) / (xmax - xmin) : 1;
    double sy = ymax > ymin ? (size - 2 * pad) / (ymax - ymin) : 1;
    auto px = [&](double x) { return pad + (x - xmin) * sx; };
    auto py = [&](double y) { return size - pad - (y - ymin) * sy; };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
        << size << ' ' << size << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    const auto& wedge = plot["wedge"];
    if (wedge.size() == 3) {
        svg << "<polygon points=\"";
        for (const auto& w : wedge) {
            svg << num(px(w[0].get<double>())) << ',' << num(py(w[1].get<double>())) << ' ';
        }
        svg << "\" fill=\"#cfe3f7\" fill-opacity=\"0.6\" stroke=\"#4a7fb5\"/>\n";
    } else {
        for (std::size_t k = 1; k < wedge.size(); ++k) {
            svg << "<line x1=\"" << num(px(wedge[0][0].get<double>())) << "\" y1=\"" << num(py(wedge[0][1].get<double>()))
                << "\" x2=\"" << num(px(wedge[k][0].get<double>())) << "\" y2=\"" << num(py(wedge[k][1].get<double>()))
                << "\" stroke=\"#4a7fb5\"/>\n";
        }
    }
    for (const auto& p : plot["points"]) {
        // light grey for low ranks, dark red for the top
        double s = p["shade"].get<double>();
        int r = static_cast<int>(220 - 80 * s);
        int g = static_cast<int>(220 - 200 * s);
        int b = static_cast<int>(220 - 190 * s);
        svg << "<circle cx=\"" << num(px(p["x"].get<double>())) << "\" cy=\"" << num(py(p["y"].get<double>()))
            << "\" r=\"6\" fill=\"rgb(" << r << ',' << g << ',' << b << ")\" stroke=\"black\">"
            << "<title>" << xml_escape(p["id"].get<std::string>()) << ": rank " << p["rank"].get<std::size_t>() << "</title></circle>\n";
        svg << "<text x=\"" << num(px(p["x"].get<double>()) + 8) << "\" y=\"" << num(py(p["y"].get<double>()) - 8)
            << "\" font-size=\"11\" font-family=\"sans-serif\">" << p["rank"].get<std::size_t>() << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace conerank::io
