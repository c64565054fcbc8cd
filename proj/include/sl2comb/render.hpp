#pragma once

// SVG and plain-text drawings of dissections. Vertices sit on a regular
// polygon, stored vertex 0 at the top, numbered counterclockwise. Output is
// a pure function of the dissection.

#include "dissection.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace sl2comb {

enum class RenderFormat { svg, ascii };

inline RenderFormat parse_render_format(std::string_view s) {
    if (s == "svg") return RenderFormat::svg;
    if (s == "ascii") return RenderFormat::ascii;
    throw std::invalid_argument("render format must be svg or ascii");
}

namespace detail {

struct Point {
    double x;
    double y;
};

/// Position of vertex k on a circle, y axis pointing down.
inline Point on_circle(int k, int count, Point centre, double rx, double ry) {
    const double angle = std::numbers::pi / 2 + 2 * std::numbers::pi * k / count;
    return {centre.x + rx * std::cos(angle), centre.y - ry * std::sin(angle)};
}

inline std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

/// Per-vertex label: quiddity entry, or a bullet for excluded vertices.
inline std::vector<std::string> vertex_labels(const Dissection& d, const std::string& bullet) {
    const auto q = quiddity_of(d).entries;
    std::vector<std::string> out;
    std::size_t next = 0;
    for (int v = 0; v < d.vertex_count(); ++v)
        out.push_back(d.is_excluded(v) ? bullet : std::to_string(q[next++]));
    return out;
}

inline std::string signed_weight(int w) { return w > 0 ? "+" + std::to_string(w) : std::to_string(w); }

}  // namespace detail

inline constexpr int svg_size = 512;
inline constexpr int svg_margin = 16;

inline std::string render_svg(const Dissection& d) {
    require_valid(d);
    const int n = d.vertex_count();
    const detail::Point centre{svg_size / 2.0, svg_size / 2.0};
    const double radius = svg_size / 2.0 - svg_margin;
    const double label_radius = radius - 22;

    std::vector<detail::Point> at;
    for (int k = 0; k < n; ++k) at.push_back(detail::on_circle(k, n, centre, radius, radius));
    const auto labels = detail::vertex_labels(d, "•");

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << svg_size << "\" height=\"" << svg_size
       << "\" viewBox=\"0 0 " << svg_size << ' ' << svg_size << "\">\n";
    os << "  <title>" << to_string(d.kind()) << " dissection, " << n << " vertices</title>\n";
    os << "  <polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (int k = 0; k < n; ++k) os << (k ? " " : "") << detail::fixed(at[k].x) << ',' << detail::fixed(at[k].y);
    os << "\"/>\n";
    for (const auto& x : d.diagonals()) {
        os << "  <line stroke=\"black\" stroke-width=\"1.5\" x1=\"" << detail::fixed(at[x.u].x) << "\" y1=\""
           << detail::fixed(at[x.u].y) << "\" x2=\"" << detail::fixed(at[x.v].x) << "\" y2=\""
           << detail::fixed(at[x.v].y) << "\"/>\n";
    }
    for (int k = 0; k < n; ++k) {
        const auto p = detail::on_circle(k, n, centre, label_radius, label_radius);
        os << "  <circle cx=\"" << detail::fixed(at[k].x) << "\" cy=\"" << detail::fixed(at[k].y)
           << "\" r=\"3\" fill=\"black\"/>\n";
        os << "  <text x=\"" << detail::fixed(p.x) << "\" y=\"" << detail::fixed(p.y)
           << "\" font-family=\"sans-serif\" font-size=\"18\" text-anchor=\"middle\" dominant-baseline=\"central\">"
           << labels[static_cast<std::size_t>(k)] << "</text>\n";
    }
    if (d.kind() == DissectionKind::coiffee) {
        const auto faces = faces_of(d);
        for (std::size_t i = 0; i < faces.size(); ++i) {
            double sx = 0, sy = 0;
            for (int v : faces[i].vertices) {
                sx += at[v].x;
                sy += at[v].y;
            }
            const auto m = static_cast<double>(faces[i].size());
            os << "  <text x=\"" << detail::fixed(sx / m) << "\" y=\"" << detail::fixed(sy / m)
               << "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"gray\" text-anchor=\"middle\" "
                  "dominant-baseline=\"central\">"
               << detail::signed_weight(d.weights()[i]) << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

inline constexpr int ascii_width = 49;
inline constexpr int ascii_height = 25;

/// Character-grid sketch followed by a legend. Excluded vertices show '*'.
inline std::string render_ascii(const Dissection& d) {
    require_valid(d);
    const int n = d.vertex_count();
    std::vector<std::string> grid(ascii_height, std::string(ascii_width, ' '));
    const detail::Point centre{(ascii_width - 1) / 2.0, (ascii_height - 1) / 2.0};
    const double rx = centre.x - 2, ry = centre.y - 1;

    std::vector<std::pair<int, int>> cell;
    for (int k = 0; k < n; ++k) {
        const auto p = detail::on_circle(k, n, centre, rx, ry);
        cell.emplace_back(static_cast<int>(std::lround(p.x)), static_cast<int>(std::lround(p.y)));
    }
    auto draw = [&](int s, int t, char ch) {
        const auto [x0, y0] = cell[static_cast<std::size_t>(s)];
        const auto [x1, y1] = cell[static_cast<std::size_t>(t)];
        const int steps = std::max(std::abs(x1 - x0), std::abs(y1 - y0));
        for (int i = 0; i <= steps; ++i) {
            const double f = steps ? static_cast<double>(i) / steps : 0.0;
            const int x = static_cast<int>(std::lround(x0 + f * (x1 - x0)));
            const int y = static_cast<int>(std::lround(y0 + f * (y1 - y0)));
            grid[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = ch;
        }
    };
    for (int k = 0; k < n; ++k) draw(k, (k + 1) % n, '.');
    for (const auto& x : d.diagonals()) draw(x.u, x.v, ':');

    const auto labels = detail::vertex_labels(d, "*");
    for (int k = 0; k < n; ++k) {
        const auto& text = labels[static_cast<std::size_t>(k)];
        const auto [x, y] = cell[static_cast<std::size_t>(k)];
        const int start = std::clamp(x - static_cast<int>(text.size()) / 2, 0, ascii_width - static_cast<int>(text.size()));
        grid[static_cast<std::size_t>(y)].replace(static_cast<std::size_t>(start), text.size(), text);
    }

    std::ostringstream os;
    for (auto& row : grid) {
        row.erase(row.find_last_not_of(' ') + 1);
        os << row << '\n';
    }
    os << '\n' << "kind: " << to_string(d.kind()) << '\n' << "vertices (stored/label/quiddity):";
    for (int k = 0; k < n; ++k) os << ' ' << k << '/' << d.label(k) << '/' << labels[static_cast<std::size_t>(k)];
    os << '\n' << "diagonals:";
    for (const auto& x : d.diagonals()) os << " {" << x.u << ',' << x.v << '}';
    os << '\n' << "faces:";
    const auto faces = faces_of(d);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        os << " [";
        for (std::size_t j = 0; j < faces[i].size(); ++j) os << (j ? " " : "") << faces[i].vertices[j];
        os << ']';
        if (d.kind() == DissectionKind::coiffee) os << detail::signed_weight(d.weights()[i]);
    }
    os << '\n' << "quiddity: " << quiddity_of(d).entries.to_string() << '\n';
    return os.str();
}

inline std::string render(const Dissection& d, RenderFormat f) {
    return f == RenderFormat::svg ? render_svg(d) : render_ascii(d);
}

}  // namespace sl2comb
