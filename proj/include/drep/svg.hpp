#pragma once

// Deterministic SVG output for planar drawings, interval representations and
// configuration-space node graphs.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "drep/config_space.hpp"
#include "drep/graph.hpp"
#include "drep/planarity.hpp"
#include "drep/representability.hpp"

namespace drep {

namespace detail {

inline std::string fmt2(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    return s == "-0.00" ? "0.00" : s;
}

inline std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

inline std::string svg_open(double w, double h)
{
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt2(w) + "\" height=\"" + fmt2(h) +
           "\" viewBox=\"0 0 " + fmt2(w) + " " + fmt2(h) + "\">\n" + "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

inline std::string svg_line(double x1, double y1, double x2, double y2, const std::string& style)
{
    return "<line x1=\"" + fmt2(x1) + "\" y1=\"" + fmt2(y1) + "\" x2=\"" + fmt2(x2) + "\" y2=\"" + fmt2(y2) + "\" " +
           style + "/>\n";
}

inline std::string svg_dot(double x, double y, double r)
{
    return "<circle cx=\"" + fmt2(x) + "\" cy=\"" + fmt2(y) + "\" r=\"" + fmt2(r) + "\" fill=\"black\"/>\n";
}

inline std::string svg_text(double x, double y, const std::string& text, int size = 12)
{
    return "<text x=\"" + fmt2(x) + "\" y=\"" + fmt2(y) + "\" font-family=\"sans-serif\" font-size=\"" +
           std::to_string(size) + "\">" + xml_escape(text) + "</text>\n";
}

inline std::string join_labels(const std::vector<VertexLabel>& labels)
{
    std::string out;
    for (const auto& l : labels)
        out += (out.empty() ? "" : ",") + l;
    return out;
}

} // namespace detail

/// Straight-line drawing of the 1-skeleton of `base` at its grid coordinates.
inline std::string svg_drawing(const SimplicialComplex& base, const PlanarDrawing& D)
{
    const Graph G = one_skeleton(base);
    long long maxx = 0, maxy = 0;
    for (const auto& p : D.position) {
        maxx = std::max(maxx, p.x);
        maxy = std::max(maxy, p.y);
    }
    const double span = static_cast<double>(std::max<long long>({maxx, maxy, 1}));
    const double scale = 400.0 / span, margin = 30.0;
    auto X = [&](int v) { return margin + scale * static_cast<double>(D.position[v].x); };
    // grid y grows upward
    auto Y = [&](int v) { return margin + scale * static_cast<double>(maxy - D.position[v].y); };

    std::string out = detail::svg_open(2 * margin + scale * static_cast<double>(std::max<long long>(maxx, 1)),
                                       2 * margin + scale * static_cast<double>(std::max<long long>(maxy, 1)));
    for (auto [u, v] : G.edges())
        out += detail::svg_line(X(u), Y(u), X(v), Y(v), "stroke=\"black\" stroke-width=\"1.5\"");
    for (int v = 0; v < G.n; ++v) {
        out += detail::svg_dot(X(v), Y(v), 4);
        out += detail::svg_text(X(v) + 6, Y(v) - 6, base.vertices()[v]);
    }
    return out + "</svg>\n";
}

/// One horizontal segment per vertex, stacked top to bottom in label order.
inline std::string svg_intervals(const SimplicialComplex& K, const IntervalRepresentation& R)
{
    if (R.intervals.empty())
        return detail::svg_open(100, 40) + "</svg>\n";
    Rational lo = R.intervals[0].first, hi = R.intervals[0].second;
    for (const auto& [a, b] : R.intervals) {
        lo = std::min(lo, a);
        hi = std::max(hi, b);
    }
    const double low = lo.convert_to<double>();
    const double width = std::max(hi.convert_to<double>() - low, 1.0);
    const double scale = 400.0 / width, left = 60.0, row = 24.0;
    const double height = row * static_cast<double>(R.intervals.size() + 1);

    std::string out = detail::svg_open(left + 400.0 + 40.0, height);
    for (std::size_t v = 0; v < R.intervals.size(); ++v) {
        const double y = row * static_cast<double>(v + 1);
        const double x1 = left + scale * (R.intervals[v].first.convert_to<double>() - low);
        const double x2 = left + scale * (R.intervals[v].second.convert_to<double>() - low);
        out += detail::svg_text(10, y + 4, K.vertices()[v]);
        out += detail::svg_line(x1, y, x2, y, "stroke=\"black\" stroke-width=\"3\" stroke-linecap=\"round\"");
        out += detail::svg_dot(x1, y, 3) + detail::svg_dot(x2, y, 3);
    }
    return out + "</svg>\n";
}

/// Circular layout of the 0-cells (vertex pairs); each 1-cell is drawn as
/// an edge between its two endpoints. Nodes follow a depth-first walk so rings
/// stay rings, and the seed rotates the starting angle.
inline std::string svg_node_graph(const Z2Complex& Z, const NodeGraph& G, unsigned long long seed = 0)
{
    std::vector<int> points;
    std::vector<int> slot(G.nodes.size(), -1);
    std::vector<std::vector<int>> adj(G.nodes.size());
    for (std::size_t v = 0; v < G.nodes.size(); ++v) {
        if (G.nodes[v].first.size() + G.nodes[v].second.size() != 3)
            continue;
        const auto& ends = G.adj[v];
        if (ends.size() == 2) {
            adj[ends[0]].push_back(ends[1]);
            adj[ends[1]].push_back(ends[0]);
        }
    }
    for (auto& l : adj)
        std::sort(l.begin(), l.end());
    for (std::size_t s = 0; s < G.nodes.size(); ++s) {
        if (G.nodes[s].first.size() + G.nodes[s].second.size() != 2 || slot[s] >= 0)
            continue;
        std::vector<int> stack{static_cast<int>(s)};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (slot[v] >= 0)
                continue;
            slot[v] = static_cast<int>(points.size());
            points.push_back(v);
            for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it)
                if (slot[*it] < 0)
                    stack.push_back(*it);
        }
    }

    const std::size_t n = std::max<std::size_t>(points.size(), 1);
    const double cx = 300, cy = 300, radius = 240;
    const double pi = std::acos(-1.0);
    const std::size_t shift = static_cast<std::size_t>(seed % n);
    auto angle = [&](int v) { return 2 * pi * static_cast<double>((slot[v] + shift) % n) / static_cast<double>(n); };
    auto X = [&](int v) { return cx + radius * std::cos(angle(v)); };
    auto Y = [&](int v) { return cy + radius * std::sin(angle(v)); };

    std::string out = detail::svg_open(600, 600);
    for (int v : points)
        for (int u : adj[v])
            if (slot[u] > slot[v])
                out += detail::svg_line(X(v), Y(v), X(u), Y(u), "stroke=\"black\" stroke-width=\"1\"");
    for (int v : points) {
        const auto& c = G.nodes[v];
        std::string label = "(" + detail::join_labels(Z.base.labels(c.first)) + "|" +
                            detail::join_labels(Z.base.labels(c.second)) + ")";
        out += detail::svg_dot(X(v), Y(v), 3);
        out += detail::svg_text(X(v) + 5, Y(v) - 5, label, 9);
    }
    return out + "</svg>\n";
}

} // namespace drep
