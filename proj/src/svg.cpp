#include "eigprog/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <sstream>

#include "eigprog/errors.hpp"

namespace eigprog {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

const char* palette(std::size_t i) {
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};
    return colors[i % (sizeof colors / sizeof colors[0])];
}

}  // namespace

std::string render_ellipsoid_svg(
    const EllipsoidInstance& inst,
    const std::vector<std::vector<std::vector<double>>>& trajectories) {
    if (inst.Q.empty() || inst.Q[0].rows != 2)
        throw ConfigError("svg rendering is defined for two-dimensional instances");

    // Boundary of (x-p)^T Q (x-p) = 1 sampled as p + Q^{-1/2} (cos, sin).
    std::vector<std::vector<std::pair<double, double>>> outlines;
    for (std::size_t i = 0; i < inst.Q.size(); ++i) {
        const Mat root = sym_inv_sqrt(inst.Q[i]);
        std::vector<std::pair<double, double>> pts;
        const int samples = 128;
        for (int k = 0; k <= samples; ++k) {
            const double th = 2.0 * 3.14159265358979323846 * k / samples;
            const double c = std::cos(th), s = std::sin(th);
            pts.emplace_back(inst.p[i][0] + root.at(0, 0) * c + root.at(0, 1) * s,
                             inst.p[i][1] + root.at(1, 0) * c + root.at(1, 1) * s);
        }
        outlines.push_back(std::move(pts));
    }

    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    auto grow = [&](double x, double y) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    };
    for (const auto& o : outlines)
        for (const auto& [x, y] : o) grow(x, y);
    for (const auto& t : trajectories)
        for (const auto& pt : t)
            if (pt.size() >= 2) grow(pt[0], pt[1]);
    const double pad = 0.1 * std::max(x1 - x0, y1 - y0) + 1e-6;
    x0 -= pad;
    x1 += pad;
    y0 -= pad;
    y1 += pad;

    const double width = 640.0;
    const double scale = width / (x1 - x0);
    const double height = (y1 - y0) * scale;
    // SVG's y axis points down; flip so the picture reads like a plot.
    auto px = [&](double x) { return (x - x0) * scale; };
    auto py = [&](double y) { return height - (y - y0) * scale; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
        << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " "
        << num(height) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (const auto& o : outlines) {
        out << "<polyline fill=\"none\" stroke=\"#444444\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : o) out << num(px(x)) << "," << num(py(y)) << " ";
        out << "\"/>\n";
    }

    for (std::size_t t = 0; t < trajectories.size(); ++t) {
        const auto& traj = trajectories[t];
        if (traj.empty()) continue;
        out << "<polyline fill=\"none\" stroke=\"" << palette(t)
            << "\" stroke-width=\"1\" opacity=\"0.8\" points=\"";
        for (const auto& pt : traj) out << num(px(pt[0])) << "," << num(py(pt[1])) << " ";
        out << "\"/>\n";
        const auto& a = traj.front();
        const auto& b = traj.back();
        out << "<circle cx=\"" << num(px(a[0])) << "\" cy=\"" << num(py(a[1]))
            << "\" r=\"3\" fill=\"" << palette(t) << "\"/>\n";
        out << "<path d=\"M " << num(px(b[0]) - 4) << " " << num(py(b[1]) - 4) << " L "
            << num(px(b[0]) + 4) << " " << num(py(b[1]) + 4) << " M "
            << num(px(b[0]) - 4) << " " << num(py(b[1]) + 4) << " L "
            << num(px(b[0]) + 4) << " " << num(py(b[1]) - 4) << "\" stroke=\""
            << palette(t) << "\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace eigprog
