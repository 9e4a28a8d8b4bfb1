#include "cfp/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cfp {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

struct Mapper {
    double scale = 1.0;
    double ox = 0.0, oy = 0.0;  // scene origin offsets
    double size = 0.0;

    // y flipped so the scene reads with y up
    double x(double sx) const { return (sx - ox) * scale; }
    double y(double sy) const { return size - (sy - oy) * scale; }
};

Mapper fit(const std::vector<Point>& pts, const std::vector<Circle>& circles,
           const RenderOptions& opts) {
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    auto grow = [&](double px, double py) {
        lo_x = std::min(lo_x, px);
        hi_x = std::max(hi_x, px);
        lo_y = std::min(lo_y, py);
        hi_y = std::max(hi_y, py);
    };
    for (const auto& p : pts) grow(p.x, p.y);
    for (const auto& c : circles) {
        grow(c.center.x - c.radius, c.center.y - c.radius);
        grow(c.center.x + c.radius, c.center.y + c.radius);
    }
    if (lo_x > hi_x) grow(0.0, 0.0);
    double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    Mapper m;
    m.size = opts.size;
    m.scale = (opts.size - 2.0 * opts.margin) / span;
    // center the scene
    m.ox = (lo_x + hi_x) / 2.0 - (opts.size / 2.0) / m.scale;
    m.oy = (lo_y + hi_y) / 2.0 - (opts.size / 2.0) / m.scale;
    return m;
}

void draw_circle(std::ostringstream& out, const Mapper& m, const Circle& c,
                 const std::string& stroke) {
    out << "  <circle cx=\"" << fmt(m.x(c.center.x)) << "\" cy=\"" << fmt(m.y(c.center.y))
        << "\" r=\"" << fmt(c.radius * m.scale) << "\" fill=\"none\" stroke=\"" << stroke
        << "\" stroke-width=\"1.5\"/>\n";
}

void draw_dashed_radius(std::ostringstream& out, const Mapper& m, const Point& center,
                        const Point& rim) {
    out << "  <line x1=\"" << fmt(m.x(center.x)) << "\" y1=\"" << fmt(m.y(center.y)) << "\" x2=\""
        << fmt(m.x(rim.x)) << "\" y2=\"" << fmt(m.y(rim.y))
        << "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
}

void draw_arrow(std::ostringstream& out, const Mapper& m, const Point& from, const Point& to,
                double dot_radius) {
    double x1 = m.x(from.x), y1 = m.y(from.y);
    double x2 = m.x(to.x), y2 = m.y(to.y);
    double dx = x2 - x1, dy = y2 - y1;
    double len = std::hypot(dx, dy);
    if (len < 1e-6) return;
    dx /= len;
    dy /= len;
    out << "  <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
        << "\" y2=\"" << fmt(y2) << "\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
    double hx = x2 - dx * dot_radius * 2.0, hy = y2 - dy * dot_radius * 2.0;
    double px = -dy, py = dx;
    out << "  <polygon points=\"" << fmt(x2) << "," << fmt(y2) << " "
        << fmt(hx + px * dot_radius) << "," << fmt(hy + py * dot_radius) << " "
        << fmt(hx - px * dot_radius) << "," << fmt(hy - py * dot_radius)
        << "\" fill=\"#d62728\"/>\n";
}

}  // namespace

std::string render_frame(const Configuration& config,
                         const std::vector<std::pair<int, Point>>& targets,
                         const RenderOptions& opts) {
    ConfigClass cls = classify(config);

    std::vector<Circle> circles;
    if (cls.circle) circles.push_back(*cls.circle);
    if (cls.biangular) circles.push_back(cls.biangular->circle);
    if (cls.quasi) {
        circles.push_back(cls.quasi->pair.outer);
        circles.push_back(cls.quasi->pair.inner);
    }
    std::vector<Point> pts = config.positions;
    for (const auto& [r, p] : targets) pts.push_back(p);
    Mapper m = fit(pts, circles, opts);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(opts.size)
        << "\" height=\"" << fmt(opts.size) << "\" viewBox=\"0 0 " << fmt(opts.size) << " "
        << fmt(opts.size) << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    if (cls.quasi) {
        draw_circle(out, m, cls.quasi->pair.outer, "#1f77b4");
        draw_circle(out, m, cls.quasi->pair.inner, "#2ca02c");
        // boundary radii of the sector decomposition, through the C1 robots
        for (int r : cls.quasi->pair.on_outer) {
            draw_dashed_radius(out, m, cls.quasi->pair.outer.center, config.positions[r]);
        }
    } else if (cls.circle) {
        draw_circle(out, m, *cls.circle, "#1f77b4");
    } else if (cls.biangular) {
        draw_circle(out, m, cls.biangular->circle, "#1f77b4");
    } else if (auto common = common_circle(config)) {
        draw_circle(out, m, *common, "#1f77b4");
    }

    for (const auto& [r, p] : targets) {
        if (r >= 0 && r < config.n()) {
            draw_arrow(out, m, config.positions[r], p, opts.dot_radius);
        }
    }
    for (const auto& p : config.positions) {
        out << "  <circle cx=\"" << fmt(m.x(p.x)) << "\" cy=\"" << fmt(m.y(p.y)) << "\" r=\""
            << fmt(opts.dot_radius) << "\" fill=\"#000000\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::vector<std::string> render_trace(const Trace& trace, const RenderOptions& opts) {
    std::vector<std::string> frames;
    if (trace.steps.empty()) {
        frames.push_back(render_frame(trace.initial, {}, opts));
        return frames;
    }
    frames.push_back(render_frame(trace.initial, trace.steps.front().targets, opts));
    for (size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& next_targets =
            i + 1 < trace.steps.size() ? trace.steps[i + 1].targets
                                       : std::vector<std::pair<int, Point>>{};
        frames.push_back(render_frame(trace.steps[i].after, next_targets, opts));
    }
    return frames;
}

std::vector<std::string> save_trace_svgs(const Trace& trace, const std::string& prefix,
                                         const RenderOptions& opts) {
    std::vector<std::string> paths;
    auto frames = render_trace(trace, opts);
    for (size_t i = 0; i < frames.size(); ++i) {
        char num[16];
        std::snprintf(num, sizeof(num), "%04zu", i);
        std::string path = prefix + num + ".svg";
        std::ofstream f(path);
        if (!f) throw Error("cannot open for writing: " + path);
        f << frames[i];
        paths.push_back(std::move(path));
    }
    return paths;
}

}  // namespace cfp
