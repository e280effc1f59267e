#include "liardom/render.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace liardom {

namespace {

struct Box {
    int64_t min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool any = false;

    void add(Coord c) {
        if (!any) {
            min_x = max_x = c.x;
            min_y = max_y = c.y;
            any = true;
        } else {
            min_x = std::min(min_x, c.x);
            max_x = std::max(max_x, c.x);
            min_y = std::min(min_y, c.y);
            max_y = std::max(max_y, c.y);
        }
    }
};

int64_t ceil_mult(int64_t v, int64_t step) {
    int64_t q = v / step;
    if (v % step != 0 && v > 0) ++q;
    return q * step;
}

// plane y grows up, SVG y grows down
int64_t flip(int64_t y) { return -y; }

void open_svg(std::ostringstream& ss, const Box& box) {
    const int64_t pad = 60;
    const int64_t x0 = box.min_x - pad, x1 = box.max_x + pad;
    const int64_t y0 = flip(box.max_y) - pad, y1 = flip(box.min_y) + pad;
    ss << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << x0 << ' ' << y0
       << ' ' << (x1 - x0) << ' ' << (y1 - y0) << "\">\n";
    for (int64_t gx = ceil_mult(x0, kGridStep); gx <= x1; gx += kGridStep)
        ss << "<line x1=\"" << gx << "\" y1=\"" << y0 << "\" x2=\"" << gx << "\" y2=\"" << y1
           << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (int64_t gy = ceil_mult(y0, kGridStep); gy <= y1; gy += kGridStep)
        ss << "<line x1=\"" << x0 << "\" y1=\"" << gy << "\" x2=\"" << x1 << "\" y2=\"" << gy
           << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
}

void marker(std::ostringstream& ss, const PointRecord& p) {
    const int64_t x = p.pos.x, y = flip(p.pos.y);
    switch (p.kind) {
        case PointKind::node:
            ss << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"#000000\"/>\n";
            break;
        case PointKind::joint:
            ss << "<rect x=\"" << (x - 3) << "\" y=\"" << (y - 3)
               << "\" width=\"6\" height=\"6\" fill=\"#1f3d99\"/>\n";
            break;
        default:  // supports: open circles
            ss << "<circle cx=\"" << x << "\" cy=\"" << y
               << "\" r=\"3\" fill=\"none\" stroke=\"#b03030\" stroke-width=\"1\"/>\n";
            break;
    }
}

} // namespace

std::string render_points_svg(const std::vector<PointRecord>& pts) {
    Box box;
    for (const auto& p : pts) box.add(p.pos);
    std::ostringstream ss;
    open_svg(ss, box);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (are_adjacent(pts[i].pos, pts[j].pos))
                ss << "<line x1=\"" << pts[i].pos.x << "\" y1=\"" << flip(pts[i].pos.y) << "\" x2=\""
                   << pts[j].pos.x << "\" y2=\"" << flip(pts[j].pos.y)
                   << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    for (const auto& p : pts) marker(ss, p);
    ss << "</svg>\n";
    return ss.str();
}

std::string render_embedding_svg(const GridEmbedding& emb) {
    Box box;
    for (const Coord& p : emb.vertex_pos) box.add(p);
    for (const auto& ep : emb.edges)
        for (const Coord& p : ep.polyline) box.add(p);
    std::ostringstream ss;
    open_svg(ss, box);
    for (const auto& ep : emb.edges) {
        ss << "<polyline fill=\"none\" stroke=\"#1f3d99\" stroke-width=\"2\" points=\"";
        for (size_t i = 0; i < ep.polyline.size(); ++i)
            ss << (i ? " " : "") << ep.polyline[i].x << ',' << flip(ep.polyline[i].y);
        ss << "\"/>\n";
    }
    for (size_t v = 0; v < emb.vertex_pos.size(); ++v)
        ss << "<circle cx=\"" << emb.vertex_pos[v].x << "\" cy=\"" << flip(emb.vertex_pos[v].y)
           << "\" r=\"5\" fill=\"#000000\"/>\n";
    ss << "</svg>\n";
    return ss.str();
}

void write_svg_file(const std::string& path, const std::string& svg) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::io_error, "cannot open '" + path + "' for writing");
    out << svg;
}

} // namespace liardom
