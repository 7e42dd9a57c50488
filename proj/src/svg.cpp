#include "ncdissect/svg.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>

namespace ncdissect::svg {

namespace {

struct Point {
  double x = 0;
  double y = 0;
};

// Screen y grows downwards, so anti-clockwise means negating the sine.
Point on_circle(double turns, double radius = 1.0) {
  const double angle = 2 * std::numbers::pi * turns;
  return {radius * std::cos(angle), -radius * std::sin(angle)};
}

Point vertex_point(int v, int vertex_count, double radius = 1.0) {
  return on_circle(static_cast<double>(v - 1) / vertex_count, radius);
}

std::string num(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  std::string out(buf);
  if (out == "-0.0000") out = "0.0000";
  return out;
}

class Canvas {
 public:
  Canvas() {
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
            "viewBox=\"-1.2 -1.2 2.4 2.4\" width=\"480\" height=\"480\">\n"
         << "<rect x=\"-1.2\" y=\"-1.2\" width=\"2.4\" height=\"2.4\" fill=\"white\"/>\n";
  }

  void line(Point a, Point b, const char* stroke, double width) {
    out_ << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
         << "\" y2=\"" << num(b.y) << "\" stroke=\"" << stroke << "\" stroke-width=\""
         << num(width) << "\"/>\n";
  }

  void polygon(const std::vector<Point>& points, const char* fill, const char* stroke,
               double width) {
    out_ << "<polygon points=\"";
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (k) out_ << ' ';
      out_ << num(points[k].x) << ',' << num(points[k].y);
    }
    out_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\""
         << num(width) << "\"/>\n";
  }

  void circle(Point c, double r, const char* fill, const char* stroke, double width) {
    out_ << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << num(r)
         << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\""
         << num(width) << "\"/>\n";
  }

  void text(Point at, const std::string& content) {
    out_ << "<text x=\"" << num(at.x) << "\" y=\"" << num(at.y)
         << "\" font-size=\"0.08\" font-family=\"sans-serif\" text-anchor=\"middle\" "
            "dominant-baseline=\"central\">"
         << content << "</text>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
};

void boundary_vertices(Canvas& canvas, int vertex_count,
                       const std::function<std::string(int)>& caption) {
  for (int v = 1; v <= vertex_count; ++v) {
    canvas.circle(vertex_point(v, vertex_count), 0.025, "black", "none", 0);
    canvas.text(vertex_point(v, vertex_count, 1.1), caption(v));
  }
}

std::string render_dissection(const Dissection& d, const std::optional<Region>& base) {
  const int vertex_count = d.vertex_count();
  Canvas canvas;
  std::vector<Point> outline;
  for (int v = 1; v <= vertex_count; ++v) outline.push_back(vertex_point(v, vertex_count));
  canvas.polygon(outline, "none", "black", 0.015);
  if (base) {
    std::vector<Point> face;
    for (int v : base->vertices) face.push_back(vertex_point(v, vertex_count));
    canvas.polygon(face, "#cfe2f3", "none", 0);
  }
  for (const auto& diag : d.diagonals) {
    canvas.line(vertex_point(diag.u, vertex_count), vertex_point(diag.w, vertex_count),
                "#1f4e79", 0.015);
  }
  boundary_vertices(canvas, vertex_count, [](int v) { return std::to_string(v); });
  return canvas.finish();
}

std::string render_spiders(const SpiderCollection& c, std::optional<int> hole_gap) {
  const int vertex_count = c.s * c.n;
  Canvas canvas;
  canvas.circle({0, 0}, 1.0, "none", "black", 0.015);
  if (hole_gap) {
    canvas.circle(on_circle((*hole_gap - 0.5) / vertex_count, 0.88), 0.06, "#999999", "black",
                  0.01);
  }
  for (const auto& block : c.blocks) {
    Point center;
    for (int v : block) {
      const Point p = vertex_point(v, vertex_count);
      center.x += p.x / block.size();
      center.y += p.y / block.size();
    }
    for (int v : block) canvas.line(center, vertex_point(v, vertex_count), "#7f1f1f", 0.015);
    canvas.circle(center, 0.035, "#7f1f1f", "none", 0);
  }
  boundary_vertices(canvas, vertex_count, [](int v) { return std::to_string(v); });
  return canvas.finish();
}

}  // namespace

std::string render(const Dissection& d) { return render_dissection(d, std::nullopt); }

std::string render(const PointedDissection& pd) { return render_dissection(pd.dissection, pd.base); }

std::string render(const SpiderCollection& c) { return render_spiders(c, std::nullopt); }

std::string render(const AnnularSpiderCollection& ac) { return render_spiders(ac.base, ac.hole_gap); }

std::string render(const LabeledPairing& p) {
  const int vertex_count = p.vertex_count();
  Canvas canvas;
  canvas.circle({0, 0}, 1.0, "none", "black", 0.015);
  for (const auto& arc : p.arcs) {
    canvas.line(vertex_point(arc.u, vertex_count), vertex_point(arc.v, vertex_count), "#2e6b30",
                0.015);
  }
  boundary_vertices(canvas, vertex_count,
                    [&p](int v) { return std::to_string(label_of(p.s, p.n, v)); });
  return canvas.finish();
}

}  // namespace ncdissect::svg
