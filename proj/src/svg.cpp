// SVG output for the triangle tessellation.  Visibility against the
// viewport is decided with exact rational clipping; coordinates are
// converted to decimals only when written out.

#include "hurwitz/tessellation.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hurwitz {

namespace {

using Polygon = std::vector<RatPoint>;

// Sutherland-Hodgman against one axis-aligned half-plane.
// keep(p) true iff p is on the kept side; cut(p,q) computes the
// crossing point on the boundary line.
template <typename Keep, typename Cut>
Polygon clip_one(const Polygon& poly, Keep keep, Cut cut) {
  Polygon out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RatPoint& cur = poly[i];
    const RatPoint& prev = poly[(i + n - 1) % n];
    bool cur_in = keep(cur);
    bool prev_in = keep(prev);
    if (cur_in) {
      if (!prev_in) out.push_back(cut(prev, cur));
      out.push_back(cur);
    } else if (prev_in) {
      out.push_back(cut(prev, cur));
    }
  }
  return out;
}

bool intersects_viewport(Polygon poly, const Viewport& vp) {
  const auto cut_x = [](const Rat& x0) {
    return [x0](const RatPoint& p, const RatPoint& q) {
      Rat t = (x0 - p.x) / (q.x - p.x);
      return RatPoint{x0, p.y + t * (q.y - p.y)};
    };
  };
  const auto cut_y = [](const Rat& y0) {
    return [y0](const RatPoint& p, const RatPoint& q) {
      Rat t = (y0 - p.y) / (q.y - p.y);
      return RatPoint{p.x + t * (q.x - p.x), y0};
    };
  };
  poly = clip_one(poly, [&](const RatPoint& p) { return p.x >= vp.xmin; },
                  cut_x(vp.xmin));
  if (poly.empty()) return false;
  poly = clip_one(poly, [&](const RatPoint& p) { return p.x <= vp.xmax; },
                  cut_x(vp.xmax));
  if (poly.empty()) return false;
  poly = clip_one(poly, [&](const RatPoint& p) { return p.y >= vp.ymin; },
                  cut_y(vp.ymin));
  if (poly.empty()) return false;
  poly = clip_one(poly, [&](const RatPoint& p) { return p.y <= vp.ymax; },
                  cut_y(vp.ymax));
  return !poly.empty();
}

const char* side_class(Letter l) {
  switch (l) {
    case Letter::S: return "side-s";
    case Letter::U: return "side-u";
    case Letter::U2: return "side-u2";
  }
  return "side-s";
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string xml_escape(const std::string& in) {
  std::string out;
  for (char ch : in) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string svg_render(const Viewport& vp, int max_word_len) {
  if (!(vp.xmin < vp.xmax) || !(vp.ymin < vp.ymax))
    throw std::domain_error("degenerate viewport");

  const double scale = 120.0;
  const double x0 = vp.xmin.get_d();
  const double y1 = vp.ymax.get_d();
  const auto px = [&](const RatPoint& p) {
    return std::pair<double, double>{(p.x.get_d() - x0) * scale,
                                     (y1 - p.y.get_d()) * scale};
  };
  const double width = (vp.xmax.get_d() - x0) * scale;
  const double height = (y1 - vp.ymin.get_d()) * scale;

  std::ostringstream body;
  const auto emit_segment = [&](const RatPoint& a, const RatPoint& b,
                                const char* cls) {
    auto [ax, ay] = px(a);
    auto [bx, by] = px(b);
    body << "  <path class=\"" << cls << "\" d=\"M " << fmt(ax) << " "
         << fmt(ay) << " L " << fmt(bx) << " " << fmt(by) << "\"/>\n";
  };
  const auto emit_label = [&](const RatPoint& at, const std::string& text) {
    auto [tx, ty] = px(at);
    body << "  <text x=\"" << fmt(tx) << "\" y=\"" << fmt(ty) << "\">"
         << xml_escape(text) << "</text>\n";
  };

  enumerate_words(max_word_len, [&](const Word& w, const GroupElement& g) {
    if (g.in_gamma_infinity()) {
      // strip [-n-1, -n] x (-inf, 1]; the letter-styled segments on the
      // line y = 1 belong to the triangles above it, so the strip is
      // drawn plain
      Int n = g.translation_offset();
      Rat lo = Rat(-n - 1);
      Rat hi = Rat(-n);
      if (hi < vp.xmin || lo > vp.xmax || vp.ymin > 1) return;
      Rat top = std::min(Rat(1), vp.ymax);
      if (vp.ymax >= 1) emit_segment({lo, Rat(1)}, {hi, Rat(1)}, "inf");
      if (top > vp.ymin) {
        emit_segment({lo, top}, {lo, vp.ymin}, "inf");
        emit_segment({hi, top}, {hi, vp.ymin}, "inf");
        emit_label({(lo + hi) / 2, (top + vp.ymin) / 2},
                   w.empty() ? "1" : to_string(w));
      }
      return;
    }
    Triangle tri = triangle_of(g);
    // truncate the two infinite sides (direction (-a, c), going up) far
    // beyond the viewport, then clip the resulting parallelogram
    Rat ymin_tri = std::min(tri.p3.y, tri.p2.y);
    Rat reach = vp.ymax > ymin_tri ? vp.ymax - ymin_tri : Rat(0);
    Rat t = (reach + 1) / Rat(g.c());
    Rat dx = -t * Rat(g.a());
    Rat dy = t * Rat(g.c());
    RatPoint p3_far{tri.p3.x + dx, tri.p3.y + dy};
    RatPoint p2_far{tri.p2.x + dx, tri.p2.y + dy};
    if (!intersects_viewport({tri.p3, tri.p2, p2_far, p3_far}, vp)) return;
    emit_segment(tri.p3, tri.p2, side_class(w.letters.back()));
    emit_segment(tri.p3, p3_far, "inf");
    emit_segment(tri.p2, p2_far, "inf");
    RatPoint at{(tri.p3.x + tri.p2.x) / 2 + dx / 8,
                (tri.p3.y + tri.p2.y) / 2 + dy / 8};
    emit_label(at, to_string(w));
  });

  std::ostringstream doc;
  doc << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width)
      << " " << fmt(height) << "\">\n"
      << "  <style>\n"
      << "    path { fill: none; stroke: black; }\n"
      << "    .side-s { stroke-width: 1; stroke-dasharray: 6 4; }\n"
      << "    .side-u { stroke-width: 3; }\n"
      << "    .side-u2 { stroke-width: 3; stroke-dasharray: 2 4; }\n"
      << "    .inf { stroke-width: 0.7; stroke: #555; }\n"
      << "    text { font-family: sans-serif; font-size: 11px; "
         "text-anchor: middle; fill: #222; }\n"
      << "  </style>\n"
      << body.str() << "</svg>\n";
  return doc.str();
}

}  // namespace hurwitz
