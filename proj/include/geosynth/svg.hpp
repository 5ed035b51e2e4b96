#pragma once

#include <cstdio>
#include <string>

#include "geosynth/engine.hpp"

namespace geosynth {

namespace svg_detail {

inline std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

inline std::string attr_point(Point p) { return num(p.x) + "," + num(p.y); }

}  // namespace svg_detail

// Standalone deterministic SVG 1.1 document. Vertex labels sit outward from
// the centroid; length labels at segment midpoints; angle values near their
// vertex along the bisector, with a small arc mark.
inline std::string render_svg(const Scene& scene, double canvas_min = 0,
                              double canvas_max = 100) {
  using svg_detail::num;
  double size = canvas_max - canvas_min;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
         num(canvas_min) + " " + num(canvas_min) + " " + num(size) + " " + num(size) +
         "\" width=\"800\" height=\"800\">\n";
  out += "<g transform=\"translate(0," + num(canvas_min + canvas_max) +
         ") scale(1,-1)\">\n";
  out += "<rect x=\"" + num(canvas_min) + "\" y=\"" + num(canvas_min) + "\" width=\"" +
         num(size) + "\" height=\"" + num(size) + "\" fill=\"white\"/>\n";

  Point centroid = scene.centroid();
  auto text_at = [&](Point p, const std::string& content, double font) {
    // Text is drawn in a flipped group, so un-flip each label locally.
    return "<text x=\"" + num(p.x) + "\" y=\"" + num(-p.y) +
           "\" transform=\"scale(1,-1)\" font-size=\"" + num(font) +
           "\" font-family=\"sans-serif\" text-anchor=\"middle\">" + content +
           "</text>\n";
  };

  for (const Primitive& p : scene.primitives()) {
    if (p.kind == PrimitiveKind::segment) {
      Point a = scene.at(p.a);
      Point b = scene.at(p.b);
      out += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
             "\" y2=\"" + num(b.y) + "\" stroke=\"black\" stroke-width=\"0.4\"/>\n";
    } else if (p.kind == PrimitiveKind::circle) {
      Point o = scene.at(p.center);
      out += "<circle cx=\"" + num(o.x) + "\" cy=\"" + num(o.y) + "\" r=\"" +
             num(p.radius) + "\" stroke=\"black\" stroke-width=\"0.4\" fill=\"none\"/>\n";
    } else if (p.kind == PrimitiveKind::arc) {
      Point o = scene.at(p.center);
      Point a = scene.at(p.a);
      Point b = scene.at(p.b);
      out += "<path d=\"M " + svg_detail::attr_point(a) + " A " + num(p.radius) + " " +
             num(p.radius) + " 0 0 1 " + svg_detail::attr_point(b) +
             "\" stroke=\"black\" stroke-width=\"0.4\" fill=\"none\" data-center=\"" +
             num(o.x) + "," + num(o.y) + "\"/>\n";
    }
  }

  // Vertex labels, pushed outward from the centroid.
  for (const auto& [label, pos] : scene.vertices()) {
    Point dir = pos - centroid;
    if (norm(dir) < 1e-9) dir = {0, 1};
    Point at = pos + 3.0 * normalized(dir);
    out += text_at(at, label, 3.5);
  }

  // Displayed values.
  for (const auto& ann : scene.annotations()) {
    auto commas = std::count(ann.target_id.begin(), ann.target_id.end(), ',');
    if (commas == 1) {  // segment length at its midpoint, nudged sideways
      auto c = ann.target_id.find(',');
      Point a = scene.at(ann.target_id.substr(0, c));
      Point b = scene.at(ann.target_id.substr(c + 1));
      Point mid = midpoint(a, b);
      Point n = normalized(perpendicular(b - a));
      if (dot(n, mid - centroid) < 0) n = {-n.x, -n.y};
      out += text_at(mid + 2.0 * n, ann.text, 3.0);
    } else if (commas == 2) {  // angle value along the bisector + arc mark
      auto c1 = ann.target_id.find(',');
      auto c2 = ann.target_id.find(',', c1 + 1);
      Point pa = scene.at(ann.target_id.substr(0, c1));
      Point v = scene.at(ann.target_id.substr(c1 + 1, c2 - c1 - 1));
      Point pb = scene.at(ann.target_id.substr(c2 + 1));
      Point u1 = normalized(pa - v);
      Point u2 = normalized(pb - v);
      Point bis = u1 + u2;
      if (norm(bis) < 1e-9) bis = perpendicular(u1);
      bis = normalized(bis);
      double r = 3.0;
      out += "<path d=\"M " + svg_detail::attr_point(v + r * u1) + " A " + num(r) + " " +
             num(r) + " 0 0 " + (cross(u1, u2) > 0 ? "1" : "0") + " " +
             svg_detail::attr_point(v + r * u2) +
             "\" stroke=\"black\" stroke-width=\"0.25\" fill=\"none\"/>\n";
      out += text_at(v + 6.0 * bis, ann.text, 2.8);
    } else if (ann.target_id.rfind("circle:", 0) == 0) {
      Point o = scene.at(ann.target_id.substr(7));
      out += text_at(o + Point{0, 1.5}, "r = " + ann.text, 2.8);
    }
  }

  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace geosynth
