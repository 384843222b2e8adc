// Copyright 2026 The Multiviz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "multiviz/scene.hpp"

#include <cmath>
#include <numbers>

#include "multiviz/error.hpp"
#include "multiviz/format.hpp"

namespace multiviz {

namespace {

std::string num(double v) {
  if (!std::isfinite(v)) throw InvalidArgument("non-finite coordinate in scene");
  return format_coord(v);
}

std::string class_attr(const std::string& role) {
  return role.empty() ? std::string() : " class=\"" + xml_escape(role) + "\"";
}

const char* dash_attr(bool dashed) {
  return dashed ? " stroke-dasharray=\"6,4\"" : "";
}

Eigen::Vector2d on_circle(const Eigen::Vector2d& c, double r, double angle) {
  return {c.x() + r * std::sin(angle), c.y() - r * std::cos(angle)};
}

struct SvgWriter {
  std::string& out;

  void operator()(const Circle& c) const {
    out += "<circle" + class_attr(c.role) + " cx=\"" + num(c.center.x()) +
           "\" cy=\"" + num(c.center.y()) + "\" r=\"" + num(c.radius) +
           "\" fill=\"" + c.fill + "\" stroke=\"" + c.stroke +
           "\" stroke-width=\"" + num(c.stroke_width) + "\"/>\n";
  }
  void operator()(const Line& l) const {
    out += "<line" + class_attr(l.role) + " x1=\"" + num(l.from.x()) +
           "\" y1=\"" + num(l.from.y()) + "\" x2=\"" + num(l.to.x()) +
           "\" y2=\"" + num(l.to.y()) + "\" stroke=\"" + l.stroke +
           "\" stroke-width=\"" + num(l.width) + "\"" + dash_attr(l.dashed) +
           "/>\n";
  }
  void operator()(const Polyline& p) const {
    std::string pts;
    for (const auto& v : p.points) {
      if (!pts.empty()) pts += ' ';
      pts += num(v.x()) + "," + num(v.y());
    }
    out += "<polyline" + class_attr(p.role) + " points=\"" + pts +
           "\" fill=\"none\" stroke=\"" + p.stroke + "\" stroke-width=\"" +
           num(p.width) + "\"" + dash_attr(p.dashed) + "/>\n";
  }
  void operator()(const Rect& r) const {
    out += "<rect" + class_attr(r.role) + " x=\"" + num(r.origin.x()) +
           "\" y=\"" + num(r.origin.y()) + "\" width=\"" + num(r.width) +
           "\" height=\"" + num(r.height) + "\" fill=\"" + r.fill +
           "\" stroke=\"" + r.stroke + "\"/>\n";
  }
  void operator()(const Sector& s) const {
    const double sweep = s.end_angle - s.start_angle;
    if (sweep >= 2.0 * std::numbers::pi - 1e-9) {
      out += "<circle" + class_attr(s.role) + " cx=\"" + num(s.center.x()) +
             "\" cy=\"" + num(s.center.y()) + "\" r=\"" + num(s.radius) +
             "\" fill=\"" + s.fill + "\" stroke=\"none\"/>\n";
      return;
    }
    const Eigen::Vector2d a = on_circle(s.center, s.radius, s.start_angle);
    const Eigen::Vector2d b = on_circle(s.center, s.radius, s.end_angle);
    const int large = sweep > std::numbers::pi ? 1 : 0;
    out += "<path" + class_attr(s.role) + " d=\"M " + num(s.center.x()) + " " +
           num(s.center.y()) + " L " + num(a.x()) + " " + num(a.y()) + " A " +
           num(s.radius) + " " + num(s.radius) + " 0 " + std::to_string(large) +
           " 1 " + num(b.x()) + " " + num(b.y()) + " Z\" fill=\"" + s.fill +
           "\" stroke=\"none\"/>\n";
  }
  void operator()(const Text& t) const {
    const char* anchor = t.anchor == TextAnchor::kMiddle ? "middle"
                         : t.anchor == TextAnchor::kEnd  ? "end"
                                                         : "start";
    out += "<text" + class_attr(t.role) + " x=\"" + num(t.position.x()) +
           "\" y=\"" + num(t.position.y()) + "\" font-size=\"" + num(t.size) +
           "\" font-family=\"sans-serif\" text-anchor=\"" + anchor +
           "\" fill=\"" + t.fill + "\">" + xml_escape(t.content) + "</text>\n";
  }
};

}  // namespace

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string SceneDocument::to_svg() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(width_) + "\" height=\"" + num(height_) + "\" viewBox=\"0 0 " +
         num(width_) + " " + num(height_) + "\">\n";
  out += "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" + num(width_) +
         "\" height=\"" + num(height_) + "\" fill=\"#ffffff\"/>\n";
  SvgWriter writer{out};
  for (const auto& p : items_) std::visit(writer, p);
  out += "</svg>\n";
  return out;
}

}  // namespace multiviz
