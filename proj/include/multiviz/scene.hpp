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

// Resolution-independent drawing primitives and their SVG 1.1 serialisation.
// Every primitive carries a `role` that is written as the SVG class
// attribute, so drawings can be audited by counting roles.

#ifndef MULTIVIZ_SCENE_HPP_
#define MULTIVIZ_SCENE_HPP_

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace multiviz {

struct Circle {
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  double radius = 1.0;
  std::string fill = "none";
  std::string stroke = "none";
  double stroke_width = 1.0;
  std::string role;
};

struct Line {
  Eigen::Vector2d from = Eigen::Vector2d::Zero();
  Eigen::Vector2d to = Eigen::Vector2d::Zero();
  std::string stroke = "#000000";
  double width = 1.0;
  bool dashed = false;
  std::string role;
};

struct Polyline {
  std::vector<Eigen::Vector2d> points;
  std::string stroke = "#000000";
  double width = 1.0;
  bool dashed = false;
  std::string role;
};

struct Rect {
  Eigen::Vector2d origin = Eigen::Vector2d::Zero();  // top-left
  double width = 0.0;
  double height = 0.0;
  std::string fill = "none";
  std::string stroke = "none";
  std::string role;
};

// Pie slice from start_angle to end_angle (radians, clockwise on screen,
// 0 = 12 o'clock). A full turn is written as a circle.
struct Sector {
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  double radius = 1.0;
  double start_angle = 0.0;
  double end_angle = 0.0;
  std::string fill = "#000000";
  std::string role;
};

enum class TextAnchor { kStart, kMiddle, kEnd };

struct Text {
  Eigen::Vector2d position = Eigen::Vector2d::Zero();
  std::string content;
  double size = 12.0;
  TextAnchor anchor = TextAnchor::kStart;
  std::string fill = "#000000";
  std::string role;
};

using Primitive = std::variant<Circle, Line, Polyline, Rect, Sector, Text>;

class SceneDocument {
 public:
  SceneDocument(double width, double height) : width_(width), height_(height) {}

  double width() const { return width_; }
  double height() const { return height_; }
  const std::vector<Primitive>& items() const { return items_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  template <typename T>
  T& add(T primitive) {
    items_.emplace_back(std::move(primitive));
    return std::get<T>(items_.back());
  }
  void warn(std::string message) { warnings_.push_back(std::move(message)); }

  // Number of primitives of type T, optionally restricted to one role.
  template <typename T>
  std::size_t count(std::string_view role = {}) const {
    std::size_t n = 0;
    for (const auto& p : items_)
      if (const T* t = std::get_if<T>(&p); t && (role.empty() || t->role == role))
        ++n;
    return n;
  }

  template <typename T>
  std::vector<const T*> select(std::string_view role = {}) const {
    std::vector<const T*> out;
    for (const auto& p : items_)
      if (const T* t = std::get_if<T>(&p); t && (role.empty() || t->role == role))
        out.push_back(t);
    return out;
  }

  // Throws InvalidArgument if any coordinate is not finite.
  std::string to_svg() const;

 private:
  double width_;
  double height_;
  std::vector<Primitive> items_;
  std::vector<std::string> warnings_;
};

// Escapes &, <, >, " and ' for XML text and attribute values.
std::string xml_escape(std::string_view text);

}  // namespace multiviz

#endif  // MULTIVIZ_SCENE_HPP_
