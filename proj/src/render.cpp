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

#include "multiviz/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <tuple>

#include "multiviz/error.hpp"
#include "multiviz/format.hpp"

namespace multiviz {

namespace {

constexpr const char* kNodeFill = "#d9d9d9";
constexpr const char* kNodeStroke = "#333333";
constexpr const char* kPlainEdge = "#8c8c8c";
constexpr const char* kAbsentFill = "#f2f2f2";
constexpr const char* kAbsentStroke = "#bbbbbb";

void check_palette(SceneDocument& doc, const Style& style, std::size_t layers) {
  if (style.palette.empty()) throw InvalidArgument("palette is empty");
  if (style.palette.size() < layers)
    doc.warn("palette has " + std::to_string(style.palette.size()) +
             " colours for " + std::to_string(layers) + " layers; cycling");
}

// Maps the unit square onto a pixel box.
struct Frame {
  Eigen::Vector2d origin;
  Eigen::Vector2d extent;

  Eigen::Vector2d operator()(const Eigen::Vector2d& unit) const {
    return origin + unit.cwiseProduct(extent);
  }
};

Frame drawing_frame(const Style& style) {
  return {Eigen::Vector2d(style.margin, style.margin),
          Eigen::Vector2d(style.width - 2 * style.margin,
                          style.height - 2 * style.margin)};
}

std::string gray(double v) {
  const int g = static_cast<int>(std::lround(255.0 * (1.0 - std::clamp(v, 0.0, 1.0))));
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", g, g, g);
  return buf;
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void add_axes(SceneDocument& doc, double left, double top, double right,
              double bottom) {
  doc.add(Line{{left, bottom}, {right, bottom}, "#000000", 1.0, false, "axis"});
  doc.add(Line{{left, bottom}, {left, top}, "#000000", 1.0, false, "axis"});
}

}  // namespace

std::vector<std::string> default_palette() {
  return {"#E69F00", "#56B4E9", "#009E73", "#F0E442", "#0072B2",
          "#D55E00", "#CC79A7", "#882255", "#332288", "#999933"};
}

const std::string& Style::layer_color(LayerIndex layer) const {
  if (palette.empty()) throw InvalidArgument("palette is empty");
  return palette[layer % palette.size()];
}

SceneDocument render_sociogram(const SimpleGraph& g, const LayoutMap& layout,
                               const Style& style,
                               const SociogramOptions& options) {
  SceneDocument doc(style.width, style.height);
  if (options.color_by_provenance) check_palette(doc, style, g.layers().size());
  const Frame frame = drawing_frame(style);

  std::vector<Eigen::Vector2d> at;
  at.reserve(g.actor_count());
  for (const auto& a : g.actors()) at.push_back(frame(layout.at(a)));

  if (options.color_by_provenance) {
    // (layer, lo, hi, slot within the edge, slots on the edge)
    std::vector<std::tuple<LayerIndex, ActorIndex, ActorIndex, std::size_t,
                           std::size_t>>
        segments;
    for (const auto& e : g.entries()) {
      const auto layers = e.provenance.indices();
      for (std::size_t i = 0; i < layers.size(); ++i)
        segments.emplace_back(layers[i], e.pair.lo, e.pair.hi, i, layers.size());
    }
    std::sort(segments.begin(), segments.end());
    const double spacing = 1.5 * style.edge_width;
    for (const auto& [l, lo, hi, slot, slots] : segments) {
      const Eigen::Vector2d dir = at[hi] - at[lo];
      Eigen::Vector2d normal(-dir.y(), dir.x());
      const double len = normal.norm();
      normal = len > 0 ? Eigen::Vector2d(normal / len) : Eigen::Vector2d::Zero();
      const Eigen::Vector2d shift =
          normal * spacing *
          (static_cast<double>(slot) - 0.5 * static_cast<double>(slots - 1));
      doc.add(Line{at[lo] + shift, at[hi] + shift, style.layer_color(l),
                   style.edge_width, false, "edge"});
    }
  } else {
    for (const auto& e : g.entries())
      doc.add(Line{at[e.pair.lo], at[e.pair.hi], kPlainEdge, style.edge_width,
                   false, "edge"});
  }

  for (ActorIndex a = 0; a < g.actor_count(); ++a) {
    double r = style.node_radius;
    if (options.node_size_by_degree)
      r = g.degree(a) == 0
              ? 0.5 * style.node_radius
              : style.node_radius * std::sqrt(static_cast<double>(g.degree(a)));
    const bool hl = options.highlight.contains(g.actors()[a]);
    doc.add(Circle{at[a], r, hl ? "#000000" : kNodeFill, kNodeStroke, 1.0, "node"});
  }
  return doc;
}

SceneDocument render_slices(const MultiplexNetwork& net,
                            std::span<const LayoutMap> layouts,
                            const Style& style) {
  if (layouts.size() != net.layer_count())
    throw InvalidArgument("render_slices needs one layout per layer (got " +
                          std::to_string(layouts.size()) + " for " +
                          std::to_string(net.layer_count()) + ")");
  const double side = style.panel_size;
  const double title = 2.0 * style.font_size;
  SceneDocument doc(side * static_cast<double>(std::max<std::size_t>(net.layer_count(), 1)),
                    side + title);
  check_palette(doc, style, net.layer_count());
  const double pad = 0.08 * side;

  for (LayerIndex l = 0; l < net.layer_count(); ++l) {
    const double x0 = side * l;
    doc.add(Rect{{x0 + 2, title}, side - 4, side - 4, "none", "#cccccc", "frame"});
    doc.add(Text{{x0 + side / 2, 1.4 * style.font_size}, net.layer_name(l),
                 style.font_size, TextAnchor::kMiddle, style.layer_color(l), "title"});
    const Frame frame{{x0 + pad, title + pad},
                      {side - 2 * pad, side - 2 * pad}};
    std::vector<Eigen::Vector2d> at;
    at.reserve(net.actor_count());
    for (const auto& a : net.actors()) at.push_back(frame(layouts[l].at(a)));
    for (const ActorPair& p : net.edges(l))
      doc.add(Line{at[p.lo], at[p.hi], style.layer_color(l), style.edge_width,
                   false, "edge"});
    for (ActorIndex a = 0; a < net.actor_count(); ++a) {
      const bool present = !net.adjacency(l, a).empty();
      doc.add(Circle{at[a], 0.7 * style.node_radius,
                     present ? kNodeFill : kAbsentFill,
                     present ? kNodeStroke : kAbsentStroke, 1.0, "node"});
    }
  }
  return doc;
}

SceneDocument render_pie_augmented(const MultiplexNetwork& net,
                                   const LayoutMap& layout, const Style& style) {
  SceneDocument doc(style.width, style.height);
  check_palette(doc, style, net.layer_count());
  const Frame frame = drawing_frame(style);
  std::vector<Eigen::Vector2d> at;
  for (const auto& a : net.actors()) at.push_back(frame(layout.at(a)));

  for (LayerIndex l = 0; l < net.layer_count(); ++l)
    for (const ActorPair& p : net.edges(l))
      doc.add(Line{at[p.lo], at[p.hi], style.layer_color(l),
                   0.6 * style.edge_width, false, "edge"});

  for (ActorIndex a = 0; a < net.actor_count(); ++a) {
    std::size_t total = 0;
    for (LayerIndex l = 0; l < net.layer_count(); ++l)
      total += net.adjacency(l, a).size();
    if (total == 0) {
      doc.add(Circle{at[a], 0.5 * style.node_radius, "none", kNodeStroke, 1.0, "node"});
      continue;
    }
    const double r = 0.7 * style.node_radius * std::sqrt(static_cast<double>(total));
    double angle = 0.0;
    for (LayerIndex l = 0; l < net.layer_count(); ++l) {
      const std::size_t d = net.adjacency(l, a).size();
      if (d == 0) continue;
      const double sweep = 2.0 * std::numbers::pi * static_cast<double>(d) /
                           static_cast<double>(total);
      doc.add(Sector{at[a], r, angle, angle + sweep, style.layer_color(l), "pie-sector"});
      angle += sweep;
    }
  }
  return doc;
}

SceneDocument render_ranked(const MultiplexNetwork& net,
                            std::span<const double> values, const Style& style,
                            std::size_t labelled) {
  if (values.size() != net.actor_count())
    throw InvalidArgument("ranked sociogram needs one metric value per actor");
  SceneDocument doc(style.width, style.height);
  check_palette(doc, style, net.layer_count());
  const std::size_t n = net.actor_count();

  std::vector<ActorIndex> order(n);
  std::iota(order.begin(), order.end(), ActorIndex{0});
  std::stable_sort(order.begin(), order.end(), [&](ActorIndex x, ActorIndex y) {
    return values[x] > values[y];
  });
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;

  std::vector<std::size_t> width(n, 0);
  std::size_t total = 0;
  for (ActorIndex a = 0; a < n; ++a) {
    for (LayerIndex l = 0; l < net.layer_count(); ++l)
      width[a] += net.adjacency(l, a).size();
    total += width[a];
  }

  const double left = style.margin, right = style.width - style.margin;
  const double top = style.margin, bottom = style.height - style.margin;
  const double unit = (right - left) / static_cast<double>(std::max<std::size_t>(total, 1));
  double lo = 0.0, hi = 0.0;
  if (n > 0) {
    lo = std::min(0.0, *std::min_element(values.begin(), values.end()));
    hi = *std::max_element(values.begin(), values.end());
  }
  if (hi <= lo) hi = lo + 1.0;
  auto y_of = [&](double v) { return bottom - (v - lo) / (hi - lo) * (bottom - top); };

  add_axes(doc, left, top, right, bottom);
  double x = left;
  for (std::size_t i = 0; i < n; ++i) {
    const ActorIndex a = order[i];
    // Incident edges ordered by (layer, partner rank).
    std::vector<std::pair<LayerIndex, std::size_t>> incident;
    for (LayerIndex l = 0; l < net.layer_count(); ++l)
      for (ActorIndex b : net.adjacency(l, a)) incident.emplace_back(l, rank[b]);
    std::sort(incident.begin(), incident.end());
    for (std::size_t j = 0; j < incident.size(); ++j) {
      const double ex = x + (static_cast<double>(j) + 0.5) * unit;
      const auto [l, partner_rank] = incident[j];
      doc.add(Line{{ex, y_of(values[a])}, {ex, y_of(values[order[partner_rank]])},
                   style.layer_color(l), std::max(0.5, std::min(style.edge_width, 0.8 * unit)),
                   false, "edge"});
    }
    const double cx = x + 0.5 * unit * static_cast<double>(width[a]);
    doc.add(Circle{{cx, y_of(values[a])}, 0.5 * style.node_radius, "#000000",
                   "none", 1.0, "node"});
    if (i < labelled)
      doc.add(Text{{cx, y_of(values[a]) - style.node_radius}, net.actor_name(a),
                   style.font_size, TextAnchor::kMiddle, "#000000", "label"});
    x += unit * static_cast<double>(width[a]);
  }
  return doc;
}

SceneDocument render_parallel_coords(const MetricTable& table,
                                     const Style& style) {
  if (table.values.rows() == 0 || table.values.cols() == 0)
    throw InvalidArgument("parallel coordinates need a non-empty table");
  SceneDocument doc(style.width, style.height);
  const Eigen::Index L = table.values.cols();
  const double left = style.margin, right = style.width - style.margin;
  const double top = style.margin + style.font_size,
               bottom = style.height - style.margin;
  auto axis_x = [&](Eigen::Index l) {
    return L == 1 ? 0.5 * (left + right)
                  : left + (right - left) * static_cast<double>(l) /
                               static_cast<double>(L - 1);
  };
  const Eigen::RowVectorXd mn = table.values.colwise().minCoeff();
  const Eigen::RowVectorXd mx = table.values.colwise().maxCoeff();

  for (Eigen::Index l = 0; l < L; ++l) {
    doc.add(Line{{axis_x(l), top}, {axis_x(l), bottom}, "#000000", 1.0, false, "axis"});
    doc.add(Text{{axis_x(l), top - 0.5 * style.font_size},
                 table.layers[static_cast<std::size_t>(l)], style.font_size,
                 TextAnchor::kMiddle, "#000000", "label"});
  }
  for (Eigen::Index a = 0; a < table.values.rows(); ++a) {
    Polyline line{{}, "#4477AA", 0.8, false, "actor"};
    for (Eigen::Index l = 0; l < L; ++l) {
      const double span = mx[l] - mn[l];
      const double t = span > 0 ? (table.values(a, l) - mn[l]) / span : 0.5;
      line.points.emplace_back(axis_x(l), bottom - t * (bottom - top));
    }
    doc.add(std::move(line));
  }
  return doc;
}

SceneDocument render_heatmap(const JaccardMatrix& matrix, const Style& style) {
  SceneDocument doc(style.width, style.height);
  const auto L = static_cast<Eigen::Index>(matrix.layers.size());
  const double label_band = 6.0 * style.font_size;
  const double left = style.margin + label_band, top = style.margin + label_band;
  const double side =
      std::min(style.width - left - style.margin, style.height - top - style.margin);
  const double cell = L > 0 ? side / static_cast<double>(L) : side;

  for (Eigen::Index i = 0; i < L; ++i) {
    const auto& name = matrix.layers[static_cast<std::size_t>(i)];
    doc.add(Text{{left - 0.5 * style.font_size, top + (i + 0.5) * cell},
                 name, style.font_size, TextAnchor::kEnd, "#000000", "label"});
    doc.add(Text{{left + (i + 0.5) * cell, top - 0.5 * style.font_size},
                 name, style.font_size, TextAnchor::kMiddle, "#000000", "label"});
  }
  for (Eigen::Index i = 0; i < L; ++i)
    for (Eigen::Index j = 0; j < L; ++j) {
      const double v = matrix.values(i, j);
      doc.add(Rect{{left + j * cell, top + i * cell}, cell, cell, gray(v),
                   "#ffffff", "cell"});
      doc.add(Text{{left + (j + 0.5) * cell, top + (i + 0.5) * cell + 0.35 * style.font_size},
                   fixed2(v), style.font_size, TextAnchor::kMiddle,
                   v > 0.5 ? "#ffffff" : "#000000", "value"});
    }
  return doc;
}

SceneDocument render_sweep_chart(const SweepResult& result, const Style& style) {
  SceneDocument doc(style.width, style.height);
  const double left = style.margin + 2 * style.font_size,
               right = style.width - style.margin;
  const double top = style.margin, bottom = style.height - style.margin - style.font_size;
  add_axes(doc, left, top, right, bottom);

  double x_lo = 0.0, x_hi = 1.0;
  if (!result.thresholds.empty()) {
    x_lo = *std::min_element(result.thresholds.begin(), result.thresholds.end());
    x_hi = *std::max_element(result.thresholds.begin(), result.thresholds.end());
  }
  if (x_hi <= x_lo) {
    x_lo -= 0.05;
    x_hi += 0.05;
  }
  auto px = [&](double t) { return left + (t - x_lo) / (x_hi - x_lo) * (right - left); };
  auto py = [&](double v) { return bottom - v * (bottom - top); };

  for (double t : result.thresholds)
    doc.add(Text{{px(t), bottom + 1.2 * style.font_size}, format_sig10(t),
                 style.font_size, TextAnchor::kMiddle, "#000000", "label"});
  for (double v : {0.0, 0.5, 1.0})
    doc.add(Text{{left - 0.4 * style.font_size, py(v) + 0.35 * style.font_size},
                 format_sig10(v), style.font_size, TextAnchor::kEnd, "#000000", "label"});

  auto draw = [&](auto value_at, bool dashed, const char* role,
                  const char* point_role) {
    Polyline run{{}, "#000000", 1.5, dashed, role};
    auto flush = [&] {
      if (!run.points.empty()) doc.add(run);
      run.points.clear();
    };
    for (std::size_t i = 0; i < result.thresholds.size(); ++i) {
      const std::optional<double> v = value_at(i);
      if (!v) {
        flush();
        continue;
      }
      run.points.emplace_back(px(result.thresholds[i]), py(*v));
    }
    flush();
    for (std::size_t i = 0; i < result.thresholds.size(); ++i)
      if (const auto v = value_at(i))
        doc.add(Circle{{px(result.thresholds[i]), py(*v)}, 2.0,
                       dashed ? "#ffffff" : "#000000", "#000000", 1.0, point_role});
  };
  draw([&](std::size_t i) { return result.observed[i]; }, false, "observed",
       "observed-point");
  draw([&](std::size_t i) { return result.null_mean(i); }, true, "null",
       "null-point");
  return doc;
}

std::optional<HistogramScale> parse_histogram_scale(std::string_view name) {
  if (name == "linear") return HistogramScale::kLinear;
  if (name == "loglog") return HistogramScale::kLogLog;
  return std::nullopt;
}

SceneDocument render_histogram(const DegreeHistogram& histogram,
                               const Style& style, HistogramScale scale) {
  SceneDocument doc(style.width, style.height);
  const double left = style.margin + 2 * style.font_size,
               right = style.width - style.margin;
  const double top = style.margin, bottom = style.height - style.margin - style.font_size;

  if (scale == HistogramScale::kLogLog) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [d, c] : histogram)
      if (d > 0 && c > 0)
        pts.emplace_back(std::log10(static_cast<double>(d)),
                         std::log10(static_cast<double>(c)));
    if (pts.empty())
      throw InvalidArgument("log-log histogram needs at least one non-zero degree");
    add_axes(doc, left, top, right, bottom);
    double x_lo = pts.front().first, x_hi = pts.back().first;
    double y_lo = 0.0, y_hi = 0.0;
    for (const auto& p : pts) y_hi = std::max(y_hi, p.second);
    if (x_hi <= x_lo) x_hi = x_lo + 1.0;
    if (y_hi <= y_lo) y_hi = y_lo + 1.0;
    for (const auto& [lx, ly] : pts)
      doc.add(Circle{{left + (lx - x_lo) / (x_hi - x_lo) * (right - left),
                      bottom - (ly - y_lo) / (y_hi - y_lo) * (bottom - top)},
                     3.0, "#000000", "none", 1.0, "point"});
    return doc;
  }

  add_axes(doc, left, top, right, bottom);
  if (histogram.empty()) return doc;
  const std::size_t max_degree = histogram.rbegin()->first;
  std::size_t max_count = 0;
  for (const auto& [d, c] : histogram) max_count = std::max(max_count, c);
  const double slot = (right - left) / static_cast<double>(max_degree + 1);
  for (const auto& [d, c] : histogram) {
    const double h = static_cast<double>(c) / static_cast<double>(max_count) * (bottom - top);
    doc.add(Rect{{left + static_cast<double>(d) * slot + 0.1 * slot, bottom - h},
                 0.8 * slot, h, "#4d4d4d", "none", "bar"});
    doc.add(Text{{left + (static_cast<double>(d) + 0.5) * slot, bottom + 1.2 * style.font_size},
                 std::to_string(d), style.font_size, TextAnchor::kMiddle, "#000000", "label"});
  }
  return doc;
}

}  // namespace multiviz
