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

// Figure builders. Each returns a SceneDocument; serialise with to_svg().
//
// Roles used for auditing:
//   node, edge          sociograms, slices, pies, ranked sociograms
//   pie-sector          pie-augmented nodes
//   actor, axis         parallel coordinates
//   cell, value         heat map
//   observed, null      sweep chart polylines (observed-point, null-point
//                       markers)
//   bar, point          histograms
//   label, title        text

#ifndef MULTIVIZ_RENDER_HPP_
#define MULTIVIZ_RENDER_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "multiviz/layout.hpp"
#include "multiviz/metrics.hpp"
#include "multiviz/model.hpp"
#include "multiviz/scene.hpp"
#include "multiviz/simplify.hpp"

namespace multiviz {

// Ten colour-blind-safe hues (Okabe-Ito without black, plus three from
// Paul Tol's muted scheme).
std::vector<std::string> default_palette();

struct Style {
  std::vector<std::string> palette = default_palette();
  double node_radius = 5.0;
  double edge_width = 1.2;
  double width = 800.0;
  double height = 800.0;
  // Side of one panel in sliced drawings.
  double panel_size = 320.0;
  double font_size = 12.0;
  double margin = 40.0;

  // Layer colour by declaration order; cycles when the palette is short.
  const std::string& layer_color(LayerIndex layer) const;
};

struct SociogramOptions {
  bool color_by_provenance = false;
  bool node_size_by_degree = false;
  std::set<std::string, std::less<>> highlight;
};

SceneDocument render_sociogram(const SimpleGraph& g, const LayoutMap& layout,
                               const Style& style,
                               const SociogramOptions& options = {});

// `layouts` holds one map per layer, in layer order.
SceneDocument render_slices(const MultiplexNetwork& net,
                            std::span<const LayoutMap> layouts,
                            const Style& style);

SceneDocument render_pie_augmented(const MultiplexNetwork& net,
                                   const LayoutMap& layout, const Style& style);

// `values` is aligned with net.actors(). The top `labelled` actors get a
// name label.
SceneDocument render_ranked(const MultiplexNetwork& net,
                            std::span<const double> values, const Style& style,
                            std::size_t labelled = 5);

SceneDocument render_parallel_coords(const MetricTable& table,
                                     const Style& style);

SceneDocument render_heatmap(const JaccardMatrix& matrix, const Style& style);

SceneDocument render_sweep_chart(const SweepResult& result, const Style& style);

enum class HistogramScale { kLinear, kLogLog };

std::optional<HistogramScale> parse_histogram_scale(std::string_view name);

// Throws InvalidArgument for a log-log plot without any non-zero degree.
SceneDocument render_histogram(const DegreeHistogram& histogram,
                               const Style& style, HistogramScale scale);

}  // namespace multiviz

#endif  // MULTIVIZ_RENDER_HPP_
