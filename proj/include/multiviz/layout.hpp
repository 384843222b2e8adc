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

// Sociogram node placement in the unit square.

#ifndef MULTIVIZ_LAYOUT_HPP_
#define MULTIVIZ_LAYOUT_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "multiviz/model.hpp"
#include "multiviz/random.hpp"

namespace multiviz {

class LayoutMap {
 public:
  LayoutMap() = default;
  // positions.rows() must equal actors.size().
  LayoutMap(std::vector<std::string> actors, Eigen::MatrixX2d positions);

  std::span<const std::string> actors() const { return actors_; }
  const Eigen::MatrixX2d& positions() const { return positions_; }
  std::size_t size() const { return actors_.size(); }

  bool contains(std::string_view actor) const;
  // Throws NotFoundError for an actor without a position.
  Eigen::Vector2d at(std::string_view actor) const;

  friend bool operator==(const LayoutMap& x, const LayoutMap& y) {
    return x.actors_ == y.actors_ && x.positions_ == y.positions_;
  }

 private:
  std::vector<std::string> actors_;
  Eigen::MatrixX2d positions_;
};

struct LayoutParams {
  std::size_t iterations = 500;
  // Optimal pair distance; defaults to sqrt(area / actors) with area 1.
  std::optional<double> k;
  // Initial displacement cap as a fraction of the drawing width; cools
  // linearly to zero.
  double initial_temperature = 0.1;
  std::uint64_t seed = kDefaultSeed;
};

struct LayoutDiagnostics {
  // Fruchterman-Reingold potential before the first and after the last
  // iteration (before normalisation).
  double initial_energy = 0.0;
  double final_energy = 0.0;
};

// Potential whose negative gradient is the FR force field:
//   Σ_edges d³ / (3k)  −  Σ_pairs k² ln d.
// `rows` selects the participating actors (row indices into positions).
double fr_energy(const Eigen::MatrixX2d& positions, const SimpleGraph& g,
                 std::span<const ActorIndex> rows, double k);

// Fruchterman-Reingold on the actors with at least one edge, normalised into
// the unit square. Isolates go on a ring around the drawing when the graph
// has edges; without edges every actor takes part in the simulation.
LayoutMap force_layout(const SimpleGraph& g, const LayoutParams& params,
                       LayoutDiagnostics* diagnostics = nullptr);

enum class SliceMode { kShared, kIndependent };

std::optional<SliceMode> parse_slice_mode(std::string_view name);

// One map per layer, in layer order. Shared: the layout of the flattened
// network, repeated. Independent: each layer laid out on its own
// edges; layer 0 uses params.seed, later layers a derived seed.
std::vector<LayoutMap> slice_layouts(const MultiplexNetwork& net, SliceMode mode,
                                     const LayoutParams& params);

// "actor,x,y" with round-trip precision.
void write_csv(std::ostream& out, const LayoutMap& layout);
// "layer,actor,x,y"; one block per layer.
void write_csv(std::ostream& out, std::span<const std::string> layers,
               std::span<const LayoutMap> layouts);

struct LayoutFile {
  // Present for "actor,x,y" files.
  std::optional<LayoutMap> shared;
  // Per-layer maps for "layer,actor,x,y" files, in first-seen layer order.
  std::vector<std::pair<std::string, LayoutMap>> per_layer;
};

LayoutFile parse_layout_csv(std::string_view text);
LayoutFile read_layout_file(const std::string& path);

}  // namespace multiviz

#endif  // MULTIVIZ_LAYOUT_HPP_
