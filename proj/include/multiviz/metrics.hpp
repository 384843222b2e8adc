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

// Per-actor, per-layer multiplex metrics, layer correlation and
// transitivity.
//
// Conventions:
//   degree        edges incident to the actor in the given layers, counted
//                 per layer (a pair linked in two layers contributes 2).
//   neighborhood  distinct actors adjacent through the given layers.
//   relevance     neighborhood(layers) / neighborhood(all layers).
//   xrelevance    neighbors reachable through the given layers and through
//                 no other layer, over neighborhood(all layers).
// Both ratios are 0 for an actor with no neighbors at all.

#ifndef MULTIVIZ_METRICS_HPP_
#define MULTIVIZ_METRICS_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multiviz/model.hpp"

namespace multiviz {

// Non-negative rational with exact comparison.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  friend bool operator==(const Ratio& x, const Ratio& y) {
    return x.num * y.den == y.num * x.den;
  }
};

enum class MetricKind { kDegree, kNeighborhood, kRelevance, kXRelevance };

std::string_view to_string(MetricKind kind);
// Accepts "degree", "neighborhood", "relevance", "xrelevance".
std::optional<MetricKind> parse_metric_kind(std::string_view name);

std::size_t degree(const MultiplexNetwork& net, ActorIndex a,
                   const LayerSet& layers);
std::size_t neighborhood(const MultiplexNetwork& net, ActorIndex a,
                         const LayerSet& layers);
Ratio relevance(const MultiplexNetwork& net, ActorIndex a,
                const LayerSet& layers);
Ratio xrelevance(const MultiplexNetwork& net, ActorIndex a,
                 const LayerSet& layers);

// Dispatch on kind; counts are returned as doubles.
double metric_value(const MultiplexNetwork& net, MetricKind kind, ActorIndex a,
                    const LayerSet& layers);

// Intersection over union of the two layers' pair sets; 1 when both are
// empty.
Ratio jaccard(const MultiplexNetwork& net, LayerIndex x, LayerIndex y);

struct TriangleCensus {
  std::int64_t triangles = 0;
  // Σ_v C(deg(v), 2)
  std::int64_t connected_triples = 0;
};

TriangleCensus triangle_census(const SimpleGraph& g);

// 3·triangles / connected triples; nullopt when there are no triples.
std::optional<Ratio> transitivity(const SimpleGraph& g);

struct MetricTable {
  MetricKind kind = MetricKind::kDegree;
  std::vector<std::string> actors;
  std::vector<std::string> layers;
  // actors × layers, each entry the metric on the singleton layer set.
  Eigen::MatrixXd values;
};

MetricTable metric_table(const MultiplexNetwork& net, MetricKind kind);

struct JaccardMatrix {
  std::vector<std::string> layers;
  Eigen::MatrixXd values;
};

JaccardMatrix jaccard_matrix(const MultiplexNetwork& net);

// Degree value -> number of actors with that degree; zero bins omitted.
using DegreeHistogram = std::map<std::size_t, std::size_t>;

DegreeHistogram degree_distribution(const MultiplexNetwork& net,
                                    const LayerSet& layers);

// CSV with 6 decimal digits. First header cell is "actor" / "layer".
void write_csv(std::ostream& out, const MetricTable& table);
void write_csv(std::ostream& out, const JaccardMatrix& matrix);

}  // namespace multiviz

#endif  // MULTIVIZ_METRICS_HPP_
