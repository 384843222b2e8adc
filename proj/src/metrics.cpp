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

#include "multiviz/metrics.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>

#include "multiviz/error.hpp"
#include "multiviz/format.hpp"

namespace multiviz {

namespace {

void check_actor(const MultiplexNetwork& net, ActorIndex a) {
  if (a >= net.actor_count()) throw NotFoundError("actor index out of range");
}

void check_layers(const MultiplexNetwork& net, const LayerSet& layers) {
  if (layers.universe() != net.layer_count())
    throw InvalidArgument("layer set does not match network");
}

Ratio ratio_or_zero(std::size_t num, std::size_t den) {
  if (den == 0) return Ratio{0, 1};
  return Ratio{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

}  // namespace

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::kDegree:
      return "degree";
    case MetricKind::kNeighborhood:
      return "neighborhood";
    case MetricKind::kRelevance:
      return "relevance";
    case MetricKind::kXRelevance:
      return "xrelevance";
  }
  return "unknown";
}

std::optional<MetricKind> parse_metric_kind(std::string_view name) {
  if (name == "degree") return MetricKind::kDegree;
  if (name == "neighborhood") return MetricKind::kNeighborhood;
  if (name == "relevance") return MetricKind::kRelevance;
  if (name == "xrelevance") return MetricKind::kXRelevance;
  return std::nullopt;
}

std::size_t degree(const MultiplexNetwork& net, ActorIndex a,
                   const LayerSet& layers) {
  check_actor(net, a);
  check_layers(net, layers);
  std::size_t d = 0;
  for (LayerIndex l : layers.indices()) d += net.adjacency(l, a).size();
  return d;
}

std::size_t neighborhood(const MultiplexNetwork& net, ActorIndex a,
                         const LayerSet& layers) {
  check_layers(net, layers);
  return neighbors(net, a, layers).size();
}

Ratio relevance(const MultiplexNetwork& net, ActorIndex a,
                const LayerSet& layers) {
  check_layers(net, layers);
  return ratio_or_zero(neighborhood(net, a, layers),
                       neighborhood(net, a, net.all_layers()));
}

Ratio xrelevance(const MultiplexNetwork& net, ActorIndex a,
                 const LayerSet& layers) {
  check_layers(net, layers);
  const auto inside = neighbors(net, a, layers);
  const auto outside = neighbors(net, a, layers.complement());
  std::vector<ActorIndex> exclusive;
  std::set_difference(inside.begin(), inside.end(), outside.begin(),
                      outside.end(), std::back_inserter(exclusive));
  return ratio_or_zero(exclusive.size(),
                       neighborhood(net, a, net.all_layers()));
}

double metric_value(const MultiplexNetwork& net, MetricKind kind, ActorIndex a,
                    const LayerSet& layers) {
  switch (kind) {
    case MetricKind::kDegree:
      return static_cast<double>(degree(net, a, layers));
    case MetricKind::kNeighborhood:
      return static_cast<double>(neighborhood(net, a, layers));
    case MetricKind::kRelevance:
      return relevance(net, a, layers).value();
    case MetricKind::kXRelevance:
      return xrelevance(net, a, layers).value();
  }
  return 0.0;
}

Ratio jaccard(const MultiplexNetwork& net, LayerIndex x, LayerIndex y) {
  if (x >= net.layer_count() || y >= net.layer_count())
    throw NotFoundError("layer index out of range");
  const auto ex = net.edges(x), ey = net.edges(y);
  std::size_t common = 0;
  for (auto i = ex.begin(), j = ey.begin(); i != ex.end() && j != ey.end();) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  const std::size_t uni = ex.size() + ey.size() - common;
  if (uni == 0) return Ratio{1, 1};
  return Ratio{static_cast<std::int64_t>(common),
               static_cast<std::int64_t>(uni)};
}

TriangleCensus triangle_census(const SimpleGraph& g) {
  TriangleCensus c;
  std::vector<bool> marked(g.actor_count(), false);
  for (ActorIndex u = 0; u < g.actor_count(); ++u) {
    const auto nu = g.neighbors(u);
    const auto d = static_cast<std::int64_t>(nu.size());
    c.connected_triples += d * (d - 1) / 2;
    for (ActorIndex v : nu) marked[v] = true;
    for (ActorIndex v : nu) {
      if (v <= u) continue;
      for (ActorIndex w : g.neighbors(v))
        if (w > v && marked[w]) ++c.triangles;
    }
    for (ActorIndex v : nu) marked[v] = false;
  }
  return c;
}

std::optional<Ratio> transitivity(const SimpleGraph& g) {
  const TriangleCensus c = triangle_census(g);
  if (c.connected_triples == 0) return std::nullopt;
  return Ratio{3 * c.triangles, c.connected_triples};
}

MetricTable metric_table(const MultiplexNetwork& net, MetricKind kind) {
  const auto n = static_cast<Eigen::Index>(net.actor_count());
  const auto L = static_cast<Eigen::Index>(net.layer_count());
  MetricTable t;
  t.kind = kind;
  t.actors.assign(net.actors().begin(), net.actors().end());
  t.layers.assign(net.layers().begin(), net.layers().end());
  t.values = Eigen::MatrixXd::Zero(n, L);

  // For each actor, group (neighbor, layer) incidences by neighbor: a group
  // with a single layer is an exclusive neighbor of that layer.
  std::vector<std::pair<ActorIndex, LayerIndex>> inc;
  Eigen::VectorXi per_layer(L), exclusive(L);
  for (ActorIndex a = 0; a < net.actor_count(); ++a) {
    inc.clear();
    for (LayerIndex l = 0; l < net.layer_count(); ++l)
      for (ActorIndex b : net.adjacency(l, a)) inc.emplace_back(b, l);
    std::sort(inc.begin(), inc.end());
    per_layer.setZero();
    exclusive.setZero();
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < inc.size();) {
      std::size_t j = i;
      while (j < inc.size() && inc[j].first == inc[i].first) ++per_layer[inc[j++].second];
      if (j - i == 1) ++exclusive[inc[i].second];
      ++distinct;
      i = j;
    }
    for (Eigen::Index l = 0; l < L; ++l) {
      double v = 0.0;
      switch (kind) {
        case MetricKind::kDegree:
        case MetricKind::kNeighborhood:
          v = per_layer[l];
          break;
        case MetricKind::kRelevance:
          v = ratio_or_zero(per_layer[l], distinct).value();
          break;
        case MetricKind::kXRelevance:
          v = ratio_or_zero(exclusive[l], distinct).value();
          break;
      }
      t.values(a, l) = v;
    }
  }
  return t;
}

JaccardMatrix jaccard_matrix(const MultiplexNetwork& net) {
  const auto L = static_cast<Eigen::Index>(net.layer_count());
  JaccardMatrix m;
  m.layers.assign(net.layers().begin(), net.layers().end());
  m.values.resize(L, L);
  for (Eigen::Index i = 0; i < L; ++i)
    for (Eigen::Index j = i; j < L; ++j)
      m.values(i, j) = m.values(j, i) =
          jaccard(net, static_cast<LayerIndex>(i), static_cast<LayerIndex>(j))
              .value();
  return m;
}

DegreeHistogram degree_distribution(const MultiplexNetwork& net,
                                    const LayerSet& layers) {
  DegreeHistogram h;
  for (ActorIndex a = 0; a < net.actor_count(); ++a) ++h[degree(net, a, layers)];
  return h;
}

void write_csv(std::ostream& out, const MetricTable& table) {
  out << "actor";
  for (const auto& l : table.layers) out << ',' << l;
  out << '\n';
  for (std::size_t a = 0; a < table.actors.size(); ++a) {
    out << table.actors[a];
    for (Eigen::Index l = 0; l < table.values.cols(); ++l)
      out << ',' << format_fixed6(table.values(static_cast<Eigen::Index>(a), l));
    out << '\n';
  }
}

void write_csv(std::ostream& out, const JaccardMatrix& matrix) {
  out << "layer";
  for (const auto& l : matrix.layers) out << ',' << l;
  out << '\n';
  for (std::size_t i = 0; i < matrix.layers.size(); ++i) {
    out << matrix.layers[i];
    for (Eigen::Index j = 0; j < matrix.values.cols(); ++j)
      out << ',' << format_fixed6(matrix.values(static_cast<Eigen::Index>(i), j));
    out << '\n';
  }
}

}  // namespace multiviz
