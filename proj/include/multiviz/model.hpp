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

// Multiplex network data model: an actor set shared by a list of named
// layers, each layer an undirected simple graph.

#ifndef MULTIVIZ_MODEL_HPP_
#define MULTIVIZ_MODEL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace multiviz {

using ActorIndex = std::uint32_t;
using LayerIndex = std::uint32_t;

// Unordered actor pair stored with lo < hi.
struct ActorPair {
  ActorIndex lo = 0;
  ActorIndex hi = 0;

  static ActorPair of(ActorIndex a, ActorIndex b) {
    return a < b ? ActorPair{a, b} : ActorPair{b, a};
  }

  friend auto operator<=>(const ActorPair&, const ActorPair&) = default;
};

// Subset of a network's layers, sized to the layer universe.
class LayerSet {
 public:
  LayerSet() = default;
  explicit LayerSet(std::size_t universe, bool all = false)
      : bits_(universe, all) {}

  static LayerSet all(std::size_t universe) { return LayerSet(universe, true); }
  static LayerSet single(std::size_t universe, LayerIndex layer) {
    LayerSet s(universe);
    s.insert(layer);
    return s;
  }

  void insert(LayerIndex layer) { bits_.at(layer) = true; }
  bool contains(LayerIndex layer) const {
    return layer < bits_.size() && bits_[layer];
  }
  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  LayerSet complement() const;
  std::vector<LayerIndex> indices() const;

  friend bool operator==(const LayerSet&, const LayerSet&) = default;

 private:
  std::vector<bool> bits_;
};

// Lexical rules shared by actor and layer names: non-empty, no comma or
// newline, no leading/trailing whitespace.
bool is_valid_name(std::string_view name);

class MultiplexNetwork {
 public:
  class Builder;

  MultiplexNetwork() = default;

  std::span<const std::string> actors() const { return actors_; }
  std::span<const std::string> layers() const { return layers_; }
  std::size_t actor_count() const { return actors_.size(); }
  std::size_t layer_count() const { return layers_.size(); }

  const std::string& actor_name(ActorIndex a) const { return actors_.at(a); }
  const std::string& layer_name(LayerIndex l) const { return layers_.at(l); }

  std::optional<ActorIndex> find_actor(std::string_view name) const;
  std::optional<LayerIndex> find_layer(std::string_view name) const;
  // Throw NotFoundError naming the offender.
  ActorIndex actor_index(std::string_view name) const;
  LayerIndex layer_index(std::string_view name) const;

  LayerSet all_layers() const { return LayerSet::all(layers_.size()); }
  LayerSet layer_set(std::span<const std::string> names) const;
  LayerSet layer_set(std::initializer_list<std::string_view> names) const;

  // Edges of one layer, sorted by (lo, hi).
  std::span<const ActorPair> edges(LayerIndex layer) const {
    return layer_data_.at(layer).edges;
  }
  // Sorted neighbors of `actor` within one layer.
  std::span<const ActorIndex> adjacency(LayerIndex layer,
                                        ActorIndex actor) const;
  std::size_t edge_count(LayerIndex layer) const {
    return layer_data_.at(layer).edges.size();
  }
  std::size_t total_edge_count() const;
  bool has_edge(LayerIndex layer, ActorIndex a, ActorIndex b) const;

  friend bool operator==(const MultiplexNetwork& x, const MultiplexNetwork& y);

 private:
  struct LayerData {
    std::vector<ActorPair> edges;
    // CSR adjacency: neighbors of actor a are
    // neighbors[offsets[a] .. offsets[a + 1]).
    std::vector<std::uint32_t> offsets;
    std::vector<ActorIndex> neighbors;
  };

  std::vector<std::string> actors_;
  std::vector<std::string> layers_;
  std::map<std::string, ActorIndex, std::less<>> actor_lookup_;
  std::map<std::string, LayerIndex, std::less<>> layer_lookup_;
  std::vector<LayerData> layer_data_;
};

// Single-threaded construction of an immutable MultiplexNetwork.
class MultiplexNetwork::Builder {
 public:
  // Registration is idempotent; returns the existing index when present.
  LayerIndex add_layer(std::string_view name);
  ActorIndex add_actor(std::string_view name);
  // Registers unseen actors/layers. Returns false if the edge (in either
  // orientation) already exists in that layer. Self-loops throw.
  bool add_edge(std::string_view a, std::string_view b, std::string_view layer);
  bool add_edge(ActorIndex a, ActorIndex b, LayerIndex layer);

  std::size_t actor_count() const { return actors_.size(); }
  std::size_t layer_count() const { return layers_.size(); }

  MultiplexNetwork build() &&;

 private:
  std::vector<std::string> actors_;
  std::vector<std::string> layers_;
  std::map<std::string, ActorIndex, std::less<>> actor_lookup_;
  std::map<std::string, LayerIndex, std::less<>> layer_lookup_;
  std::vector<std::set<ActorPair>> edges_;
};

// Flattened or filtered single graph. Each edge carries the set of layers
// it came from.
class SimpleGraph {
 public:
  struct Entry {
    ActorPair pair;
    LayerSet provenance;
  };

  SimpleGraph() = default;
  // Rejects self-loops, duplicate pairs, out-of-range actors and empty
  // provenance.
  SimpleGraph(std::vector<std::string> actors, std::vector<std::string> layers,
              std::vector<Entry> entries);

  // Plain graph over actors named "0".."n-1" on a single layer "g".
  static SimpleGraph from_pairs(
      std::size_t actor_count,
      std::span<const std::pair<ActorIndex, ActorIndex>> pairs);

  std::span<const std::string> actors() const { return actors_; }
  std::span<const std::string> layers() const { return layers_; }
  std::size_t actor_count() const { return actors_.size(); }
  std::size_t edge_count() const { return entries_.size(); }
  std::span<const Entry> entries() const { return entries_; }

  std::span<const ActorIndex> neighbors(ActorIndex a) const;
  std::size_t degree(ActorIndex a) const { return neighbors(a).size(); }
  // Σ over edges of |provenance|.
  std::size_t provenance_tally() const;

 private:
  std::vector<std::string> actors_;
  std::vector<std::string> layers_;
  std::vector<Entry> entries_;
  std::vector<std::uint32_t> offsets_;
  std::vector<ActorIndex> adjacency_;
};

// Union of the requested layers (default: all). Actor set is the network's.
SimpleGraph flatten(const MultiplexNetwork& net);
SimpleGraph flatten(const MultiplexNetwork& net, const LayerSet& layers);
SimpleGraph flatten(const MultiplexNetwork& net,
                    std::span<const std::string> layer_names);

// Distinct actors adjacent to `a` through any of `layers`, sorted by index.
std::vector<ActorIndex> neighbors(const MultiplexNetwork& net, ActorIndex a,
                                  const LayerSet& layers);

struct LayerStats {
  std::size_t edge_count = 0;
  // Actors with at least one edge in the layer.
  std::size_t incident_actors = 0;
  // Components among incident actors; absent for an empty layer.
  std::optional<std::size_t> component_count;

  double avg_degree() const {
    return incident_actors == 0
               ? 0.0
               : 2.0 * static_cast<double>(edge_count) /
                     static_cast<double>(incident_actors);
  }
};

// One entry per layer, in layer order.
std::vector<LayerStats> layer_stats(const MultiplexNetwork& net);

// Multinet text format.
struct ParseResult {
  MultiplexNetwork network;
  std::size_t duplicate_edges = 0;
};

struct NamedEdge {
  std::string_view a;  // lexicographically smaller endpoint
  std::string_view b;
  LayerIndex layer = 0;
};

// Edges in canonical order: (layer, min endpoint name, max endpoint name).
// Views point into `net`.
std::vector<NamedEdge> canonical_edges(const MultiplexNetwork& net);

ParseResult parse_multinet(std::string_view text);
ParseResult read_multinet_file(const std::string& path);
// Canonical form: layers in declaration order, actors in network order,
// edges sorted by (layer, min endpoint name, max endpoint name).
std::string write_multinet(const MultiplexNetwork& net);

}  // namespace multiviz

#endif  // MULTIVIZ_MODEL_HPP_
