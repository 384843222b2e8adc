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

#include "multiviz/model.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "multiviz/error.hpp"

namespace multiviz {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

// Builds CSR adjacency from a sorted, deduplicated pair list.
template <typename PairAt>
void build_csr(std::size_t actor_count, std::size_t pair_count, PairAt pair_at,
               std::vector<std::uint32_t>& offsets,
               std::vector<ActorIndex>& adjacency) {
  std::vector<std::uint32_t> degree(actor_count, 0);
  for (std::size_t i = 0; i < pair_count; ++i) {
    const ActorPair p = pair_at(i);
    ++degree[p.lo];
    ++degree[p.hi];
  }
  offsets.assign(actor_count + 1, 0);
  for (std::size_t a = 0; a < actor_count; ++a)
    offsets[a + 1] = offsets[a] + degree[a];
  adjacency.assign(offsets.back(), 0);
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::size_t i = 0; i < pair_count; ++i) {
    const ActorPair p = pair_at(i);
    adjacency[cursor[p.lo]++] = p.hi;
    adjacency[cursor[p.hi]++] = p.lo;
  }
  for (std::size_t a = 0; a < actor_count; ++a)
    std::sort(adjacency.begin() + offsets[a], adjacency.begin() + offsets[a + 1]);
}

void require_valid_name(std::string_view name, std::string_view what) {
  if (!is_valid_name(name))
    throw InvalidArgument("invalid " + std::string(what) + " name '" +
                          std::string(name) + "'");
}

}  // namespace

// ---------------------------------------------------------------------------
// LayerSet

std::size_t LayerSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

LayerSet LayerSet::complement() const {
  LayerSet out(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = !bits_[i];
  return out;
}

std::vector<LayerIndex> LayerSet::indices() const {
  std::vector<LayerIndex> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<LayerIndex>(i));
  return out;
}

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  if (is_space(name.front()) || is_space(name.back())) return false;
  return name.find_first_of(",\n\r") == std::string_view::npos;
}

// ---------------------------------------------------------------------------
// MultiplexNetwork

std::optional<ActorIndex> MultiplexNetwork::find_actor(
    std::string_view name) const {
  auto it = actor_lookup_.find(name);
  if (it == actor_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<LayerIndex> MultiplexNetwork::find_layer(
    std::string_view name) const {
  auto it = layer_lookup_.find(name);
  if (it == layer_lookup_.end()) return std::nullopt;
  return it->second;
}

ActorIndex MultiplexNetwork::actor_index(std::string_view name) const {
  if (auto a = find_actor(name)) return *a;
  throw NotFoundError("unknown actor '" + std::string(name) + "'");
}

LayerIndex MultiplexNetwork::layer_index(std::string_view name) const {
  if (auto l = find_layer(name)) return *l;
  throw NotFoundError("unknown layer '" + std::string(name) + "'");
}

LayerSet MultiplexNetwork::layer_set(std::span<const std::string> names) const {
  LayerSet set(layers_.size());
  for (const auto& n : names) set.insert(layer_index(n));
  return set;
}

LayerSet MultiplexNetwork::layer_set(
    std::initializer_list<std::string_view> names) const {
  LayerSet set(layers_.size());
  for (auto n : names) set.insert(layer_index(n));
  return set;
}

std::span<const ActorIndex> MultiplexNetwork::adjacency(
    LayerIndex layer, ActorIndex actor) const {
  const LayerData& d = layer_data_.at(layer);
  if (actor >= actors_.size()) throw NotFoundError("actor index out of range");
  return std::span<const ActorIndex>(d.neighbors)
      .subspan(d.offsets[actor], d.offsets[actor + 1] - d.offsets[actor]);
}

std::size_t MultiplexNetwork::total_edge_count() const {
  std::size_t total = 0;
  for (const auto& d : layer_data_) total += d.edges.size();
  return total;
}

bool MultiplexNetwork::has_edge(LayerIndex layer, ActorIndex a,
                                ActorIndex b) const {
  const auto& e = layer_data_.at(layer).edges;
  return std::binary_search(e.begin(), e.end(), ActorPair::of(a, b));
}

bool operator==(const MultiplexNetwork& x, const MultiplexNetwork& y) {
  if (x.actors_ != y.actors_ || x.layers_ != y.layers_) return false;
  for (std::size_t l = 0; l < x.layer_data_.size(); ++l)
    if (x.layer_data_[l].edges != y.layer_data_[l].edges) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Builder

LayerIndex MultiplexNetwork::Builder::add_layer(std::string_view name) {
  if (auto it = layer_lookup_.find(name); it != layer_lookup_.end())
    return it->second;
  require_valid_name(name, "layer");
  const auto idx = static_cast<LayerIndex>(layers_.size());
  layers_.emplace_back(name);
  layer_lookup_.emplace(std::string(name), idx);
  edges_.emplace_back();
  return idx;
}

ActorIndex MultiplexNetwork::Builder::add_actor(std::string_view name) {
  if (auto it = actor_lookup_.find(name); it != actor_lookup_.end())
    return it->second;
  require_valid_name(name, "actor");
  const auto idx = static_cast<ActorIndex>(actors_.size());
  actors_.emplace_back(name);
  actor_lookup_.emplace(std::string(name), idx);
  return idx;
}

bool MultiplexNetwork::Builder::add_edge(std::string_view a,
                                         std::string_view b,
                                         std::string_view layer) {
  if (a == b)
    throw InvalidArgument("self-loop on actor '" + std::string(a) + "'");
  const LayerIndex l = add_layer(layer);
  const ActorIndex ia = add_actor(a);
  const ActorIndex ib = add_actor(b);
  return add_edge(ia, ib, l);
}

bool MultiplexNetwork::Builder::add_edge(ActorIndex a, ActorIndex b,
                                         LayerIndex layer) {
  if (a == b) throw InvalidArgument("self-loop on actor index");
  if (a >= actors_.size() || b >= actors_.size() || layer >= layers_.size())
    throw InvalidArgument("edge references an unregistered actor or layer");
  return edges_[layer].insert(ActorPair::of(a, b)).second;
}

MultiplexNetwork MultiplexNetwork::Builder::build() && {
  MultiplexNetwork net;
  net.actors_ = std::move(actors_);
  net.layers_ = std::move(layers_);
  net.actor_lookup_ = std::move(actor_lookup_);
  net.layer_lookup_ = std::move(layer_lookup_);
  net.layer_data_.resize(net.layers_.size());
  for (std::size_t l = 0; l < net.layers_.size(); ++l) {
    auto& d = net.layer_data_[l];
    d.edges.assign(edges_[l].begin(), edges_[l].end());
    build_csr(
        net.actors_.size(), d.edges.size(),
        [&](std::size_t i) { return d.edges[i]; }, d.offsets, d.neighbors);
  }
  return net;
}

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(std::vector<std::string> actors,
                         std::vector<std::string> layers,
                         std::vector<Entry> entries)
    : actors_(std::move(actors)),
      layers_(std::move(layers)),
      entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.pair.lo == e.pair.hi) throw InvalidArgument("self-loop in graph");
    if (e.pair.lo > e.pair.hi)
      throw InvalidArgument("actor pair must be stored with lo < hi");
    if (e.pair.hi >= actors_.size())
      throw InvalidArgument("edge endpoint out of range");
    if (e.provenance.universe() != layers_.size() || e.provenance.empty())
      throw InvalidArgument("edge provenance must be a non-empty layer set");
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& x, const Entry& y) { return x.pair < y.pair; });
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].pair == entries_[i - 1].pair)
      throw InvalidArgument("duplicate pair in graph");
  build_csr(
      actors_.size(), entries_.size(),
      [&](std::size_t i) { return entries_[i].pair; }, offsets_, adjacency_);
}

SimpleGraph SimpleGraph::from_pairs(
    std::size_t actor_count,
    std::span<const std::pair<ActorIndex, ActorIndex>> pairs) {
  std::vector<std::string> actors(actor_count);
  for (std::size_t i = 0; i < actor_count; ++i) actors[i] = std::to_string(i);
  std::vector<Entry> entries;
  entries.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a == b) throw InvalidArgument("self-loop in graph");
    entries.push_back({ActorPair::of(a, b), LayerSet::single(1, 0)});
  }
  return SimpleGraph(std::move(actors), {"g"}, std::move(entries));
}

std::span<const ActorIndex> SimpleGraph::neighbors(ActorIndex a) const {
  if (a >= actors_.size()) throw NotFoundError("actor index out of range");
  return std::span<const ActorIndex>(adjacency_)
      .subspan(offsets_[a], offsets_[a + 1] - offsets_[a]);
}

std::size_t SimpleGraph::provenance_tally() const {
  std::size_t total = 0;
  for (const auto& e : entries_) total += e.provenance.count();
  return total;
}

// ---------------------------------------------------------------------------
// Free functions

SimpleGraph flatten(const MultiplexNetwork& net) {
  return flatten(net, net.all_layers());
}

SimpleGraph flatten(const MultiplexNetwork& net, const LayerSet& layers) {
  if (layers.universe() != net.layer_count())
    throw InvalidArgument("layer set does not match network");
  std::vector<std::pair<ActorPair, LayerIndex>> tagged;
  for (LayerIndex l : layers.indices())
    for (const ActorPair& p : net.edges(l)) tagged.emplace_back(p, l);
  std::sort(tagged.begin(), tagged.end());

  std::vector<SimpleGraph::Entry> entries;
  for (std::size_t i = 0; i < tagged.size();) {
    SimpleGraph::Entry entry{tagged[i].first, LayerSet(net.layer_count())};
    for (; i < tagged.size() && tagged[i].first == entry.pair; ++i)
      entry.provenance.insert(tagged[i].second);
    entries.push_back(std::move(entry));
  }
  return SimpleGraph({net.actors().begin(), net.actors().end()},
                     {net.layers().begin(), net.layers().end()},
                     std::move(entries));
}

SimpleGraph flatten(const MultiplexNetwork& net,
                    std::span<const std::string> layer_names) {
  return flatten(net, net.layer_set(layer_names));
}

std::vector<ActorIndex> neighbors(const MultiplexNetwork& net, ActorIndex a,
                                  const LayerSet& layers) {
  if (a >= net.actor_count()) throw NotFoundError("actor index out of range");
  std::vector<ActorIndex> out;
  for (LayerIndex l : layers.indices()) {
    auto adj = net.adjacency(l, a);
    out.insert(out.end(), adj.begin(), adj.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<LayerStats> layer_stats(const MultiplexNetwork& net) {
  std::vector<LayerStats> out;
  out.reserve(net.layer_count());
  for (LayerIndex l = 0; l < net.layer_count(); ++l) {
    // Union-find over actors touched by the layer.
    std::vector<ActorIndex> parent(net.actor_count());
    std::iota(parent.begin(), parent.end(), ActorIndex{0});
    auto find = [&](ActorIndex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<bool> incident(net.actor_count(), false);
    std::size_t components = 0;
    std::size_t present = 0;
    for (const ActorPair& p : net.edges(l)) {
      for (ActorIndex v : {p.lo, p.hi})
        if (!incident[v]) {
          incident[v] = true;
          ++present;
          ++components;
        }
      const ActorIndex ra = find(p.lo), rb = find(p.hi);
      if (ra != rb) {
        parent[ra] = rb;
        --components;
      }
    }
    LayerStats s;
    s.edge_count = net.edge_count(l);
    s.incident_actors = present;
    if (s.edge_count > 0) s.component_count = components;
    out.push_back(s);
  }
  return out;
}

}  // namespace multiviz
