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

#include "multiviz/generate.hpp"

#include <algorithm>
#include <string>

#include "multiviz/error.hpp"

namespace multiviz {

namespace {

template <typename T>
const T& per_layer(const std::vector<T>& values, std::size_t layer) {
  return values.size() == 1 ? values.front() : values.at(layer);
}

template <typename T>
void check_arity(const std::vector<T>& values, std::size_t layers,
                 const char* name) {
  if (values.size() != 1 && values.size() != layers)
    throw InvalidArgument(std::string(name) +
                          " needs 1 or layer_count values");
}

void uniform_layer(MultiplexNetwork::Builder& b, LayerIndex layer,
                   std::size_t n, double p, Rng& rng) {
  for (ActorIndex u = 0; u < n; ++u)
    for (ActorIndex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) b.add_edge(u, v, layer);
}

// Returns the target list of every arriving node (indexed by node id) so
// that later layers can copy it.
std::vector<std::vector<ActorIndex>> preferential_layer(
    MultiplexNetwork::Builder& b, LayerIndex layer, std::size_t n,
    std::size_t m, std::size_t m0, double coupling,
    const std::vector<std::vector<ActorIndex>>* reference, Rng& rng) {
  // Node v appears deg(v) times, so a uniform draw is degree-proportional.
  std::vector<ActorIndex> endpoints;
  endpoints.reserve(2 * (m0 * (m0 - 1) / 2 + m * n));
  for (ActorIndex u = 0; u < m0; ++u)
    for (ActorIndex v = u + 1; v < m0; ++v) {
      b.add_edge(u, v, layer);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }

  std::vector<std::vector<ActorIndex>> targets(n);
  for (auto v = static_cast<ActorIndex>(m0); v < n; ++v) {
    auto& chosen = targets[v];
    const bool copy = reference != nullptr && rng.bernoulli(coupling) &&
                      !(*reference)[v].empty();
    if (copy) {
      chosen = (*reference)[v];
    } else {
      while (chosen.size() < m) {
        const ActorIndex t =
            endpoints.empty()
                ? static_cast<ActorIndex>(rng.below(v))
                : endpoints[static_cast<std::size_t>(rng.below(endpoints.size()))];
        if (std::find(chosen.begin(), chosen.end(), t) == chosen.end())
          chosen.push_back(t);
      }
    }
    for (ActorIndex t : chosen) {
      b.add_edge(v, t, layer);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  return targets;
}

}  // namespace

std::optional<GeneratorModel> parse_generator_model(std::string_view name) {
  if (name == "uniform" || name == "er") return GeneratorModel::kUniform;
  if (name == "preferential" || name == "ba") return GeneratorModel::kPreferential;
  return std::nullopt;
}

void validate(const GeneratorSpec& spec) {
  if (spec.actor_count == 0) throw InvalidArgument("actor_count must be >= 1");
  if (spec.layer_count == 0) throw InvalidArgument("layer_count must be >= 1");
  if (!(spec.coupling >= 0.0 && spec.coupling <= 1.0))
    throw InvalidArgument("coupling must lie in [0, 1]");
  if (spec.model == GeneratorModel::kUniform) {
    check_arity(spec.edge_probability, spec.layer_count, "edge_probability");
    for (double p : spec.edge_probability)
      if (!(p >= 0.0 && p <= 1.0))
        throw InvalidArgument("edge probability must lie in [0, 1]");
    return;
  }
  check_arity(spec.attachment, spec.layer_count, "attachment");
  check_arity(spec.seed_clique, spec.layer_count, "seed_clique");
  for (std::size_t l = 0; l < spec.layer_count; ++l) {
    const std::size_t m = per_layer(spec.attachment, l);
    const std::size_t m0 = per_layer(spec.seed_clique, l);
    if (m < 1) throw InvalidArgument("attachment must be >= 1");
    if (m0 < m) throw InvalidArgument("seed clique must be >= attachment");
    if (m0 > spec.actor_count)
      throw InvalidArgument("seed clique exceeds actor_count");
  }
}

MultiplexNetwork generate(const GeneratorSpec& spec) {
  validate(spec);
  MultiplexNetwork::Builder b;
  for (std::size_t l = 0; l < spec.layer_count; ++l)
    b.add_layer("L" + std::to_string(l + 1));
  for (std::size_t a = 0; a < spec.actor_count; ++a)
    b.add_actor("N" + std::to_string(a + 1));

  std::vector<std::vector<ActorIndex>> reference;
  for (std::size_t l = 0; l < spec.layer_count; ++l) {
    Rng rng(derive_seed(spec.seed, {static_cast<std::uint64_t>(l)}));
    const auto layer = static_cast<LayerIndex>(l);
    if (spec.model == GeneratorModel::kUniform) {
      uniform_layer(b, layer, spec.actor_count,
                    per_layer(spec.edge_probability, l), rng);
      continue;
    }
    auto targets = preferential_layer(
        b, layer, spec.actor_count, per_layer(spec.attachment, l),
        per_layer(spec.seed_clique, l), spec.coupling,
        l == 0 ? nullptr : &reference, rng);
    if (l == 0) reference = std::move(targets);
  }
  return std::move(b).build();
}

}  // namespace multiviz
