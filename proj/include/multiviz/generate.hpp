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

#ifndef MULTIVIZ_GENERATE_HPP_
#define MULTIVIZ_GENERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "multiviz/model.hpp"
#include "multiviz/random.hpp"

namespace multiviz {

enum class GeneratorModel { kUniform, kPreferential };

std::optional<GeneratorModel> parse_generator_model(std::string_view name);

// Per-layer parameters hold either one value (shared by all layers) or
// exactly layer_count values.
struct GeneratorSpec {
  GeneratorModel model = GeneratorModel::kPreferential;
  std::size_t actor_count = 200;
  std::size_t layer_count = 2;
  // Uniform model: independent link probability per pair.
  std::vector<double> edge_probability{0.02};
  // Preferential model: edges per arriving node (m) and seed clique size (m0).
  std::vector<std::size_t> attachment{2};
  std::vector<std::size_t> seed_clique{3};
  // Preferential model: probability that an arriving node reuses its layer-1
  // targets in a later layer instead of drawing new ones.
  double coupling = 0.0;
  std::uint64_t seed = kDefaultSeed;
};

// Throws InvalidArgument on out-of-range parameters.
void validate(const GeneratorSpec& spec);

// Actors are named N1..Nn and layers L1..Lk.
MultiplexNetwork generate(const GeneratorSpec& spec);

}  // namespace multiviz

#endif  // MULTIVIZ_GENERATE_HPP_
