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

// Local merging: an edge (u, v) of layer l survives when the metric of both
// u and v on {l} reaches the threshold. The null model keeps, per layer, a
// uniformly drawn actor sample of the same size as the passing set, with
// the edges among it. Sweeps compare the transitivity of the two flattened
// results over a threshold grid.

#ifndef MULTIVIZ_SIMPLIFY_HPP_
#define MULTIVIZ_SIMPLIFY_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "multiviz/metrics.hpp"
#include "multiviz/model.hpp"
#include "multiviz/random.hpp"

namespace multiviz {

struct MergeSpec {
  MetricKind kind = MetricKind::kRelevance;
  double threshold = 0.0;
};

// Throws InvalidArgument unless kind is relevance/xrelevance and the
// threshold lies in [0, 1].
void validate(const MergeSpec& spec);

MultiplexNetwork local_merge(const MultiplexNetwork& net, const MergeSpec& spec);

// Per layer, the number of actors whose metric on that layer is >= threshold.
std::vector<std::size_t> node_pass_counts(const MultiplexNetwork& net,
                                          const MergeSpec& spec);

MultiplexNetwork null_sample(const MultiplexNetwork& net, const MergeSpec& spec,
                             Rng& rng);

struct SweepResult {
  MetricKind kind = MetricKind::kRelevance;
  std::vector<double> thresholds;
  std::vector<std::optional<double>> observed;
  // [threshold][replicate]
  std::vector<std::vector<std::optional<double>>> null_replicates;
  std::uint64_t seed = kDefaultSeed;
  std::size_t replicates = 0;

  std::size_t defined_replicates(std::size_t i) const;
  // Mean over defined replicates; absent when none are defined.
  std::optional<double> null_mean(std::size_t i) const;
  // Sample standard deviation (n - 1); absent with fewer than two defined.
  std::optional<double> null_sd(std::size_t i) const;
};

// RNG stream for replicate `replicate` at `threshold`.
std::uint64_t replicate_seed(std::uint64_t seed, double threshold,
                             std::size_t replicate);

// threads == 0 picks the hardware concurrency. Results do not depend on it.
SweepResult sweep(const MultiplexNetwork& net, MetricKind kind,
                  std::span<const double> thresholds, std::size_t replicates,
                  std::uint64_t seed, std::size_t threads = 1);

// Columns: threshold, observed, null_mean, null_sd, defined_replicates.
// Absent values are empty fields; numbers use format_sig10.
void write_csv(std::ostream& out, const SweepResult& result);

// "V", "V1,V2,...", or inclusive range "A:B:S". Values snap to a 1e-9 grid
// so that 0:0.9:0.1 yields exactly 0.3 rather than 0.30000000000000004.
std::vector<double> parse_threshold_grid(std::string_view text);

}  // namespace multiviz

#endif  // MULTIVIZ_SIMPLIFY_HPP_
