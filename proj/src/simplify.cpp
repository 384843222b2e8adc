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

#include "multiviz/simplify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <thread>

#include "multiviz/error.hpp"
#include "multiviz/format.hpp"

namespace multiviz {

namespace {

MultiplexNetwork::Builder skeleton(const MultiplexNetwork& net) {
  MultiplexNetwork::Builder b;
  for (const auto& l : net.layers()) b.add_layer(l);
  for (const auto& a : net.actors()) b.add_actor(a);
  return b;
}

double snap(double v) { return std::round(v * 1e9) / 1e9; }

double parse_number(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string_view::npos)
    throw InvalidArgument("empty threshold value");
  s = s.substr(first, last - first + 1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidArgument("invalid threshold value '" + std::string(s) + "'");
  return v;
}

std::optional<double> flattened_transitivity(const MultiplexNetwork& net) {
  if (auto t = transitivity(flatten(net))) return t->value();
  return std::nullopt;
}

}  // namespace

void validate(const MergeSpec& spec) {
  if (spec.kind != MetricKind::kRelevance &&
      spec.kind != MetricKind::kXRelevance)
    throw InvalidArgument("merge metric must be relevance or xrelevance, got " +
                          std::string(to_string(spec.kind)));
  if (!(spec.threshold >= 0.0 && spec.threshold <= 1.0))
    throw InvalidArgument("threshold must lie in [0, 1]");
}

MultiplexNetwork local_merge(const MultiplexNetwork& net,
                             const MergeSpec& spec) {
  validate(spec);
  const MetricTable t = metric_table(net, spec.kind);
  auto b = skeleton(net);
  for (LayerIndex l = 0; l < net.layer_count(); ++l)
    for (const ActorPair& p : net.edges(l))
      if (t.values(p.lo, l) >= spec.threshold &&
          t.values(p.hi, l) >= spec.threshold)
        b.add_edge(p.lo, p.hi, l);
  return std::move(b).build();
}

std::vector<std::size_t> node_pass_counts(const MultiplexNetwork& net,
                                          const MergeSpec& spec) {
  validate(spec);
  const MetricTable t = metric_table(net, spec.kind);
  std::vector<std::size_t> counts(net.layer_count(), 0);
  for (Eigen::Index l = 0; l < t.values.cols(); ++l)
    counts[static_cast<std::size_t>(l)] = static_cast<std::size_t>(
        (t.values.col(l).array() >= spec.threshold).count());
  return counts;
}

MultiplexNetwork null_sample(const MultiplexNetwork& net, const MergeSpec& spec,
                             Rng& rng) {
  const auto counts = node_pass_counts(net, spec);
  auto b = skeleton(net);
  std::vector<ActorIndex> pool;
  std::vector<bool> chosen(net.actor_count());
  for (LayerIndex l = 0; l < net.layer_count(); ++l) {
    pool.clear();
    for (ActorIndex a = 0; a < net.actor_count(); ++a)
      if (!net.adjacency(l, a).empty()) pool.push_back(a);
    if (counts[l] > pool.size()) {
      pool.resize(net.actor_count());
      for (ActorIndex a = 0; a < net.actor_count(); ++a) pool[a] = a;
    }
    std::fill(chosen.begin(), chosen.end(), false);
    for (std::size_t i : sample_without_replacement(rng, pool.size(), counts[l]))
      chosen[pool[i]] = true;
    for (const ActorPair& p : net.edges(l))
      if (chosen[p.lo] && chosen[p.hi]) b.add_edge(p.lo, p.hi, l);
  }
  return std::move(b).build();
}

std::size_t SweepResult::defined_replicates(std::size_t i) const {
  const auto& r = null_replicates.at(i);
  return static_cast<std::size_t>(
      std::count_if(r.begin(), r.end(), [](const auto& v) { return v.has_value(); }));
}

std::optional<double> SweepResult::null_mean(std::size_t i) const {
  long double sum = 0.0L;
  std::size_t n = 0;
  for (const auto& v : null_replicates.at(i))
    if (v) {
      sum += *v;
      ++n;
    }
  if (n == 0) return std::nullopt;
  return static_cast<double>(sum / static_cast<long double>(n));
}

std::optional<double> SweepResult::null_sd(std::size_t i) const {
  const auto mean = null_mean(i);
  const std::size_t n = defined_replicates(i);
  if (!mean || n < 2) return std::nullopt;
  long double ss = 0.0L;
  for (const auto& v : null_replicates.at(i))
    if (v) ss += (*v - *mean) * (*v - *mean);
  return static_cast<double>(std::sqrt(ss / static_cast<long double>(n - 1)));
}

std::uint64_t replicate_seed(std::uint64_t seed, double threshold,
                             std::size_t replicate) {
  const auto key = static_cast<std::uint64_t>(std::llround(threshold * 1e9));
  return derive_seed(seed, {key, static_cast<std::uint64_t>(replicate)});
}

SweepResult sweep(const MultiplexNetwork& net, MetricKind kind,
                  std::span<const double> thresholds, std::size_t replicates,
                  std::uint64_t seed, std::size_t threads) {
  if (thresholds.empty()) throw InvalidArgument("threshold list is empty");
  if (replicates == 0) throw InvalidArgument("replicates must be positive");
  for (double t : thresholds) validate(MergeSpec{kind, t});

  SweepResult r;
  r.kind = kind;
  r.thresholds.assign(thresholds.begin(), thresholds.end());
  r.seed = seed;
  r.replicates = replicates;
  r.observed.resize(thresholds.size());
  r.null_replicates.assign(thresholds.size(),
                           std::vector<std::optional<double>>(replicates));

  // Task t * (replicates + 1) computes the observed value at threshold t;
  // the following `replicates` tasks compute its null replicates.
  const std::size_t per = replicates + 1;
  const std::size_t total = thresholds.size() * per;
  auto run_task = [&](std::size_t task) {
    const std::size_t ti = task / per, k = task % per;
    const MergeSpec spec{kind, thresholds[ti]};
    if (k == 0) {
      r.observed[ti] = flattened_transitivity(local_merge(net, spec));
    } else {
      Rng rng(replicate_seed(seed, thresholds[ti], k - 1));
      r.null_replicates[ti][k - 1] =
          flattened_transitivity(null_sample(net, spec, rng));
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, total);
  if (threads <= 1) {
    for (std::size_t task = 0; task < total; ++task) run_task(task);
    return r;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t task; (task = next.fetch_add(1)) < total;) run_task(task);
    });
  pool.clear();
  return r;
}

void write_csv(std::ostream& out, const SweepResult& r) {
  out << "threshold,observed,null_mean,null_sd,defined_replicates\n";
  for (std::size_t i = 0; i < r.thresholds.size(); ++i)
    out << format_sig10(r.thresholds[i]) << ',' << format_sig10(r.observed[i])
        << ',' << format_sig10(r.null_mean(i)) << ','
        << format_sig10(r.null_sd(i)) << ',' << r.defined_replicates(i) << '\n';
}

std::vector<double> parse_threshold_grid(std::string_view text) {
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos ||
        text.find(':', c2 + 1) != std::string_view::npos)
      throw InvalidArgument("range must have the form A:B:S");
    const double a = parse_number(text.substr(0, c1));
    const double b = parse_number(text.substr(c1 + 1, c2 - c1 - 1));
    const double s = parse_number(text.substr(c2 + 1));
    if (!(s > 0.0)) throw InvalidArgument("range step must be positive");
    if (b < a) throw InvalidArgument("range end precedes its start");
    const auto steps = static_cast<std::size_t>(std::floor((b - a) / s + 1e-9));
    for (std::size_t i = 0; i <= steps; ++i)
      out.push_back(snap(a + static_cast<double>(i) * s));
  } else {
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      out.push_back(snap(parse_number(text.substr(start, comma - start))));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

}  // namespace multiviz
