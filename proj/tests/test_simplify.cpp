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


#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "multiviz/error.hpp"
#include "multiviz/simplify.hpp"
#include "support.hpp"

using namespace multiviz;
using multiviz::testing::aucs;
using multiviz::testing::NeighborOracle;
using multiviz::testing::random_multiplex;

namespace {

const std::vector<double> kGrid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};

std::set<ActorPair> edge_set(const MultiplexNetwork& net, LayerIndex l) {
  return {net.edges(l).begin(), net.edges(l).end()};
}

bool subset(const std::set<ActorPair>& a, const std::set<ActorPair>& b) {
  for (const auto& p : a)
    if (!b.count(p)) return false;
  return true;
}

}  // namespace

TEST_CASE("merge spec validation") {
  CHECK_THROWS_AS(validate(MergeSpec{MetricKind::kDegree, 0.5}), InvalidArgument);
  CHECK_THROWS_AS(validate(MergeSpec{MetricKind::kRelevance, -0.1}), InvalidArgument);
  CHECK_THROWS_AS(validate(MergeSpec{MetricKind::kRelevance, 1.1}), InvalidArgument);
  CHECK_THROWS_AS(validate(MergeSpec{MetricKind::kRelevance, NAN}), InvalidArgument);
  CHECK_NOTHROW(validate(MergeSpec{MetricKind::kXRelevance, 1.0}));
}

TEST_CASE("threshold zero keeps everything") {
  for (MetricKind kind : {MetricKind::kRelevance, MetricKind::kXRelevance}) {
    CHECK(local_merge(aucs(), {kind, 0.0}) == aucs());
    const auto counts = node_pass_counts(aucs(), {kind, 0.0});
    for (std::size_t c : counts) CHECK(c == 61);
  }
}

TEST_CASE("threshold above every metric value keeps nothing") {
  // Every pair is linked on both layers, so no neighbor is exclusive.
  const auto net = parse_multinet("#EDGES\na,b,L1\na,b,L2\nb,c,L1\nb,c,L2\n").network;
  const auto merged = local_merge(net, {MetricKind::kXRelevance, 1.0});
  CHECK(merged.total_edge_count() == 0);
  CHECK(merged.actor_count() == 3);
  for (std::size_t c : node_pass_counts(net, {MetricKind::kXRelevance, 1.0}))
    CHECK(c == 0);
  CHECK_FALSE(transitivity(flatten(merged)).has_value());
}

TEST_CASE("node pass counts on a hand example") {
  // a: L1 {b,c}, L2 {b}; b: L1 {a}, L2 {a}; c: L1 {a}
  const auto net = parse_multinet("#EDGES\na,b,L1\na,c,L1\na,b,L2\n").network;
  CHECK(node_pass_counts(net, {MetricKind::kRelevance, 0.6}) ==
        std::vector<std::size_t>{3, 1});
  CHECK(node_pass_counts(net, {MetricKind::kXRelevance, 0.5}) ==
        std::vector<std::size_t>{2, 0});
}

TEST_CASE("merge keeps exactly the edges whose endpoints pass on the original") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto net = random_multiplex(seed, 14, 3, 0.3);
    const NeighborOracle oracle(net);
    for (MetricKind kind : {MetricKind::kRelevance, MetricKind::kXRelevance})
      for (double t : kGrid) {
        const auto merged = local_merge(net, {kind, t});
        for (LayerIndex l = 0; l < 3; ++l) {
          auto passes = [&](ActorIndex a) {
            const auto [n, d] = kind == MetricKind::kRelevance
                                    ? oracle.relevance(a, {l})
                                    : oracle.xrelevance(a, {l});
            return static_cast<double>(n) / static_cast<double>(d) >= t;
          };
          std::set<ActorPair> expected;
          for (const ActorPair& p : net.edges(l))
            if (passes(p.lo) && passes(p.hi)) expected.insert(p);
          CHECK(edge_set(merged, l) == expected);
        }
      }
  }
}

TEST_CASE("merge is monotone in the threshold") {
  for (std::uint64_t seed = 300; seed < 320; ++seed) {
    const auto net = random_multiplex(seed, 16, 3, 0.3);
    for (MetricKind kind : {MetricKind::kRelevance, MetricKind::kXRelevance}) {
      std::vector<MultiplexNetwork> merged;
      for (double t : kGrid) merged.push_back(local_merge(net, {kind, t}));
      for (std::size_t i = 1; i < merged.size(); ++i)
        for (LayerIndex l = 0; l < 3; ++l)
          CHECK(subset(edge_set(merged[i], l), edge_set(merged[i - 1], l)));
    }
  }
}

TEST_CASE("clique of U141, U68, U48, U92 survives xrelevance 0.3 on lunch") {
  const auto& net = aucs();
  const auto merged = local_merge(net, {MetricKind::kXRelevance, 0.3});
  const LayerIndex lunch = net.layer_index("lunch");
  const std::vector<std::string> clique{"U141", "U68", "U48", "U92"};
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      CHECK(merged.has_edge(lunch, net.actor_index(clique[i]),
                            net.actor_index(clique[j])));
}

TEST_CASE("null sample") {
  const auto& net = aucs();
  const MergeSpec zero{MetricKind::kRelevance, 0.0};
  Rng rng(5);
  CHECK(null_sample(net, zero, rng) == net);

  const MergeSpec spec{MetricKind::kRelevance, 0.5};
  const auto counts = node_pass_counts(net, spec);
  Rng r1(11), r2(11);
  const auto s1 = null_sample(net, spec, r1);
  CHECK(s1 == null_sample(net, spec, r2));
  for (LayerIndex l = 0; l < net.layer_count(); ++l) {
    CHECK(subset(edge_set(s1, l), edge_set(net, l)));
    std::size_t touched = 0;
    for (ActorIndex a = 0; a < net.actor_count(); ++a)
      touched += !s1.adjacency(l, a).empty();
    CHECK(touched <= counts[l]);
  }
}

TEST_CASE("null sample edge count is strictly below the layer's on average") {
  const auto& net = aucs();
  const MergeSpec spec{MetricKind::kRelevance, 0.5};
  const LayerIndex work = net.layer_index("work");
  const std::size_t runs = 200;
  double sum = 0.0, sum_sq = 0.0;
  for (std::uint64_t seed = 0; seed < runs; ++seed) {
    Rng rng(derive_seed(99, {seed}));
    const auto x = static_cast<double>(null_sample(net, spec, rng).edge_count(work));
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / runs;
  const double sd = std::sqrt((sum_sq - runs * mean * mean) / (runs - 1));
  CHECK(mean + 3.0 * sd / std::sqrt(static_cast<double>(runs)) <
        static_cast<double>(net.edge_count(work)));
}

TEST_CASE("sweep is deterministic and independent of thread count") {
  const auto& net = aucs();
  const auto grid = parse_threshold_grid("0:0.9:0.1");
  const auto a = sweep(net, MetricKind::kRelevance, grid, 6, 42, 1);
  const auto b = sweep(net, MetricKind::kRelevance, grid, 6, 42, 4);
  const auto c = sweep(net, MetricKind::kRelevance, grid, 6, 42, 0);
  CHECK(a.observed == b.observed);
  CHECK(a.null_replicates == b.null_replicates);
  CHECK(a.null_replicates == c.null_replicates);
  const auto d = sweep(net, MetricKind::kRelevance, grid, 6, 43, 1);
  CHECK(a.null_replicates != d.null_replicates);
  // A threshold's replicates do not depend on the rest of the grid.
  const std::vector<double> single{0.5};
  const auto e = sweep(net, MetricKind::kRelevance, single, 6, 42, 1);
  CHECK(e.null_replicates[0] == a.null_replicates[5]);
}

TEST_CASE("sweep at threshold zero reproduces the full network") {
  const auto& net = aucs();
  const std::vector<double> zero{0.0};
  const auto r = sweep(net, MetricKind::kXRelevance, zero, 10, 42);
  REQUIRE(r.observed[0].has_value());
  CHECK(*r.observed[0] == transitivity(flatten(net))->value());
  CHECK(r.null_mean(0) == r.observed[0]);
  CHECK(r.null_sd(0) == 0.0);
  CHECK(r.defined_replicates(0) == 10);
}

TEST_CASE("observed transitivity exceeds the null mean on aucs") {
  const auto& net = aucs();
  const auto grid = parse_threshold_grid("0:0.9:0.1");
  for (MetricKind kind : {MetricKind::kRelevance, MetricKind::kXRelevance}) {
    const auto r = sweep(net, kind, grid, 10, 42, 0);
    double obs = 0.0, null = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (r.observed[i] && r.null_mean(i)) {
        obs += *r.observed[i];
        null += *r.null_mean(i);
        ++n;
      }
    REQUIRE(n > 0);
    CHECK(obs / n > null / n);
  }
}

TEST_CASE("sweep summary statistics") {
  SweepResult r;
  r.thresholds = {0.1, 0.2, 0.3};
  r.observed = {0.5, std::nullopt, 0.2};
  r.null_replicates = {{0.2, 0.4, std::nullopt}, {std::nullopt, std::nullopt, std::nullopt},
                       {0.3, std::nullopt, std::nullopt}};
  r.replicates = 3;
  CHECK(r.defined_replicates(0) == 2);
  CHECK(*r.null_mean(0) == doctest::Approx(0.3));
  CHECK(*r.null_sd(0) == doctest::Approx(std::sqrt(0.02)));
  CHECK_FALSE(r.null_mean(1).has_value());
  CHECK(r.null_mean(2) == 0.3);
  CHECK_FALSE(r.null_sd(2).has_value());
  std::ostringstream os;
  write_csv(os, r);
  CHECK(os.str() ==
        "threshold,observed,null_mean,null_sd,defined_replicates\n"
        "0.1,0.5,0.3,0.1414213562,2\n"
        "0.2,,,,0\n"
        "0.3,0.2,0.3,,1\n");
}

TEST_CASE("threshold grid syntax") {
  CHECK(parse_threshold_grid("0.6") == std::vector<double>{0.6});
  CHECK(parse_threshold_grid("0.1, 0.5,1") == std::vector<double>{0.1, 0.5, 1.0});
  const auto g = parse_threshold_grid("0:0.9:0.1");
  REQUIRE(g.size() == 10);
  CHECK(g[3] == 0.3);
  CHECK(g[9] == 0.9);
  CHECK(parse_threshold_grid("0:1:0.25").size() == 5);
  CHECK_THROWS_AS(parse_threshold_grid(""), InvalidArgument);
  CHECK_THROWS_AS(parse_threshold_grid("x"), InvalidArgument);
  CHECK_THROWS_AS(parse_threshold_grid("0:1:0"), InvalidArgument);
  CHECK_THROWS_AS(parse_threshold_grid("1:0:0.1"), InvalidArgument);
}
