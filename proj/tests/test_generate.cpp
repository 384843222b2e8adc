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


#include <algorithm>
#include <queue>
#include <set>

#include "doctest.h"
#include "multiviz/error.hpp"
#include "multiviz/generate.hpp"
#include "multiviz/metrics.hpp"

using namespace multiviz;

namespace {

std::size_t max_degree(const MultiplexNetwork& net, LayerIndex l) {
  std::size_t best = 0;
  for (ActorIndex a = 0; a < net.actor_count(); ++a)
    best = std::max(best, net.adjacency(l, a).size());
  return best;
}

bool connected(const MultiplexNetwork& net, LayerIndex l) {
  std::vector<bool> seen(net.actor_count());
  std::queue<ActorIndex> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    const ActorIndex a = q.front();
    q.pop();
    for (ActorIndex b : net.adjacency(l, a))
      if (!seen[b]) {
        seen[b] = true;
        ++reached;
        q.push(b);
      }
  }
  return reached == net.actor_count();
}

bool same_edges(const MultiplexNetwork& net, LayerIndex x, LayerIndex y) {
  return std::equal(net.edges(x).begin(), net.edges(x).end(),
                    net.edges(y).begin(), net.edges(y).end());
}

}  // namespace

TEST_CASE("model names") {
  CHECK(parse_generator_model("uniform") == GeneratorModel::kUniform);
  CHECK(parse_generator_model("er") == GeneratorModel::kUniform);
  CHECK(parse_generator_model("ba") == GeneratorModel::kPreferential);
  CHECK_FALSE(parse_generator_model("ws").has_value());
}

TEST_CASE("parameter validation") {
  GeneratorSpec s;
  s.seed_clique = {1};
  CHECK_THROWS_AS(validate(s), InvalidArgument);
  s = {};
  s.attachment = {1, 2, 3};
  CHECK_THROWS_AS(validate(s), InvalidArgument);
  s = {};
  s.coupling = 1.5;
  CHECK_THROWS_AS(validate(s), InvalidArgument);
  s = {};
  s.actor_count = 2;
  CHECK_THROWS_AS(validate(s), InvalidArgument);
  s = {};
  s.model = GeneratorModel::kUniform;
  s.edge_probability = {-0.5};
  CHECK_THROWS_AS(generate(s), InvalidArgument);
}

TEST_CASE("uniform extremes") {
  GeneratorSpec s;
  s.model = GeneratorModel::kUniform;
  s.actor_count = 12;
  s.layer_count = 3;
  s.edge_probability = {0.0};
  const auto empty = generate(s);
  CHECK(empty.total_edge_count() == 0);
  CHECK(empty.actor_count() == 12);
  CHECK(empty.actor_name(0) == "N1");
  CHECK(empty.layer_name(2) == "L3");
  s.edge_probability = {1.0};
  const auto full = generate(s);
  for (LayerIndex l = 0; l < 3; ++l) CHECK(full.edge_count(l) == 66);
  s.edge_probability = {0.0, 1.0, 0.0};
  const auto mixed = generate(s);
  CHECK(mixed.edge_count(0) == 0);
  CHECK(mixed.edge_count(1) == 66);
}

TEST_CASE("preferential edge count is C(m0,2) + m(n - m0)") {
  for (std::size_t n : {5u, 40u, 200u})
    for (std::size_t m : {1u, 2u, 3u})
      for (std::size_t extra : {0u, 2u}) {
        GeneratorSpec s;
        s.actor_count = n;
        s.layer_count = 2;
        s.attachment = {m};
        s.seed_clique = {m + extra};
        s.seed = n * 100 + m * 10 + extra;
        const std::size_t m0 = m + extra;
        if (m0 > n) continue;
        const auto net = generate(s);
        for (LayerIndex l = 0; l < 2; ++l) {
          CHECK(net.edge_count(l) == m0 * (m0 - 1) / 2 + m * (n - m0));
          if (m0 >= 2) CHECK(connected(net, l));
        }
      }
}

TEST_CASE("same seed gives the same network") {
  GeneratorSpec s;
  s.layer_count = 3;
  s.coupling = 0.3;
  CHECK(generate(s) == generate(s));
  GeneratorSpec u = s;
  u.model = GeneratorModel::kUniform;
  CHECK(generate(u) == generate(u));
  s.seed = 43;
  CHECK_FALSE(generate(s) == generate(GeneratorSpec{}));
}

TEST_CASE("full coupling with shared parameters gives identical layers") {
  GeneratorSpec s;
  s.layer_count = 4;
  s.coupling = 1.0;
  const auto net = generate(s);
  for (LayerIndex l = 1; l < 4; ++l) CHECK(same_edges(net, 0, l));
  s.coupling = 0.0;
  const auto free = generate(s);
  CHECK_FALSE(same_edges(free, 0, 1));
}

TEST_CASE("partial coupling raises cross-layer overlap") {
  GeneratorSpec s;
  s.coupling = 0.0;
  const double low = jaccard(generate(s), 0, 1).value();
  s.coupling = 0.7;
  const double high = jaccard(generate(s), 0, 1).value();
  CHECK(high > low);
}

TEST_CASE("preferential hubs outgrow uniform hubs") {
  int wins = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GeneratorSpec ba;
    ba.actor_count = 200;
    ba.layer_count = 1;
    ba.attachment = {2};
    ba.seed_clique = {2};
    ba.seed = seed;
    const auto pref = generate(ba);
    GeneratorSpec er = ba;
    er.model = GeneratorModel::kUniform;
    er.edge_probability = {static_cast<double>(pref.edge_count(0)) / (200.0 * 199.0 / 2.0)};
    const auto unif = generate(er);
    wins += max_degree(pref, 0) > max_degree(unif, 0);
  }
  CHECK(wins >= 9);
}
