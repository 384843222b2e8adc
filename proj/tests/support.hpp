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


// Shared fixtures and independent oracles for the test binaries.

#ifndef MULTIVIZ_TESTS_SUPPORT_HPP_
#define MULTIVIZ_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "multiviz/cli.hpp"
#include "multiviz/model.hpp"
#include "multiviz/random.hpp"

namespace multiviz::testing {

inline std::string aucs_path() { return MULTIVIZ_FIXTURE_DIR "/aucs.mpx"; }

inline const MultiplexNetwork& aucs() {
  static const MultiplexNetwork net = read_multinet_file(aucs_path()).network;
  return net;
}

// Every actor is registered up front, so isolates are part of the network.
inline MultiplexNetwork random_multiplex(std::uint64_t seed, std::size_t actors,
                                         std::size_t layers, double p) {
  Rng rng(seed);
  MultiplexNetwork::Builder b;
  for (std::size_t l = 0; l < layers; ++l) b.add_layer("L" + std::to_string(l));
  for (std::size_t a = 0; a < actors; ++a) b.add_actor("a" + std::to_string(a));
  for (std::size_t l = 0; l < layers; ++l)
    for (std::size_t i = 0; i < actors; ++i)
      for (std::size_t j = i + 1; j < actors; ++j)
        if (rng.bernoulli(p))
          b.add_edge(static_cast<ActorIndex>(i), static_cast<ActorIndex>(j),
                     static_cast<LayerIndex>(l));
  return std::move(b).build();
}

// Brute-force view built from the raw per-layer pair lists: no CSR, no
// shared helpers.
class NeighborOracle {
 public:
  explicit NeighborOracle(const MultiplexNetwork& net)
      : layers_(net.layer_count()),
        sets_(net.layer_count(), std::vector<std::set<ActorIndex>>(net.actor_count())) {
    for (LayerIndex l = 0; l < net.layer_count(); ++l)
      for (const ActorPair& p : net.edges(l)) {
        sets_[l][p.lo].insert(p.hi);
        sets_[l][p.hi].insert(p.lo);
      }
  }

  std::int64_t degree(ActorIndex a, const std::vector<LayerIndex>& ls) const {
    std::int64_t d = 0;
    for (LayerIndex l : ls) d += static_cast<std::int64_t>(sets_[l][a].size());
    return d;
  }

  std::set<ActorIndex> neighbors(ActorIndex a, const std::vector<LayerIndex>& ls) const {
    std::set<ActorIndex> out;
    for (LayerIndex l : ls) out.insert(sets_[l][a].begin(), sets_[l][a].end());
    return out;
  }

  std::vector<LayerIndex> all() const { return complement({}); }

  std::vector<LayerIndex> complement(const std::vector<LayerIndex>& ls) const {
    std::vector<LayerIndex> out;
    for (LayerIndex l = 0; l < layers_; ++l)
      if (std::find(ls.begin(), ls.end(), l) == ls.end()) out.push_back(l);
    return out;
  }

  // {numerator, denominator}, 0/1 when the actor has no neighbors.
  std::pair<std::int64_t, std::int64_t> relevance(
      ActorIndex a, const std::vector<LayerIndex>& ls) const {
    const auto total = static_cast<std::int64_t>(neighbors(a, all()).size());
    if (total == 0) return {0, 1};
    return {static_cast<std::int64_t>(neighbors(a, ls).size()), total};
  }

  std::pair<std::int64_t, std::int64_t> xrelevance(
      ActorIndex a, const std::vector<LayerIndex>& ls) const {
    const auto total = static_cast<std::int64_t>(neighbors(a, all()).size());
    if (total == 0) return {0, 1};
    const auto in = neighbors(a, ls);
    const auto out = neighbors(a, complement(ls));
    std::int64_t only = 0;
    for (ActorIndex b : in) only += out.count(b) == 0;
    return {only, total};
  }

 private:
  std::size_t layers_;
  std::vector<std::vector<std::set<ActorIndex>>> sets_;
};

struct CliRun {
  int status = 0;
  std::string out;
  std::string err;
};

inline CliRun run_cli(std::vector<std::string> args, const std::string& stdin_text = {}) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  CliRun r;
  r.status = multiviz::run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Strict XML parse; throws on malformed input.
inline boost::property_tree::ptree parse_xml(const std::string& text) {
  std::istringstream in(text);
  boost::property_tree::ptree tree;
  boost::property_tree::read_xml(in, tree);
  return tree;
}

// Element name -> class -> count, over the whole document.
using ElementCensus = std::map<std::string, std::map<std::string, std::size_t>>;

inline void census_walk(const boost::property_tree::ptree& node, ElementCensus& out) {
  for (const auto& [name, child] : node) {
    if (name == "<xmlattr>" || name == "<xmlcomment>") continue;
    out[name][child.get("<xmlattr>.class", "")] += 1;
    census_walk(child, out);
  }
}

inline ElementCensus svg_census(const std::string& svg) {
  ElementCensus c;
  census_walk(parse_xml(svg), c);
  return c;
}

}  // namespace multiviz::testing

#endif  // MULTIVIZ_TESTS_SUPPORT_HPP_
