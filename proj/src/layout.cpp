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

#include "multiviz/layout.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "multiviz/error.hpp"
#include "multiviz/format.hpp"

namespace multiviz {

namespace {

constexpr double kCoincident = 1e-9;
// Connected actors are fitted into this box when isolates occupy the ring.
constexpr double kInnerLo = 0.15;
constexpr double kInnerHi = 0.85;

// Min-max normalise the selected rows into [lo, hi]²; a degenerate
// dimension collapses to the box centre.
void normalise(Eigen::MatrixX2d& pos, std::span<const ActorIndex> rows,
               double lo, double hi) {
  if (rows.empty()) return;
  Eigen::Vector2d mn = pos.row(rows[0]).transpose(), mx = mn;
  for (ActorIndex r : rows) {
    mn = mn.cwiseMin(pos.row(r).transpose());
    mx = mx.cwiseMax(pos.row(r).transpose());
  }
  for (int c = 0; c < 2; ++c) {
    const double span = mx[c] - mn[c];
    for (ActorIndex r : rows)
      pos(r, c) = span < 1e-12 ? 0.5 * (lo + hi)
                               : lo + (hi - lo) * (pos(r, c) - mn[c]) / span;
  }
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw ParseError(0, "invalid coordinate '" + std::string(s) + "'");
  return v;
}

}  // namespace

LayoutMap::LayoutMap(std::vector<std::string> actors, Eigen::MatrixX2d positions)
    : actors_(std::move(actors)), positions_(std::move(positions)) {
  if (static_cast<std::size_t>(positions_.rows()) != actors_.size())
    throw InvalidArgument("layout positions do not match actor count");
}

bool LayoutMap::contains(std::string_view actor) const {
  return std::find(actors_.begin(), actors_.end(), actor) != actors_.end();
}

Eigen::Vector2d LayoutMap::at(std::string_view actor) const {
  const auto it = std::find(actors_.begin(), actors_.end(), actor);
  if (it == actors_.end())
    throw NotFoundError("layout has no position for actor '" +
                        std::string(actor) + "'");
  return positions_.row(it - actors_.begin()).transpose();
}

double fr_energy(const Eigen::MatrixX2d& positions, const SimpleGraph& g,
                 std::span<const ActorIndex> rows, double k) {
  double e = 0.0;
  for (const auto& entry : g.entries()) {
    const double d =
        (positions.row(entry.pair.lo) - positions.row(entry.pair.hi)).norm();
    e += d * d * d / (3.0 * k);
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const double d =
          std::max((positions.row(rows[i]) - positions.row(rows[j])).norm(),
                   kCoincident);
      e -= k * k * std::log(d);
    }
  return e;
}

LayoutMap force_layout(const SimpleGraph& g, const LayoutParams& params,
                       LayoutDiagnostics* diagnostics) {
  if (params.iterations < 1) throw InvalidArgument("iterations must be >= 1");
  const std::size_t n = g.actor_count();

  std::vector<ActorIndex> active, isolates;
  for (ActorIndex a = 0; a < n; ++a)
    (g.degree(a) > 0 || g.edge_count() == 0 ? active : isolates).push_back(a);

  Rng rng(params.seed);
  Eigen::MatrixX2d pos = Eigen::MatrixX2d::Zero(static_cast<Eigen::Index>(n), 2);
  for (ActorIndex a = 0; a < n; ++a) {
    pos(a, 0) = rng.unit();
    pos(a, 1) = rng.unit();
  }

  const double k = params.k.value_or(
      std::sqrt(1.0 / static_cast<double>(std::max<std::size_t>(active.size(), 1))));
  if (diagnostics) diagnostics->initial_energy = fr_energy(pos, g, active, k);

  Eigen::MatrixX2d disp(pos.rows(), 2);
  for (std::size_t it = 0; it < params.iterations; ++it) {
    const double temperature =
        params.initial_temperature *
        (1.0 - static_cast<double>(it) / static_cast<double>(params.iterations));
    disp.setZero();
    for (std::size_t i = 0; i < active.size(); ++i)
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        const ActorIndex u = active[i], v = active[j];
        Eigen::Vector2d delta = (pos.row(u) - pos.row(v)).transpose();
        double d = delta.norm();
        if (d < kCoincident) {
          delta = Eigen::Vector2d(rng.unit() - 0.5, rng.unit() - 0.5) * 1e-6;
          d = std::max(delta.norm(), kCoincident);
        }
        const Eigen::Vector2d f = delta / d * (k * k / d);
        disp.row(u) += f.transpose();
        disp.row(v) -= f.transpose();
      }
    for (const auto& entry : g.entries()) {
      const ActorIndex u = entry.pair.lo, v = entry.pair.hi;
      const Eigen::Vector2d delta = (pos.row(u) - pos.row(v)).transpose();
      const double d = delta.norm();
      if (d < kCoincident) continue;
      const Eigen::Vector2d f = delta / d * (d * d / k);
      disp.row(u) -= f.transpose();
      disp.row(v) += f.transpose();
    }
    for (ActorIndex a : active) {
      const double len = disp.row(a).norm();
      if (len > 0.0) pos.row(a) += disp.row(a) / len * std::min(len, temperature);
    }
  }
  if (diagnostics) diagnostics->final_energy = fr_energy(pos, g, active, k);

  if (isolates.empty()) {
    normalise(pos, active, 0.0, 1.0);
  } else {
    normalise(pos, active, kInnerLo, kInnerHi);
    for (std::size_t i = 0; i < isolates.size(); ++i) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) /
                               static_cast<double>(isolates.size()) -
                           0.5 * std::numbers::pi;
      pos(isolates[i], 0) = 0.5 + 0.5 * std::cos(angle);
      pos(isolates[i], 1) = 0.5 + 0.5 * std::sin(angle);
    }
  }
  // Guard against rounding just outside [0, 1].
  pos = pos.cwiseMax(0.0).cwiseMin(1.0);
  return LayoutMap({g.actors().begin(), g.actors().end()}, std::move(pos));
}

std::optional<SliceMode> parse_slice_mode(std::string_view name) {
  if (name == "shared") return SliceMode::kShared;
  if (name == "independent") return SliceMode::kIndependent;
  return std::nullopt;
}

std::vector<LayoutMap> slice_layouts(const MultiplexNetwork& net, SliceMode mode,
                                     const LayoutParams& params) {
  std::vector<LayoutMap> out;
  out.reserve(net.layer_count());
  if (mode == SliceMode::kShared) {
    const LayoutMap common = force_layout(flatten(net), params);
    out.assign(net.layer_count(), common);
    return out;
  }
  for (LayerIndex l = 0; l < net.layer_count(); ++l) {
    // Layer 0 keeps the base seed, so a one-layer network matches shared mode.
    LayoutParams p = params;
    if (l > 0) p.seed = derive_seed(params.seed, {l});
    out.push_back(
        force_layout(flatten(net, LayerSet::single(net.layer_count(), l)), p));
  }
  return out;
}

void write_csv(std::ostream& out, const LayoutMap& layout) {
  out << "actor,x,y\n";
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    out << layout.actors()[i] << ',' << format_exact(layout.positions()(r, 0))
        << ',' << format_exact(layout.positions()(r, 1)) << '\n';
  }
}

void write_csv(std::ostream& out, std::span<const std::string> layers,
               std::span<const LayoutMap> layouts) {
  if (layers.size() != layouts.size())
    throw InvalidArgument("one layout per layer is required");
  out << "layer,actor,x,y\n";
  for (std::size_t l = 0; l < layers.size(); ++l)
    for (std::size_t i = 0; i < layouts[l].size(); ++i) {
      const auto r = static_cast<Eigen::Index>(i);
      out << layers[l] << ',' << layouts[l].actors()[i] << ','
          << format_exact(layouts[l].positions()(r, 0)) << ','
          << format_exact(layouts[l].positions()(r, 1)) << '\n';
    }
}

LayoutFile parse_layout_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    for (std::string f; std::getline(ls, f, ',');) fields.push_back(f);
    rows.push_back(std::move(fields));
  }
  if (rows.empty()) throw ParseError(0, "empty layout file");

  const bool per_layer = rows[0] == std::vector<std::string>{"layer", "actor", "x", "y"};
  if (!per_layer && rows[0] != std::vector<std::string>{"actor", "x", "y"})
    throw ParseError(1, "layout header must be 'actor,x,y' or 'layer,actor,x,y'");
  const std::size_t width = per_layer ? 4 : 3;

  std::vector<std::string> order;
  std::vector<std::pair<std::vector<std::string>, std::vector<Eigen::Vector2d>>> blocks;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& f = rows[r];
    if (f.size() != width)
      throw ParseError(r + 1, "expected " + std::to_string(width) + " fields");
    const std::string key = per_layer ? f[0] : std::string();
    auto it = std::find(order.begin(), order.end(), key);
    if (it == order.end()) {
      order.push_back(key);
      blocks.emplace_back();
      it = order.end() - 1;
    }
    auto& block = blocks[static_cast<std::size_t>(it - order.begin())];
    try {
      block.first.push_back(f[width - 3]);
      block.second.emplace_back(parse_double(f[width - 2]),
                                parse_double(f[width - 1]));
    } catch (const ParseError& e) {
      throw ParseError(r + 1, e.what());
    }
  }

  auto to_map = [](auto& block) {
    Eigen::MatrixX2d pos(static_cast<Eigen::Index>(block.second.size()), 2);
    for (std::size_t i = 0; i < block.second.size(); ++i)
      pos.row(static_cast<Eigen::Index>(i)) = block.second[i].transpose();
    return LayoutMap(std::move(block.first), std::move(pos));
  };
  LayoutFile file;
  if (!per_layer) {
    if (blocks.empty()) blocks.emplace_back();
    file.shared = to_map(blocks[0]);
  } else {
    for (std::size_t i = 0; i < order.size(); ++i)
      file.per_layer.emplace_back(order[i], to_map(blocks[i]));
  }
  return file;
}

LayoutFile read_layout_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_layout_csv(buf.str());
}

}  // namespace multiviz
