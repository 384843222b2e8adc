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
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "multiviz/error.hpp"
#include "multiviz/model.hpp"

namespace multiviz {

namespace {

enum class Section { kNone, kLayers, kActors, kEdges };

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\f\v");
  return s.substr(first, last - first + 1);
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

ParseResult parse_multinet(std::string_view text) {
  if (trim(text).empty()) throw ParseError(0, "empty document");

  MultiplexNetwork::Builder builder;
  Section section = Section::kNone;
  bool saw_edges = false;
  std::size_t duplicates = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.starts_with("--")) continue;

    if (line.front() == '#') {
      const std::string header = upper(line);
      if (header == "#LAYERS") {
        section = Section::kLayers;
      } else if (header == "#ACTORS") {
        section = Section::kActors;
      } else if (header == "#EDGES") {
        section = Section::kEdges;
        saw_edges = true;
      } else {
        throw ParseError(line_no, "unknown section header '" +
                                      std::string(line) + "'");
      }
      continue;
    }

    const auto fields = split_fields(line);
    try {
      switch (section) {
        case Section::kNone:
          throw ParseError(line_no, "data line before any section header");
        case Section::kLayers:
          if (fields.size() != 1)
            throw ParseError(line_no, "expected 1 field in #LAYERS, got " +
                                          std::to_string(fields.size()));
          builder.add_layer(fields[0]);
          break;
        case Section::kActors:
          if (fields.size() != 1)
            throw ParseError(line_no, "expected 1 field in #ACTORS, got " +
                                          std::to_string(fields.size()));
          builder.add_actor(fields[0]);
          break;
        case Section::kEdges:
          if (fields.size() != 3)
            throw ParseError(line_no, "expected 3 fields in #EDGES, got " +
                                          std::to_string(fields.size()));
          if (fields[0] == fields[1])
            throw ParseError(line_no, "self-loop on actor '" +
                                          std::string(fields[0]) + "'");
          if (!builder.add_edge(fields[0], fields[1], fields[2])) ++duplicates;
          break;
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }

  if (!saw_edges) throw ParseError(0, "missing #EDGES section");
  return ParseResult{std::move(builder).build(), duplicates};
}

ParseResult read_multinet_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_multinet(buf.str());
}

std::vector<NamedEdge> canonical_edges(const MultiplexNetwork& net) {
  std::vector<NamedEdge> out;
  out.reserve(net.total_edge_count());
  for (LayerIndex l = 0; l < net.layer_count(); ++l) {
    const std::size_t begin = out.size();
    for (const ActorPair& p : net.edges(l)) {
      std::string_view a = net.actor_name(p.lo), b = net.actor_name(p.hi);
      if (b < a) std::swap(a, b);
      out.push_back({a, b, l});
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(begin), out.end(),
              [](const NamedEdge& x, const NamedEdge& y) {
                return std::tie(x.a, x.b) < std::tie(y.a, y.b);
              });
  }
  return out;
}

std::string write_multinet(const MultiplexNetwork& net) {
  std::string out = "#LAYERS\n";
  for (const auto& l : net.layers()) out += l + "\n";
  out += "#ACTORS\n";
  for (const auto& a : net.actors()) out += a + "\n";
  out += "#EDGES\n";
  for (const NamedEdge& e : canonical_edges(net)) {
    out.append(e.a);
    out += ',';
    out.append(e.b);
    out += ',';
    out += net.layer_name(e.layer);
    out += '\n';
  }
  return out;
}

}  // namespace multiviz
