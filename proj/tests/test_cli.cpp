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


#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "multiviz/simplify.hpp"
#include "support.hpp"

using namespace multiviz;
using multiviz::testing::aucs;
using multiviz::testing::aucs_path;
using multiviz::testing::CliRun;
using multiviz::testing::run_cli;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("multiviz_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("stats prints one row per layer") {
  const CliRun r = run_cli({"stats", aucs_path()});
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 6);
  CHECK(rows[1].find("work") == 0);
  CHECK(rows[1].find("194") != std::string::npos);
  CHECK(rows[1].find("6.47") != std::string::npos);
  CHECK(r.err.find("620 duplicate edges") != std::string::npos);

  const CliRun csv = run_cli({"stats", aucs_path(), "--format", "csv"});
  CHECK(csv.out.rfind("layer,edges,components,actors,avg_degree\nwork,194,1,60,6.466667\n", 0) ==
        0);
  CHECK(csv.out.find("coauthor,21,8,25,1.680000\n") != std::string::npos);
}

TEST_CASE("stdin and stdout via dash") {
  const std::string doc = "#EDGES\na,b,L1\nb,c,L1\n";
  const CliRun r = run_cli({"stats", "-", "--format", "csv"}, doc);
  CHECK(r.status == 0);
  CHECK(r.out == "layer,edges,components,actors,avg_degree\nL1,2,1,3,1.333333\n");
  const CliRun m = run_cli({"merge", "-", "--metric", "relevance", "--threshold", "0", "-o", "-"}, doc);
  CHECK(m.status == 0);
  CHECK(m.out == "#LAYERS\nL1\n#ACTORS\na\nb\nc\n#EDGES\na,b,L1\nb,c,L1\n");
}

TEST_CASE("merge at zero reproduces the input") {
  const CliRun r = run_cli({"merge", aucs_path(), "--metric", "relevance", "--threshold", "0"});
  REQUIRE(r.status == 0);
  CHECK(parse_multinet(r.out).network == aucs());
  CHECK(r.out == write_multinet(aucs()));
}

TEST_CASE("merge at xrelevance 0.3") {
  const CliRun r = run_cli({"merge", aucs_path(), "--metric", "xrelevance", "--threshold", "0.3"});
  REQUIRE(r.status == 0);
  const auto merged = parse_multinet(r.out).network;
  CHECK(merged == local_merge(aucs(), {MetricKind::kXRelevance, 0.3}));
  CHECK(r.out.find("U141,U68,lunch") != std::string::npos);
  CHECK(r.err.find("transitivity: ") != std::string::npos);
  CHECK(r.err.find("node_pass_counts: work=") != std::string::npos);
}

TEST_CASE("usage and data errors") {
  CHECK(run_cli({}).status == 1);
  CHECK(run_cli({"frobnicate", aucs_path()}).status == 1);
  CHECK(run_cli({"stats", aucs_path(), "--bogus"}).status == 1);
  CHECK(run_cli({"merge", aucs_path(), "--threshold", "0.3"}).status == 1);
  CHECK(run_cli({"merge", aucs_path(), "--metric", "degree", "--threshold", "0.3"}).status == 1);
  CHECK(run_cli({"merge", aucs_path(), "--metric", "relevance", "--threshold", "1.5"}).status == 1);
  CHECK(run_cli({"render", aucs_path(), "--figure", "treemap"}).status == 1);
  CHECK(run_cli({"stats", "/nonexistent.mpx"}).status == 2);
  const CliRun bad = run_cli({"stats", "-"}, "#EDGES\na,b\n");
  CHECK(bad.status == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run_cli({"render", aucs_path(), "--figure", "sociogram", "--layout-file",
                 "/nonexistent.csv"}).status == 2);
  CHECK(run_cli({"render", aucs_path(), "--figure", "sociogram", "--highlight", "nobody"})
            .status == 2);
  const CliRun help = run_cli({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("sweep") != std::string::npos);
}

TEST_CASE("seed defaults to 42 and is reported") {
  const CliRun a = run_cli({"generate", "--actors", "30"});
  CHECK(a.status == 0);
  CHECK(a.err.find("seed: 42") != std::string::npos);
  const CliRun b = run_cli({"generate", "--actors", "30", "--seed", "42"});
  CHECK(b.err.find("seed:") == std::string::npos);
  CHECK(a.out == b.out);
  CHECK(a.out != run_cli({"generate", "--actors", "30", "--seed", "7"}).out);
}

TEST_CASE("generate options") {
  const CliRun r = run_cli({"generate", "--model", "uniform", "--actors", "10", "--layers", "3",
                            "--p", "0,1,0"});
  REQUIRE(r.status == 0);
  const auto net = parse_multinet(r.out).network;
  CHECK(net.layer_count() == 3);
  CHECK(net.edge_count(0) == 0);
  CHECK(net.edge_count(1) == 45);
  const CliRun ba = run_cli({"generate", "--actors", "50", "--m", "3", "--m0", "4",
                             "--layers", "2", "--coupling", "1"});
  const auto pref = parse_multinet(ba.out).network;
  CHECK(pref.edge_count(0) == 6 + 3 * 46);
  CHECK(std::equal(pref.edges(0).begin(), pref.edges(0).end(), pref.edges(1).begin(),
                   pref.edges(1).end()));
  CHECK(run_cli({"generate", "--m", "3", "--m0", "2"}).status == 1);
  CHECK(run_cli({"generate", "--p", "abc", "--model", "er"}).status == 1);
}

TEST_CASE("sweep csv") {
  const CliRun r = run_cli({"sweep", aucs_path(), "--metric", "relevance", "--threshold",
                            "0,0.5", "--replicates", "4", "--seed", "3"});
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("threshold,observed,null_mean,null_sd,defined_replicates\n0,", 0) == 0);
  const std::vector<double> grid{0.0, 0.5};
  std::ostringstream expected;
  write_csv(expected, sweep(aucs(), MetricKind::kRelevance, grid, 4, 3));
  CHECK(r.out == expected.str());
}

TEST_CASE("metrics and correlate") {
  const CliRun m = run_cli({"metrics", aucs_path(), "--metric", "xrelevance"});
  CHECK(m.status == 0);
  CHECK(m.out.rfind("actor,work,leisure,coauthor,lunch,facebook\n", 0) == 0);
  const CliRun d = run_cli({"metrics", aucs_path()});
  CHECK(d.out.find("\nU4,") != std::string::npos);
  const CliRun c = run_cli({"correlate", aucs_path()});
  CHECK(c.out.rfind("layer,work,leisure,coauthor,lunch,facebook\nwork,1.000000,", 0) == 0);
}

TEST_CASE("layout files are reused across renders") {
  const auto dir = scratch_dir();
  const auto layout = (dir / "layout.csv").string();
  const auto svg = (dir / "fig.svg").string();
  REQUIRE(run_cli({"layout", aucs_path(), "--out", layout}).status == 0);
  const CliRun direct = run_cli({"render", aucs_path(), "--figure", "sociogram"});
  REQUIRE(run_cli({"render", aucs_path(), "--figure", "sociogram", "--layout-file", layout,
                   "--out", svg}).status == 0);
  CHECK(read_file(svg) == direct.out);

  const CliRun merged = run_cli({"render", aucs_path(), "--figure", "flattened", "--metric",
                                 "relevance", "--threshold", "0.6", "--layout-file", layout});
  CHECK(merged.status == 0);
  const auto census = multiviz::testing::svg_census(merged.out);
  CHECK(census.at("line").at("edge") ==
        flatten(local_merge(aucs(), {MetricKind::kRelevance, 0.6})).edge_count());

  const auto per_layer = (dir / "slices.csv").string();
  REQUIRE(run_cli({"layout", aucs_path(), "--mode", "independent", "--out", per_layer})
              .status == 0);
  const CliRun slices = run_cli({"render", aucs_path(), "--figure", "slices", "--mode",
                                 "independent"});
  CHECK(run_cli({"render", aucs_path(), "--figure", "slices", "--layout-file", per_layer})
            .out == slices.out);
  CHECK(run_cli({"render", aucs_path(), "--figure", "sociogram", "--layout-file", per_layer})
            .status == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("every figure renders deterministically") {
  for (const char* figure : {"sociogram", "flattened", "slices", "pies", "ranked",
                             "parcoords", "heatmap", "sweep", "histogram"}) {
    std::vector<std::string> args{"render", aucs_path(), "--figure", figure, "--seed", "42"};
    if (std::string(figure) == "sweep") {
      args.insert(args.end(), {"--metric", "relevance"});
    }
    const CliRun a = run_cli(args);
    const CliRun b = run_cli(args);
    CHECK_MESSAGE(a.status == 0, figure);
    CHECK_MESSAGE(a.out == b.out, figure);
    CHECK_NOTHROW(multiviz::testing::parse_xml(a.out));
  }
  const CliRun ll = run_cli({"render", aucs_path(), "--figure", "histogram", "--scale",
                             "loglog", "--layers", "coauthor"});
  CHECK(ll.status == 0);
}
