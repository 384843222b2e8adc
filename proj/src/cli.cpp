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


#include "multiviz/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "multiviz/error.hpp"
#include "multiviz/format.hpp"
#include "multiviz/generate.hpp"
#include "multiviz/layout.hpp"
#include "multiviz/metrics.hpp"
#include "multiviz/model.hpp"
#include "multiviz/render.hpp"
#include "multiviz/server.hpp"
#include "multiviz/simplify.hpp"

namespace multiviz {

namespace {

struct Options {
  std::string input;
  std::string out = "-";
  std::string metric;
  std::string threshold;
  std::size_t replicates = 10;
  std::uint64_t seed = kDefaultSeed;
  bool seed_given = false;
  std::size_t threads = 0;
  std::string mode;
  std::string figure;
  std::string layout_file;
  std::string layers;
  std::string highlight;
  std::string scale = "linear";
  std::string format = "text";
  // generate
  std::string model = "preferential";
  std::size_t actor_count = 200;
  std::size_t layer_count = 2;
  std::string edge_probability = "0.02";
  std::string attachment = "2";
  std::string seed_clique = "3";
  double coupling = 0.0;
  // serve
  std::string host = "127.0.0.1";
  std::optional<int> port;
  std::string assets = "explorer/dist";
};

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.emplace_back(item);
    start = comma + 1;
  }
  return out;
}

template <typename T>
std::vector<T> parse_number_list(const std::string& text, const char* what) {
  std::vector<T> out;
  for (const std::string& item : split_list(text)) {
    std::istringstream is(item);
    T v{};
    if (!(is >> v) || !is.eof())
      throw InvalidArgument(std::string("invalid ") + what + " '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument(std::string("empty ") + what);
  return out;
}

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

MultiplexNetwork load(const Options& o, std::istream& in, std::ostream& err) {
  ParseResult r = o.input == "-" ? parse_multinet(slurp(in))
                                 : read_multinet_file(o.input);
  if (r.duplicate_edges > 0)
    err << "warning: " << r.duplicate_edges << " duplicate edges ignored\n";
  return std::move(r.network);
}

// Runs `write` against stdout or the --out file.
void emit(const Options& o, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  if (o.out == "-") {
    write(out);
    out.flush();
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Error("cannot write '" + o.out + "'");
  write(file);
  if (!file.flush()) throw Error("cannot write '" + o.out + "'");
}

void note_seed(const Options& o, std::ostream& err) {
  if (!o.seed_given) err << "seed: " << o.seed << "\n";
}

MetricKind metric_or(const Options& o, MetricKind fallback) {
  if (o.metric.empty()) return fallback;
  const auto kind = parse_metric_kind(o.metric);
  if (!kind) throw InvalidArgument("unknown metric '" + o.metric + "'");
  return *kind;
}

MetricKind merge_metric(const Options& o) {
  if (o.metric.empty()) throw InvalidArgument("--metric is required");
  const MetricKind kind = metric_or(o, MetricKind::kRelevance);
  if (kind != MetricKind::kRelevance && kind != MetricKind::kXRelevance)
    throw InvalidArgument("merging needs --metric relevance or xrelevance");
  return kind;
}

MergeSpec merge_spec(const Options& o) {
  const MetricKind kind = merge_metric(o);
  if (o.threshold.empty()) throw InvalidArgument("--threshold is required");
  const auto grid = parse_threshold_grid(o.threshold);
  if (grid.size() != 1) throw InvalidArgument("--threshold takes one value here");
  MergeSpec spec{kind, grid.front()};
  validate(spec);
  return spec;
}

LayerSet selected_layers(const MultiplexNetwork& net, const Options& o) {
  if (o.layers.empty()) return net.all_layers();
  return net.layer_set(split_list(o.layers));
}

LayoutParams layout_params(const Options& o) {
  LayoutParams p;
  p.seed = o.seed;
  return p;
}

SliceMode slice_mode(const Options& o) {
  const auto mode = parse_slice_mode(o.mode.empty() ? "shared" : o.mode);
  if (!mode) throw InvalidArgument("unknown mode '" + o.mode + "'");
  return *mode;
}

// ---------------------------------------------------------------------------

int cmd_stats(const Options& o, std::istream& in, std::ostream& out,
              std::ostream& err) {
  const MultiplexNetwork net = load(o, in, err);
  const auto stats = layer_stats(net);
  emit(o, out, [&](std::ostream& os) {
    if (o.format == "csv") {
      os << "layer,edges,components,actors,avg_degree\n";
      for (LayerIndex l = 0; l < net.layer_count(); ++l) {
        const LayerStats& s = stats[l];
        os << net.layer_name(l) << ',' << s.edge_count << ',';
        if (s.component_count) os << *s.component_count;
        os << ',' << s.incident_actors << ',' << format_fixed6(s.avg_degree())
           << '\n';
      }
      return;
    }
    std::size_t width = 5;
    for (const auto& name : net.layers()) width = std::max(width, name.size());
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-*s %7s %11s %7s %11s\n",
                  static_cast<int>(width), "layer", "edges", "components",
                  "actors", "avg_degree");
    os << buf;
    for (LayerIndex l = 0; l < net.layer_count(); ++l) {
      const LayerStats& s = stats[l];
      const std::string comps =
          s.component_count ? std::to_string(*s.component_count) : "-";
      std::snprintf(buf, sizeof buf, "%-*s %7zu %11s %7zu %11.2f\n",
                    static_cast<int>(width), net.layer_name(l).c_str(),
                    s.edge_count, comps.c_str(), s.incident_actors,
                    s.avg_degree());
      os << buf;
    }
  });
  return kExitOk;
}

int cmd_metrics(const Options& o, std::istream& in, std::ostream& out,
                std::ostream& err) {
  const MultiplexNetwork net = load(o, in, err);
  const MetricTable table = metric_table(net, metric_or(o, MetricKind::kDegree));
  emit(o, out, [&](std::ostream& os) { write_csv(os, table); });
  return kExitOk;
}

int cmd_correlate(const Options& o, std::istream& in, std::ostream& out,
                  std::ostream& err) {
  const MultiplexNetwork net = load(o, in, err);
  const JaccardMatrix m = jaccard_matrix(net);
  emit(o, out, [&](std::ostream& os) { write_csv(os, m); });
  return kExitOk;
}

int cmd_merge(const Options& o, std::istream& in, std::ostream& out,
              std::ostream& err) {
  const MultiplexNetwork net = load(o, in, err);
  const MergeSpec spec = merge_spec(o);
  const MultiplexNetwork merged = local_merge(net, spec);
  emit(o, out, [&](std::ostream& os) { os << write_multinet(merged); });

  const auto counts = node_pass_counts(net, spec);
  err << "node_pass_counts:";
  for (LayerIndex l = 0; l < net.layer_count(); ++l)
    err << ' ' << net.layer_name(l) << '=' << counts[l];
  err << "\nretained_edges:";
  for (LayerIndex l = 0; l < net.layer_count(); ++l)
    err << ' ' << net.layer_name(l) << '=' << merged.edge_count(l);
  std::optional<double> t;
  if (auto r = transitivity(flatten(merged))) t = r->value();
  err << "\ntransitivity: " << (t ? format_sig10(*t) : "absent") << "\n";
  return kExitOk;
}

int cmd_sweep(const Options& o, std::istream& in, std::ostream& out,
              std::ostream& err) {
  const MultiplexNetwork net = load(o, in, err);
  const MetricKind kind = merge_metric(o);
  const auto grid =
      parse_threshold_grid(o.threshold.empty() ? "0:0.9:0.1" : o.threshold);
  note_seed(o, err);
  const SweepResult r = sweep(net, kind, grid, o.replicates, o.seed, o.threads);
  emit(o, out, [&](std::ostream& os) { write_csv(os, r); });
  return kExitOk;
}

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
  GeneratorSpec spec;
  const auto model = parse_generator_model(o.model);
  if (!model) throw InvalidArgument("unknown model '" + o.model + "'");
  spec.model = *model;
  spec.actor_count = o.actor_count;
  spec.layer_count = o.layer_count;
  spec.edge_probability = parse_number_list<double>(o.edge_probability, "--p");
  spec.attachment = parse_number_list<std::size_t>(o.attachment, "--m");
  spec.seed_clique = parse_number_list<std::size_t>(o.seed_clique, "--m0");
  spec.coupling = o.coupling;
  spec.seed = o.seed;
  validate(spec);
  note_seed(o, err);
  const MultiplexNetwork net = generate(spec);
  emit(o, out, [&](std::ostream& os) { os << write_multinet(net); });
  return kExitOk;
}

int cmd_layout(const Options& o, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const MultiplexNetwork net = load(o, in, err);
  note_seed(o, err);
  if (o.mode.empty()) {
    const LayoutMap map = force_layout(flatten(net), layout_params(o));
    emit(o, out, [&](std::ostream& os) { write_csv(os, map); });
  } else {
    const auto maps = slice_layouts(net, slice_mode(o), layout_params(o));
    emit(o, out, [&](std::ostream& os) { write_csv(os, net.layers(), maps); });
  }
  return kExitOk;
}

std::optional<LayoutFile> layout_file(const Options& o) {
  if (o.layout_file.empty()) return std::nullopt;
  return read_layout_file(o.layout_file);
}

LayoutMap shared_layout(const MultiplexNetwork& net, const Options& o) {
  if (auto file = layout_file(o)) {
    if (!file->shared)
      throw InvalidArgument("layout file has per-layer coordinates; expected "
                            "actor,x,y");
    return *file->shared;
  }
  return force_layout(flatten(net), layout_params(o));
}

std::vector<LayoutMap> per_layer_layouts(const MultiplexNetwork& net,
                                         const Options& o) {
  auto file = layout_file(o);
  if (!file) return slice_layouts(net, slice_mode(o), layout_params(o));
  if (file->shared) return std::vector<LayoutMap>(net.layer_count(), *file->shared);
  std::vector<LayoutMap> maps;
  for (const auto& name : net.layers()) {
    auto it = std::find_if(file->per_layer.begin(), file->per_layer.end(),
                           [&](const auto& entry) { return entry.first == name; });
    if (it == file->per_layer.end())
      throw NotFoundError("layout file has no coordinates for layer '" + name + "'");
    maps.push_back(it->second);
  }
  return maps;
}

// The network drawn by node-link figures: merged when --threshold is given.
MultiplexNetwork drawn_network(const MultiplexNetwork& net, const Options& o) {
  if (o.threshold.empty()) return net;
  return local_merge(net, merge_spec(o));
}

SceneDocument build_figure(const MultiplexNetwork& net, const Options& o,
                           const Style& style) {
  const std::string& f = o.figure;
  if (f == "sociogram" || f == "flattened") {
    SociogramOptions opts;
    opts.color_by_provenance = f == "sociogram";
    for (auto& name : split_list(o.highlight)) {
      net.actor_index(name);
      opts.highlight.insert(std::move(name));
    }
    const LayoutMap layout = shared_layout(net, o);
    return render_sociogram(flatten(drawn_network(net, o)), layout, style, opts);
  }
  if (f == "slices") {
    const auto maps = per_layer_layouts(net, o);
    return render_slices(drawn_network(net, o), maps, style);
  }
  if (f == "pies") {
    const LayoutMap layout = shared_layout(net, o);
    return render_pie_augmented(drawn_network(net, o), layout, style);
  }
  if (f == "ranked") {
    const MetricKind kind = metric_or(o, MetricKind::kDegree);
    const LayerSet layers = selected_layers(net, o);
    std::vector<double> values(net.actor_count());
    for (ActorIndex a = 0; a < net.actor_count(); ++a)
      values[a] = metric_value(net, kind, a, layers);
    return render_ranked(net, values, style);
  }
  if (f == "parcoords")
    return render_parallel_coords(
        metric_table(net, metric_or(o, MetricKind::kRelevance)), style);
  if (f == "heatmap") return render_heatmap(jaccard_matrix(net), style);
  if (f == "sweep") {
    const auto grid =
        parse_threshold_grid(o.threshold.empty() ? "0:0.9:0.1" : o.threshold);
    return render_sweep_chart(
        sweep(net, merge_metric(o), grid, o.replicates, o.seed, o.threads),
        style);
  }
  if (f == "histogram") {
    const auto scale = parse_histogram_scale(o.scale);
    if (!scale) throw InvalidArgument("unknown scale '" + o.scale + "'");
    return render_histogram(degree_distribution(net, selected_layers(net, o)),
                            style, *scale);
  }
  throw InvalidArgument("unknown figure '" + f + "'");
}

int cmd_render(const Options& o, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const MultiplexNetwork net = load(o, in, err);
  note_seed(o, err);
  const SceneDocument doc = build_figure(net, o, Style{});
  for (const auto& w : doc.warnings()) err << "warning: " << w << "\n";
  const std::string svg = doc.to_svg();
  emit(o, out, [&](std::ostream& os) { os << svg; });
  return kExitOk;
}

int cmd_serve(const Options& o, std::istream& in, std::ostream& err) {
  const MultiplexNetwork net = load(o, in, err);
  note_seed(o, err);
  const ApiSession session(net, layout_params(o));
  HttpService service(session, o.assets);
  const int port = o.port ? *o.port : port_from_environment();
  const int bound = service.bind(o.host, port);
  if (bound < 0) throw Error("cannot bind " + o.host + ":" + std::to_string(port));
  err << "listening on http://" << o.host << ":" << bound << "\n" << std::flush;
  return service.listen_after_bind() ? kExitOk : kExitData;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplex network analysis and visualisation", "multiviz"};
  app.require_subcommand(1, 1);
  Options o;

  const std::vector<std::string> metric_names{"degree", "neighborhood",
                                              "relevance", "xrelevance"};
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Multinet file, or - for stdin")->required();
    sub->add_option("-o,--out", o.out, "Output path, or - for stdout");
  };
  auto add_metric = [&](CLI::App* sub) {
    sub->add_option("--metric", o.metric)->check(CLI::IsMember(metric_names));
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed (default 42)");
  };
  auto add_sweep_flags = [&](CLI::App* sub) {
    sub->add_option("--replicates", o.replicates, "Null replicates")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  };

  CLI::App* stats = app.add_subcommand("stats", "Per-layer edge, component and degree summary");
  add_input(stats);
  stats->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv"}));

  CLI::App* metrics = app.add_subcommand("metrics", "Actor x layer metric table (CSV)");
  add_input(metrics);
  add_metric(metrics);

  CLI::App* correlate = app.add_subcommand("correlate", "Layer Jaccard matrix (CSV)");
  add_input(correlate);

  CLI::App* merge = app.add_subcommand("merge", "Local merging filter (multinet)");
  add_input(merge);
  add_metric(merge);
  merge->add_option("--threshold", o.threshold, "Threshold in [0, 1]");

  CLI::App* sw = app.add_subcommand("sweep", "Observed vs null transitivity (CSV)");
  add_input(sw);
  add_metric(sw);
  sw->add_option("--threshold", o.threshold, "V, V1,V2,... or A:B:S");
  add_sweep_flags(sw);
  add_seed(sw);

  CLI::App* gen = app.add_subcommand("generate", "Synthetic multiplex (multinet)");
  gen->add_option("-o,--out", o.out, "Output path, or - for stdout");
  gen->add_option("--model", o.model)
      ->check(CLI::IsMember({"uniform", "er", "preferential", "ba"}));
  gen->add_option("--actors", o.actor_count)->check(CLI::PositiveNumber);
  gen->add_option("--layers", o.layer_count)->check(CLI::PositiveNumber);
  gen->add_option("--p", o.edge_probability, "Edge probability, one or per layer");
  gen->add_option("--m", o.attachment, "Edges per arriving node, one or per layer");
  gen->add_option("--m0", o.seed_clique, "Seed clique size, one or per layer");
  gen->add_option("--coupling", o.coupling, "Target copy probability")
      ->check(CLI::Range(0.0, 1.0));
  add_seed(gen);

  CLI::App* lay = app.add_subcommand("layout", "Force-directed coordinates (CSV)");
  add_input(lay);
  lay->add_option("--mode", o.mode, "Per-layer maps: shared or independent")
      ->check(CLI::IsMember({"shared", "independent"}));
  add_seed(lay);

  CLI::App* render = app.add_subcommand("render", "Draw a figure (SVG)");
  add_input(render);
  render->add_option("--figure", o.figure)
      ->required()
      ->check(CLI::IsMember({"sociogram", "flattened", "slices", "pies", "ranked",
                             "parcoords", "heatmap", "sweep", "histogram"}));
  add_metric(render);
  render->add_option("--threshold", o.threshold,
                     "Merge threshold (node-link figures) or sweep grid");
  render->add_option("--mode", o.mode)->check(CLI::IsMember({"shared", "independent"}));
  render->add_option("--layout-file", o.layout_file, "Reuse coordinates from CSV");
  render->add_option("--layers", o.layers, "Comma-separated layer names");
  render->add_option("--highlight", o.highlight, "Comma-separated actor names");
  render->add_option("--scale", o.scale)->check(CLI::IsMember({"linear", "loglog"}));
  add_sweep_flags(render);
  add_seed(render);

  CLI::App* serve = app.add_subcommand("serve", "JSON API and explorer");
  serve->add_option("input", o.input, "Multinet file")->required();
  serve->add_option("--host", o.host);
  serve->add_option("--port", o.port, "Port (default $MULTIVIZ_PORT or 8675)")
      ->check(CLI::Range(0, 65535));
  serve->add_option("--assets", o.assets, "Explorer asset directory");
  add_seed(serve);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    if (CLI::Option* s = sub->get_option_no_throw("--seed"); s && s->count() > 0)
      o.seed_given = true;
  }

  try {
    if (stats->parsed()) return cmd_stats(o, in, out, err);
    if (metrics->parsed()) return cmd_metrics(o, in, out, err);
    if (correlate->parsed()) return cmd_correlate(o, in, out, err);
    if (merge->parsed()) return cmd_merge(o, in, out, err);
    if (sw->parsed()) return cmd_sweep(o, in, out, err);
    if (gen->parsed()) return cmd_generate(o, out, err);
    if (lay->parsed()) return cmd_layout(o, in, out, err);
    if (render->parsed()) return cmd_render(o, in, out, err);
    if (serve->parsed()) return cmd_serve(o, in, err);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace multiviz
