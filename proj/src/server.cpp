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

#include "multiviz/server.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>

#include "httplib.h"
#include "json.hpp"
#include "multiviz/error.hpp"
#include "multiviz/format.hpp"
#include "multiviz/simplify.hpp"

namespace multiviz {

namespace {

using Json = nlohmann::ordered_json;

Json number(double v) { return round_sig10(v); }

Json number(const std::optional<double>& v) {
  return v ? number(*v) : Json(nullptr);
}

ApiResponse ok(const Json& body) { return {200, body.dump(), "application/json"}; }

ApiResponse bad_request(const std::string& message) {
  return {400, Json{{"error", message}}.dump(), "application/json"};
}

const std::string* find(const QueryParams& q, std::string_view key) {
  const auto it = q.find(key);
  return it == q.end() ? nullptr : &it->second;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidArgument(std::string("invalid ") + what + " '" + s + "'");
  return v;
}

MetricKind merge_metric(const QueryParams& q) {
  const std::string* name = find(q, "metric");
  if (!name) throw InvalidArgument("missing parameter 'metric'");
  const auto kind = parse_metric_kind(*name);
  if (!kind || (*kind != MetricKind::kRelevance && *kind != MetricKind::kXRelevance))
    throw InvalidArgument("metric must be relevance or xrelevance");
  return *kind;
}

Json layout_json(const LayoutMap& layout) {
  Json out = Json::array();
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    out.push_back({{"actor", layout.actors()[i]},
                   {"x", number(layout.positions()(r, 0))},
                   {"y", number(layout.positions()(r, 1))}});
  }
  return out;
}

constexpr const char* kPlaceholderPage =
    "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\"><title>multiviz</title>"
    "</head><body><h1>multiviz</h1><p>Explorer assets are not installed. The JSON "
    "API is available under <code>/api/</code>: network, metrics, merge, sweep, "
    "layout, correlation.</p></body></html>\n";

}  // namespace

ApiSession::ApiSession(MultiplexNetwork net, LayoutParams layout_params)
    : net_(std::move(net)),
      layout_params_(layout_params),
      shared_layout_(force_layout(flatten(net_), layout_params_)) {}

std::shared_ptr<const MetricTable> ApiSession::table(MetricKind kind) const {
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = tables_.find(kind); it != tables_.end()) return it->second;
  }
  auto fresh = std::make_shared<const MetricTable>(metric_table(net_, kind));
  std::lock_guard lock(cache_mutex_);
  return tables_.emplace(kind, std::move(fresh)).first->second;
}

std::shared_ptr<const std::vector<LayoutMap>> ApiSession::layouts(
    SliceMode mode) const {
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = slice_cache_.find(mode); it != slice_cache_.end())
      return it->second;
  }
  std::shared_ptr<const std::vector<LayoutMap>> fresh;
  if (mode == SliceMode::kShared)
    fresh = std::make_shared<const std::vector<LayoutMap>>(net_.layer_count(),
                                                           shared_layout_);
  else
    fresh = std::make_shared<const std::vector<LayoutMap>>(
        slice_layouts(net_, mode, layout_params_));
  std::lock_guard lock(cache_mutex_);
  return slice_cache_.emplace(mode, std::move(fresh)).first->second;
}

ApiResponse ApiSession::get_network() const {
  Json edges = Json::array();
  for (const NamedEdge& e : canonical_edges(net_))
    edges.push_back({{"a", e.a}, {"b", e.b}, {"layer", net_.layer_name(e.layer)}});
  return ok({{"actors", net_.actors()}, {"layers", net_.layers()}, {"edges", edges}});
}

ApiResponse ApiSession::get_metrics(const QueryParams& q) const {
  const std::string* name = find(q, "kind");
  if (!name) return bad_request("missing parameter 'kind'");
  const auto kind = parse_metric_kind(*name);
  if (!kind) return bad_request("unknown metric kind '" + *name + "'");
  const auto t = table(*kind);
  Json values = Json::array();
  for (Eigen::Index a = 0; a < t->values.rows(); ++a) {
    Json row = Json::array();
    for (Eigen::Index l = 0; l < t->values.cols(); ++l)
      row.push_back(number(t->values(a, l)));
    values.push_back(std::move(row));
  }
  return ok({{"kind", to_string(*kind)},
             {"actors", t->actors},
             {"layers", t->layers},
             {"values", values}});
}

ApiResponse ApiSession::get_merge(const QueryParams& q) const {
  try {
    const MetricKind kind = merge_metric(q);
    const std::string* raw = find(q, "threshold");
    if (!raw) return bad_request("missing parameter 'threshold'");
    const auto grid = parse_threshold_grid(*raw);
    if (grid.size() != 1) return bad_request("threshold must be a single value");
    const MergeSpec spec{kind, grid.front()};
    validate(spec);

    const MultiplexNetwork merged = local_merge(net_, spec);
    const auto counts = node_pass_counts(net_, spec);
    Json edges = Json::object(), pass = Json::object(), sizes = Json::object();
    for (LayerIndex l = 0; l < net_.layer_count(); ++l) {
      edges[net_.layer_name(l)] = Json::array();
      pass[net_.layer_name(l)] = counts[l];
      sizes[net_.layer_name(l)] = merged.edge_count(l);
    }
    for (const NamedEdge& e : canonical_edges(merged))
      edges[merged.layer_name(e.layer)].push_back({e.a, e.b});
    std::optional<double> t;
    if (auto r = transitivity(flatten(merged))) t = r->value();
    return ok({{"metric", to_string(kind)},
               {"threshold", number(spec.threshold)},
               {"edges", edges},
               {"edge_counts", sizes},
               {"node_pass_counts", pass},
               {"transitivity", number(t)}});
  } catch (const Error& e) {
    return bad_request(e.what());
  }
}

ApiResponse ApiSession::get_sweep(const QueryParams& q) const {
  try {
    const MetricKind kind = merge_metric(q);
    const std::string* raw_t = find(q, "thresholds");
    const auto thresholds = parse_threshold_grid(raw_t ? *raw_t : "0:0.9:0.1");
    const std::string* raw_r = find(q, "replicates");
    const std::size_t replicates =
        raw_r ? static_cast<std::size_t>(parse_u64(*raw_r, "replicates")) : 10;
    const std::string* raw_s = find(q, "seed");
    const std::uint64_t seed = raw_s ? parse_u64(*raw_s, "seed") : kDefaultSeed;
    const SweepResult r = sweep(net_, kind, thresholds, replicates, seed, 0);

    Json ts = Json::array(), obs = Json::array(), mean = Json::array(),
         sd = Json::array(), defined = Json::array(), reps = Json::array();
    for (std::size_t i = 0; i < r.thresholds.size(); ++i) {
      ts.push_back(number(r.thresholds[i]));
      obs.push_back(number(r.observed[i]));
      mean.push_back(number(r.null_mean(i)));
      sd.push_back(number(r.null_sd(i)));
      defined.push_back(r.defined_replicates(i));
      Json row = Json::array();
      for (const auto& v : r.null_replicates[i]) row.push_back(number(v));
      reps.push_back(std::move(row));
    }
    return ok({{"metric", to_string(kind)},
               {"seed", r.seed},
               {"replicates", r.replicates},
               {"thresholds", ts},
               {"observed", obs},
               {"null_mean", mean},
               {"null_sd", sd},
               {"defined_replicates", defined},
               {"null_replicates", reps}});
  } catch (const Error& e) {
    return bad_request(e.what());
  }
}

ApiResponse ApiSession::get_layout(const QueryParams& q) const {
  const std::string* name = find(q, "mode");
  const auto mode = parse_slice_mode(name ? *name : "shared");
  if (!mode) return bad_request("unknown layout mode '" + *name + "'");
  const auto maps = layouts(*mode);
  Json per_layer = Json::object();
  for (LayerIndex l = 0; l < net_.layer_count(); ++l)
    per_layer[net_.layer_name(l)] = layout_json((*maps)[l]);
  return ok({{"mode", *mode == SliceMode::kShared ? "shared" : "independent"},
             {"flattened", layout_json(shared_layout_)},
             {"layers", per_layer}});
}

ApiResponse ApiSession::get_correlation() const {
  const JaccardMatrix m = jaccard_matrix(net_);
  Json values = Json::array();
  for (Eigen::Index i = 0; i < m.values.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.values.cols(); ++j)
      row.push_back(number(m.values(i, j)));
    values.push_back(std::move(row));
  }
  return ok({{"layers", m.layers}, {"values", values}});
}

ApiResponse ApiSession::handle(std::string_view path, const QueryParams& q) const {
  if (path == "/api/network") return get_network();
  if (path == "/api/metrics") return get_metrics(q);
  if (path == "/api/merge") return get_merge(q);
  if (path == "/api/sweep") return get_sweep(q);
  if (path == "/api/layout") return get_layout(q);
  if (path == "/api/correlation") return get_correlation();
  return {404, Json{{"error", "not found"}}.dump(), "application/json"};
}

// ---------------------------------------------------------------------------

struct HttpService::Impl {
  httplib::Server server;
};

HttpService::HttpService(const ApiSession& session,
                         std::optional<std::string> assets_dir)
    : impl_(std::make_unique<Impl>()) {
  auto& srv = impl_->server;
  srv.Get(R"(/api/[a-z]+)", [&session](const httplib::Request& req,
                                       httplib::Response& res) {
    QueryParams q;
    for (const auto& [k, v] : req.params) q.emplace(k, v);
    const ApiResponse r = session.handle(req.path, q);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  });
  const bool have_assets =
      assets_dir && std::filesystem::is_directory(*assets_dir) &&
      srv.set_mount_point("/", *assets_dir);
  if (!have_assets)
    srv.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(kPlaceholderPage, "text/html");
    });
  srv.set_post_routing_handler([](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
  });
}

HttpService::~HttpService() { stop(); }

int HttpService::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpService::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpService::stop() {
  if (impl_) impl_->server.stop();
}

int port_from_environment() {
  if (const char* env = std::getenv("MULTIVIZ_PORT")) {
    int port = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), port);
    if (ec == std::errc() && ptr == s.data() + s.size() && port > 0 && port < 65536)
      return port;
  }
  return kDefaultPort;
}

}  // namespace multiviz
