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

// Read-only JSON API over one loaded network.
//
//   GET /api/network
//   GET /api/metrics?kind=degree|neighborhood|relevance|xrelevance
//   GET /api/merge?metric=relevance|xrelevance&threshold=T
//   GET /api/sweep?metric=&thresholds=&replicates=&seed=
//   GET /api/layout?mode=shared|independent
//   GET /api/correlation
//
// Floats carry at most 10 significant digits; absent values are null.

#ifndef MULTIVIZ_SERVER_HPP_
#define MULTIVIZ_SERVER_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multiviz/layout.hpp"
#include "multiviz/metrics.hpp"
#include "multiviz/model.hpp"

namespace multiviz {

inline constexpr int kDefaultPort = 8675;

struct ApiResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// Query parameters by name; a missing key means "not supplied".
using QueryParams = std::map<std::string, std::string, std::less<>>;

class ApiSession {
 public:
  explicit ApiSession(MultiplexNetwork net, LayoutParams layout_params = {});

  const MultiplexNetwork& network() const { return net_; }

  ApiResponse get_network() const;
  ApiResponse get_metrics(const QueryParams& q) const;
  ApiResponse get_merge(const QueryParams& q) const;
  ApiResponse get_sweep(const QueryParams& q) const;
  ApiResponse get_layout(const QueryParams& q) const;
  ApiResponse get_correlation() const;

  // Routes "/api/<name>"; 404 for anything else.
  ApiResponse handle(std::string_view path, const QueryParams& q) const;

 private:
  std::shared_ptr<const MetricTable> table(MetricKind kind) const;
  std::shared_ptr<const std::vector<LayoutMap>> layouts(SliceMode mode) const;

  const MultiplexNetwork net_;
  const LayoutParams layout_params_;
  const LayoutMap shared_layout_;

  mutable std::mutex cache_mutex_;
  mutable std::map<MetricKind, std::shared_ptr<const MetricTable>> tables_;
  mutable std::map<SliceMode, std::shared_ptr<const std::vector<LayoutMap>>>
      slice_cache_;
};

// HTTP front end. Serves the API, plus static explorer assets from
// `assets_dir` at "/" when the directory exists (a placeholder page
// otherwise). Responses carry a permissive CORS header.
class HttpService {
 public:
  HttpService(const ApiSession& session, std::optional<std::string> assets_dir);
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Binds to `port` (0 picks a free port) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  bool listen_after_bind();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Port from MULTIVIZ_PORT, else kDefaultPort.
int port_from_environment();

}  // namespace multiviz

#endif  // MULTIVIZ_SERVER_HPP_
