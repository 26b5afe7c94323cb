// Copyright 2026 The AGT Authors.
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

// Read-only JSON API over a loaded graph.
//
//   GET /api/researchers?q=<text>&limit=<n>         search by name
//   GET /api/researchers/{id}                       one researcher
//   GET /api/researchers/{id}/tree?up=<u>&down=<d>  VIEW_JSON subtree
//   GET /api/metrics                                MetricsReport
//   GET /api/trees/largest?n=<k>                    largest trees
//
// The graph, tree profiles and metrics are fixed at construction; handle()
// is const and safe to call from concurrent request threads.

#ifndef AGT_SERVICE_HPP
#define AGT_SERVICE_HPP

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "httplib.h"
#include "json.hpp"

#include "agt/analytics.hpp"
#include "agt/export.hpp"
#include "agt/graph.hpp"
#include "agt/text.hpp"

namespace agt {

struct ServiceLimits {
  std::size_t default_limit = 20;
  std::size_t max_limit = 200;
  std::size_t default_up = 1;
  std::size_t default_down = 2;
  std::size_t max_levels = 6;
  std::size_t default_largest = 10;
};

struct HttpResponse {
  int status = 200;
  std::string body;
};

using QueryParams = std::multimap<std::string, std::string>;

class QueryService {
 public:
  explicit QueryService(GenealogyGraph graph, std::string home_country = "Brazil", ServiceLimits limits = {})
      : graph_(std::move(graph)), limits_(limits) {
    profiles_ = tree_profiles(graph_);
    metrics_body_ = to_json(summarize(graph_, profiles_, home_country)).dump();
    search_keys_.reserve(graph_.node_count());
    for (const auto& n : graph_.nodes()) {
      const auto tokens = fold_tokens(n.display_name);
      search_keys_.push_back(tokens.empty() ? std::string{} : normalize_name(n.display_name).normalized);
    }
  }

  const GenealogyGraph& graph() const { return graph_; }

  HttpResponse handle(std::string_view path, const QueryParams& params) const {
    try {
      if (path == "/api/researchers") return search(params);
      if (path == "/api/metrics") return {200, metrics_body_};
      if (path == "/api/trees/largest") return largest(params);
      constexpr std::string_view kPrefix = "/api/researchers/";
      if (path.starts_with(kPrefix)) {
        auto rest = path.substr(kPrefix.size());
        bool tree = false;
        if (rest.ends_with("/tree")) {
          rest.remove_suffix(5);
          tree = true;
        }
        const auto id = parse_count(rest);
        if (!id || *id >= graph_.node_count()) return error(404, "unknown researcher id");
        const NodeId node{static_cast<std::uint32_t>(*id)};
        return tree ? subtree(node, params) : researcher(node);
      }
      return error(404, "no such endpoint");
    } catch (const std::exception& e) {
      return error(500, e.what());
    }
  }

  // Registers every endpoint on an httplib server, with CORS headers.
  void mount(httplib::Server& server, std::string cors_origin = "*") const {
    server.set_default_headers({{"Access-Control-Allow-Origin", cors_origin},
                                {"Access-Control-Allow-Methods", "GET, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    server.Get(R"(/api/.*)", [this](const httplib::Request& req, httplib::Response& res) {
      const auto out = handle(req.path, req.params);
      res.status = out.status;
      res.set_content(out.body, "application/json; charset=utf-8");
    });
    server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  }

 private:
  static std::optional<std::size_t> parse_count(std::string_view text) {
    if (text.empty() || text.size() > 12) return std::nullopt;
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    return value;
  }

  static std::optional<std::string> param(const QueryParams& params, const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end()) return std::nullopt;
    return it->second;
  }

  static HttpResponse error(int status, std::string_view message) {
    return {status, nlohmann::json{{"error", message}}.dump()};
  }

  nlohmann::ordered_json hit_json(NodeId id) const {
    const auto& n = graph_.node(id);
    return {{"id", id.value},
            {"name", n.display_name},
            {"institutions", n.institutions},
            {"has_curriculum", n.has_curriculum},
            {"advisee_count", graph_.out_degree(id)}};
  }

  HttpResponse search(const QueryParams& params) const {
    const auto q = param(params, "q");
    if (!q || trim(*q).empty()) return error(400, "query parameter q is required");
    std::string needle;
    try {
      needle = normalize_name(*q).normalized;
    } catch (const Error&) {
      return error(400, "query has no searchable characters");
    }
    std::size_t limit = limits_.default_limit;
    if (const auto raw = param(params, "limit")) {
      const auto parsed = parse_count(*raw);
      if (!parsed || *parsed == 0) return error(400, "limit must be a positive integer");
      limit = std::min(*parsed, limits_.max_limit);
    }
    std::vector<NodeId> hits;
    for (std::uint32_t v = 0; v < graph_.node_count(); ++v) {
      if (search_keys_[v].find(needle) != std::string::npos) hits.push_back(NodeId{v});
    }
    std::sort(hits.begin(), hits.end(), [&](NodeId a, NodeId b) {
      const auto da = graph_.out_degree(a), db = graph_.out_degree(b);
      if (da != db) return da > db;
      const auto& na = graph_.node(a).display_name;
      const auto& nb = graph_.node(b).display_name;
      if (na != nb) return na < nb;
      return a < b;
    });
    if (hits.size() > limit) hits.resize(limit);
    auto body = nlohmann::ordered_json::array();
    for (const auto id : hits) body.push_back(hit_json(id));
    return {200, body.dump()};
  }

  HttpResponse researcher(NodeId id) const {
    auto body = hit_json(id);
    const auto& n = graph_.node(id);
    body["platform_id"] = n.platform_id;
    body["created_from"] = to_string(n.created_from);
    body["advisor_count"] = graph_.in_degree(id);
    body["degrees"] = nlohmann::ordered_json::array();
    for (const auto& d : n.degrees) {
      body["degrees"].push_back({{"level", to_string(d.level)},
                                 {"year", d.year ? nlohmann::ordered_json(*d.year) : nlohmann::ordered_json()},
                                 {"institution", d.institution},
                                 {"country", d.country},
                                 {"title", d.thesis_title},
                                 {"advisor", d.advisor_name}});
    }
    return {200, body.dump()};
  }

  HttpResponse subtree(NodeId id, const QueryParams& params) const {
    std::size_t bounds[2] = {limits_.default_up, limits_.default_down};
    const char* names[2] = {"up", "down"};
    for (int i = 0; i < 2; ++i) {
      if (const auto raw = param(params, names[i])) {
        const auto parsed = parse_count(*raw);
        if (!parsed) return error(400, std::string(names[i]) + " must be a non-negative integer");
        bounds[i] = std::min(*parsed, limits_.max_levels);
      }
    }
    return {200, to_view_json(export_subtree(graph_, id, bounds[0], bounds[1])).dump()};
  }

  HttpResponse largest(const QueryParams& params) const {
    std::size_t k = limits_.default_largest;
    if (const auto raw = param(params, "n")) {
      const auto parsed = parse_count(*raw);
      if (!parsed || *parsed == 0) return error(400, "n must be a positive integer");
      k = *parsed;
    }
    auto body = nlohmann::ordered_json::array();
    for (const auto& p : largest_trees(profiles_, k)) body.push_back(to_json(p, graph_));
    return {200, body.dump()};
  }

  GenealogyGraph graph_;
  ServiceLimits limits_;
  std::vector<TreeProfile> profiles_;
  std::string metrics_body_;
  std::vector<std::string> search_keys_;
};

}  // namespace agt

#endif  // AGT_SERVICE_HPP
