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

// agt: build, analyze, export and serve academic genealogy graphs.
//
// Exit codes: 0 ok, 1 I/O or format error, 2 no parseable records,
// 3 unknown root id.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "agt/agt.hpp"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitNoRecords = 2;
constexpr int kExitUnknownRoot = 3;

std::string home_country(const std::string& flag) {
  if (const char* env = std::getenv("AGT_HOME_COUNTRY"); env != nullptr && *env != '\0') return env;
  return flag;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw agt::Error(agt::ErrorCode::kIoError, "cannot write " + path.string());
  out << text;
  if (!out) throw agt::Error(agt::ErrorCode::kIoError, "error while writing " + path.string());
}

void print_counts(const agt::GenealogyGraph& graph) {
  std::printf("%-12s %zu\n", "Nodes", graph.node_count());
  std::printf("%-12s %zu\n", "Edges", graph.edge_count());
  std::printf("%-12s %zu\n", "Trees", agt::roots(graph).size());
  std::printf("%-12s %zu\n", "Components", agt::components(graph));
}

int run_build(const std::vector<std::string>& inputs, const std::string& out) {
  std::vector<std::filesystem::path> paths(inputs.begin(), inputs.end());
  const auto corpus = agt::load_corpus(paths);
  std::size_t skipped = 0;
  for (const auto& m : corpus.source_manifest) skipped += m.error_count;
  if (skipped > 0) std::fprintf(stderr, "skipped %zu unparseable record(s)\n", skipped);
  if (corpus.records.empty()) {
    std::fprintf(stderr, "no parseable records\n");
    return kExitNoRecords;
  }
  const auto graph = agt::build_graph(corpus);
  if (!graph.rejected_edges().empty()) {
    std::fprintf(stderr, "rejected %zu edge(s) that would break acyclicity\n", graph.rejected_edges().size());
  }
  agt::save_graph(graph, out);
  print_counts(graph);
  return 0;
}

int run_metrics(const std::string& graph_path, const std::string& csv_dir, const std::string& home) {
  const auto graph = agt::load_graph(graph_path);
  const auto report = agt::summarize(graph, home);
  if (!csv_dir.empty()) {
    std::filesystem::create_directories(csv_dir);
    write_text(std::filesystem::path(csv_dir) / "size_cdf.csv", agt::size_cdf_csv(report));
    write_text(std::filesystem::path(csv_dir) / "depth_histogram.csv", agt::depth_histogram_csv(report));
  }
  std::cout << agt::to_json(report).dump(2) << '\n';
  return 0;
}

int run_export(const std::string& graph_path, const std::optional<std::uint32_t>& root, const std::string& format,
               std::size_t up, std::size_t down, const std::string& out) {
  const auto graph = agt::load_graph(graph_path);
  const auto fmt = agt::parse_export_format(format);
  std::string text;
  if (root) {
    if (!graph.contains(agt::NodeId{*root})) {
      std::fprintf(stderr, "unknown root id %u\n", *root);
      return kExitUnknownRoot;
    }
    text = agt::export_interchange(agt::export_subtree(graph, agt::NodeId{*root}, up, down), fmt);
  } else {
    text = agt::export_interchange(graph, fmt);
  }
  if (fmt == agt::ExportFormat::kViewJson) text += '\n';
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text(out, text);
  }
  return 0;
}

int run_serve(const std::string& graph_path, const std::string& bind, const std::string& cors, const std::string& home) {
  const auto colon = bind.rfind(':');
  if (colon == std::string::npos) throw agt::Error(agt::ErrorCode::kInvalidValue, "--bind expects host:port");
  const auto host = bind.substr(0, colon);
  const int port = std::stoi(bind.substr(colon + 1));
  const agt::QueryService service(agt::load_graph(graph_path), home);
  httplib::Server server;
  service.mount(server, cors);
  std::fprintf(stderr, "serving %zu researchers on %s:%d\n", service.graph().node_count(), host.c_str(), port);
  if (!server.listen(host, port)) throw agt::Error(agt::ErrorCode::kIoError, "cannot bind " + bind);
  return 0;
}

int run_synth(const agt::SynthParams& params, const std::string& out, const std::string& format) {
  const auto result = agt::generate(params);
  if (format == "xml") {
    write_text(out, agt::emit_lattes_xml_file(result.records));
  } else {
    write_text(out, agt::format_corpus(result.records));
  }
  write_text(out + ".truth", agt::format_truth_sidecar(result.truth));
  std::fprintf(stderr, "wrote %zu records (%zu entities, %zu edges)\n", result.records.size(),
               result.truth.entities.size(), result.truth.edges.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Academic genealogy graph toolkit"};
  app.require_subcommand(1);
  std::string home = "Brazil";
  app.add_option("--home-country", home, "Country excluded from the foreign-degree table (env AGT_HOME_COUNTRY wins)");

  auto* build = app.add_subcommand("build", "Parse curricula and build the genealogy graph");
  std::vector<std::string> build_in;
  std::string build_out;
  build->add_option("--in", build_in, "Corpus files (.xml or canonical lines)")->required();
  build->add_option("--out", build_out, "Graph file to write")->required();

  auto* metrics = app.add_subcommand("metrics", "Print the metrics report of a saved graph");
  std::string metrics_graph, csv_dir;
  metrics->add_option("--graph", metrics_graph)->required();
  metrics->add_option("--csv", csv_dir, "Directory for size_cdf.csv and depth_histogram.csv");

  auto* exporter = app.add_subcommand("export", "Export a subtree or the whole graph");
  std::string export_graph, export_format = "json", export_out;
  std::optional<std::uint32_t> export_root;
  std::size_t export_up = 0;
  std::size_t export_down = std::numeric_limits<std::size_t>::max();
  exporter->add_option("--graph", export_graph)->required();
  exporter->add_option("--root", export_root, "Focus node id (whole graph when omitted)");
  exporter->add_option("--format", export_format)->check(CLI::IsMember({"dot", "graphml", "json"}));
  exporter->add_option("--up", export_up, "Ancestor levels above the focus");
  exporter->add_option("--down", export_down, "Descendant levels below the focus");
  exporter->add_option("--out", export_out, "Output file (stdout when omitted)");

  auto* serve = app.add_subcommand("serve", "Serve the read-only JSON API");
  std::string serve_graph, bind = "127.0.0.1:8080", cors = "*";
  serve->add_option("--graph", serve_graph)->required();
  serve->add_option("--bind", bind, "host:port");
  serve->add_option("--cors-origin", cors, "Value of Access-Control-Allow-Origin");

  auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus with ground truth");
  agt::SynthParams params;
  std::string synth_out, synth_format = "jsonl";
  synth->add_option("--trees", params.num_trees)->required();
  synth->add_option("--depth", params.max_depth)->required();
  synth->add_option("--branch", params.branching)->required();
  synth->add_option("--collide", params.name_collision_rate)->check(CLI::Range(0.0, 1.0));
  synth->add_option("--dropout", params.field_dropout)->check(CLI::Range(0.0, 1.0));
  synth->add_option("--curriculum-rate", params.curriculum_rate)->check(CLI::Range(0.0, 1.0));
  synth->add_flag("--name-only", params.name_only_mentions, "Mentions carry names only");
  synth->add_option("--max-entities", params.max_entities);
  synth->add_option("--seed", params.seed);
  synth->add_option("--format", synth_format)->check(CLI::IsMember({"jsonl", "xml"}));
  synth->add_option("--out", synth_out)->required();

  CLI11_PARSE(app, argc, argv);
  home = home_country(home);
  params.home_country = home;

  try {
    if (*build) return run_build(build_in, build_out);
    if (*metrics) return run_metrics(metrics_graph, csv_dir, home);
    if (*exporter) return run_export(export_graph, export_root, export_format, export_up, export_down, export_out);
    if (*serve) return run_serve(serve_graph, bind, cors, home);
    if (*synth) return run_synth(params, synth_out, synth_format);
  } catch (const agt::Error& e) {
    std::fprintf(stderr, "agt: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "agt: %s\n", e.what());
    return kExitIo;
  }
  return 0;
}
