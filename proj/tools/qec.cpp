// Copyright 2026 The qecenter Authors
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

// Command-line driver. Every result is printed as one JSON object per line.
// Exit status: 0 success, 1 a criterion fails, 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qec/qec.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCriterionFails = 1;
constexpr int kUsage = 2;

void emit(const qec::json& j) { std::cout << j.dump() << '\n'; }

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw qec::Error(qec::Errc::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// "fixture:NAME" loads a built-in graph; anything else is a JSON file path.
qec::PlaneGraph load_input(const std::string& source) {
  constexpr std::string_view kPrefix = "fixture:";
  if (source.starts_with(kPrefix)) {
    qec::Fixture f = qec::make_fixture(source.substr(kPrefix.size()));
    if (!f.plane) throw qec::Error(qec::Errc::NotMaximalPlanar, f.name + " has no embedding");
    return *f.plane;
  }
  return qec::parse_plane(read_text(source));
}

/// Same sources as load_input, without requiring an embedding.
qec::Graph load_graph(const std::string& source) {
  constexpr std::string_view kPrefix = "fixture:";
  if (source.starts_with(kPrefix)) return qec::make_fixture(source.substr(kPrefix.size())).graph;
  try {
    return qec::graph_from_json(qec::json::parse(read_text(source)));
  } catch (const qec::json::exception& e) {
    throw qec::Error(qec::Errc::ParseError, e.what());
  }
}

qec::Hops alpha_or_diameter(const qec::PlaneGraph& h, int alpha) {
  return alpha >= 0 ? static_cast<qec::Hops>(alpha) : qec::eccentricity_profile(h.graph()).diameter;
}

int run_analyze(const std::string& input) {
  const qec::PlaneGraph h = load_input(input);
  emit({{"kind", "profile"}, {"order", h.order()}, {"size", h.graph().size()},
        {"profile", qec::profile_to_json(qec::eccentricity_profile(h.graph()))}});
  const bool triangulated = h.order() >= 4 && h.all_faces_triangles();
  for (const qec::FaceRef& f : h.faces()) {
    const qec::QccResult r = qec::qcc_set(h.graph(), f.boundary);
    qec::json line{{"kind", "face"}, {"id", f.id}, {"boundary", f.boundary}, {"qcc", r.qcc}, {"ecc", r.ecc},
                   {"q", r.q}, {"e", r.e}};
    if (triangulated) {
      const auto cfg = qec::face_configuration(h, f);
      line["configuration"] = qec::configuration_to_json(cfg, qec::classify_case(cfg));
    }
    emit(line);
  }
  return kOk;
}

int run_check(const std::string& input, int alpha_arg) {
  const qec::PlaneGraph h = load_input(input);
  const qec::Hops alpha = alpha_or_diameter(h, alpha_arg);
  const qec::CriterionVerdict qef = qec::qef_criterion(h, alpha);
  qec::json out = qec::verdict_to_json(qef);
  out["kind"] = "qef_criterion";
  if (qef.failing_vertex) out["failing_label"] = h.graph().label(*qef.failing_vertex);
  emit(out);
  const qec::CycleConditionVerdict cyc = qec::cycle_condition(h);
  qec::json cyc_out = qec::cycle_verdict_to_json(cyc);
  cyc_out["kind"] = "cycle_condition";
  emit(cyc_out);
  return qef.pass && cyc.pass ? kOk : kCriterionFails;
}

int run_synthesize(const std::string& input, int alpha_arg, bool exact_center, const std::string& dot_path) {
  const qec::PlaneGraph h = load_input(input);
  qec::Hops alpha = alpha_or_diameter(h, alpha_arg);
  if (exact_center && alpha_arg < 0) alpha += 3;
  qec::SynthesisReport rep;
  try {
    rep = exact_center ? qec::build_center_host(h, alpha) : qec::build_supergraph(h, alpha);
  } catch (const qec::Error& e) {
    if (e.code() != qec::Errc::CriterionFails) throw;
    emit({{"kind", "synthesis"}, {"error", "CriterionFails"}, {"message", e.what()},
          {"verdict", qec::verdict_to_json(qec::qef_criterion(h, alpha))}});
    return kCriterionFails;
  }
  qec::json out = qec::report_to_json(rep);
  out["kind"] = "synthesis";
  out["gluing_theorem_holds"] = qec::verify_gluing_theorem(rep.parts).holds();
  out["h_isometric"] = qec::is_isometric_subgraph(h.graph(), rep.host, rep.embedding).isometric;
  emit(out);
  if (!dot_path.empty()) {
    std::ofstream os(dot_path);
    os << qec::to_dot(rep.host, qec::make_vertex_set(rep.embedding), "host");
  }
  return kOk;
}

int run_enumerate(std::size_t order, bool with_census, bool synthesize, const std::string& csv_path) {
  if (!with_census) {
    const auto classes = qec::enumerate_mpgs(order);
    for (const auto& m : classes) emit({{"kind", "mpg"}, {"code", m.code.hex()}, {"graph", qec::plane_to_json(m.plane)}});
    emit({{"kind", "summary"}, {"order", order}, {"classes", classes.size()}});
    return kOk;
  }
  const qec::Census c = qec::census(order, {.synthesize = synthesize, .alpha_offset = std::nullopt});
  for (const auto& row : c.rows) {
    qec::json j = qec::census_row_to_json(row);
    j["kind"] = "census_row";
    emit(j);
  }
  emit({{"kind", "summary"}, {"order", c.summary.order}, {"classes", c.summary.classes},
        {"passes", c.summary.passes}, {"failures", c.summary.failures}});
  if (!csv_path.empty()) {
    std::ofstream os(csv_path);
    qec::write_census_csv(os, c);
  }
  return kOk;
}

int run_fixtures(bool verify_all, const std::string& dump_dir) {
  bool all_hold = true;
  for (const std::string& name : qec::fixture_names()) {
    const qec::Fixture f = qec::make_fixture(name);
    qec::json line{{"kind", "fixture"}, {"name", name}, {"description", f.description}, {"order", f.graph.order()}};
    if (verify_all) {
      qec::json facts = qec::json::array();
      for (const auto& r : qec::verify_fixture(f)) {
        facts.push_back({{"fact", r.statement}, {"holds", r.holds}});
        all_hold = all_hold && r.holds;
      }
      line["facts"] = facts;
    }
    emit(line);
    if (!dump_dir.empty()) {
      std::filesystem::create_directories(dump_dir);
      std::ofstream os(std::filesystem::path(dump_dir) / (name + ".json"));
      os << (f.plane ? qec::plane_to_json(*f.plane) : qec::graph_to_json(f.graph)).dump(2) << '\n';
    }
  }
  return all_hold ? kOk : kCriterionFails;
}

int run_export(const std::string& input, const std::string& format) {
  const qec::PlaneGraph h = load_input(input);
  if (format == "dot") {
    std::cout << qec::to_dot(h.graph());
  } else {
    qec::json j = qec::plane_to_json(h);
    j["faces"] = h.face_walks();
    emit(j);
  }
  return kOk;
}

int run_hedetniemi(const std::string& input) {
  const qec::HedetniemiHost host = qec::hedetniemi(load_graph(input));
  const auto prof = qec::eccentricity_profile(host.graph);
  emit({{"kind", "hedetniemi"}, {"host", qec::graph_to_json(host.graph)}, {"embedding", host.embedding},
        {"planarity", "unknown"}, {"center", prof.center},
        {"center_is_image", prof.center == qec::make_vertex_set(host.embedding)}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eccentricity, quasi-eccentric faces and planar centers of maximal planar graphs"};
  app.require_subcommand(1);

  std::string input;
  int alpha = -1;
  bool exact_center = false;
  std::string dot_path;
  std::size_t order = 0;
  bool with_census = false;
  bool synthesize = false;
  std::string csv_path;
  bool verify_all = false;
  std::string dump_dir;
  std::string format = "json";
  const std::string input_help = "graph JSON file, '-' for stdin, or fixture:NAME";

  auto* analyze = app.add_subcommand("analyze", "eccentricity profile, qcc and configuration per face");
  analyze->add_option("input", input, input_help)->required();

  auto* check = app.add_subcommand("check", "quasi-eccentric face criterion and cycle condition");
  check->add_option("input", input, input_help)->required();
  check->add_option("--alpha", alpha, "target eccentricity (default: diameter)")->check(CLI::NonNegativeNumber);

  auto* synth = app.add_subcommand("synthesize", "build a maximal planar host with H at eccentricity alpha");
  synth->add_option("input", input, input_help)->required();
  synth->add_option("--alpha", alpha, "target eccentricity (default: diameter, or diameter + 3 with --exact-center)")
      ->check(CLI::NonNegativeNumber);
  synth->add_flag("--exact-center", exact_center, "build the planar host whose center is exactly H");
  synth->add_option("--dot", dot_path, "also write the host as Graphviz DOT");

  auto* enumerate = app.add_subcommand("enumerate", "maximal planar graphs of one order up to isomorphism");
  enumerate->add_option("--order", order, "vertex count")->required()->check(CLI::Range(1, 64));
  enumerate->add_flag("--census", with_census, "evaluate the face criterion on every class");
  enumerate->add_flag("--synthesize", synthesize, "with --census, build and certify hosts for passing classes");
  enumerate->add_option("--csv", csv_path, "with --census, write rows as CSV");

  auto* fixtures = app.add_subcommand("fixtures", "list built-in graphs");
  fixtures->add_flag("--verify-all", verify_all, "re-check every recorded fact");
  fixtures->add_option("--dump", dump_dir, "write each fixture as JSON into this directory");

  auto* exporter = app.add_subcommand("export", "re-emit a graph as JSON (with faces) or DOT");
  exporter->add_option("input", input, input_help)->required();
  exporter->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* hed = app.add_subcommand("hedetniemi", "four-vertex augmentation whose center is the input");
  hed->add_option("input", input, input_help)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return run_analyze(input);
    if (*check) return run_check(input, alpha);
    if (*synth) return run_synthesize(input, alpha, exact_center, dot_path);
    if (*enumerate) return run_enumerate(order, with_census, synthesize, csv_path);
    if (*fixtures) return run_fixtures(verify_all, dump_dir);
    if (*exporter) return run_export(input, format);
    if (*hed) return run_hedetniemi(input);
  } catch (const qec::Error& e) {
    emit({{"error", std::string(qec::to_string(e.code()))}, {"message", e.what()}});
    return e.code() == qec::Errc::CriterionFails ? kCriterionFails : kUsage;
  }
  return kUsage;
}
