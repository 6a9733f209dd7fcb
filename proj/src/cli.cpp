#include "walkmap/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "walkmap/document.hpp"
#include "walkmap/enumeration.hpp"

namespace walkmap::cli {

using nlohmann::json;

namespace {

/// Aborts a command with an exit code and diagnostics.
class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& message, std::vector<std::string> details = {})
      : std::runtime_error(message), code_(code), details_(std::move(details)) {}

  int code() const { return code_; }
  const std::vector<std::string>& details() const { return details_; }

 private:
  int code_;
  std::vector<std::string> details_;
};

struct Outcome {
  Outcome() = default;
  Outcome(json r) : result(std::move(r)) {}

  json result;
  int code = kOk;
  std::vector<std::string> diagnostics;
};

struct Settings {
  std::string file;
  NodeId from = 0;
  NodeId to = 0;
  bool quasi_only = false;
  bool symmetric = false;
  std::optional<std::size_t> max_len;
  std::optional<std::size_t> max_states;
  std::string walk;
  std::string w1;
  std::string w2;
  std::string method = "quasi";
  std::string certificates_path;
};

MapDocument load(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Failure(kIoError, "cannot read " + file);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_map_document(text.str());
  } catch (const DocumentError& e) {
    throw Failure(e.exit_code(), e.what());
  } catch (const ValidationError& e) {
    throw Failure(kSchema, e.what());
  }
}

const RotationMap& require_map(const MapDocument& doc) {
  if (!doc.map) throw Failure(kSchema, "this command needs a \"rotation\" field (the file describes a bare graph)");
  return *doc.map;
}

Walk walk_argument(const Graph& g, const std::string& name, const std::string& text) {
  try {
    return parse_walk(g, text, Universe::Symmetric);
  } catch (const WalkSyntaxError& e) {
    throw Failure(kBadArgument, name + ": " + e.what(), {e.caret()});
  } catch (const ValidationError& e) {
    throw Failure(kBadArgument, name + ": " + e.what());
  }
}

std::optional<std::size_t> env_size(const char* name) {
  const char* value = std::getenv(name);
  if (!value || !*value) return std::nullopt;
  std::size_t parsed = 0;
  std::istringstream in(value);
  if (!(in >> parsed) || !in.eof()) throw Failure(kUsage, std::string(name) + " must be a non-negative integer");
  return parsed;
}

// Precedence: command-line flag, then environment, then the map default.
SearchBudget budget_for(const RotationMap& m, const Settings& s, bool flag_sets_search_len) {
  SearchBudget b = default_budget(m);
  if (auto v = env_size("WALKMAP_MAX_LEN")) b.max_len = *v;
  if (auto v = env_size("WALKMAP_MAX_STATES")) b.max_states = *v;
  if (flag_sets_search_len && s.max_len) b.max_len = *s.max_len;
  if (s.max_states) b.max_states = *s.max_states;
  return b;
}

void write_certificates(const std::string& path, const json& certificates) {
  std::ofstream out(path);
  if (!out) throw Failure(kIoError, "cannot write " + path);
  out << certificates.dump(2) << '\n';
}

Outcome cmd_validate(const Settings& s) {
  auto doc = load(s.file);
  return {{{"nodes", doc.graph.node_count()},
           {"edges", doc.graph.edge_count()},
           {"has_rotation", doc.map.has_value()},
           {"connected", is_connected(doc.graph)},
           {"valid", true}}};
}

Outcome cmd_faces(const Settings& s) {
  auto doc = load(s.file);
  const auto& m = require_map(doc);
  json faces = json::array();
  for (const auto& f : m.faces()) faces.push_back(to_json(f, m));
  return {{{"faces", faces}, {"face_count", m.faces().size()}, {"euler_characteristic", euler_characteristic(m)}}};
}

Outcome cmd_euler(const Settings& s) {
  auto doc = load(s.file);
  const auto& m = require_map(doc);
  return {{{"nodes", m.graph().node_count()},
           {"edges", m.graph().edge_count()},
           {"faces", m.faces().size()},
           {"euler_characteristic", euler_characteristic(m)},
           {"connected", is_connected(m.graph())}}};
}

Outcome cmd_walks(const Settings& s) {
  auto doc = load(s.file);
  const Graph& g = doc.graph;
  for (NodeId x : {s.from, s.to}) {
    if (!g.contains(x)) throw Failure(kBadArgument, "node " + std::to_string(x) + " is not in the graph");
  }
  const Universe u = s.symmetric ? Universe::Symmetric : Universe::Directed;
  std::vector<Walk> walks = s.quasi_only ? enumerate_all_qswalks(g, s.from, s.to, u)
                                         : enumerate_walks_up_to(g, s.from, s.to, s.max_len.value_or(g.node_count()), u);
  json out = json::array();
  for (const auto& w : walks) out.push_back(to_compact(w));
  return {out};
}

Outcome cmd_normalize(const Settings& s) {
  auto doc = load(s.file);
  Walk w = walk_argument(doc.graph, "--walk", s.walk);
  auto n = normalize(w);
  return {{{"input", to_compact(w)}, {"normal_form", to_compact(n.normal_form)}, {"trace", to_json(n.trace)}}};
}

Outcome cmd_homotopic(const Settings& s) {
  auto doc = load(s.file);
  const auto& m = require_map(doc);
  Walk w1 = walk_argument(m.graph(), "--w1", s.w1);
  Walk w2 = walk_argument(m.graph(), "--w2", s.w2);
  if (w1.start() != w2.start() || w1.end() != w2.end()) {
    throw Failure(kBadArgument, "--w1 and --w2 must share their start and end nodes");
  }
  auto budget = budget_for(m, s, true);
  auto outcome = prove_homotopic(m, w1, w2, budget);
  Outcome out;
  out.result = {{"status", outcome.proved() ? "homotopic" : "inconclusive"},
                {"states_visited", outcome.states_visited},
                {"exhausted", outcome.exhausted},
                {"max_len", budget.max_len},
                {"max_states", budget.max_states},
                {"certificate", outcome.proved() ? to_json(*outcome.certificate) : json(nullptr)}};
  if (!s.certificates_path.empty() && outcome.proved()) {
    write_certificates(s.certificates_path, json::array({to_json(*outcome.certificate)}));
    out.result["certificates_path"] = s.certificates_path;
  }
  if (!outcome.proved()) {
    out.code = kNegative;
    out.diagnostics.push_back(outcome.exhausted ? "search space exhausted within max_len; this is not a disproof"
                                                : "max_states reached before a certificate was found");
  }
  return out;
}

Outcome cmd_check_spherical(const Settings& s) {
  auto doc = load(s.file);
  const auto& m = require_map(doc);
  SphericityVerdict v;
  if (s.method == "euler") {
    v = check_spherical_euler(m);
  } else if (s.method == "quasi") {
    v = check_spherical_quasi(m, budget_for(m, s, true));
  } else if (s.method == "bounded") {
    v = check_spherical_bounded(m, s.max_len.value_or(2 * m.graph().node_count()), budget_for(m, s, false));
  } else {
    throw Failure(kUsage, "unknown method " + s.method + " (expected quasi, bounded or euler)");
  }
  Outcome out{to_json(v)};
  if (!s.certificates_path.empty()) {
    json certs = json::array();
    for (const auto& c : v.certificates) certs.push_back(to_json(c));
    write_certificates(s.certificates_path, certs);
    out.result["certificates_path"] = s.certificates_path;
  }
  if (v.status != SphericityStatus::Spherical) out.code = kNegative;
  if (!v.connected && s.method == "euler") out.diagnostics.push_back("map is disconnected; Euler test not applicable");
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Walks, loop reduction and walk homotopy on embedded multigraphs", "walkmap"};
  app.require_subcommand(1);
  bool pretty = false;
  bool no_timing = false;
  std::optional<std::string> seed;
  app.add_flag("--pretty", pretty, "Indent the JSON report");
  app.add_flag("--no-timing", no_timing, "Omit wall_time_ms from the report");
  app.add_option("--seed", seed, "Reserved; every algorithm is deterministic");
  app.fallthrough();

  Settings s;
  auto add_file = [&](CLI::App* cmd) { cmd->add_option("file", s.file, "Map or graph JSON file")->required(); };

  auto* validate = app.add_subcommand("validate", "Check a map or graph file");
  add_file(validate);
  auto* faces = app.add_subcommand("faces", "Trace the faces of a map");
  add_file(faces);
  auto* euler = app.add_subcommand("euler", "Euler characteristic of a map");
  add_file(euler);

  auto* walks = app.add_subcommand("walks", "List walks between two nodes");
  add_file(walks);
  walks->add_option("--from", s.from, "Start node")->required();
  walks->add_option("--to", s.to, "End node")->required();
  walks->add_flag("--quasi-only", s.quasi_only, "Only quasi-simple walks (all of them)");
  walks->add_flag("--symmetric", s.symmetric, "Walk in the symmetrised graph");
  walks->add_option("--max-len", s.max_len, "Length bound when listing all walks (default: node count)");

  auto* norm = app.add_subcommand("normalize", "Normal form of a walk with its reduction trace");
  add_file(norm);
  norm->add_option("--walk", s.walk, "Walk as start:dart,dart,...")->required();

  auto* hom = app.add_subcommand("homotopic", "Search for a homotopy certificate between two walks");
  add_file(hom);
  hom->add_option("--w1", s.w1, "First walk")->required();
  hom->add_option("--w2", s.w2, "Second walk")->required();
  hom->add_option("--max-len", s.max_len, "Longest walk the search may visit");
  hom->add_option("--max-states", s.max_states, "Search state cap");
  hom->add_option("--certificates", s.certificates_path, "Write the certificate to this file");

  auto* sph = app.add_subcommand("check-spherical", "Decide whether a map is spherical");
  add_file(sph);
  sph->add_option("--method", s.method, "quasi, bounded or euler")->check(CLI::IsMember({"quasi", "bounded", "euler"}));
  sph->add_option("--max-len", s.max_len, "quasi: search length bound; bounded: longest walk checked");
  sph->add_option("--max-states", s.max_states, "Search state cap per node pair");
  sph->add_option("--certificates", s.certificates_path, "Write the certificates to this file");

  std::vector<std::string> argv_storage;
  argv_storage.emplace_back("walkmap");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "walkmap: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }
  if (seed) {
    err << "walkmap: --seed is reserved and not accepted; every algorithm is deterministic\n";
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  json arguments = {{"file", std::filesystem::path(s.file).filename().string()}};
  if (command == "walks") {
    arguments["from"] = s.from;
    arguments["to"] = s.to;
    arguments["quasi_only"] = s.quasi_only;
    arguments["symmetric"] = s.symmetric;
  } else if (command == "normalize") {
    arguments["walk"] = s.walk;
  } else if (command == "homotopic") {
    arguments["w1"] = s.w1;
    arguments["w2"] = s.w2;
  } else if (command == "check-spherical") {
    arguments["method"] = s.method;
  }
  if (s.max_len) arguments["max_len"] = *s.max_len;
  if (s.max_states) arguments["max_states"] = *s.max_states;

  const auto started = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (command == "validate") outcome = cmd_validate(s);
    else if (command == "faces") outcome = cmd_faces(s);
    else if (command == "euler") outcome = cmd_euler(s);
    else if (command == "walks") outcome = cmd_walks(s);
    else if (command == "normalize") outcome = cmd_normalize(s);
    else if (command == "homotopic") outcome = cmd_homotopic(s);
    else outcome = cmd_check_spherical(s);
  } catch (const Failure& f) {
    outcome.result = nullptr;
    outcome.code = f.code();
    outcome.diagnostics.push_back(f.what());
    outcome.diagnostics.insert(outcome.diagnostics.end(), f.details().begin(), f.details().end());
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);

  json report = {{"command", command},
                 {"arguments", arguments},
                 {"result", outcome.result},
                 {"diagnostics", outcome.diagnostics},
                 {"exit_code", outcome.code}};
  if (!no_timing) report["wall_time_ms"] = elapsed.count();
  out << (pretty ? report.dump(2) : report.dump()) << '\n';
  if (outcome.code == kUsage) err << app.help();
  return outcome.code;
}

}  // namespace walkmap::cli
