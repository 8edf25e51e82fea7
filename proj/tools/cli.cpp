// Copyright 2026 The Authors.
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "gcmb/catalog.hpp"
#include "gcmb/errors.hpp"
#include "gcmb/io.hpp"
#include "gcmb/lab.hpp"
#include "gcmb/parallel.hpp"
#include "gcmb/random.hpp"
#include "gcmb/scan.hpp"
#include "gcmb/solver.hpp"

namespace gcmb::cli {

namespace {

struct RunConfig {
  std::string matroid_path;
  std::string builtin;
  bool trust = false;
  std::string group;
  std::string labels_path;
  std::string weights_path;
  std::string target;
  std::string mode = "enum";
  std::optional<int> k;
  bool heuristic = false;
  std::string predicate = "strong-block";
  std::string range;
  bool translation = false;
  std::string catalog_path;
  std::vector<std::string> merge;
  std::string in_path;
  std::string id_prefix = "m";
  bool lenient = false;
  std::uint64_t seed = 0;
  int jobs = 0;
  std::string out_path;
};

// Negative outcomes that are not errors.
struct Outcome {
  int code = kExitOk;
};

struct Instance {
  std::string name;
  Matroid matroid;
  std::optional<Labeling> default_labeling;
};

Instance load_instance(const RunConfig& cfg) {
  if (!cfg.matroid_path.empty() && !cfg.builtin.empty()) {
    throw UsageError("give either --matroid or --builtin, not both");
  }
  if (!cfg.matroid_path.empty()) {
    return {cfg.matroid_path, read_matroid(std::filesystem::path(cfg.matroid_path), cfg.trust),
            std::nullopt};
  }
  if (!cfg.builtin.empty()) {
    BuiltinInstance b = builtin_instance(cfg.builtin);
    return {b.name, b.matroid, b.labeling};
  }
  throw UsageError("an instance is required: --matroid <file> or --builtin <name>");
}

GroupSpec resolve_group(const RunConfig& cfg, const Instance& inst) {
  if (!cfg.group.empty()) return GroupSpec::parse(cfg.group);
  if (inst.default_labeling) return inst.default_labeling->group();
  throw UsageError("--group is required for this instance");
}

// Labels from --labels, else the instance default (same group), else a
// seeded random labeling. `source` describes which for the output header.
Labeling resolve_labeling(const RunConfig& cfg, const Instance& inst, const GroupSpec& group,
                          std::string& source) {
  if (!cfg.labels_path.empty()) {
    source = "file";
    return read_labeling(std::filesystem::path(cfg.labels_path), group, inst.matroid.size());
  }
  if (inst.default_labeling && inst.default_labeling->group() == group) {
    source = "builtin";
    return *inst.default_labeling;
  }
  source = "random";
  Rng rng = make_rng(cfg.seed, 0);
  return random_labeling(group, inst.matroid.size(), rng);
}

std::string labels_text(const Labeling& l) {
  std::string s;
  for (int e = 0; e < l.size(); ++e) {
    if (e) s += ' ';
    s += l.label(e).str();
  }
  return s;
}

std::string header(const std::string& command, const std::string& rest, std::uint64_t seed) {
  return "# gcmb " + command + (rest.empty() ? "" : " " + rest) + " seed=" + std::to_string(seed);
}

Outcome cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg);
  const GroupSpec group = resolve_group(cfg, inst);
  std::string source;
  const Labeling l = resolve_labeling(cfg, inst, group, source);
  if (cfg.target.empty()) throw UsageError("--target is required");
  const GroupElement target = group.parse_element(cfg.target);
  std::optional<WeightVector> weights;
  if (!cfg.weights_path.empty()) {
    weights = read_weights(std::filesystem::path(cfg.weights_path), inst.matroid.size());
  }
  SolveOptions options;
  options.weights = weights ? &*weights : nullptr;
  options.jobs = cfg.jobs;

  SolveResult result;
  std::string mode_text = cfg.mode;
  if (cfg.mode == "enum") {
    result = solve_enum(inst.matroid, l, target, options);
  } else if (cfg.mode == "proximity") {
    const int k = cfg.k.value_or(default_proximity_k(group));
    mode_text += " k=" + std::to_string(k);
    result = solve_proximity(inst.matroid, l, target, k,
                             cfg.heuristic ? ProximityMode::heuristic : ProximityMode::certified_only,
                             options);
  } else {
    throw UsageError("--mode must be enum or proximity");
  }

  out << header("solve",
                "instance=" + inst.name + " group=" + group.name() + " labels=" + source, cfg.seed)
      << '\n';
  out << "labels " << labels_text(l) << '\n';
  out << "status=" << (result.feasible ? "feasible" : "infeasible") << " mode=" << mode_text
      << " target=" << target.str()
      << " base=" << (result.base ? result.base->str() : "-")
      << " label=" << (result.label ? result.label->str() : "-")
      << " weight=" << (result.weight ? format_weight(*result.weight) : "-")
      << " certified=" << (result.certified ? "yes" : "no") << '\n';
  out << "stats oracle_calls=" << result.stats.oracle_calls
      << " intersections=" << result.stats.intersections
      << " signatures_tried=" << result.stats.signatures_tried
      << " delta_pairs=" << result.stats.delta_pairs << '\n';
  return {result.feasible ? kExitOk : kExitNegative};
}

Outcome cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg);
  const GroupSpec group = resolve_group(cfg, inst);
  std::string source;
  const Labeling l = resolve_labeling(cfg, inst, group, source);
  if (!cfg.k) throw UsageError("--k is required");
  const int k = *cfg.k;
  ClosenessReport report;
  std::string check = "k-close";
  if (!cfg.weights_path.empty()) {
    check = "strongly-k-close";
    const WeightVector w = read_weights(std::filesystem::path(cfg.weights_path), inst.matroid.size());
    report = check_strongly_k_close(inst.matroid, l, w, k, inst.name);
  } else {
    report = check_k_close(inst.matroid, l, k, inst.name);
  }
  out << header("verify",
                "instance=" + inst.name + " group=" + group.name() + " labels=" + source, cfg.seed)
      << '\n';
  out << "labels " << labels_text(l) << '\n';
  out << "check=" << check << " k=" << k << " required_k=" << report.required_k
      << " verdict=" << (report.ok() ? "ok" : "violated") << '\n';
  if (report.witness) {
    out << report.witness->str() << '\n';
    out << "reduced " << reduce_witness(*report.witness).str() << '\n';
    return {kExitNegative};
  }
  return {};
}

Outcome cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const IsolationPredicate predicate = parse_predicate(cfg.predicate);
  const LabelingReduction reduction =
      cfg.translation ? LabelingReduction::translation : LabelingReduction::none;
  if (!cfg.merge.empty()) {
    std::vector<ScanReport> shards;
    for (const std::string& path : cfg.merge) {
      std::ifstream in(path);
      if (!in) throw UsageError("cannot open " + path);
      shards.push_back(read_scan_report(in));
    }
    const ScanReport merged = merge_scan_reports(shards);
    out << header("scan",
                  "group=" + merged.group + " predicate=" + to_string(merged.predicate) +
                      " reduction=" + to_string(merged.reduction),
                  cfg.seed)
        << '\n';
    write_scan_report(out, merged);
    return {};
  }
  if (cfg.group.empty()) throw UsageError("--group is required");
  ScanConfig config;
  config.group = GroupSpec::parse(cfg.group);
  config.predicate = predicate;
  config.reduction = reduction;
  config.jobs = cfg.jobs;
  if (!cfg.range.empty()) config.range = parse_range(cfg.range);

  std::vector<ScanEntry> entries;
  if (!cfg.catalog_path.empty()) {
    if (!cfg.matroid_path.empty() || !cfg.builtin.empty()) {
      throw UsageError("give either --catalog or a single instance, not both");
    }
    for (const CatalogEntry& e : load_catalog(std::filesystem::path(cfg.catalog_path))) {
      entries.push_back({e.id, e.loopless() ? std::optional<Matroid>(e.matroid()) : std::nullopt});
    }
  } else {
    const Instance inst = load_instance(cfg);
    entries.push_back({inst.name, inst.matroid});
  }
  const ScanReport report = isolation_scan(entries, config);
  out << header("scan",
                "group=" + report.group + " predicate=" + to_string(report.predicate) +
                    " reduction=" + to_string(report.reduction),
                cfg.seed)
      << '\n';
  write_scan_report(out, report);
  return {};
}

Outcome cmd_check_ss(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg);
  const GroupSpec group = resolve_group(cfg, inst);
  std::string source;
  const Labeling l = resolve_labeling(cfg, inst, group, source);
  const SchrijverSeymourReport report = check_schrijver_seymour(inst.matroid, l);
  out << header("check-ss",
                "instance=" + inst.name + " group=" + group.name() + " labels=" + source, cfg.seed)
      << '\n';
  out << "labels " << labels_text(l) << '\n';
  out << report.str() << '\n';
  const bool violated = !report.holds || report.prime_holds.value_or(true) == false;
  return {violated ? kExitViolated : kExitOk};
}

Outcome cmd_bases(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg);
  const std::vector<BaseSet> bases = enumerate_bases(inst.matroid);
  out << header("bases",
                "instance=" + inst.name + " n=" + std::to_string(inst.matroid.size()) +
                    " r=" + std::to_string(inst.matroid.rank()) +
                    " count=" + std::to_string(bases.size()),
                cfg.seed)
      << '\n';
  for (BaseSet b : bases) out << b.str() << '\n';
  return {};
}

std::ifstream open_input(const std::string& path) {
  if (path.empty()) throw UsageError("--in is required");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return in;
}

Outcome cmd_catalog_import(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto in = open_input(cfg.in_path);
  std::vector<CatalogDiagnostic> diagnostics;
  LoadOptions options{cfg.lenient, &diagnostics};
  const std::vector<CatalogEntry> entries = import_revlex(in, cfg.id_prefix, options);
  for (const CatalogDiagnostic& d : diagnostics) err << "skipped line " << d.line << ": " << d.message << '\n';
  out << "# imported " << entries.size() << " entries from " << cfg.in_path << '\n';
  for (const CatalogEntry& e : entries) write_catalog_entry(out, e);
  return {};
}

Outcome cmd_catalog_filter(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto in = open_input(cfg.in_path);
  std::vector<CatalogDiagnostic> diagnostics;
  LoadOptions options{cfg.lenient, &diagnostics};
  const std::vector<CatalogEntry> entries = load_catalog(in, options);
  for (const CatalogDiagnostic& d : diagnostics) err << "skipped line " << d.line << ": " << d.message << '\n';
  const std::vector<CatalogEntry> blocks = filter_blocks(entries);
  out << "# " << blocks.size() << " of " << entries.size() << " entries are block matroids\n";
  for (const CatalogEntry& e : blocks) write_catalog_entry(out, e);
  return {};
}

void add_instance_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--matroid", cfg.matroid_path, "Matroid file");
  sub->add_option("--builtin", cfg.builtin,
                  "Builtin instance: tight:<m>, k4, uniform:<n>,<r> or a bundled name");
  sub->add_flag("--trust", cfg.trust, "Skip exchange-axiom validation of explicit matroids");
}

void add_group_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--group", cfg.group, "Group, e.g. Z4 or Z2xZ2");
  sub->add_option("--labels", cfg.labels_path, "Labeling file (default: builtin or seeded random)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Group-constrained matroid base solver and verification lab", "gcmb"};
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads (0: all cores)")->capture_default_str();
  app.add_option("--out", cfg.out_path, "Write the report here instead of stdout");
  app.fallthrough();

  CLI::App* solve = app.add_subcommand("solve", "Find a (minimum-weight) base with label sum g");
  add_instance_options(solve, cfg);
  add_group_options(solve, cfg);
  solve->add_option("--weights", cfg.weights_path, "Weight file (optimization mode)");
  solve->add_option("--target", cfg.target, "Target group element, e.g. 0 or 1,3")->required();
  solve->add_option("--mode", cfg.mode, "enum or proximity")
      ->check(CLI::IsMember({"enum", "proximity"}))
      ->capture_default_str();
  solve->add_option("--k", cfg.k, "Proximity radius (default |G|-1)");
  auto* certified = solve->add_flag("--certified", "Refuse uncertified proximity runs (default)");
  auto* heuristic = solve->add_flag("--heuristic", cfg.heuristic, "Allow uncertified proximity runs");
  certified->excludes(heuristic);

  CLI::App* verify = app.add_subcommand("verify", "Brute-force k-closeness check");
  add_instance_options(verify, cfg);
  add_group_options(verify, cfg);
  verify->add_option("--weights", cfg.weights_path, "Weight file (strong closeness)");
  verify->add_option("--k", cfg.k, "Closeness parameter")->required();

  CLI::App* scan = app.add_subcommand("scan", "Exhaustive isolating-labeling scan");
  add_instance_options(scan, cfg);
  scan->add_option("--catalog", cfg.catalog_path, "Catalog file to scan entry by entry");
  scan->add_option("--group", cfg.group, "Group, e.g. Z4");
  scan->add_option("--predicate", cfg.predicate, "block or strong-block")
      ->check(CLI::IsMember({"block", "strong-block"}))
      ->capture_default_str();
  scan->add_option("--range", cfg.range, "Labeling index interval a..b (b exclusive)");
  scan->add_flag("--translation", cfg.translation, "Scan one labeling per translation class");
  scan->add_option("--merge", cfg.merge, "Merge these shard reports instead of scanning");

  CLI::App* check_ss = app.add_subcommand("check-ss", "Schrijver-Seymour inequality check");
  add_instance_options(check_ss, cfg);
  add_group_options(check_ss, cfg);

  CLI::App* bases = app.add_subcommand("bases", "Enumerate bases");
  add_instance_options(bases, cfg);

  CLI::App* catalog = app.add_subcommand("catalog", "Catalog conversion and filtering");
  catalog->require_subcommand(1);
  CLI::App* import = catalog->add_subcommand("import", "Convert a revlex indicator file");
  import->add_option("--in", cfg.in_path, "Revlex file")->required();
  import->add_option("--prefix", cfg.id_prefix, "Id prefix for lines without an id");
  import->add_flag("--lenient", cfg.lenient, "Skip invalid entries");
  CLI::App* filter = catalog->add_subcommand("filter-blocks", "Keep block matroids");
  filter->add_option("--in", cfg.in_path, "Catalog file")->required();
  filter->add_flag("--lenient", cfg.lenient, "Skip invalid entries");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  std::ostringstream buffer;
  Outcome outcome;
  try {
    if (*solve) {
      outcome = cmd_solve(cfg, buffer);
    } else if (*verify) {
      outcome = cmd_verify(cfg, buffer);
    } else if (*scan) {
      outcome = cmd_scan(cfg, buffer);
    } else if (*check_ss) {
      outcome = cmd_check_ss(cfg, buffer);
    } else if (*bases) {
      outcome = cmd_bases(cfg, buffer);
    } else if (*import) {
      outcome = cmd_catalog_import(cfg, buffer, err);
    } else if (*filter) {
      outcome = cmd_catalog_filter(cfg, buffer, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) {
      err << "error: cannot write " << cfg.out_path << '\n';
      return kExitError;
    }
    file << buffer.str();
  }
  return outcome.code;
}

}  // namespace gcmb::cli
