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

// Acceptance suite: one PASS/FAIL line per criterion. Criteria 1-5 run twice
// (one job, eight jobs) and criterion 10 compares the two reports byte for byte.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "gcmb/catalog.hpp"
#include "gcmb/errors.hpp"
#include "gcmb/exchange.hpp"
#include "gcmb/lab.hpp"
#include "gcmb/scan.hpp"
#include "gcmb/solver.hpp"
#include "../oracles.hpp"

using namespace gcmb;

namespace {

const std::filesystem::path kData = GCMB_DATA_DIR;

struct Outcome {
  std::ostringstream report;
  std::vector<std::string> failures;
  std::string summary;

  void fail(const std::string& what) {
    if (failures.size() < 10) failures.push_back(what);
    else if (failures.size() == 10) failures.push_back("...");
  }
  bool pass() const { return failures.empty(); }
};

const std::vector<std::string> kGrid = {"Z2", "Z3", "Z4", "Z6", "Z2xZ2"};

std::string bits(const std::optional<BaseSet>& b) {
  return b ? b->str() : "-";
}

bool valid_g_base(const std::vector<ElementSet>& bases, const Labeling& l, int target, BaseSet b) {
  return std::binary_search(bases.begin(), bases.end(), b, LexLess{}) &&
         oracle::label_sum(l.group(), l.codes(), b) == target;
}

// Bundled matroids x grid groups x 20 labelings x all targets, feasibility and
// 10 weight vectors, against brute force.
void criterion1(Outcome& o, int jobs) {
  const auto bundled = bundled_matroids();
  std::int64_t solves = 0;
  for (std::size_t mi = 0; mi < bundled.size(); ++mi) {
    const Matroid& m = bundled[mi].matroid;
    const auto bases = oracle::bases(m);
    for (std::size_t gi = 0; gi < kGrid.size(); ++gi) {
      const GroupSpec g = GroupSpec::parse(kGrid[gi]);
      Rng rng = make_rng(1001, mi * 16 + gi);
      std::ostringstream line;
      line << bundled[mi].name << ' ' << g.name();
      for (int trial = 0; trial < 20; ++trial) {
        const Labeling l = random_labeling(g, m.size(), rng);
        std::vector<WeightVector> weights;
        for (int i = 0; i < 10; ++i) weights.push_back(random_weights(m.size(), rng));
        for (int t = 0; t < g.order(); ++t) {
          SolveOptions options;
          options.jobs = jobs;
          const SolveResult r = solve_enum(m, l, g.from_code(t), options);
          ++solves;
          const oracle::Best expected = oracle::min_g_base(bases, g, l.codes(), t, nullptr);
          if (r.feasible != expected.feasible || (r.feasible && !valid_g_base(bases, l, t, *r.base))) {
            o.fail(bundled[mi].name + " " + g.name() + " feasibility target " + std::to_string(t));
          }
          line << ' ' << bits(r.base);
          for (const WeightVector& w : weights) {
            options.weights = &w;
            const SolveResult rw = solve_enum(m, l, g.from_code(t), options);
            ++solves;
            const oracle::Best best = oracle::min_g_base(bases, g, l.codes(), t, &w);
            bool ok = rw.feasible == best.feasible;
            if (ok && rw.feasible) {
              ok = valid_g_base(bases, l, t, *rw.base) && *rw.weight == best.weight &&
                   oracle::weight(w, *rw.base) == best.weight;
            }
            if (!ok) o.fail(bundled[mi].name + " " + g.name() + " weighted target " + std::to_string(t));
            line << ' ' << bits(rw.base) << (rw.weight ? ":" + format_weight(*rw.weight) : "");
          }
        }
      }
      o.report << line.str() << '\n';
    }
  }
  o.summary = std::to_string(solves) + " solves";
}

// Proximity search with k = |G|-1 on the proven part of the grid.
void criterion2(Outcome& o, int jobs) {
  const auto bundled = bundled_matroids();
  std::int64_t runs = 0;
  std::int64_t max_calls = 0;
  for (std::size_t mi = 0; mi < bundled.size(); ++mi) {
    const Matroid& m = bundled[mi].matroid;
    const auto bases = oracle::bases(m);
    for (std::size_t gi = 0; gi < kGrid.size(); ++gi) {
      const GroupSpec g = GroupSpec::parse(kGrid[gi]);
      if (closeness_class(g) != ClosenessClass::proven) continue;
      const int k = g.order() - 1;
      const std::int64_t bound = binomial(k + g.order() - 1, k) * binomial(k + g.order() - 1, k);
      Rng rng = make_rng(1002, mi * 16 + gi);
      o.report << bundled[mi].name << ' ' << g.name();
      for (int trial = 0; trial < 20; ++trial) {
        const Labeling l = random_labeling(g, m.size(), rng);
        for (int t = 0; t < g.order(); ++t) {
          SolveOptions options;
          options.jobs = jobs;
          const SolveResult p =
              solve_proximity(m, l, g.from_code(t), k, ProximityMode::certified_only, options);
          const SolveResult e = solve_enum(m, l, g.from_code(t), options);
          ++runs;
          const bool expected = oracle::min_g_base(bases, g, l.codes(), t, nullptr).feasible;
          if (p.feasible != e.feasible || p.feasible != expected ||
              (p.feasible && !valid_g_base(bases, l, t, *p.base)) || !p.certified) {
            o.fail(bundled[mi].name + " " + g.name() + " target " + std::to_string(t));
          }
          if (p.stats.intersections > bound) {
            o.fail(bundled[mi].name + " " + g.name() + " used " +
                   std::to_string(p.stats.intersections) + " intersections > " + std::to_string(bound));
          }
          max_calls = std::max(max_calls, p.stats.intersections);
          o.report << ' ' << bits(p.base) << '/' << p.stats.intersections;
        }
      }
      o.report << '\n';
    }
  }
  o.summary = std::to_string(runs) + " instances, max intersections " + std::to_string(max_calls);
}

// The tight example is k-close exactly from k = m-1 on.
void criterion3(Outcome& o, int) {
  for (int m = 2; m <= 6; ++m) {
    const BuiltinInstance inst = tight_example(m);
    const Labeling& l = *inst.labeling;
    const ClosenessReport below = check_k_close(inst.matroid, l, m - 2, inst.name);
    const ClosenessReport at = check_k_close(inst.matroid, l, m - 1, inst.name);
    const int expected = oracle::required_k(oracle::bases(inst.matroid), l.group(), l.codes(), nullptr);
    if (below.ok() || below.witness->distance != m - 1 || !witness_is_valid(*below.witness, m - 2)) {
      o.fail(inst.name + " at k=" + std::to_string(m - 2));
    }
    if (!at.ok()) o.fail(inst.name + " at k=" + std::to_string(m - 1));
    if (expected != m - 1 || below.required_k != m - 1) o.fail(inst.name + " required k");
    o.report << inst.name << " required_k=" << below.required_k << ' '
             << (below.witness ? below.witness->str() : "-") << '\n';
  }
  o.summary = "m = 2..6";
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

std::optional<ScanReport> parse_report(const std::string& text) {
  try {
    std::istringstream in(text);
    return read_scan_report(in);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// M(K4): exhaustive scans through the command line, an oracle cross-check of
// every labeling, and strong 2-closeness on seeded samples.
void criterion4(Outcome& o, int jobs) {
  const BuiltinInstance k4 = k4_instance();
  const auto bases = oracle::bases(k4.matroid);
  std::uint64_t scanned = 0;
  for (const std::string name : {"Z3", "Z2xZ2"}) {
    const GroupSpec g = GroupSpec::parse(name);
    const CliRun run = cli({"--jobs", std::to_string(jobs), "scan", "--builtin", "k4", "--group", name});
    o.report << run.out;
    const auto report = parse_report(run.out);
    const std::uint64_t total = name == "Z3" ? 729 : 4096;
    if (run.code != 0 || !report || report->matroids.size() != 1 ||
        report->matroids[0].checked != total || report->matroids[0].isolating != 0) {
      o.fail("K4 scan over " + name);
    } else {
      scanned += total;
    }
    for (std::uint64_t i = 0; i < total; ++i) {
      std::vector<int> codes(6);
      std::uint64_t x = i;
      for (int& c : codes) {
        c = static_cast<int>(x % g.order());
        x /= g.order();
      }
      if (oracle::strong_block_isolating(bases, 6, g, codes, true)) {
        o.fail("oracle finds an isolating labeling over " + name);
      }
    }
    Rng rng = make_rng(1004, name == "Z3" ? 0 : 1);
    for (int trial = 0; trial < 200; ++trial) {
      const Labeling l = random_labeling(g, 6, rng);
      const WeightVector w = random_weights(6, rng);
      const ClosenessReport r = check_strongly_k_close(k4.matroid, l, w, 2, "k4");
      const int expected = oracle::required_k(bases, g, l.codes(), &w);
      if (!r.ok() || r.required_k != expected) o.fail("strong 2-closeness sample over " + name);
      o.report << r.required_k;
    }
    o.report << '\n';
  }
  o.summary = std::to_string(scanned) + " labelings, 400 samples";
}

std::filesystem::path rank4_shard() {
  const auto dir = std::filesystem::temp_directory_path() / "gcmb_acceptance";
  std::filesystem::create_directories(dir);
  const auto path = dir / "rank4_blocks_20.cat";
  std::ifstream in(kData / "rank4_n8.revlex");
  auto blocks = filter_blocks(import_revlex(in, "m"));
  if (blocks.size() > 20) blocks.resize(20);
  std::ofstream out(path);
  for (const CatalogEntry& e : blocks) write_catalog_entry(out, e);
  return path;
}

// Z4 strong-block scan of a 20-entry rank-4 block matroid shard.
void criterion5(Outcome& o, int jobs) {
  const auto path = rank4_shard();
  const CliRun run = cli({"--jobs", std::to_string(jobs), "scan", "--catalog", path.string(), "--group", "Z4"});
  o.report << run.out;
  const auto report = parse_report(run.out);
  if (run.code != 0 || !report) {
    o.fail("scan did not complete: " + run.out);
    return;
  }
  if (report->matroids.size() != 20 || !report->rejected.empty()) o.fail("shard is not 20 block matroids");
  std::uint64_t checked = 0;
  for (const MatroidScan& s : report->matroids) {
    if (s.checked != 65536 || s.isolating != 0) o.fail(s.matroid_id + " isolating=" + std::to_string(s.isolating));
    checked += s.checked;
  }

  // Spot check with the oracle.
  const GroupSpec z4 = GroupSpec::parse("Z4");
  Rng rng = make_rng(1005, 0);
  for (const CatalogEntry& e : load_catalog(path)) {
    const auto bases = oracle::bases(e.matroid());
    for (int trial = 0; trial < 200; ++trial) {
      const Labeling l = random_labeling(z4, e.n, rng);
      if (oracle::strong_block_isolating(bases, e.n, z4, l.codes(), true)) {
        o.fail("oracle finds an isolating labeling of " + e.id);
      }
    }
  }
  o.summary = std::to_string(report->matroids.size()) + " matroids, " + std::to_string(checked) + " labelings";
}

bool ss_ok(const Matroid& m, const Labeling& l, const std::string& id, Outcome& o) {
  const SchrijverSeymourReport r = check_schrijver_seymour(m, l);
  std::set<int> image;
  for (ElementSet b : oracle::bases(m)) image.insert(oracle::label_sum(l.group(), l.codes(), b));
  const bool ok = r.holds && r.prime_holds.value_or(true) && r.image_size == static_cast<int>(image.size()) &&
                  r.image_size >= r.bound;
  if (!ok) o.fail(id + " " + r.str());
  return ok;
}

void criterion6(Outcome& o, int) {
  std::int64_t checked = 0;
  const auto bundled = bundled_matroids();
  for (const NamedMatroid& nm : bundled) {
    if (nm.matroid.size() > 6) continue;
    for (const std::string name : {"Z2", "Z3"}) {
      const GroupSpec g = GroupSpec::parse(name);
      std::int64_t total = 1;
      for (int e = 0; e < nm.matroid.size(); ++e) total *= g.order();
      for (std::int64_t i = 0; i < total; ++i) {
        std::vector<int> codes(nm.matroid.size());
        std::int64_t x = i;
        for (int& c : codes) {
          c = static_cast<int>(x % g.order());
          x /= g.order();
        }
        ss_ok(nm.matroid, Labeling(g, codes), nm.name, o);
        ++checked;
      }
    }
  }
  Rng rng = make_rng(1006, 0);
  for (const std::string name : {"Z4", "Z6", "Z8", "Z2xZ2"}) {
    const GroupSpec g = GroupSpec::parse(name);
    for (int trial = 0; trial < 1000; ++trial) {
      const NamedMatroid& nm = bundled[trial % bundled.size()];
      ss_ok(nm.matroid, random_labeling(g, nm.matroid.size(), rng), nm.name, o);
      ++checked;
    }
  }
  o.summary = std::to_string(checked) + " labelings";
}

void criterion7(Outcome& o, int) {
  std::vector<NamedMatroid> population;
  for (int r = 1; r <= 4; ++r) {
    population.push_back({"U" + std::to_string(r) + "," + std::to_string(2 * r), make_uniform(2 * r, r)});
  }
  for (const NamedMatroid& nm : bundled_matroids()) {
    if (is_strongly_base_orderable(nm.matroid).strongly_base_orderable) population.push_back(nm);
  }
  int suites = 0;
  for (std::size_t i = 0; i < population.size(); ++i) {
    for (const std::string name : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
      const GroupSpec g = GroupSpec::parse(name);
      const SboSuiteReport r = sbo_strong_closeness_suite(population[i].matroid, g, 100, 1007 + i,
                                                          population[i].name);
      if (!r.ok() || r.k != davenport(g) - 1 || r.trials != 100) {
        o.fail(population[i].name + " " + name +
               (r.refutations.empty() ? "" : " " + r.refutations.front().str()));
      }
      ++suites;
    }
  }
  o.summary = std::to_string(population.size()) + " matroids, " + std::to_string(suites) + " suites";
}

void criterion8(Outcome& o, int) {
  std::int64_t pairs = 0;
  const auto bundled = bundled_matroids();
  for (const NamedMatroid& nm : bundled) {
    const auto bases = oracle::bases(nm.matroid);
    auto is_base = [&](ElementSet x) { return std::binary_search(bases.begin(), bases.end(), x, LexLess{}); };
    for (ElementSet a : bases) {
      for (ElementSet b : bases) {
        ++pairs;
        try {
          const ExchangeBijection f = brualdi_bijection(nm.matroid, a, b);
          ElementSet from, to;
          bool ok = static_cast<int>(f.pairs.size()) == (a - b).size();
          for (auto [x, y] : f.pairs) {
            ok = ok && (a - b).contains(x) && (b - a).contains(y) && !from.contains(x) && !to.contains(y) &&
                 is_base(a.without(x).with(y));
            from = from.with(x);
            to = to.with(y);
          }
          if (!ok) o.fail("bad exchange bijection on " + nm.name);
        } catch (const std::exception& e) {
          o.fail(nm.name + ": " + e.what());
        }
      }
    }
  }

  // Exchanges with enough surplus.
  Rng rng = make_rng(1008, 0);
  int instances = 0;
  while (instances < 500) {
    const Matroid m = oracle::random_matroid(rng, 8);
    const auto bases = oracle::bases(m);
    const ElementSet a = bases[uniform_int(rng, 0, bases.size() - 1)];
    ElementSet a1, b1;
    a.for_each([&](int e) {
      if (uniform_int(rng, 0, 1)) a1 = a1.with(e);
    });
    (m.ground() - a).for_each([&](int e) {
      if (uniform_int(rng, 0, 1) && m.independent(b1.with(e))) b1 = b1.with(e);
    });
    const int surplus = a1.size() + b1.size() - oracle::rank(m, a1 | b1);
    if (surplus < 1) continue;
    const int t = static_cast<int>(uniform_int(rng, 1, surplus));
    ++instances;
    const auto found = find_exchange(m, a, a1, b1, t);
    if (!found || !found->removed.subset_of(a1) || !found->added.subset_of(b1) ||
        found->removed.size() != t || found->added.size() != t ||
        !std::binary_search(bases.begin(), bases.end(), (a - found->removed) | found->added, LexLess{})) {
      o.fail("find_exchange with surplus " + std::to_string(surplus) + " and t=" + std::to_string(t));
    }
  }

  // Deleting an element of an optimum base A leaves some A - a + b optimum.
  std::int64_t deletions = 0;
  for (std::size_t mi = 0; mi < bundled.size(); ++mi) {
    const Matroid& m = bundled[mi].matroid;
    const auto bases = oracle::bases(m);
    Rng wrng = make_rng(1018, mi);
    for (int trial = 0; trial < 20; ++trial) {
      const WeightVector w = random_weights(m.size(), wrng);
      Weight best = oracle::weight(w, bases[0]);
      for (ElementSet b : bases) best = std::min(best, oracle::weight(w, b));
      for (ElementSet a : bases) {
        if (oracle::weight(w, a) != best) continue;
        a.for_each([&](int x) {
          const Minor d = delete_elements(m, ElementSet{x});
          if (d.matroid.rank() != m.rank()) return;  // x is a coloop
          WeightVector dw;
          for (int e : d.kept) dw.push_back(w[e]);
          const auto dbases = oracle::bases(d.matroid);
          Weight dbest = oracle::weight(dw, dbases[0]);
          for (ElementSet b : dbases) dbest = std::min(dbest, oracle::weight(dw, b));
          bool found = false;
          for (std::size_t i = 0; i < d.kept.size() && !found; ++i) {
            const int y = d.kept[i];
            if (a.contains(y)) continue;
            const ElementSet swapped = a.without(x).with(y);
            ElementSet local;
            for (std::size_t j = 0; j < d.kept.size(); ++j) {
              if (swapped.contains(d.kept[j])) local = local.with(static_cast<int>(j));
            }
            found = d.matroid.is_base(local) && oracle::weight(dw, local) == dbest;
          }
          ++deletions;
          if (!found) o.fail("deletion property on " + bundled[mi].name);
        });
      }
    }
  }
  o.summary = std::to_string(pairs) + " base pairs, " + std::to_string(instances) + " exchanges, " +
              std::to_string(deletions) + " deletions";
}

void criterion9(Outcome& o, int) {
  int compared = 0;
  for (const GroupSpec& g : groups_up_to(16)) {
    int formula = 0;
    try {
      formula = davenport(g, DavenportMethod::formula);
    } catch (const UsageError&) {
      continue;
    }
    const int brute = davenport(g, DavenportMethod::brute_force);
    const int reference = oracle::davenport(g);
    if (formula != brute || brute != reference) {
      o.fail(g.name() + " formula=" + std::to_string(formula) + " brute=" + std::to_string(brute) +
             " oracle=" + std::to_string(reference));
    }
    ++compared;
  }
  for (int m = 1; m <= 12; ++m) {
    const GroupSpec g = GroupSpec::from_moduli({m});
    if (davenport(g) != m || oracle::davenport(g) != m) o.fail("D(Z" + std::to_string(m) + ")");
  }
  o.summary = std::to_string(compared) + " groups";
}

struct Criterion {
  int number;
  std::string title;
  std::function<void(Outcome&, int)> run;
  bool deterministic_report;
};

bool report(int number, const std::string& title, const Outcome& o) {
  std::cout << (o.pass() ? "PASS" : "FAIL") << " criterion " << number << ": " << title;
  if (!o.summary.empty()) std::cout << " (" << o.summary << ")";
  std::cout << '\n';
  for (const std::string& f : o.failures) std::cout << "  " << f << '\n';
  std::cout.flush();
  return o.pass();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "solver matches brute force", criterion1, true},
      {2, "proximity search agrees with enumeration", criterion2, true},
      {3, "tight example is sharp", criterion3, true},
      {4, "M(K4) has no strong block isolating labeling", criterion4, true},
      {5, "rank-4 shard has no strong block isolating Z4 labeling", criterion5, true},
      {6, "Schrijver-Seymour inequality", criterion6, false},
      {7, "strong closeness of strongly base orderable matroids", criterion7, false},
      {8, "exchange machinery", criterion8, false},
      {9, "Davenport constants", criterion9, false},
  };
  bool all = true;
  std::vector<std::string> serial_reports;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      c.run(o, 1);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = report(c.number, c.title, o) && all;
    if (c.deterministic_report) serial_reports.push_back(o.report.str());
  }

  Outcome determinism;
  for (std::size_t i = 0; i < serial_reports.size(); ++i) {
    Outcome o;
    try {
      criteria[i].run(o, 8);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass()) determinism.fail("criterion " + std::to_string(i + 1) + " fails with 8 jobs");
    if (o.report.str() != serial_reports[i]) {
      determinism.fail("criterion " + std::to_string(i + 1) + " report differs between 1 and 8 jobs");
    }
  }
  determinism.summary = "criteria 1-5, 1 vs 8 jobs";
  all = report(10, "reports are identical for any job count", determinism) && all;
  return all ? 0 : 1;
}
