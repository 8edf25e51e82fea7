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

#include "gcmb/lab.hpp"

#include <algorithm>
#include <limits>

#include "gcmb/errors.hpp"
#include "gcmb/exchange.hpp"
#include "gcmb/parallel.hpp"

namespace gcmb {
namespace {

struct BaseTable {
  std::vector<BaseSet> bases;  // lexicographic
  std::vector<int> labels;     // code per base
};

BaseTable tabulate(const Matroid& m, const Labeling& l) {
  if (l.size() != m.size()) throw UsageError("labeling size differs from ground set size");
  BaseTable t;
  t.bases = enumerate_bases(m, kLabBaseGuard);
  t.labels.reserve(t.bases.size());
  for (BaseSet b : t.bases) t.labels.push_back(label_sum_code(l, b));
  return t;
}

Weight weight_of(const WeightVector& w, ElementSet s) {
  Weight total = 0;
  s.for_each([&](int e) { total += w[e]; });
  return total;
}

int distance(BaseSet a, BaseSet b) { return (a - b).size(); }

ClosenessReport closeness(const Matroid& m, const Labeling& l, const WeightVector* w, int k,
                          const std::string& id) {
  const BaseTable t = tabulate(m, l);
  const int order = l.group().order();
  const std::size_t count = t.bases.size();
  if (w && static_cast<int>(w->size()) != m.size()) throw UsageError("weight vector length mismatch");

  std::vector<Weight> weight(count, Weight(0));
  if (w) {
    for (std::size_t i = 0; i < count; ++i) weight[i] = weight_of(*w, t.bases[i]);
  }
  // Starting bases: optimum bases (all bases when unweighted).
  std::vector<std::size_t> starts;
  {
    const Weight best = w ? *std::min_element(weight.begin(), weight.end()) : Weight(0);
    for (std::size_t i = 0; i < count; ++i) {
      if (weight[i] == best) starts.push_back(i);
    }
  }
  // Targets per label: optimum g-bases.
  std::vector<std::vector<std::size_t>> targets(order);
  {
    std::vector<std::optional<Weight>> best(order);
    for (std::size_t i = 0; i < count; ++i) {
      auto& b = best[t.labels[i]];
      if (!b || weight[i] < *b) b = weight[i];
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (weight[i] == *best[t.labels[i]]) targets[t.labels[i]].push_back(i);
    }
  }

  ClosenessReport report;
  struct Candidate {
    std::size_t a, b;
    int g;
  };
  std::optional<Candidate> worst;
  for (std::size_t ai : starts) {
    for (int g = 0; g < order; ++g) {
      if (targets[g].empty()) continue;
      std::size_t nearest = targets[g].front();
      int best = distance(t.bases[ai], t.bases[nearest]);
      for (std::size_t bi : targets[g]) {
        const int d = distance(t.bases[ai], t.bases[bi]);
        if (d < best) {
          best = d;
          nearest = bi;
        }
      }
      if (best > report.required_k) {
        report.required_k = best;
        worst = Candidate{ai, nearest, g};
      } else if (best == report.required_k && worst) {
        // Indices follow lexicographic base order.
        const Candidate c{ai, nearest, g};
        if (std::tie(c.a, c.b, c.g) < std::tie(worst->a, worst->b, worst->g)) worst = c;
      }
    }
  }
  if (report.required_k > k && worst) {
    std::vector<int> origin(m.size());
    for (int e = 0; e < m.size(); ++e) origin[e] = e;
    report.witness = Witness{id,
                             m,
                             l,
                             w ? std::optional<WeightVector>(*w) : std::nullopt,
                             l.group().from_code(worst->g),
                             t.bases[worst->a],
                             t.bases[worst->b],
                             report.required_k,
                             std::move(origin)};
  }
  return report;
}

std::string join_labels(const Labeling& l) {
  std::string s;
  for (int e = 0; e < l.size(); ++e) {
    if (e) s += ' ';
    s += l.label(e).str();
  }
  return s;
}

}  // namespace

LabelImage label_image(const Matroid& m, const Labeling& l) {
  const BaseTable t = tabulate(m, l);
  LabelImage img;
  img.multiplicity.assign(l.group().order(), 0);
  for (int c : t.labels) ++img.multiplicity[c];
  for (int c = 0; c < l.group().order(); ++c) {
    if (img.multiplicity[c] > 0) img.image.push_back(c);
  }
  return img;
}

std::string Witness::str() const {
  std::string s = "witness";
  if (!matroid_id.empty()) s += " matroid=" + matroid_id;
  s += " n=" + std::to_string(matroid.size()) + " r=" + std::to_string(matroid.rank());
  s += " group=" + labeling.group().name();
  s += " target=" + target.str();
  s += " A=" + a.str() + " B=" + b.str();
  s += " distance=" + std::to_string(distance);
  s += " labels=[" + join_labels(labeling) + "]";
  if (weights) {
    s += " weights=[";
    for (std::size_t i = 0; i < weights->size(); ++i) {
      if (i) s += ' ';
      s += format_weight((*weights)[i]);
    }
    s += "]";
  }
  return s;
}

ClosenessReport check_k_close(const Matroid& m, const Labeling& l, int k, const std::string& id) {
  return closeness(m, l, nullptr, k, id);
}

ClosenessReport check_strongly_k_close(const Matroid& m, const Labeling& l, const WeightVector& w,
                                       int k, const std::string& id) {
  return closeness(m, l, &w, k, id);
}

Witness reduce_witness(const Witness& w) {
  const ElementSet common = w.a & w.b;
  const ElementSet outside = w.matroid.ground() - (w.a | w.b);
  if (common.empty() && outside.empty()) return w;

  Minor reduced = minor(w.matroid, common, outside);
  std::vector<int> back(w.matroid.size(), -1);
  for (std::size_t i = 0; i < reduced.kept.size(); ++i) back[reduced.kept[i]] = static_cast<int>(i);
  auto remap = [&](ElementSet s) {
    ElementSet out;
    s.for_each([&](int e) { out = out.with(back[e]); });
    return out;
  };
  std::optional<WeightVector> weights;
  if (w.weights) {
    weights.emplace();
    for (int e : reduced.kept) weights->push_back((*w.weights)[e]);
  }
  std::vector<int> origin;
  for (int e : reduced.kept) origin.push_back(w.origin.empty() ? e : w.origin[e]);
  const GroupElement shift = label_sum(w.labeling, common);
  return Witness{w.matroid_id,
                 reduced.matroid,
                 w.labeling.restrict(reduced.kept),
                 std::move(weights),
                 add(w.target, negate(shift)),
                 remap(w.a - w.b),
                 remap(w.b - w.a),
                 w.distance,
                 std::move(origin)};
}

bool witness_is_valid(const Witness& w, int k) {
  const Matroid& m = w.matroid;
  if (!m.is_base(w.a) || !m.is_base(w.b)) return false;
  if (distance(w.a, w.b) != w.distance || w.distance <= k) return false;
  const int g = w.labeling.group().code(w.target);
  if (label_sum_code(w.labeling, w.b) != g) return false;
  const BaseTable t = tabulate(m, w.labeling);
  std::optional<Weight> best_all, best_g;
  std::vector<Weight> weight(t.bases.size(), Weight(0));
  for (std::size_t i = 0; i < t.bases.size(); ++i) {
    if (w.weights) weight[i] = weight_of(*w.weights, t.bases[i]);
    if (!best_all || weight[i] < *best_all) best_all = weight[i];
    if (t.labels[i] == g && (!best_g || weight[i] < *best_g)) best_g = weight[i];
  }
  const Weight wa = w.weights ? weight_of(*w.weights, w.a) : Weight(0);
  const Weight wb = w.weights ? weight_of(*w.weights, w.b) : Weight(0);
  if (wa != *best_all || wb != *best_g) return false;
  for (std::size_t i = 0; i < t.bases.size(); ++i) {
    if (t.labels[i] == g && weight[i] == *best_g && distance(w.a, t.bases[i]) < w.distance) {
      return false;
    }
  }
  return true;
}

namespace {

void require_block_candidate(const Matroid& m) {
  if (m.size() != 2 * m.rank()) {
    throw UsageError("isolation predicates need n = 2r; got n=" + std::to_string(m.size()) +
                     ", r=" + std::to_string(m.rank()));
  }
}

}  // namespace

std::optional<BaseSet> is_block_isolating(const Matroid& m, const Labeling& l) {
  require_block_candidate(m);
  const BaseTable t = tabulate(m, l);
  std::vector<int> count(l.group().order(), 0);
  for (int c : t.labels) ++count[c];
  for (std::size_t i = 0; i < t.bases.size(); ++i) {
    if (count[t.labels[i]] == 1 && m.is_base(m.ground() - t.bases[i])) return t.bases[i];
  }
  return std::nullopt;
}

std::optional<BaseSet> is_strong_block_isolating(const Matroid& m, const Labeling& l) {
  require_block_candidate(m);
  const BaseTable t = tabulate(m, l);
  std::vector<int> count(l.group().order(), 0);
  std::vector<char> block(t.bases.size(), 0);
  for (std::size_t i = 0; i < t.bases.size(); ++i) {
    block[i] = m.is_base(m.ground() - t.bases[i]);
    if (block[i]) ++count[t.labels[i]];
  }
  for (std::size_t i = 0; i < t.bases.size(); ++i) {
    if (block[i] && count[t.labels[i]] == 1) return t.bases[i];
  }
  return std::nullopt;
}

SchrijverSeymourReport check_schrijver_seymour(const Matroid& m, const Labeling& l) {
  const GroupSpec& group = l.group();
  const LabelImage img = label_image(m, l);
  SchrijverSeymourReport r;
  r.image = img.image;
  r.image_size = static_cast<int>(img.image.size());
  r.stabilizer = stabilizer(group, img.image);
  r.cosets = cosets(r.stabilizer);
  r.rank = m.rank();
  for (const auto& coset : r.cosets.cosets) {
    ElementSet fiber;
    for (int c : coset) fiber = fiber | l.fiber(c);
    r.coset_ranks.push_back(m.rank(fiber));
    r.rank_sum += r.coset_ranks.back();
  }
  const std::int64_t h = r.stabilizer.order();
  const std::int64_t quotient = group.order() / h;
  r.bound = h * std::min<std::int64_t>(r.rank_sum - r.rank + 1, quotient);
  r.holds = r.image_size >= r.bound;
  if (group.is_cyclic() && is_prime(group.order())) {
    std::int64_t sum = 0;
    for (int g = 0; g < group.order(); ++g) sum += m.rank(l.fiber(g));
    r.prime_bound = std::min<std::int64_t>(group.order(), sum - r.rank + 1);
    r.prime_holds = r.image_size >= *r.prime_bound;
    if (*r.prime_holds != r.holds) {
      throw InternalError("stabilizer form and prime form of the inequality disagree");
    }
  }
  return r;
}

std::string SchrijverSeymourReport::str() const {
  const GroupSpec& group = stabilizer.parent();
  std::string s = "schrijver-seymour group=" + group.name();
  s += " image_size=" + std::to_string(image_size) + " image={";
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i) s += ' ';
    s += group.from_code(image[i]).str();
  }
  s += "} stabilizer_order=" + std::to_string(stabilizer.order());
  s += " cosets=" + std::to_string(cosets.cosets.size());
  s += " rank_sum=" + std::to_string(rank_sum) + " rank=" + std::to_string(rank);
  s += " bound=" + std::to_string(bound);
  if (prime_bound) s += " prime_bound=" + std::to_string(*prime_bound);
  s += holds ? " holds=yes" : " holds=no";
  return s;
}

Labeling random_labeling(const GroupSpec& group, int n, Rng& rng) {
  std::vector<int> codes(n);
  for (int& c : codes) c = static_cast<int>(uniform_int(rng, 0, group.order() - 1));
  return Labeling(group, std::move(codes));
}

WeightVector random_weights(int n, Rng& rng, int lo, int hi) {
  WeightVector w(n);
  for (auto& x : w) x = Weight(uniform_int(rng, lo, hi));
  return w;
}

std::vector<WeightVector> structured_weights(const Matroid& m) {
  std::vector<WeightVector> out;
  out.emplace_back(m.size(), Weight(0));
  out.emplace_back(m.size(), Weight(1));
  if (auto blocks = find_blocks(m)) {
    WeightVector w(m.size(), Weight(0));
    blocks->first.for_each([&](int e) { w[e] = 1; });
    blocks->second.for_each([&](int e) { w[e] = -1; });
    out.push_back(w);
    for (auto& x : w) x = -x;
    out.push_back(std::move(w));
  }
  return out;
}

SboSuiteReport sbo_strong_closeness_suite(const Matroid& m, const GroupSpec& group, int trials,
                                          std::uint64_t seed, const std::string& id, int jobs) {
  if (!is_strongly_base_orderable(m).strongly_base_orderable) {
    throw UsageError("matroid " + id + " is not strongly base orderable");
  }
  SboSuiteReport report;
  report.matroid_id = id;
  report.group = group.name();
  report.k = davenport(group) - 1;
  report.trials = trials;
  report.seed = seed;
  const std::vector<WeightVector> fixed = structured_weights(m);
  std::vector<std::optional<Witness>> found(trials);
  parallel_for(trials, jobs, [&](std::int64_t t) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(t));
    const Labeling l = random_labeling(group, m.size(), rng);
    const WeightVector w = static_cast<std::size_t>(t) < fixed.size() ? fixed[t]
                                                                      : random_weights(m.size(), rng);
    found[t] = check_strongly_k_close(m, l, w, report.k, id).witness;
  });
  for (auto& f : found) {
    if (f) report.refutations.push_back(std::move(*f));
  }
  return report;
}

}  // namespace gcmb
