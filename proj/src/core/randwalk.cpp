#include "grr/randwalk.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "grr/predicates.hpp"

namespace grr {

namespace {

using ElemSet = std::unordered_set<Elem, ElemHash, ElemEq>;
template <typename V>
using ElemMap = std::unordered_map<Elem, V, ElemHash, ElemEq>;

constexpr double kDelta = 0.01;       // confidence level for every radius
constexpr double kMassTol = 1e-12;    // exact distributions must sum to 1
constexpr double kWeightTol = 1e-12;  // weight comparisons

// 53-bit uniform double in [0, 1). mt19937_64 output is standardized, so a
// fixed seed reproduces the same samples everywhere.
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// splitmix64 step; derives the seed of the paired walk in commute estimates.
uint64_t derived_seed(uint64_t seed) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void require_member(const Group& g, const Elem& e, const char* what) {
  if (!e.valid() || e.owner() != &g)
    throw ArgumentError(std::string(what) + " does not belong to the group");
}

Estimate empirical(uint64_t hits, uint64_t num_samples) {
  Estimate e;
  e.value = static_cast<double>(hits) / static_cast<double>(num_samples);
  e.radius = confidence_radius(num_samples);
  e.samples = num_samples;
  e.exact = false;
  return e;
}

Estimate exact_value(double v) {
  Estimate e;
  e.value = v;
  e.radius = 0;
  e.samples = 0;
  e.exact = true;
  return e;
}

// Subgroup generated by gens inside a finite group.
ElemSet subgroup_closure(const Group& g, const std::vector<Elem>& gens) {
  std::vector<Elem> step;
  for (const Elem& e : gens) {
    require_member(g, e, "subgroup generator");
    step.push_back(e);
    step.push_back(g.inv(e));
  }
  ElemSet h{g.identity()};
  std::vector<Elem> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (const Elem& x : frontier)
      for (const Elem& s : step) {
        Elem y = g.mul(x, s);
        if (h.insert(y).second) next.push_back(y);
      }
    frontier.swap(next);
  }
  return h;
}

}  // namespace

StepMeasure::StepMeasure(const Group& g, std::vector<Elem> support, std::vector<double> weight)
    : group_(&g), support_(std::move(support)), weight_(std::move(weight)) {
  if (support_.empty()) throw ArgumentError("step measure needs a non-empty support");
  if (support_.size() != weight_.size())
    throw ArgumentError("step measure support and weights have different lengths");
  ElemMap<double> w;
  double sum = 0;
  for (size_t i = 0; i < support_.size(); ++i) {
    require_member(g, support_[i], "step measure support element");
    if (!(weight_[i] > 0)) throw ArgumentError("step measure weights must be positive");
    if (!w.emplace(support_[i], weight_[i]).second)
      throw ArgumentError("step measure support repeats " + g.print(support_[i]));
    sum += weight_[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ArgumentError("step measure weights must sum to 1");
  if (!w.count(g.identity()))
    throw ArgumentError("step measure must put positive weight on the identity");
  for (const auto& [e, we] : w) {
    auto it = w.find(g.inv(e));
    if (it == w.end() || std::abs(it->second - we) > kWeightTol)
      throw ArgumentError("step measure must be symmetric; " + g.print(e) +
                          " and its inverse carry different weights");
  }
}

StepMeasure StepMeasure::lazy_uniform(const GenSet& s) {
  const Group& g = s.group();
  std::vector<Elem> supp{g.identity()};
  ElemSet seen{g.identity()};
  for (const Elem& e : s.elems()) {
    if (seen.insert(e).second) supp.push_back(e);
    Elem i = g.inv(e);
    if (seen.insert(i).second) supp.push_back(i);
  }
  std::vector<double> w(supp.size(), 1.0 / static_cast<double>(supp.size()));
  return StepMeasure(g, std::move(supp), std::move(w));
}

StepMeasure StepMeasure::s_left_invariant(const StepMeasure& mu, const Elem& s) {
  const Group& g = mu.group();
  require_member(g, s, "translate");
  if (g.is_identity(s) || !g.is_identity(g.mul(s, s)))
    throw ArgumentError("translate must be an involution");
  std::vector<Elem> supp;
  ElemSet seen;
  for (const Elem& e : mu.support())
    if (seen.insert(e).second) supp.push_back(e);
  for (const Elem& e : mu.support()) {
    Elem t = g.mul(s, e);
    if (seen.insert(t).second) supp.push_back(t);
  }
  std::vector<double> w;
  w.reserve(supp.size());
  for (const Elem& e : supp) w.push_back(0.5 * (mu.weight_of(e) + mu.weight_of(g.mul(s, e))));
  return StepMeasure(g, std::move(supp), std::move(w));
}

double StepMeasure::weight_of(const Elem& e) const {
  for (size_t i = 0; i < support_.size(); ++i)
    if (support_[i] == e) return weight_[i];
  return 0;
}

bool StepMeasure::is_s_left_invariant(const Elem& s) const {
  const Group& g = *group_;
  require_member(g, s, "translate");
  Elem si = g.inv(s);
  for (const Elem& e : support_) {
    if (std::abs(weight_of(g.mul(s, e)) - weight_of(e)) > kWeightTol) return false;
    if (std::abs(weight_of(g.mul(si, e)) - weight_of(e)) > kWeightTol) return false;
  }
  return true;
}

double WalkDistribution::mass_of(const std::vector<Elem>& subset) const {
  if (!group) throw ArgumentError("distribution is not attached to a group");
  const std::vector<Elem>& el = group->elements();
  ElemSet want;
  for (const Elem& e : subset) {
    require_member(*group, e, "subset element");
    want.insert(e);
  }
  double total = 0;
  for (size_t i = 0; i < el.size(); ++i)
    if (want.count(el[i])) total += p[i];
  return total;
}

WalkDistribution exact_convolution(const Group& g, const StepMeasure& mu, uint64_t n) {
  if (&mu.group() != &g) throw ArgumentError("step measure belongs to a different group");
  if (!g.finite()) throw UnsupportedError("exact convolution needs a finite group");
  const std::vector<Elem>& el = g.elements();
  ElemMap<size_t> idx;
  for (size_t i = 0; i < el.size(); ++i) idx.emplace(el[i], i);

  std::vector<long double> p(el.size(), 0.0L);
  p[idx.at(g.identity())] = 1.0L;
  if (n > 0) {
    // Right-multiplication tables restricted to the support.
    const std::vector<Elem>& supp = mu.support();
    std::vector<std::vector<size_t>> shift(supp.size(), std::vector<size_t>(el.size()));
    for (size_t k = 0; k < supp.size(); ++k)
      for (size_t i = 0; i < el.size(); ++i) shift[k][i] = idx.at(g.mul(el[i], supp[k]));
    std::vector<long double> q(el.size());
    for (uint64_t t = 0; t < n; ++t) {
      std::fill(q.begin(), q.end(), 0.0L);
      for (size_t k = 0; k < supp.size(); ++k) {
        const long double w = mu.weights()[k];
        const std::vector<size_t>& sh = shift[k];
        for (size_t i = 0; i < el.size(); ++i)
          if (p[i] != 0.0L) q[sh[i]] += w * p[i];
      }
      p.swap(q);
    }
  }

  WalkDistribution out;
  out.group = &g;
  out.steps = n;
  out.p.resize(el.size());
  long double sum = 0.0L;
  for (size_t i = 0; i < el.size(); ++i) {
    out.p[i] = static_cast<double>(p[i]);
    sum += p[i];
  }
  if (std::abs(static_cast<double>(sum) - 1.0) > kMassTol)
    throw Error(Status::internal, "convolution mass drifted away from 1");
  return out;
}

std::vector<Elem> sample_walks(const Group& g, const StepMeasure& mu, uint64_t n,
                               uint64_t num_samples, uint64_t seed) {
  if (&mu.group() != &g) throw ArgumentError("step measure belongs to a different group");
  std::vector<double> cum;
  cum.reserve(mu.weights().size());
  double acc = 0;
  for (double w : mu.weights()) {
    acc += w;
    cum.push_back(acc);
  }
  cum.back() = 1.0;  // guard the top end against rounding

  std::mt19937_64 rng(seed);
  std::unique_ptr<WalkBuffer> buf = g.walk_buffer();
  std::vector<Elem> out;
  out.reserve(num_samples);
  for (uint64_t i = 0; i < num_samples; ++i) {
    buf->reset();
    for (uint64_t t = 0; t < n; ++t) {
      double u = unit_double(rng);
      size_t k = std::upper_bound(cum.begin(), cum.end(), u) - cum.begin();
      if (k >= cum.size()) k = cum.size() - 1;
      buf->step(mu.support()[k]);
    }
    out.push_back(buf->current());
  }
  return out;
}

double confidence_radius(uint64_t num_samples) {
  if (num_samples == 0) throw ArgumentError("confidence radius needs at least one sample");
  return std::sqrt(std::log(2.0 / kDelta) / (2.0 * static_cast<double>(num_samples)));
}

nlohmann::json to_json(const Estimate& e) {
  return nlohmann::json{
      {"value", e.value}, {"radius", e.radius}, {"samples", e.samples}, {"exact", e.exact}};
}

Estimate estimate_commute_probability(const Group& g, const StepMeasure& mu, uint64_t n,
                                      uint64_t num_samples, uint64_t seed) {
  if (is_abelian(g)) return exact_value(1.0);
  if (num_samples == 0) throw ArgumentError("estimation needs at least one sample");
  std::vector<Elem> xs = sample_walks(g, mu, n, num_samples, seed);
  std::vector<Elem> ys = sample_walks(g, mu, n, num_samples, derived_seed(seed));
  uint64_t hits = 0;
  for (uint64_t i = 0; i < num_samples; ++i)
    if (g.mul(xs[i], ys[i]) == g.mul(ys[i], xs[i])) ++hits;
  return empirical(hits, num_samples);
}

Estimate estimate_square_probability(const Group& g, const StepMeasure& mu, const Elem& a,
                                     uint64_t n, uint64_t num_samples, uint64_t seed) {
  require_member(g, a, "target element");
  if (num_samples == 0) throw ArgumentError("estimation needs at least one sample");
  uint64_t hits = 0;
  for (const Elem& x : sample_walks(g, mu, n, num_samples, seed))
    if (g.mul(x, x) == a) ++hits;
  return empirical(hits, num_samples);
}

std::pair<Elem, Estimate> sup_square_probability(const Group& g, const StepMeasure& mu,
                                                 uint64_t n, uint64_t num_samples,
                                                 uint64_t seed) {
  if (num_samples == 0) throw ArgumentError("estimation needs at least one sample");
  std::vector<Elem> order;  // first-seen order keeps the argmax deterministic
  ElemMap<uint64_t> count;
  for (const Elem& x : sample_walks(g, mu, n, num_samples, seed)) {
    Elem sq = g.mul(x, x);
    auto [it, fresh] = count.emplace(sq, uint64_t{0});
    if (fresh) order.push_back(sq);
    ++it->second;
  }
  Elem best = order.front();
  uint64_t best_hits = count.at(best);
  for (const Elem& e : order)
    if (count.at(e) > best_hits) {
      best = e;
      best_hits = count.at(e);
    }
  return {best, empirical(best_hits, num_samples)};
}

Estimate estimate_coset_probability(const Group& g, const StepMeasure& mu, const Elem& a,
                                    const std::function<bool(const Elem&)>& in_h, uint64_t n,
                                    uint64_t num_samples, uint64_t seed) {
  require_member(g, a, "coset representative");
  if (!in_h) throw ArgumentError("coset estimation needs a membership test");
  if (num_samples == 0) throw ArgumentError("estimation needs at least one sample");
  Elem ai = g.inv(a);
  uint64_t hits = 0;
  for (const Elem& x : sample_walks(g, mu, n, num_samples, seed))
    if (in_h(g.mul(ai, x))) ++hits;
  return empirical(hits, num_samples);
}

InvolutionReport involution_threshold_report(const Group& g, const StepMeasure& mu, uint64_t n,
                                             uint64_t num_samples, uint64_t seed) {
  InvolutionReport r;
  r.estimate = estimate_square_probability(g, mu, g.identity(), n, num_samples, seed);
  r.threshold = (std::sqrt(5.0) - 1.0) / 2.0;
  r.exceeds_threshold = r.estimate.value > r.threshold;
  const double c = r.estimate.value;
  r.quadratic_margin = c * c + c - 1.0;
  return r;
}

nlohmann::json to_json(const InvolutionReport& r) {
  return nlohmann::json{{"estimate", to_json(r.estimate)},
                        {"threshold", r.threshold},
                        {"exceeds_threshold", r.exceeds_threshold},
                        {"quadratic_margin", r.quadratic_margin}};
}

TrendReport trend(const std::vector<uint64_t>& lengths,
                  const std::function<Estimate(uint64_t)>& estimator) {
  if (!estimator) throw ArgumentError("trend needs an estimator");
  TrendReport r;
  r.lengths = lengths;
  r.estimates.reserve(lengths.size());
  for (uint64_t n : lengths) r.estimates.push_back(estimator(n));

  bool all_separated = r.estimates.size() > 1;
  bool all_overlap = true;
  for (size_t i = 0; i + 1 < r.estimates.size(); ++i) {
    const Estimate& a = r.estimates[i];
    const Estimate& b = r.estimates[i + 1];
    const bool separated = b.value + b.radius < a.value - a.radius;
    const bool overlap =
        b.value + b.radius >= a.value - a.radius && a.value + a.radius >= b.value - b.radius;
    if (!separated) all_separated = false;
    if (!overlap) all_overlap = false;
  }
  if (r.estimates.size() <= 1)
    r.verdict = "flat";
  else if (all_separated)
    r.verdict = "decay";
  else if (all_overlap)
    r.verdict = "flat";
  else
    r.verdict = "mixed";
  return r;
}

nlohmann::json to_json(const TrendReport& r) {
  nlohmann::json est = nlohmann::json::array();
  for (const Estimate& e : r.estimates) est.push_back(to_json(e));
  return nlohmann::json{{"lengths", r.lengths}, {"estimates", est}, {"verdict", r.verdict}};
}

CoverReport coset_cover_check(const Group& g, const CoverSpec& spec, const Scope& scope) {
  CoverReport r;
  r.alpha_threshold = (3.0 - std::sqrt(5.0)) / 4.0;
  r.small_constant = 0.035;

  ElemSet fiber;
  for (const Elem& f : spec.fiber) {
    require_member(g, f, "fiber element");
    fiber.insert(f);
  }
  if (spec.translate) require_member(g, *spec.translate, "translate");

  std::vector<std::function<bool(const Elem&)>> member;
  std::vector<Elem> reps;
  double alpha = 0;
  bool alpha_complete = true;
  for (const CosetSpec& c : spec.cosets) {
    Elem rep = c.rep.valid() ? c.rep : g.identity();
    require_member(g, rep, "coset representative");
    reps.push_back(rep);
    if (c.use_canonical_subgroup) {
      if (!g.has_canonical_subgroup())
        throw ArgumentError("group '" + g.spec() + "' declares no canonical subgroup");
      member.emplace_back([&g](const Elem& e) { return g.canonical_subgroup_contains(e); });
      if (auto ix = g.canonical_subgroup_index())
        alpha += 1.0 / static_cast<double>(*ix);
      else
        alpha_complete = false;
    } else {
      if (!g.finite())
        throw UnsupportedError(
            "subgroup closure needs a finite group; use the canonical subgroup instead");
      auto sub = std::make_shared<ElemSet>(subgroup_closure(g, c.subgroup_gens));
      alpha += static_cast<double>(sub->size()) / static_cast<double>(*g.order());
      member.emplace_back([sub](const Elem& e) { return sub->count(e) != 0; });
    }
  }
  r.alpha = alpha;
  r.alpha_complete = alpha_complete;
  const double gap = 3.0 - std::sqrt(5.0) - 4.0 * alpha;
  if (alpha_complete && gap > 0) r.fiber_bound = 4.0 / (gap * gap);

  std::vector<Elem> pts = g.scope_elements(scope);
  r.scope_size = pts.size();
  Elem sinv = spec.translate ? g.inv(*spec.translate) : Elem();
  r.covers = true;
  for (const Elem& x : pts) {
    bool hit = false;
    if (!fiber.empty()) {
      if (fiber.count(g.mul(x, x))) hit = true;
      if (!hit && spec.translate) {
        Elem y = g.mul(sinv, x);
        if (fiber.count(g.mul(y, y))) hit = true;
      }
    }
    for (size_t i = 0; !hit && i < member.size(); ++i)
      if (member[i](g.mul(g.inv(reps[i]), x))) hit = true;
    if (!hit) {
      r.covers = false;
      r.counterexample = g.print(x);
      break;
    }
  }
  return r;
}

nlohmann::json to_json(const CoverReport& r) {
  nlohmann::json j{{"covers", r.covers},         {"scope_size", r.scope_size},
                   {"alpha", r.alpha},           {"alpha_complete", r.alpha_complete},
                   {"alpha_threshold", r.alpha_threshold},
                   {"small_constant", r.small_constant}};
  j["counterexample"] = r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json();
  j["fiber_bound"] = r.fiber_bound ? nlohmann::json(*r.fiber_bound) : nlohmann::json();
  return j;
}

double exact_commute_probability(const Group& g, const StepMeasure& mu, uint64_t n) {
  WalkDistribution d = exact_convolution(g, mu, n);
  const std::vector<Elem>& el = g.elements();
  double total = 0;
  for (size_t i = 0; i < el.size(); ++i) {
    if (d.p[i] == 0) continue;
    for (size_t j = 0; j < el.size(); ++j)
      if (d.p[j] != 0 && g.mul(el[i], el[j]) == g.mul(el[j], el[i])) total += d.p[i] * d.p[j];
  }
  return total;
}

double exact_square_probability(const Group& g, const StepMeasure& mu, const Elem& a,
                                uint64_t n) {
  require_member(g, a, "target element");
  WalkDistribution d = exact_convolution(g, mu, n);
  const std::vector<Elem>& el = g.elements();
  double total = 0;
  for (size_t i = 0; i < el.size(); ++i)
    if (g.mul(el[i], el[i]) == a) total += d.p[i];
  return total;
}

double exact_coset_probability(const Group& g, const StepMeasure& mu, const Elem& a,
                               const std::function<bool(const Elem&)>& in_h, uint64_t n) {
  require_member(g, a, "coset representative");
  if (!in_h) throw ArgumentError("coset probability needs a membership test");
  WalkDistribution d = exact_convolution(g, mu, n);
  const std::vector<Elem>& el = g.elements();
  Elem ai = g.inv(a);
  double total = 0;
  for (size_t i = 0; i < el.size(); ++i)
    if (d.p[i] != 0 && in_h(g.mul(ai, el[i]))) total += d.p[i];
  return total;
}

}  // namespace grr
