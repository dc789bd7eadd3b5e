#include "grr/construct.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "grr/core.hpp"
#include "grr/predicates.hpp"

namespace grr {

namespace {

using ElemSet = std::unordered_set<Elem, ElemHash, ElemEq>;

// Working data the candidate search needs about the current set S. The
// extension loop keeps one of these alive and grows it incrementally instead
// of rebuilding the quadratic pieces after every accepted step.
struct SearchContext {
  ElemSet b2;              // {1} u S u S*S, the word-length <= 2 test
  TriangleCensus base;     // census of S
  std::vector<Elem> inv;   // member inverses, aligned with S
  ElemSet squares;         // {u^2 : u in S}
};

SearchContext make_context(const GenSet& s) {
  const Group& g = s.group();
  SearchContext ctx;
  ctx.base = census(s);
  ctx.b2.insert(g.identity());
  ctx.inv.reserve(s.size());
  for (const Elem& u : s.elems()) {
    ctx.b2.insert(u);
    ctx.inv.push_back(g.inv(u));
    ctx.squares.insert(g.mul(u, u));
    for (const Elem& v : s.elems()) ctx.b2.insert(g.mul(u, v));
  }
  return ctx;
}

// Accounts for the step's added elements; `next` is the already-extended set.
void extend_context(SearchContext& ctx, const GenSet& next,
                    const AugmentationStep& step) {
  const Group& g = next.group();
  ctx.base.delta = step.after.delta;
  for (uint32_t c : step.delta_counts) ctx.base.delta.push_back(c);
  for (const Elem& d : step.delta_elems) {
    ctx.b2.insert(d);
    ctx.inv.push_back(g.inv(d));
    ctx.squares.insert(g.mul(d, d));
    for (const Elem& u : next.elems()) {
      ctx.b2.insert(g.mul(u, d));
      ctx.b2.insert(g.mul(d, u));
    }
  }
}

struct CandidateCheck {
  bool ok = false;
  std::vector<Elem> added;             // Delta_g \ S in listing order
  TriangleCensus after;                // counts at the positions of S
  std::vector<uint32_t> delta_counts;  // counts of the added elements in S'
  uint32_t increment = 0;
};

// Direct verification of the step invariants for S' = S u Delta_g.
CandidateCheck check_candidate(const GenSet& s, const SearchContext& ctx,
                               const Elem& s0, const Elem& cand) {
  CandidateCheck out;
  const Group& g = s.group();
  const Elem id = g.identity();

  std::vector<Elem> added;
  {
    ElemSet seen;
    for (Elem& d : delta_of(g, cand, s0))
      if (!s.contains(d) && seen.insert(d).second) added.push_back(std::move(d));
  }
  if (added.empty() || added.size() > 4) return out;
  for (const Elem& d : added) {
    if (d == id || g.mul(d, d) == id) return out;  // order <= 2
    if (ctx.squares.count(d)) return out;          // collides with a member square
  }
  ElemSet dset(added.begin(), added.end());
  for (const Elem& d : added) {  // S' must stay symmetric
    Elem di = g.inv(d);
    if (!s.contains(di) && !dset.count(di)) return out;
  }

  // New counts at the S positions: the old count plus the pairs that involve
  // at least one added element.
  const size_t m = s.size();
  const int pos_s0 = s.index_of(s0);
  const int pos_s0inv = s.index_of(g.inv(s0));
  out.after.delta.resize(m);
  for (size_t i = 0; i < m; ++i) {
    const Elem& t = s[i];
    uint32_t c = ctx.base.delta[i];
    for (const Elem& d : added) {
      Elem td = g.mul(t, d);
      if (s.contains(td)) ++c;
      if (dset.count(td)) ++c;
      if (s.contains(g.mul(ctx.inv[i], d))) ++c;
    }
    if (static_cast<int>(i) != pos_s0 && static_cast<int>(i) != pos_s0inv &&
        c != ctx.base.delta[i])
      return out;  // counts away from s0 must not move
    out.after.delta[i] = c;
  }
  const uint32_t inc = out.after.delta[pos_s0] - ctx.base.delta[pos_s0];
  if (inc != 1 && inc != 2 && inc != 4) return out;
  if (out.after.delta[pos_s0inv] - ctx.base.delta[pos_s0inv] != inc) return out;

  // Every added element may sit in at most 6 triangles of S'.
  auto member = [&](const Elem& e) { return s.contains(e) || dset.count(e) != 0; };
  out.delta_counts.reserve(added.size());
  for (const Elem& d : added) {
    Elem dinv = g.inv(d);
    uint32_t c = 0;
    for (const Elem& u : s.elems())
      if (member(g.mul(dinv, u))) ++c;
    for (const Elem& u : added)
      if (member(g.mul(dinv, u))) ++c;
    if (c > 6) return out;
    out.delta_counts.push_back(c);
  }

  out.added = std::move(added);
  out.increment = inc;
  out.ok = true;
  return out;
}

// The case split behind the realized increment: an involution reaches +2
// without its centralizer helping, +4 with it; a non-involution reaches +1
// alone and +2 with it. Recorded on the step, never decided up front.
std::string inferred_branch(const Group& g, const Elem& s0, uint32_t increment) {
  if (increment == 1) return "locally_finite";
  if (increment == 4) return "not_locally_finite";
  bool involution = g.is_identity(g.mul(s0, s0));
  return involution ? "locally_finite" : "not_locally_finite";
}

AugmentationStep augment_with_context(const GenSet& s, const SearchContext& ctx,
                                      const Elem& s0, uint64_t budget) {
  const Group& g = s.group();
  const Elem s0inv = g.inv(s0);

  auto en = g.ball();
  uint64_t tested = 0;
  while (auto nx = en->next()) {
    Elem cand = std::move(nx->first);
    if (ctx.b2.count(cand)) continue;                // |g|_S <= 2
    if (ctx.b2.count(g.mul(s0inv, cand))) continue;  // |s0^-1 g|_S <= 2
    ++tested;
    CandidateCheck chk = check_candidate(s, ctx, s0, cand);
    if (chk.ok) {
      // Re-verify the whole census of S' from scratch before emitting.
      GenSet sp = s.with(chk.added);
      TriangleCensus full = census(sp);
      for (size_t i = 0; i < s.size(); ++i)
        if (full.delta[i] != chk.after.delta[i])
          throw Error(Status::internal, "census re-verification failed on a member");
      for (size_t k = 0; k < chk.added.size(); ++k)
        if (full.delta[s.size() + k] != chk.delta_counts[k])
          throw Error(Status::internal,
                      "census re-verification failed on an added element");

      AugmentationStep step;
      step.s0 = g.print(s0);
      step.g = g.print(cand);
      step.delta.reserve(chk.added.size());
      for (const Elem& d : chk.added) step.delta.push_back(g.print(d));
      step.delta_elems = std::move(chk.added);
      step.before = ctx.base;
      step.after = std::move(chk.after);
      step.delta_counts = std::move(chk.delta_counts);
      step.increment = chk.increment;
      step.branch = inferred_branch(g, s0, chk.increment);
      step.candidates_tested = tested;
      return step;
    }
    if (tested >= budget)
      throw SearchError("augmentation budget exhausted after " +
                        std::to_string(tested) + " candidates targeting " +
                        g.print(s0));
  }
  throw SearchError("augmentation candidates exhausted after " +
                    std::to_string(tested) + " tested, none admissible for " +
                    g.print(s0));
}

bool is_involution(const Group& g, const Elem& e) {
  return g.is_identity(g.mul(e, e));
}

void require_base_arguments(const GenSet& s0) {
  if (!s0.symmetric())
    throw ArgumentError("the base generating set must be symmetric");
  if (!generates(s0.group(), s0))
    throw ArgumentError("the base set must generate the group");
}

void require_rigidity_hypothesis(const Group& g) {
  if (is_abelian(g))
    throw HypothesisError("orientation rigidity fails for abelian groups; '" +
                          g.spec() + "' classifies as abelian");
  if (is_generalized_dicyclic(g))
    throw HypothesisError(
        "orientation rigidity fails for generalized dicyclic groups; '" + g.spec() +
        "' classifies as generalized dicyclic");
}

// (S0 u S0^2 u S0^3) \ {1}, first occurrence order.
GenSet expand_base(const GenSet& s0) {
  const Group& g = s0.group();
  std::vector<Elem> out;
  ElemSet seen{g.identity()};
  auto add = [&](Elem e) {
    if (seen.insert(e).second) out.push_back(std::move(e));
  };
  for (const Elem& a : s0.elems()) add(a);
  std::vector<Elem> pairs;
  pairs.reserve(s0.size() * s0.size());
  for (const Elem& a : s0.elems())
    for (const Elem& b : s0.elems()) pairs.push_back(g.mul(a, b));
  for (const Elem& p : pairs) add(p);
  for (const Elem& p : pairs)
    for (const Elem& c : s0.elems()) add(g.mul(p, c));
  return GenSet(&g, std::move(out));
}

}  // namespace

GenSet orientation_rigid_base(const GenSet& s0) {
  require_base_arguments(s0);
  require_rigidity_hypothesis(s0.group());
  return expand_base(s0);
}

std::vector<Elem> delta_of(const Group& g, const Elem& cand, const Elem& s0) {
  Elem ginv = g.inv(cand);
  return {cand, ginv, g.mul(g.inv(s0), cand), g.mul(ginv, s0)};
}

std::vector<Elem> collision_set(const Group& g, const Elem& cand, const Elem& s0,
                                const Elem& s) {
  if (g.is_identity(s)) throw ArgumentError("collision test needs s != 1");
  const Elem ginv = g.inv(cand);
  const Elem s0inv = g.inv(s0);
  const Elem sinv = g.inv(s);
  const Elem gg = g.mul(cand, cand);
  const Elem h = g.mul(s0inv, cand);  // s0^-1 g
  const Elem hh = g.mul(h, h);
  const Elem gs0 = g.mul(ginv, s0);  // g^-1 s0

  std::vector<Elem> out;
  ElemSet seen;
  auto add = [&](const Elem& e) {
    if (seen.insert(e).second) out.push_back(e);
  };
  if (s == s0) add(cand);
  if (s == s0inv) add(h);
  if (s == g.conj(s0, cand)) add(gs0);
  if (s == g.conj(s0inv, cand)) add(ginv);
  if (gg == s) add(cand);
  if (gg == sinv) add(ginv);
  if (gg == g.mul(s0, s)) add(h);
  if (gg == g.mul(s0, sinv)) add(ginv);
  if (hh == g.mul(s0inv, s)) add(cand);
  if (hh == g.mul(s0inv, sinv)) add(gs0);
  if (hh == s) add(h);
  if (hh == sinv) add(gs0);
  return out;
}

void require_augmentable(const Group& g, bool force) {
  if (force) return;
  Tri va = g.traits().virtually_abelian;
  if (va == Tri::yes)
    throw HypothesisError("the augmentation search needs a group that is not "
                          "virtually abelian; '" +
                          g.spec() +
                          "' is declared virtually abelian (pass force to search "
                          "anyway)");
  if (va == Tri::unknown)
    throw HypothesisError("'" + g.spec() +
                          "' does not declare whether it is virtually abelian; "
                          "refusing the augmentation search (pass force to try)");
}

AugmentationStep augment_once(const GenSet& s, const Elem& s0, uint64_t budget,
                              bool force) {
  const Group& g = s.group();
  require_augmentable(g, force);
  if (budget == 0) throw ArgumentError("the candidate budget must be positive");
  if (!s.symmetric()) throw ArgumentError("augmentation needs a symmetric set");
  if (!s.contains(s0))
    throw ArgumentError("the targeted element must belong to the set");
  if (!generates(g, s)) throw ArgumentError("the set must generate the group");
  return augment_with_context(s, make_context(s), s0, budget);
}

GenSet apply_step(const GenSet& s, const AugmentationStep& step) {
  if (!step.delta_elems.empty()) return s.with(step.delta_elems);
  std::vector<Elem> added;
  added.reserve(step.delta.size());
  for (const std::string& d : step.delta) added.push_back(s.group().parse(d));
  return s.with(added);
}

ConstructionTrace distinguishing_extension(const GenSet& s, uint64_t budget,
                                           bool force) {
  const Group& g = s.group();
  require_augmentable(g, force);
  if (budget == 0) throw ArgumentError("the candidate budget must be positive");
  if (!s.symmetric())
    throw ArgumentError("the distinguishing extension needs a symmetric set");
  if (!generates(g, s)) throw ArgumentError("the set must generate the group");

  ConstructionTrace trace;
  trace.group = g.spec();
  trace.initial = s.printed();

  const size_t n = s.size();
  const uint64_t step_cap = n * (n + 13) / 2;
  const auto classes = s.inverse_pair_classes();

  GenSet cur = s;
  SearchContext ctx = make_context(cur);
  std::unordered_set<uint32_t> used;
  uint64_t steps_done = 0;

  auto smallest_unused = [&used](uint32_t from) {
    uint32_t v = from;
    while (used.count(v)) ++v;
    return v;
  };

  for (auto [i, j] : classes) {
    const Elem s0 = s[i];
    const std::string name = g.print(s0);
    uint32_t target = smallest_unused(7);
    while (true) {
      uint32_t cv = ctx.base.delta[i];
      if (cv == target) break;
      if (cv > target) {
        uint32_t next = smallest_unused(cv);
        trace.adjustments.push_back("retarget " + name + ": " +
                                    std::to_string(target) + " -> " +
                                    std::to_string(next) + " (count reached " +
                                    std::to_string(cv) + ")");
        target = next;
        if (cv == target) break;
      }
      if (steps_done >= step_cap) {
        trace.adjustments.push_back("step cap " + std::to_string(step_cap) +
                                    " reached while raising " + name);
        trace.final_set = cur.printed();
        return trace;
      }
      AugmentationStep step;
      try {
        step = augment_with_context(cur, ctx, s0, budget);
      } catch (const SearchError& e) {
        trace.adjustments.push_back("search failure while raising " + name + ": " +
                                    e.what());
        trace.final_set = cur.printed();
        return trace;
      }
      GenSet next = apply_step(cur, step);
      extend_context(ctx, next, step);
      cur = std::move(next);
      trace.steps.push_back(std::move(step));
      ++steps_done;
    }
    used.insert(target);
  }

  trace.final_set = cur.printed();
  trace.complete = true;

  // Independent final check: recompute the census from scratch and confirm
  // the distinguishing shape the extension promises.
  TriangleCensus fin = census(cur);
  if (cur.size() > 2 * n * (n + 14))
    throw Error(Status::internal, "extension exceeded its size bound");
  std::unordered_set<uint32_t> vals;
  for (auto [i, j] : classes) {
    if (fin.delta[i] != fin.delta[j] || fin.delta[i] < 7)
      throw Error(Status::internal, "final census lost a member value");
    if (!vals.insert(fin.delta[i]).second)
      throw Error(Status::internal, "final census has colliding member values");
  }
  for (size_t k = n; k < cur.size(); ++k) {
    if (fin.delta[k] > 6)
      throw Error(Status::internal, "an added element exceeds six triangles");
    if (is_involution(g, cur[k]))
      throw Error(Status::internal, "an added element is an involution");
  }
  return trace;
}

PipelineResult grr_generating_set(const GenSet& s0, uint64_t budget, bool force) {
  require_base_arguments(s0);
  if (!force) require_rigidity_hypothesis(s0.group());
  GenSet base = expand_base(s0);
  ConstructionTrace trace = distinguishing_extension(base, budget, force);
  GenSet out = base;
  for (const AugmentationStep& step : trace.steps) out = apply_step(out, step);
  return PipelineResult{std::move(out), std::move(trace)};
}

std::vector<std::string> verify_trace(const Group& g, const ConstructionTrace& t) {
  std::vector<std::string> bad;
  auto fail = [&bad](std::string m) { bad.push_back(std::move(m)); };

  if (!t.group.empty() && t.group != g.spec())
    fail("trace was recorded for '" + t.group + "', replayed against '" + g.spec() +
         "'");
  if (t.initial.empty()) {
    fail("trace has no initial set");
    return bad;
  }

  std::optional<GenSet> cur;
  try {
    std::vector<Elem> init;
    init.reserve(t.initial.size());
    for (const std::string& line : t.initial) init.push_back(g.parse(line));
    cur.emplace(&g, std::move(init));
  } catch (const Error& e) {
    fail(std::string("initial set rejected: ") + e.what());
    return bad;
  }
  if (!cur->symmetric()) {
    fail("initial set is not symmetric");
    return bad;
  }
  if (cur->size() != t.initial.size()) fail("initial set repeats a member");
  const size_t n = cur->size();

  size_t idx = 0;
  for (const AugmentationStep& step : t.steps) {
    ++idx;
    const std::string at = "step " + std::to_string(idx) + ": ";
    Elem s0, cand;
    try {
      s0 = g.parse(step.s0);
      cand = g.parse(step.g);
    } catch (const Error& e) {
      fail(at + "unparseable elements: " + e.what());
      return bad;
    }
    if (!cur->contains(s0)) {
      fail(at + "target is not a member of the current set");
      return bad;
    }
    SearchContext ctx = make_context(*cur);
    if (ctx.b2.count(cand)) fail(at + "witness has word length below 3");
    if (ctx.b2.count(g.mul(g.inv(s0), cand)))
      fail(at + "s0^-1 g has word length below 3");
    if (!step.before.delta.empty() && !(step.before == ctx.base))
      fail(at + "recorded before-census disagrees with the replay");
    CandidateCheck chk = check_candidate(*cur, ctx, s0, cand);
    if (!chk.ok) {
      fail(at + "step fails direct verification");
      return bad;
    }
    std::vector<std::string> added_names;
    added_names.reserve(chk.added.size());
    for (const Elem& d : chk.added) added_names.push_back(g.print(d));
    if (added_names != step.delta) fail(at + "recorded added elements differ");
    if (!step.after.delta.empty() && !(chk.after == step.after))
      fail(at + "recorded after-census disagrees with the replay");
    if (!step.delta_counts.empty() && chk.delta_counts != step.delta_counts)
      fail(at + "recorded added-element counts differ");
    if (step.increment != 0 && chk.increment != step.increment)
      fail(at + "recorded increment differs");
    if (!step.branch.empty() &&
        inferred_branch(g, s0, chk.increment) != step.branch)
      fail(at + "recorded branch differs");
    *cur = cur->with(chk.added);
    if (!cur->symmetric()) {
      fail(at + "set lost symmetry");
      return bad;
    }
  }

  if (!t.final_set.empty() && cur->printed() != t.final_set)
    fail("final set does not match the replay");

  if (t.complete) {
    TriangleCensus fin = census(*cur);
    if (cur->size() > 2 * n * (n + 14)) fail("size bound violated");
    std::unordered_set<uint32_t> vals;
    for (auto [i, j] : cur->inverse_pair_classes()) {
      if (static_cast<size_t>(i) >= n) continue;
      if (fin.delta[i] != fin.delta[j])
        fail("an inverse pair disagrees in the final census");
      if (fin.delta[i] < 7) fail("a member ended below seven triangles");
      if (!vals.insert(fin.delta[i]).second) fail("two member classes share a value");
    }
    for (size_t k = n; k < cur->size(); ++k) {
      if (fin.delta[k] > 6) fail("an added element exceeds six triangles");
      if (is_involution(g, (*cur)[k])) fail("an added element is an involution");
    }
  }
  return bad;
}

nlohmann::json to_json(const ConstructionTrace& t) {
  nlohmann::json steps = nlohmann::json::array();
  for (const AugmentationStep& s : t.steps) {
    steps.push_back({{"s0", s.s0},
                     {"g", s.g},
                     {"delta_g", s.delta},
                     {"census_before", s.before.delta},
                     {"census_after", s.after.delta},
                     {"delta_counts", s.delta_counts},
                     {"increment", s.increment},
                     {"branch", s.branch},
                     {"candidates_tested", s.candidates_tested}});
  }
  return {{"group", t.group},       {"initial", t.initial},
          {"final", t.final_set},   {"steps", steps},
          {"adjustments", t.adjustments}, {"complete", t.complete}};
}

ConstructionTrace trace_from_json(const nlohmann::json& j) {
  try {
    ConstructionTrace t;
    t.group = j.value("group", std::string());
    t.initial = j.at("initial").get<std::vector<std::string>>();
    t.final_set = j.value("final", std::vector<std::string>{});
    t.adjustments = j.value("adjustments", std::vector<std::string>{});
    t.complete = j.value("complete", false);
    if (j.count("steps"))
      for (const nlohmann::json& js : j.at("steps")) {
        AugmentationStep s;
        s.s0 = js.at("s0").get<std::string>();
        s.g = js.at("g").get<std::string>();
        s.delta = js.at("delta_g").get<std::vector<std::string>>();
        s.before.delta = js.value("census_before", std::vector<uint32_t>{});
        s.after.delta = js.value("census_after", std::vector<uint32_t>{});
        s.delta_counts = js.value("delta_counts", std::vector<uint32_t>{});
        s.increment = js.value("increment", 0u);
        s.branch = js.value("branch", std::string());
        s.candidates_tested = js.value("candidates_tested", uint64_t{0});
        t.steps.push_back(std::move(s));
      }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("trace JSON malformed: ") + e.what());
  }
}

}  // namespace grr
