#include "grr.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "grr/autgrp.hpp"
#include "grr/cayley.hpp"
#include "grr/classify.hpp"
#include "grr/construct.hpp"
#include "grr/families.hpp"
#include "grr/randwalk.hpp"

#include "json.hpp"

struct grr_group {
  grr::GroupPtr g;
};

struct grr_genset {
  grr::GroupPtr owner;  // keeps the group alive independently of the grr_group handle
  grr::GenSet s;
};

namespace {

thread_local std::string tl_error;

grr_status to_status(grr::Status s) { return static_cast<grr_status>(static_cast<int>(s)); }

template <typename F>
grr_status guarded(F&& f) {
  try {
    f();
    tl_error.clear();
    return GRR_OK;
  } catch (const grr::Error& e) {
    tl_error = e.what();
    return to_status(e.status());
  } catch (const std::exception& e) {
    tl_error = e.what();
    return GRR_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw grr::ArgumentError(what);
}

std::string joined_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

std::vector<uint64_t> parse_lengths(const char* text) {
  require(text != nullptr && *text != '\0', "lengths must be a comma-separated list");
  std::vector<uint64_t> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      throw grr::ArgumentError("bad walk length \"" + tok + "\"");
    }
    if (used != tok.size()) throw grr::ArgumentError("bad walk length \"" + tok + "\"");
    out.push_back(v);
  }
  require(!out.empty(), "lengths must be a comma-separated list");
  return out;
}

nlohmann::json probe_common(const grr::Group& g, const grr::GenSet& s, const char* quantity,
                            uint64_t samples, uint64_t seed) {
  nlohmann::json j;
  j["group"] = g.spec();
  j["set"] = s.printed();
  j["quantity"] = quantity;
  j["samples"] = samples;
  j["seed"] = seed;
  return j;
}

void attach_trend(nlohmann::json& j, const grr::TrendReport& t) {
  j["lengths"] = t.lengths;
  nlohmann::json estimates = nlohmann::json::array();
  nlohmann::json radii = nlohmann::json::array();
  for (const grr::Estimate& e : t.estimates) {
    estimates.push_back(grr::to_json(e));
    radii.push_back(e.radius);
  }
  j["estimates"] = estimates;
  j["radii"] = radii;
  j["trend_verdict"] = t.verdict;
}

}  // namespace

extern "C" {

const char* grr_version(void) { return "0.1.0"; }

const char* grr_status_name(grr_status s) {
  switch (s) {
    case GRR_OK:
      return "ok";
    case GRR_ERR_ARGUMENT:
      return "argument";
    case GRR_ERR_HYPOTHESIS:
      return "hypothesis";
    case GRR_ERR_SEARCH:
      return "search";
    case GRR_ERR_IO:
      return "io";
    case GRR_ERR_UNSUPPORTED:
      return "unsupported";
    case GRR_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* grr_last_error(void) { return tl_error.c_str(); }

void grr_free(char* s) { std::free(s); }

grr_status grr_group_open(const char* spec, grr_group** out) {
  return guarded([&] {
    require(spec != nullptr, "spec must not be null");
    require(out != nullptr, "out must not be null");
    *out = new grr_group{grr::make_group(spec)};
  });
}

grr_status grr_group_from_table_json(const char* json_text, grr_group** out) {
  return guarded([&] {
    require(json_text != nullptr, "json_text must not be null");
    require(out != nullptr, "out must not be null");
    *out = new grr_group{grr::group_from_table_json(json_text)};
  });
}

grr_status grr_group_from_permutations(const char* text, grr_group** out) {
  return guarded([&] {
    require(text != nullptr, "text must not be null");
    require(out != nullptr, "out must not be null");
    *out = new grr_group{grr::group_from_permutation_text(text)};
  });
}

void grr_group_close(grr_group* g) { delete g; }

grr_status grr_group_order(const grr_group* g, uint64_t* order, int* is_finite) {
  return guarded([&] {
    require(g != nullptr, "group handle must not be null");
    require(order != nullptr && is_finite != nullptr, "out pointers must not be null");
    if (auto n = g->g->order()) {
      *order = *n;
      *is_finite = 1;
    } else {
      *order = 0;
      *is_finite = 0;
    }
  });
}

grr_status grr_genset_default(const grr_group* g, grr_genset** out) {
  return guarded([&] {
    require(g != nullptr, "group handle must not be null");
    require(out != nullptr, "out must not be null");
    *out = new grr_genset{g->g, grr::GenSet::symmetrized(*g->g, g->g->generators())};
  });
}

grr_status grr_genset_parse(const grr_group* g, const char* text, grr_genset** out) {
  return guarded([&] {
    require(g != nullptr, "group handle must not be null");
    require(text != nullptr, "text must not be null");
    require(out != nullptr, "out must not be null");
    *out = new grr_genset{g->g, grr::GenSet::parse_lines(*g->g, text)};
  });
}

void grr_genset_close(grr_genset* s) { delete s; }

size_t grr_genset_size(const grr_genset* s) { return s ? s->s.size() : 0; }

grr_status grr_genset_print(const grr_genset* s, char** out) {
  return guarded([&] {
    require(s != nullptr, "set handle must not be null");
    require(out != nullptr, "out must not be null");
    *out = dup_string(joined_lines(s->s.printed()));
  });
}

grr_status grr_classify(const grr_group* g, const char* kind, char** json_out) {
  return guarded([&] {
    require(g != nullptr, "group handle must not be null");
    require(kind != nullptr, "kind must not be null");
    require(json_out != nullptr, "out must not be null");
    std::string k = kind;
    grr::Classification c;
    if (k == "grr")
      c = grr::classify_grr(*g->g);
    else if (k == "drr")
      c = grr::classify_drr(*g->g);
    else if (k == "orr")
      c = grr::classify_orr(*g->g);
    else
      throw grr::ArgumentError("kind must be grr, drr or orr");
    nlohmann::json j = grr::to_json(c);
    j["group"] = g->g->spec();
    *json_out = dup_string(j.dump(2));
  });
}

grr_status grr_census(const grr_genset* s, char** json_out) {
  return guarded([&] {
    require(s != nullptr, "set handle must not be null");
    require(json_out != nullptr, "out must not be null");
    grr::TriangleCensus c = grr::census(s->s);
    *json_out = dup_string(grr::census_json(s->s, c).dump(2));
  });
}

grr_status grr_construct(const grr_genset* s0, uint64_t budget, int force,
                         char** trace_json_out, char** set_text_out) {
  return guarded([&] {
    require(s0 != nullptr, "set handle must not be null");
    require(trace_json_out != nullptr && set_text_out != nullptr, "out must not be null");
    *trace_json_out = nullptr;
    *set_text_out = nullptr;
    uint64_t b = budget == 0 ? grr::default_augment_budget : budget;
    grr::PipelineResult r = grr::grr_generating_set(s0->s, b, force != 0);
    *trace_json_out = dup_string(grr::to_json(r.trace).dump(2));
    *set_text_out = dup_string(joined_lines(r.set.printed()));
    if (!r.trace.complete)
      throw grr::SearchError("construction incomplete: " +
                             (r.trace.adjustments.empty() ? std::string("no progress")
                                                          : r.trace.adjustments.back()));
  });
}

grr_status grr_verify(const grr_genset* s, const char* mode, char** json_out) {
  return guarded([&] {
    require(s != nullptr, "set handle must not be null");
    require(mode != nullptr, "mode must not be null");
    require(json_out != nullptr, "out must not be null");
    std::string m = mode;
    nlohmann::json j;
    if (m == "grr")
      j = grr::to_json(grr::verify_grr(s->s));
    else if (m == "drr")
      j = grr::to_json(grr::verify_drr(s->s));
    else if (m == "orr")
      j = grr::to_json(grr::verify_orr(s->s));
    else if (m == "rigidity")
      j = grr::to_json(grr::orientation_rigidity_check(s->s));
    else
      throw grr::ArgumentError("mode must be grr, drr, orr or rigidity");
    j["group"] = s->s.group().spec();
    j["set"] = s->s.printed();
    *json_out = dup_string(j.dump(2));
  });
}

grr_status grr_probe(const grr_group* g, const grr_genset* s, const char* quantity,
                     const char* lengths, uint64_t samples, uint64_t seed, int radius,
                     char** json_out) {
  return guarded([&] {
    require(g != nullptr, "group handle must not be null");
    require(quantity != nullptr, "quantity must not be null");
    require(json_out != nullptr, "out must not be null");
    const grr::Group& grp = *g->g;
    grr::GenSet set =
        s != nullptr ? s->s : grr::GenSet::symmetrized(grp, grp.generators());
    if (s != nullptr) require(s->owner.get() == g->g.get(), "set belongs to a different group");
    grr::StepMeasure mu = grr::StepMeasure::lazy_uniform(set);

    std::string q = quantity;
    nlohmann::json j = probe_common(grp, set, quantity, samples, seed);

    if (q == "cover") {
      // G = sq^-1(1) u s sq^-1(1) on the scope, s the first involution in the set.
      grr::CoverSpec spec;
      spec.fiber.push_back(grp.identity());
      for (const grr::Elem& e : set.elems())
        if (grp.is_identity(grp.mul(e, e))) {
          spec.translate = e;
          break;
        }
      if (!spec.translate)
        throw grr::ArgumentError("cover probe needs an involution in the set");
      grr::Scope scope = radius < 0 ? grr::Scope::whole() : grr::Scope::ball(radius);
      grr::CoverReport r = grr::coset_cover_check(grp, spec, scope);
      j["translate"] = grp.print(*spec.translate);
      j["radius"] = radius;
      j["cover"] = grr::to_json(r);
      *json_out = dup_string(j.dump(2));
      return;
    }

    std::vector<uint64_t> ns = parse_lengths(lengths);
    require(samples > 0, "samples must be positive");

    std::function<grr::Estimate(uint64_t)> estimator;
    if (q == "commute") {
      estimator = [&](uint64_t n) {
        return grr::estimate_commute_probability(grp, mu, n, samples, seed);
      };
    } else if (q == "square") {
      std::vector<grr::Estimate> ests;
      nlohmann::json arg = nlohmann::json::array();
      for (uint64_t n : ns) {
        auto [e, est] = grr::sup_square_probability(grp, mu, n, samples, seed);
        arg.push_back(grp.print(e));
        ests.push_back(est);
      }
      size_t k = 0;
      grr::TrendReport t = grr::trend(ns, [&](uint64_t) { return ests[k++]; });
      attach_trend(j, t);
      j["argmax"] = arg;
      *json_out = dup_string(j.dump(2));
      return;
    } else if (q == "coset") {
      if (!grp.has_canonical_subgroup())
        throw grr::ArgumentError("group '" + grp.spec() +
                                 "' declares no canonical subgroup for coset probes");
      estimator = [&](uint64_t n) {
        return grr::estimate_coset_probability(
            grp, mu, grp.identity(),
            [&grp](const grr::Elem& e) { return grp.canonical_subgroup_contains(e); }, n,
            samples, seed);
      };
      j["subgroup"] = grp.canonical_subgroup_name();
      if (auto ix = grp.canonical_subgroup_index()) j["subgroup_index"] = *ix;
    } else if (q == "involution") {
      nlohmann::json reports = nlohmann::json::array();
      estimator = [&](uint64_t n) {
        grr::InvolutionReport r =
            grr::involution_threshold_report(grp, mu, n, samples, seed);
        reports.push_back(grr::to_json(r));
        return r.estimate;
      };
      grr::TrendReport t = grr::trend(ns, estimator);
      attach_trend(j, t);
      j["reports"] = reports;
      *json_out = dup_string(j.dump(2));
      return;
    } else {
      throw grr::ArgumentError(
          "quantity must be commute, square, coset, involution or cover");
    }

    attach_trend(j, grr::trend(ns, estimator));
    *json_out = dup_string(j.dump(2));
  });
}

grr_status grr_export_graph(const grr_genset* s, int directed, int radius, const char* format,
                            char** out) {
  return guarded([&] {
    require(s != nullptr, "set handle must not be null");
    require(format != nullptr, "format must not be null");
    require(out != nullptr, "out must not be null");
    std::optional<int> r;
    if (radius >= 0) r = radius;
    grr::CayleyGraph graph =
        directed ? grr::build_cayley_digraph(s->s, r) : grr::build_cayley_graph(s->s, r);
    std::string f = format;
    if (f == "dot")
      *out = dup_string(grr::to_dot(graph));
    else if (f == "json")
      *out = dup_string(grr::to_json(graph).dump(2));
    else
      throw grr::ArgumentError("format must be dot or json");
  });
}

}  // extern "C"
