#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grr/genset.hpp"
#include "grr/group.hpp"

#include "json.hpp"

namespace grr {

// Finitely supported symmetric step measure with the identity in its support.
class StepMeasure {
public:
  StepMeasure(const Group& g, std::vector<Elem> support, std::vector<double> weight);

  // Uniform on {1} u S u S^-1 (the default driving measure).
  static StepMeasure lazy_uniform(const GenSet& s);
  // Averages mu with its translate by the involution s, making it
  // s-left-invariant: mu(s g) = mu(g) for all g.
  static StepMeasure s_left_invariant(const StepMeasure& mu, const Elem& s);

  const Group& group() const { return *group_; }
  const std::vector<Elem>& support() const { return support_; }
  const std::vector<double>& weights() const { return weight_; }
  // Weight of an element (0 outside the support).
  double weight_of(const Elem& e) const;

  bool is_s_left_invariant(const Elem& s) const;

private:
  const Group* group_;
  std::vector<Elem> support_;
  std::vector<double> weight_;
};

// Exact n-step distribution over a finite group, aligned with elements().
struct WalkDistribution {
  const Group* group = nullptr;
  uint64_t steps = 0;
  std::vector<double> p;

  double mass_of(const std::vector<Elem>& subset) const;
};

WalkDistribution exact_convolution(const Group& g, const StepMeasure& mu, uint64_t n);

// Endpoints of N independent n-step walks. Deterministic for a fixed seed.
std::vector<Elem> sample_walks(const Group& g, const StepMeasure& mu, uint64_t n,
                               uint64_t num_samples, uint64_t seed);

// Hoeffding confidence radius at delta = 0.01.
double confidence_radius(uint64_t num_samples);

struct Estimate {
  double value = 0;
  double radius = 0;   // 0 when exact
  uint64_t samples = 0;
  bool exact = false;
};

nlohmann::json to_json(const Estimate& e);

// P([g_n, g_n'] = 1) for two independent endpoints. Abelian groups short-
// circuit to the exact value 1.
Estimate estimate_commute_probability(const Group& g, const StepMeasure& mu,
                                      uint64_t n, uint64_t num_samples, uint64_t seed);

// P(g_n^2 = a).
Estimate estimate_square_probability(const Group& g, const StepMeasure& mu,
                                     const Elem& a, uint64_t n, uint64_t num_samples,
                                     uint64_t seed);

// Scans the observed squares and returns the most frequent value.
std::pair<Elem, Estimate> sup_square_probability(const Group& g, const StepMeasure& mu,
                                                 uint64_t n, uint64_t num_samples,
                                                 uint64_t seed);

// P(g_n in a H) for a decidable membership test.
Estimate estimate_coset_probability(const Group& g, const StepMeasure& mu,
                                    const Elem& a,
                                    const std::function<bool(const Elem&)>& in_h,
                                    uint64_t n, uint64_t num_samples, uint64_t seed);

// P(g_n^2 = 1) against the virtually-abelian threshold (sqrt(5)-1)/2.
struct InvolutionReport {
  Estimate estimate;
  double threshold = 0;         // (sqrt(5)-1)/2
  bool exceeds_threshold = false;
  double quadratic_margin = 0;  // c^2 + c - 1 at c = estimate
};

InvolutionReport involution_threshold_report(const Group& g, const StepMeasure& mu,
                                             uint64_t n, uint64_t num_samples,
                                             uint64_t seed);

nlohmann::json to_json(const InvolutionReport& r);

// Estimates along a geometric ladder of walk lengths with a decay verdict:
// "decay" when consecutive confidence intervals are strictly separated
// downward, "flat" when all overlap, otherwise "mixed".
struct TrendReport {
  std::vector<uint64_t> lengths;
  std::vector<Estimate> estimates;
  std::string verdict;
};

TrendReport trend(const std::vector<uint64_t>& lengths,
                  const std::function<Estimate(uint64_t)>& estimator);

nlohmann::json to_json(const TrendReport& r);

// Cover check for G = sq^-1(F) u s sq^-1(F) u a_1 H_1 u ... u a_m H_m on a
// scope, plus the index sum alpha = sum 1/|G:H_i| and the square-obstruction
// constants.
struct CosetSpec {
  Elem rep;                         // a_i
  std::vector<Elem> subgroup_gens;  // finite groups: closure taken internally
  bool use_canonical_subgroup = false;  // infinite families: the declared one
};

struct CoverSpec {
  std::vector<Elem> fiber;           // F (may be empty)
  std::optional<Elem> translate;     // s of the sq^-1 part
  std::vector<CosetSpec> cosets;
};

struct CoverReport {
  bool covers = false;
  std::optional<std::string> counterexample;  // printed uncovered element
  uint64_t scope_size = 0;
  double alpha = 0;
  bool alpha_complete = true;  // false if some index was unavailable
  double alpha_threshold = 0;  // (3 - sqrt(5)) / 4
  double small_constant = 0;   // 0.035
  std::optional<double> fiber_bound;  // 4 / (3 - sqrt(5) - 4 alpha)^2 when defined
};

CoverReport coset_cover_check(const Group& g, const CoverSpec& spec, const Scope& scope);

nlohmann::json to_json(const CoverReport& r);

// Exact counterparts used as oracles on finite groups.
double exact_commute_probability(const Group& g, const StepMeasure& mu, uint64_t n);
double exact_square_probability(const Group& g, const StepMeasure& mu, const Elem& a,
                                uint64_t n);
double exact_coset_probability(const Group& g, const StepMeasure& mu, const Elem& a,
                               const std::function<bool(const Elem&)>& in_h, uint64_t n);

}  // namespace grr
