#pragma once

#include "multconv/measure.hpp"
#include "multconv/sphere_measure.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace multconv {

/* Deterministic source for the generators. Draws use raw modular reduction so
 * results do not depend on the standard library's distribution algorithms. */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [0, k).
  std::uint64_t below(std::uint64_t k) { return engine_() % k; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return (engine_() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// {-2, -1, -1/2, 0, 1/2, 1, 2}
const std::vector<Rational>& default_pool();
/// The default pool without 0, so generated atoms lie in A_[n].
const std::vector<Rational>& nonzero_pool();
/// {0, 1/2, 1, 2}, the closed positive orthant.
const std::vector<Rational>& positive_pool();

Rational gen_rational(Rng& rng);
/// Small rational, with probability 1/4 times sqrt(2) or sqrt(3) when surds is set.
Surd gen_weight(Rng& rng, bool surds);
/// Random surd with up to three terms over radicands {1, 2, 3, 5, 6}.
Surd gen_surd(Rng& rng);
Point gen_point(Rng& rng, int dim, const std::vector<Rational>& pool);
Measure gen_measure(Rng& rng, int dim, int atom_count, const std::vector<Rational>& pool, bool surds = false);
Measure gen_measure(std::uint64_t seed, int dim, int atom_count, const std::vector<Rational>& pool = default_pool());
SubsetMask gen_subset(Rng& rng, int n);
GeneratingPair gen_pair(Rng& rng, int n);
Family gen_subgroup(Rng& rng, int n);
/// Random nonempty subfamily of P_n; the empty set is left out when nonempty_members is set.
Family gen_family(Rng& rng, int n, bool nonempty_members = false);

/// Naive double loop over atom pairs with linear merging; the reference for mconv.
Measure brute_force_convolution(const Measure& mu, const Measure& nu);

/* Operations a suite may route through, so a faulty implementation can be
 * injected to confirm the suites notice. */
struct Ops {
  std::function<Measure(const Measure&, const Measure&)> mconv;
};
Ops default_ops();

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  int passed = 0;
  bool ok = true;
  std::optional<int> failed_trial;
  /// Minimized failing input and the failure message.
  std::string counterexample;
};

std::vector<std::string> suite_ids();
bool has_suite(const std::string& id);
/// Throws ErrorKind::Precondition for an unknown suite id.
SuiteReport run_property_suite(const std::string& suite_id, std::uint64_t seed, int trials);
SuiteReport run_property_suite(const std::string& suite_id, std::uint64_t seed, int trials, const Ops& ops);

}  // namespace multconv
