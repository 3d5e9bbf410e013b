#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sgt/knot.hpp"
#include "sgt/poly.hpp"
#include "sgt/sgraph.hpp"

namespace sgt {

struct SuiteResult {
  std::string suite;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> messages;

  SuiteResult() = default;
  explicit SuiteResult(std::string name) : suite(std::move(name)) {}

  bool passed() const { return failures == 0; }
};

/// Known property suites, one per family of algebraic identities the
/// implementation must satisfy. `size` scales the number of random cases
/// (0 picks each suite's default).
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int size = 0);
std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int size = 0);

/// Deterministic generators used by the suites; exposed for tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int irange(int lo, int hi);  // inclusive
  bool coin();
  Sign sign();
  std::uint64_t raw();

 private:
  std::mt19937_64 eng_;
};

/// Random signed multigraph with loops and parallel edges; when `connected`
/// is set a random spanning tree is laid down first.
SignedGraph random_graph(Rng& rng, int max_vertices, int max_edges, bool connected);

/// Random polynomial over the given varset.
PolyZ random_poly(Rng& rng, const std::shared_ptr<const VarSet>& vars, int max_terms,
                  int max_exp, int max_coeff);

/// Random knot diagram: one of the tabulated small codes with random curls
/// added up to max_crossings.
PDCode random_pd(Rng& rng, int max_crossings);

/// Insert a curl on the given arc; variant in 0..3 picks handedness and
/// which strand passes over. Arc 0 on an empty code gives a one-crossing
/// unknot.
PDCode add_kink(const PDCode& pd, int arc, int variant);

/// The tabulated small knot codes (3 to 6 crossings), used as kink bases.
const std::vector<PDCode>& standard_pd_codes();

/// Search for a signed labelled K4 that has {1,4,5} as a spanning tree with
/// fundamental cycles C(T,2) = {2,4,5} and C(T,3) = {1,3,4}, and whose
/// activity Tutte polynomial equals `target` exactly.
std::optional<SignedGraph> search_signed_k4(const PolyZ& target);

}  // namespace sgt
