#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simlab/core/encoding.hpp"
#include "simlab/core/model.hpp"
#include "simlab/simcheck/report.hpp"

namespace simlab::simcheck {

struct TestPlan {
  // Points of the simulated model's domain.
  std::vector<Value> inputs;
  // Budget for each single evaluation.
  std::uint64_t fuel = 1'000'000;
  // Member names to test on the simulated side; empty means all listed.
  std::vector<std::string> b_sample;
  // Member names searched as witnesses; empty means all listed.
  std::vector<std::string> a_sample;
  // How many enumerated members (beyond the listed ones) a witness search
  // may try when the searched model has an enumerator.
  std::size_t enumeration_limit = 256;

  // Naturals first..last inclusive.
  static TestPlan range(std::uint64_t first, std::uint64_t last, std::uint64_t fuel = 1'000'000);

  // Raises ValidationError on an empty input set or zero fuel.
  void validate() const;
};

// A >=_rho B on the plan: for each g in B, the first f in A (listed order,
// then enumerated) with rho(g(x)) = f(rho(x)) as outcomes at every tested x.
// Bottom must meet bottom; any FuelExhausted leaves the point undecided.
// Raises DomainError unless rho: dom B -> dom A and the inputs lie in dom B.
SimReport check_simulation(const Model& a, const Model& b, const Encoding& rho,
                           const TestPlan& plan);

enum class EquivalenceMode { plain, strong, isomorphism };

std::string_view to_string(EquivalenceMode m) noexcept;
std::optional<EquivalenceMode> parse_equivalence_mode(std::string_view text) noexcept;

// e_ab: dom B -> dom A witnesses A >= B; e_ba: dom A -> dom B witnesses
// B >= A. plain runs both directions; strong additionally requires both
// encodings to be bijective on the tested prefixes; isomorphism further
// requires e_ba to invert e_ab on the tested points. Inputs for dom A are
// the plan inputs when the domains agree, otherwise the canonical prefix of
// dom A of the same length.
SimReport check_equivalence(const Model& a, const Model& b, const Encoding& e_ab,
                            const Encoding& e_ba, const TestPlan& plan, EquivalenceMode mode);

// Injective on `sources` and every element of `targets` decodes. Refuted
// members name the collision or the uncovered element.
SimReport check_bijective_on_prefix(const Encoding& e, const std::vector<Value>& sources,
                                    const std::vector<Value>& targets);

// inverse(forward(x)) = x on `sources`, forward(inverse(y)) = y on `targets`.
SimReport check_inverse_pair(const Encoding& forward, const Encoding& inverse,
                             const std::vector<Value>& sources, const std::vector<Value>& targets);

// For every ordered pair (f, g) of tested members, some member of M
// (listed, then enumerated) equals f o g on the plan inputs.
SimReport check_closure(const Model& m, const TestPlan& plan);

// Both sides of "A >=_rho B iff B is contained in <rho>A": the simulation
// check, and an independent containment check of each g against
// pullback(rho, f). Member verdicts say whether the two sides agree for
// that g; the aggregate is the verdict on the biconditional.
SimReport check_pullback_law(const Model& a, const Model& b, const Encoding& rho,
                             const TestPlan& plan);

struct ProbeResult {
  std::vector<SimReport> reports;  // one per family member, in family order
  Verdict aggregate = Verdict::refuted;
  std::optional<std::string> first_verified;
  // "refutation relative to family only" when nothing verifies.
  std::string label;

  SimReport summary(const std::string& a, const std::string& b) const;
};

// check_simulation for every encoding in a finite family. Never claims more
// than the family: a negative answer is labelled as family-relative.
// Raises ValidationError on an empty family.
ProbeResult probe_encodings(const Model& a, const Model& b, const std::vector<Encoding>& family,
                            const TestPlan& plan);

}  // namespace simlab::simcheck
