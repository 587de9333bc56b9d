#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simlab/core/outcome.hpp"
#include "simlab/core/value.hpp"

namespace simlab::simcheck {

// Finite-scale, three-valued answer. Verified never asserts the universal
// relation, only consistency on the tested points.
enum class Verdict { verified, refuted, unknown };

std::string_view to_string(Verdict v) noexcept;

// Refuted dominates Unknown, which dominates Verified.
Verdict combine(Verdict a, Verdict b) noexcept;

// One candidate's decided disagreement with the expected outcome.
struct CandidateFailure {
  std::string candidate;
  Value input;  // point in the checked member's domain
  Outcome expected;
  Outcome got;
};

struct MemberResult {
  std::string member;
  Verdict verdict = Verdict::unknown;
  std::optional<std::string> witness;
  // Refuted: one decided failure per candidate, in search order.
  std::vector<CandidateFailure> failures;
  // Unknown: candidates that agree on every decided point.
  std::vector<std::string> undecided_candidates;
  std::size_t undecided_points = 0;
  std::string note;
};

struct Claim {
  std::string kind;  // simulation | equivalence | closure | pullback-law | probe | bijectivity | inverse
  std::string a;
  std::string b;
  std::vector<std::string> encodings;
  std::string mode;
};

struct Statistics {
  std::size_t inputs_tested = 0;
  std::size_t evaluations = 0;
  std::size_t candidates_examined = 0;
  std::uint64_t fuel_per_evaluation = 0;
  std::uint64_t fuel_spent = 0;
};

struct SimReport {
  Claim claim;
  std::vector<MemberResult> members;
  Verdict aggregate = Verdict::verified;
  Statistics stats;
  std::vector<std::string> notes;
  // Sub-checks of composite claims (equivalence directions, the two sides
  // of the pullback law, probe runs).
  std::vector<SimReport> parts;
};

// Fold over member verdicts: Refuted if any, else Unknown if any, else
// Verified. An empty list is Verified.
Verdict aggregate_of(const std::vector<MemberResult>& members) noexcept;

}  // namespace simlab::simcheck
