#include "simlab/simcheck/report.hpp"

namespace simlab::simcheck {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::verified: return "Verified";
    case Verdict::refuted: return "Refuted";
    case Verdict::unknown: return "Unknown";
  }
  return "?";
}

Verdict combine(Verdict a, Verdict b) noexcept {
  if (a == Verdict::refuted || b == Verdict::refuted) return Verdict::refuted;
  if (a == Verdict::unknown || b == Verdict::unknown) return Verdict::unknown;
  return Verdict::verified;
}

Verdict aggregate_of(const std::vector<MemberResult>& members) noexcept {
  Verdict v = Verdict::verified;
  for (const auto& m : members) v = combine(v, m.verdict);
  return v;
}

}  // namespace simlab::simcheck
