#include "simlab/simcheck/simcheck.hpp"

#include <map>
#include <set>

#include "simlab/core/errors.hpp"

namespace simlab::simcheck {
namespace {

std::vector<PartialMap> select(const Model& m, const std::vector<std::string>& names, std::string_view what) {
  if (names.empty()) return m.members();
  std::vector<PartialMap> out;
  for (const auto& n : names) {
    const PartialMap* p = m.find(n);
    if (p == nullptr) {
      throw ValidationError(std::string(what) + " names '" + n + "', which is not a listed member of " + m.name());
    }
    out.push_back(*p);
  }
  return out;
}

// Witness candidates in search order: listed members first, then members
// produced by the enumerator, skipping names already seen. Outputs are
// cached per candidate and input index.
class Candidates {
 public:
  Candidates(const Model& m, const TestPlan& plan, const std::vector<Value>& points, Statistics& stats)
      : model_(m), plan_(plan), points_(points), stats_(stats) {
    for (auto& f : select(m, plan.a_sample, "a_sample")) add(std::move(f));
    listed_ = entries_.size();
    enumerate_ = plan.a_sample.empty() && m.has_enumerator();
  }

  // Candidate #i, or nullptr once the search space is exhausted.
  const PartialMap* at(std::size_t i) {
    while (i >= entries_.size() && enumerate_ && next_index_ < plan_.enumeration_limit) {
      auto f = model_.enumerate(next_index_++);
      if (!f) {
        enumerate_ = false;
        break;
      }
      if (!names_.contains(f->name())) add(std::move(*f));
    }
    return i < entries_.size() ? &entries_[i].map : nullptr;
  }

  bool is_listed(std::size_t i) const { return i < listed_; }

  const Outcome& output(std::size_t i, std::size_t point) {
    auto& slot = entries_[i].cache[point];
    if (!slot) {
      Fuel fuel(plan_.fuel);
      slot = apply(entries_[i].map, points_[point], fuel);
      ++stats_.evaluations;
      stats_.fuel_spent += fuel.spent();
    }
    return *slot;
  }

  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    PartialMap map;
    std::vector<std::optional<Outcome>> cache;
  };

  void add(PartialMap f) {
    names_.insert(f.name());
    entries_.push_back({std::move(f), std::vector<std::optional<Outcome>>(points_.size())});
  }

  const Model& model_;
  const TestPlan& plan_;
  const std::vector<Value>& points_;
  Statistics& stats_;
  std::vector<Entry> entries_;
  std::set<std::string> names_;
  std::size_t listed_ = 0;
  std::size_t next_index_ = 0;
  bool enumerate_ = false;
};

void require_inputs(const std::vector<Value>& inputs, Domain d, std::string_view context) {
  for (const auto& x : inputs) require_domain(x, d, context);
}

SimReport bijectivity_part(const Encoding& e, const std::vector<Value>& sources,
                           const std::vector<Value>& targets) {
  return check_bijective_on_prefix(e, sources, targets);
}

MemberResult member(std::string name, Verdict v) {
  MemberResult m;
  m.member = std::move(name);
  m.verdict = v;
  return m;
}

std::vector<Value> canonical_inputs(Domain d, std::size_t count) {
  std::vector<Value> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(canonical_value(d, Nat(i)));
  return out;
}

}  // namespace

TestPlan TestPlan::range(std::uint64_t first, std::uint64_t last, std::uint64_t fuel) {
  TestPlan p;
  for (std::uint64_t i = first; i <= last; ++i) {
    p.inputs.push_back(Value::nat(i));
    if (i == last) break;
  }
  p.fuel = fuel;
  return p;
}

void TestPlan::validate() const {
  if (inputs.empty()) throw ValidationError("test plan has no inputs");
  if (fuel == 0) throw ValidationError("test plan fuel must be at least 1");
}

SimReport check_simulation(const Model& a, const Model& b, const Encoding& rho, const TestPlan& plan) {
  plan.validate();
  if (rho.source() != b.domain() || rho.target() != a.domain()) {
    throw DomainError("encoding " + rho.name() + " maps " + std::string(to_string(rho.source())) + " to " +
                      std::string(to_string(rho.target())) + ", but the check needs " +
                      std::string(to_string(b.domain())) + " to " + std::string(to_string(a.domain())));
  }
  require_inputs(plan.inputs, b.domain(), "simulation input");

  SimReport report;
  report.claim = Claim{"simulation", a.name(), b.name(), {rho.name()}, ""};
  report.stats.inputs_tested = plan.inputs.size();
  report.stats.fuel_per_evaluation = plan.fuel;

  std::vector<Value> encoded;
  encoded.reserve(plan.inputs.size());
  for (const auto& x : plan.inputs) encoded.push_back(rho.encode(x));

  Candidates candidates(a, plan, encoded, report.stats);

  for (const auto& g : select(b, plan.b_sample, "b_sample")) {
    MemberResult result;
    result.member = g.name();

    std::vector<Outcome> expected;
    expected.reserve(plan.inputs.size());
    for (const auto& x : plan.inputs) {
      Fuel fuel(plan.fuel);
      expected.push_back(encode_outcome(rho, apply(g, x, fuel)));
      ++report.stats.evaluations;
      report.stats.fuel_spent += fuel.spent();
    }

    std::size_t best_undecided = 0;
    for (std::size_t c = 0;; ++c) {
      const PartialMap* f = candidates.at(c);
      if (f == nullptr) break;
      ++report.stats.candidates_examined;
      std::size_t undecided = 0;
      std::optional<CandidateFailure> failure;
      for (std::size_t k = 0; k < plan.inputs.size(); ++k) {
        const Outcome& got = candidates.output(c, k);
        if (!expected[k].is_decided() || !got.is_decided()) {
          ++undecided;
          continue;
        }
        if (expected[k] != got) {
          failure = CandidateFailure{f->name(), plan.inputs[k], expected[k], got};
          break;
        }
      }
      if (failure) {
        result.failures.push_back(std::move(*failure));
        continue;
      }
      if (undecided == 0) {
        result.verdict = Verdict::verified;
        result.witness = f->name();
        result.failures.clear();
        result.undecided_candidates.clear();
        if (!candidates.is_listed(c)) result.note = "witness found beyond the listed sample";
        break;
      }
      if (result.undecided_candidates.empty()) best_undecided = undecided;
      result.undecided_candidates.push_back(f->name());
    }

    if (result.verdict != Verdict::verified) {
      if (!result.undecided_candidates.empty()) {
        result.verdict = Verdict::unknown;
        result.undecided_points = best_undecided;
        result.failures.clear();
      } else {
        result.verdict = Verdict::refuted;
        if (result.failures.empty()) result.note = "no candidates to search";
      }
    }
    report.members.push_back(std::move(result));
  }

  report.aggregate = aggregate_of(report.members);
  if (is_strict_submodel_by_name(a, b)) {
    report.notes.push_back("the members of " + a.name() + " are a strict subset of those of " + b.name());
  }
  return report;
}

std::string_view to_string(EquivalenceMode m) noexcept {
  switch (m) {
    case EquivalenceMode::plain: return "plain";
    case EquivalenceMode::strong: return "strong";
    case EquivalenceMode::isomorphism: return "isomorphism";
  }
  return "?";
}

std::optional<EquivalenceMode> parse_equivalence_mode(std::string_view text) noexcept {
  if (text == "plain") return EquivalenceMode::plain;
  if (text == "strong") return EquivalenceMode::strong;
  if (text == "isomorphism") return EquivalenceMode::isomorphism;
  return std::nullopt;
}

SimReport check_equivalence(const Model& a, const Model& b, const Encoding& e_ab, const Encoding& e_ba,
                            const TestPlan& plan, EquivalenceMode mode) {
  plan.validate();
  const std::vector<Value>& b_inputs = plan.inputs;
  const std::vector<Value> a_inputs =
      a.domain() == b.domain() ? plan.inputs : canonical_inputs(a.domain(), plan.inputs.size());
  TestPlan a_plan = plan;
  a_plan.inputs = a_inputs;
  std::swap(a_plan.a_sample, a_plan.b_sample);

  SimReport report;
  report.claim = Claim{"equivalence", a.name(), b.name(), {e_ab.name(), e_ba.name()}, std::string(to_string(mode))};
  report.stats.inputs_tested = plan.inputs.size();
  report.stats.fuel_per_evaluation = plan.fuel;

  report.parts.push_back(check_simulation(a, b, e_ab, plan));
  report.parts.push_back(check_simulation(b, a, e_ba, a_plan));
  if (mode != EquivalenceMode::plain) {
    report.parts.push_back(bijectivity_part(e_ab, b_inputs, a_inputs));
    report.parts.push_back(bijectivity_part(e_ba, a_inputs, b_inputs));
  }
  if (mode == EquivalenceMode::isomorphism) {
    report.parts.push_back(check_inverse_pair(e_ab, e_ba, b_inputs, a_inputs));
  }

  report.aggregate = Verdict::verified;
  for (const auto& part : report.parts) {
    report.aggregate = combine(report.aggregate, part.aggregate);
    report.stats.evaluations += part.stats.evaluations;
    report.stats.candidates_examined += part.stats.candidates_examined;
    report.stats.fuel_spent += part.stats.fuel_spent;
  }
  return report;
}

SimReport check_bijective_on_prefix(const Encoding& e, const std::vector<Value>& sources,
                                    const std::vector<Value>& targets) {
  require_inputs(sources, e.source(), "bijectivity source");
  require_inputs(targets, e.target(), "bijectivity target");
  SimReport report;
  report.claim = Claim{"bijectivity", "", "", {e.name()}, ""};
  report.stats.inputs_tested = sources.size() + targets.size();

  MemberResult injective = member("injective", Verdict::verified);
  std::map<std::string, Value> seen;
  for (const auto& x : sources) {
    const Value y = e.encode(x);
    auto [it, fresh] = seen.emplace(to_string(y), x);
    if (!fresh && !(it->second == x)) {
      injective.verdict = Verdict::refuted;
      injective.failures.push_back({e.name(), x, Outcome::converged(y), Outcome::converged(y)});
      injective.note = to_string(it->second) + " and " + to_string(x) + " both encode to " + to_string(y);
      break;
    }
  }

  MemberResult surjective = member("surjective", Verdict::verified);
  for (const auto& y : targets) {
    if (!e.decode(y)) {
      surjective.verdict = Verdict::refuted;
      surjective.failures.push_back({e.name(), y, Outcome::converged(y), Outcome::diverged()});
      surjective.note = "uncovered element " + to_string(y);
      break;
    }
  }

  report.members = {std::move(injective), std::move(surjective)};
  report.aggregate = aggregate_of(report.members);
  return report;
}

SimReport check_inverse_pair(const Encoding& forward, const Encoding& inverse, const std::vector<Value>& sources,
                             const std::vector<Value>& targets) {
  if (forward.source() != inverse.target() || forward.target() != inverse.source()) {
    throw DomainError("encodings " + forward.name() + " and " + inverse.name() + " are not oriented as a pair");
  }
  require_inputs(sources, forward.source(), "inverse-pair source");
  require_inputs(targets, forward.target(), "inverse-pair target");
  SimReport report;
  report.claim = Claim{"inverse", "", "", {forward.name(), inverse.name()}, ""};
  report.stats.inputs_tested = sources.size() + targets.size();

  auto round_trip = [](std::string name, const Encoding& first, const Encoding& second,
                       const std::vector<Value>& points) {
    MemberResult r = member(std::move(name), Verdict::verified);
    for (const auto& x : points) {
      const Value back = second.encode(first.encode(x));
      if (!(back == x)) {
        r.verdict = Verdict::refuted;
        r.failures.push_back({second.name(), x, Outcome::converged(x), Outcome::converged(back)});
        break;
      }
    }
    return r;
  };
  report.members.push_back(round_trip(inverse.name() + " o " + forward.name(), forward, inverse, sources));
  report.members.push_back(round_trip(forward.name() + " o " + inverse.name(), inverse, forward, targets));
  report.aggregate = aggregate_of(report.members);
  return report;
}

SimReport check_closure(const Model& m, const TestPlan& plan) {
  plan.validate();
  const auto tested = select(m, plan.b_sample, "b_sample");
  std::vector<PartialMap> pairs;
  for (const auto& f : tested) {
    for (const auto& g : tested) pairs.push_back(PartialMap::compose(f, g).renamed(f.name() + " o " + g.name()));
  }
  const Model compositions(m.name() + " o " + m.name(), m.domain(), std::move(pairs));
  TestPlan inner = plan;
  inner.b_sample.clear();
  SimReport report = check_simulation(m, compositions, Encoding::identity(m.domain()), inner);
  report.claim = Claim{"closure", m.name(), m.name(), {}, ""};
  report.notes.clear();
  return report;
}

SimReport check_pullback_law(const Model& a, const Model& b, const Encoding& rho, const TestPlan& plan) {
  SimReport simulation = check_simulation(a, b, rho, plan);
  const Model pulled = pullback(rho, a, "<" + rho.name() + ">" + a.name());
  SimReport containment = check_simulation(pulled, b, Encoding::identity(b.domain()), plan);
  containment.claim.kind = "containment";
  containment.notes.clear();

  SimReport report;
  report.claim = Claim{"pullback-law", a.name(), b.name(), {rho.name()}, ""};
  report.stats = simulation.stats;
  report.stats.evaluations += containment.stats.evaluations;
  report.stats.candidates_examined += containment.stats.candidates_examined;
  report.stats.fuel_spent += containment.stats.fuel_spent;

  for (std::size_t i = 0; i < simulation.members.size(); ++i) {
    const MemberResult& s = simulation.members[i];
    const MemberResult& c = containment.members[i];
    MemberResult r = member(s.member, Verdict::unknown);
    r.witness = s.witness;
    if (s.verdict == Verdict::unknown || c.verdict == Verdict::unknown) {
      r.verdict = Verdict::unknown;
      r.note = "undecided at this fuel";
    } else if (s.verdict == c.verdict) {
      r.verdict = Verdict::verified;
      r.note = "both sides " + std::string(to_string(s.verdict));
    } else {
      r.verdict = Verdict::refuted;
      r.note = "simulation " + std::string(to_string(s.verdict)) + ", containment " +
               std::string(to_string(c.verdict));
    }
    report.members.push_back(std::move(r));
  }
  report.aggregate = aggregate_of(report.members);
  report.notes.push_back("simulation side: " + std::string(to_string(simulation.aggregate)));
  report.notes.push_back("containment side: " + std::string(to_string(containment.aggregate)));
  report.parts.push_back(std::move(simulation));
  report.parts.push_back(std::move(containment));
  return report;
}

SimReport ProbeResult::summary(const std::string& a, const std::string& b) const {
  SimReport s;
  s.claim = Claim{"probe", a, b, {}, ""};
  for (const auto& r : reports) {
    s.claim.encodings.push_back(r.claim.encodings.front());
    MemberResult m = member(r.claim.encodings.front(), r.aggregate);
    s.members.push_back(std::move(m));
    s.stats.evaluations += r.stats.evaluations;
    s.stats.candidates_examined += r.stats.candidates_examined;
    s.stats.fuel_spent += r.stats.fuel_spent;
  }
  if (!reports.empty()) {
    s.stats.inputs_tested = reports.front().stats.inputs_tested;
    s.stats.fuel_per_evaluation = reports.front().stats.fuel_per_evaluation;
  }
  s.aggregate = aggregate;
  s.notes.push_back(label);
  s.parts = reports;
  return s;
}

ProbeResult probe_encodings(const Model& a, const Model& b, const std::vector<Encoding>& family,
                            const TestPlan& plan) {
  if (family.empty()) throw ValidationError("probe needs a non-empty encoding family");
  ProbeResult result;
  bool any_unknown = false;
  for (const auto& e : family) {
    SimReport r = check_simulation(a, b, e, plan);
    if (r.aggregate == Verdict::verified && !result.first_verified) result.first_verified = e.name();
    any_unknown = any_unknown || r.aggregate == Verdict::unknown;
    result.reports.push_back(std::move(r));
  }
  if (result.first_verified) {
    result.aggregate = Verdict::verified;
    result.label = "verified by " + *result.first_verified;
  } else {
    result.aggregate = any_unknown ? Verdict::unknown : Verdict::refuted;
    result.label = "refutation relative to family only";
  }
  return result;
}

}  // namespace simlab::simcheck
