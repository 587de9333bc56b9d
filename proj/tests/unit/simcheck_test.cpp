#include <gtest/gtest.h>

#include <random>

#include "simlab/constructions/stripe.hpp"
#include "simlab/constructions/triangular.hpp"
#include "simlab/core/errors.hpp"
#include "simlab/recdsl/eval.hpp"
#include "simlab/recdsl/library.hpp"
#include "simlab/recdsl/parse.hpp"
#include "simlab/simcheck/simcheck.hpp"
#include "support/oracles.hpp"

using namespace simlab;
using namespace simlab::simcheck;

namespace {

Model rec_suite() {
  std::vector<PartialMap> ms;
  for (const auto& [name, t] : rec::benchmark_suite()) ms.push_back(PartialMap::from_term(name, t));
  return Model("Rec", Domain::nat, std::move(ms));
}

Model r2() { return constructions::stripe_model(rec_suite(), 2, 0, "R2"); }

Model single(const std::string& model, const std::string& name, const std::string& text) {
  return Model(model, Domain::nat, {PartialMap::from_term(name, rec::parse_term(text))});
}

Model subset(const std::vector<PartialMap>& pool, std::uint64_t mask, std::string name) {
  std::vector<PartialMap> out;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    if ((mask >> k) & 1) out.push_back(pool[k]);
  }
  return Model(std::move(name), Domain::nat, std::move(out));
}

// Terms with a mix of total, partial and expensive behaviour.
std::vector<PartialMap> mixed_pool() {
  std::vector<PartialMap> pool;
  for (const auto& [name, t] : rec::partial_suite()) pool.push_back(PartialMap::from_term(name, t));
  oracle::TermGen gen(31);
  for (int k = 0; k < 9; ++k) pool.push_back(PartialMap::from_term("t" + std::to_string(k), gen.gen(1, 3)));
  pool.push_back(PartialMap::from_term("S", rec::Term::succ()));
  pool.push_back(PartialMap::from_term("I", rec::Term::identity()));
  return pool;
}

}  // namespace

TEST(Simulation, R2SimulatesRec) {
  const auto r = check_simulation(r2(), rec_suite(), Encoding::stripe(2, 0), TestPlan::range(0, 64));
  EXPECT_EQ(r.aggregate, Verdict::verified);
  ASSERT_EQ(r.members.size(), rec::benchmark_suite().size());
  for (const auto& m : r.members) {
    // A(1, n) = n + 2, so plus2 is found first.
    const std::string own = m.member == "ack1" ? "plus2" : m.member;
    EXPECT_EQ(m.witness, "stripe(2,0)[" + own + "]");
  }
}

TEST(Simulation, IdentityCannotSimulateSuccessor) {
  const auto r = check_simulation(single("Id", "I", "I"), single("Succ", "S", "S"), Encoding::identity(Domain::nat),
                                  TestPlan::range(0, 4));
  EXPECT_EQ(r.aggregate, Verdict::refuted);
  ASSERT_EQ(r.members.size(), 1u);
  ASSERT_EQ(r.members[0].failures.size(), 1u);
  const auto& f = r.members[0].failures[0];
  EXPECT_EQ(f.input, Value::nat(0));
  EXPECT_EQ(f.expected, Outcome::converged(Value::nat(1)));
  EXPECT_EQ(f.got, Outcome::converged(Value::nat(0)));
}

TEST(Simulation, TriangularAnomaly) {
  auto [a, b] = constructions::tri_models(3, 3, 5);
  ASSERT_TRUE(is_strict_submodel_by_name(b, a));
  const auto r = check_simulation(b, a, Encoding::tri_pi(), TestPlan::range(0, 1000, 1000));
  EXPECT_EQ(r.aggregate, Verdict::verified);
  std::map<std::string, std::string> w;
  for (const auto& m : r.members) w[m.member] = m.witness.value_or("");
  EXPECT_EQ(w["iota"], "iota");
  EXPECT_EQ(w["kappa_2"], "kappa_3");
  EXPECT_EQ(w["kappa_3"], "kappa_1");
  EXPECT_EQ(w["f_2_1"], "f_2_2");
  EXPECT_EQ(w["f_3_3"], "f_3_4");
  EXPECT_EQ(w["g_2"], "f_2_1");
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes[0].find("strict subset"), std::string::npos);
}

TEST(Simulation, UnknownWhenFuelRunsOut) {
  const Model never = single("N", "never", "(M (C S (P 1 2)))");
  const auto r = check_simulation(never, never, Encoding::identity(Domain::nat), TestPlan::range(0, 3, 500));
  EXPECT_EQ(r.aggregate, Verdict::unknown);
  EXPECT_EQ(r.members[0].undecided_points, 4u);
  EXPECT_EQ(r.members[0].undecided_candidates, (std::vector<std::string>{"never"}));
}

TEST(Simulation, DivergedMatchesDiverged) {
  auto table = [](std::string name) {
    return PartialMap::table(std::move(name), Domain::nat, {{Value::nat(0), Value::nat(0)}});
  };
  const Model a("A", Domain::nat, {table("ta")});
  const Model b("B", Domain::nat, {table("tb")});
  EXPECT_EQ(check_simulation(a, b, Encoding::identity(Domain::nat), TestPlan::range(0, 5)).aggregate,
            Verdict::verified);
}

TEST(Simulation, Errors) {
  const Model m = rec_suite();
  EXPECT_THROW(check_simulation(m, m, Encoding::bits_bijection(), TestPlan::range(0, 3)), DomainError);
  TestPlan empty;
  EXPECT_THROW(check_simulation(m, m, Encoding::identity(Domain::nat), empty), ValidationError);
  TestPlan bad = TestPlan::range(0, 3);
  bad.b_sample = {"nope"};
  EXPECT_THROW(check_simulation(m, m, Encoding::identity(Domain::nat), bad), ValidationError);
}

TEST(Equivalence, Examples) {
  const Model rec = rec_suite();
  const auto id = Encoding::identity(Domain::nat);
  EXPECT_EQ(check_equivalence(rec, rec, id, id, TestPlan::range(0, 20), EquivalenceMode::isomorphism).aggregate,
            Verdict::verified);

  // Cheap members only: 500 inputs on both sides.
  std::vector<PartialMap> cheap;
  for (const auto& m : rec.members()) {
    for (const char* keep : {"zero", "succ", "id", "const3", "plus2", "plus3", "double", "pred", "minus3"}) {
      if (m.name() == keep) cheap.push_back(m);
    }
  }
  const Model small("M", Domain::nat, cheap);
  const Model pushed = pushforward(Encoding::tri_pi(), small, "piM");
  const auto iso = check_equivalence(pushed, small, Encoding::tri_pi(), Encoding::inverse(Encoding::tri_pi()),
                                     TestPlan::range(0, 500), EquivalenceMode::isomorphism);
  EXPECT_EQ(iso.aggregate, Verdict::verified);
  EXPECT_EQ(iso.parts.size(), 5u);

  const auto plain = check_equivalence(r2(), rec, Encoding::stripe(2, 0), Encoding::stripe(2, 0),
                                       TestPlan::range(0, 32), EquivalenceMode::plain);
  ASSERT_EQ(plain.parts.size(), 2u);
  EXPECT_EQ(plain.parts[0].aggregate, Verdict::verified);

  const auto strong = check_equivalence(r2(), rec, Encoding::stripe(2, 0), Encoding::stripe(2, 0),
                                        TestPlan::range(0, 32), EquivalenceMode::strong);
  EXPECT_EQ(strong.aggregate, Verdict::refuted);
  ASSERT_EQ(strong.parts.size(), 4u);
  EXPECT_EQ(strong.parts[2].members[1].verdict, Verdict::refuted);
  EXPECT_EQ(strong.parts[2].members[1].note, "uncovered element 1");
}

TEST(Closure, Examples) {
  EXPECT_EQ(check_closure(constructions::tri_k_model(5), TestPlan::range(0, 20)).aggregate, Verdict::verified);
  EXPECT_EQ(check_closure(single("Succ", "S", "S"), TestPlan::range(0, 5)).aggregate, Verdict::refuted);

  // i, j in 1..2; f_{i,j} o f_{k,l} = f_{i+k,j} needs i+k <= 4, found by enumeration.
  TestPlan plan = TestPlan::range(0, 200);
  plan.enumeration_limit = 64;
  EXPECT_EQ(check_closure(constructions::tri_f_model(2, 2), plan).aggregate, Verdict::verified);
}

TEST(PullbackLaw, Examples) {
  const auto r = check_pullback_law(r2(), rec_suite(), Encoding::stripe(2, 0), TestPlan::range(0, 40));
  EXPECT_EQ(r.aggregate, Verdict::verified);
  ASSERT_EQ(r.parts.size(), 2u);
  EXPECT_EQ(r.parts[0].aggregate, Verdict::verified);
  EXPECT_EQ(r.parts[1].aggregate, Verdict::verified);

  const auto neg = check_pullback_law(single("Id", "I", "I"), single("Succ", "S", "S"),
                                      Encoding::identity(Domain::nat), TestPlan::range(0, 4));
  EXPECT_EQ(neg.aggregate, Verdict::verified);
  EXPECT_EQ(neg.parts[0].aggregate, Verdict::refuted);
  EXPECT_EQ(neg.parts[1].aggregate, Verdict::refuted);

  auto [a, b] = constructions::tri_models(3, 3, 5);
  const auto tri = check_pullback_law(b, a, Encoding::tri_pi(), TestPlan::range(0, 300, 1000));
  EXPECT_EQ(tri.aggregate, Verdict::verified);
  EXPECT_EQ(tri.parts[0].aggregate, Verdict::verified);
  EXPECT_EQ(tri.parts[1].aggregate, Verdict::verified);
}

TEST(Probe, Examples) {
  const auto fam = constructions::stripe_family(3);
  const auto none = probe_encodings(single("Id", "I", "I"), single("Succ", "S", "S"), fam, TestPlan::range(0, 10));
  EXPECT_EQ(none.aggregate, Verdict::refuted);
  EXPECT_EQ(none.label, "refutation relative to family only");
  EXPECT_EQ(none.reports.size(), 6u);
  for (const auto& r : none.reports) EXPECT_EQ(r.aggregate, Verdict::refuted);

  const auto found = probe_encodings(r2(), rec_suite(), constructions::stripe_family(2), TestPlan::range(0, 30));
  EXPECT_EQ(found.aggregate, Verdict::verified);
  EXPECT_EQ(found.first_verified, "stripe(2,0)");

  EXPECT_THROW(probe_encodings(r2(), rec_suite(), {}, TestPlan::range(0, 3)), ValidationError);
}

TEST(Bijectivity, Prefixes) {
  std::vector<Value> xs;
  for (unsigned n = 0; n < 50; ++n) xs.push_back(Value::nat(n));
  EXPECT_EQ(check_bijective_on_prefix(Encoding::tri_pi(), xs, xs).aggregate, Verdict::verified);
  const auto r = check_bijective_on_prefix(Encoding::stripe(2, 1), xs, xs);
  EXPECT_EQ(r.members[0].verdict, Verdict::verified);
  EXPECT_EQ(r.members[1].note, "uncovered element 0");
  EXPECT_EQ(check_inverse_pair(Encoding::tri_pi(), Encoding::tri_pi(), xs, xs).aggregate, Verdict::refuted);
}

// Properties over random models.

TEST(Properties, FuelMonotone) {
  const auto pool = mixed_pool();
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    const Model a = subset(pool, rng() | 1, "A");
    const Model b = subset(pool, rng() | 2, "B");
    std::optional<Verdict> decided;
    std::map<std::string, Verdict> per_member;
    for (std::uint64_t fuel : {20u, 200u, 2'000u, 50'000u}) {
      const auto r = check_simulation(a, b, Encoding::identity(Domain::nat), TestPlan::range(0, 6, fuel));
      if (decided) ASSERT_EQ(r.aggregate, *decided) << "trial " << trial << " fuel " << fuel;
      if (r.aggregate != Verdict::unknown) decided = r.aggregate;
      for (const auto& m : r.members) {
        auto it = per_member.find(m.member);
        if (it != per_member.end()) ASSERT_EQ(m.verdict, it->second) << m.member;
        if (m.verdict != Verdict::unknown) per_member[m.member] = m.verdict;
      }
    }
  }
}

TEST(Properties, RefutationsAreConcrete) {
  const auto pool = mixed_pool();
  std::mt19937_64 rng(12);
  int refuted = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const Model a = subset(pool, rng(), "A");
    const Model b = subset(pool, rng() | 1, "B");
    const auto r = check_simulation(a, b, Encoding::identity(Domain::nat), TestPlan::range(0, 6, 5'000));
    for (const auto& m : r.members) {
      if (m.verdict != Verdict::refuted) continue;
      ++refuted;
      EXPECT_EQ(m.failures.size(), a.size());
      for (const auto& f : m.failures) {
        ASSERT_TRUE(f.expected.is_decided());
        ASSERT_TRUE(f.got.is_decided());
        ASSERT_NE(f.expected, f.got);
        // Recompute the point independently.
        const PartialMap* g = b.find(m.member);
        const PartialMap* cand = a.find(f.candidate);
        ASSERT_TRUE(g && cand);
        EXPECT_EQ(apply(*g, f.input, 5'000), f.expected);
        EXPECT_EQ(apply(*cand, f.input, 5'000), f.got);
      }
      // More fuel never turns a refutation around.
      TestPlan more = TestPlan::range(0, 6, 500'000);
      more.b_sample = {m.member};
      EXPECT_EQ(check_simulation(a, b, Encoding::identity(Domain::nat), more).aggregate, Verdict::refuted);
    }
  }
  EXPECT_GT(refuted, 5);
}

TEST(Properties, ContainmentDegeneracy) {
  std::vector<PartialMap> pool;
  for (const auto& [name, t] : rec::benchmark_suite()) pool.push_back(PartialMap::from_term(name, t));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint64_t big = rng();
    const std::uint64_t small = big & rng();
    const Model m = subset(pool, big, "M");
    const Model n = subset(pool, small, "N");
    const auto r = check_simulation(m, n, Encoding::identity(Domain::nat), TestPlan::range(0, 12));
    EXPECT_EQ(r.aggregate, Verdict::verified);
    // A single probe with the identity is the same check.
    const auto p = probe_encodings(m, n, {Encoding::identity(Domain::nat)}, TestPlan::range(0, 12));
    EXPECT_EQ(p.aggregate, r.aggregate);
  }
}

TEST(Properties, Transitivity) {
  const Model rec = rec_suite();
  const Model two = r2();
  const Model four = constructions::stripe_model(two, 2, 0, "R4");
  const auto e = Encoding::stripe(2, 0);
  const auto plan = TestPlan::range(0, 24);
  ASSERT_EQ(check_simulation(two, rec, e, plan).aggregate, Verdict::verified);
  TestPlan wide = TestPlan::range(0, 48);
  ASSERT_EQ(check_simulation(four, two, e, wide).aggregate, Verdict::verified);
  EXPECT_EQ(check_simulation(four, rec, compose_encodings(e, e), plan).aggregate, Verdict::verified);

  const auto id = Encoding::identity(Domain::nat);
  ASSERT_EQ(check_simulation(rec, rec, id, plan).aggregate, Verdict::verified);
  EXPECT_EQ(check_simulation(two, rec, compose_encodings(e, id), plan).aggregate, Verdict::verified);
}
