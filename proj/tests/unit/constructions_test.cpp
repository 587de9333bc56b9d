#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "simlab/constructions/diagonal.hpp"
#include "simlab/constructions/godel.hpp"
#include "simlab/constructions/narrowness.hpp"
#include "simlab/constructions/re_family.hpp"
#include "simlab/constructions/stripe.hpp"
#include "simlab/constructions/triangular.hpp"
#include "simlab/core/errors.hpp"
#include "simlab/recdsl/eval.hpp"
#include "simlab/recdsl/library.hpp"
#include "simlab/recdsl/parse.hpp"
#include "support/oracles.hpp"

using namespace simlab;
using namespace simlab::constructions;

namespace {

Outcome nat(std::uint64_t n) { return Outcome::converged(Value::nat(n)); }

std::uint64_t u(const Nat& n) { return n.convert_to<std::uint64_t>(); }

}  // namespace

TEST(Stripe, Encoding) {
  EXPECT_EQ(stripe_encoding(2, 0).encode(Value::nat(6)), Value::nat(12));
  EXPECT_EQ(stripe_encoding(2, 1).encode(Value::nat(0)), Value::nat(1));
  EXPECT_EQ(stripe_encoding(3, 2).encode(Value::nat(4)), Value::nat(14));
  EXPECT_THROW(stripe_encoding(2, 2), DomainError);
  EXPECT_THROW(stripe_encoding(1, 0), DomainError);
}

TEST(Stripe, Members) {
  const auto s = stripe_model_member(rec::Term::succ(), 2, 0, "S");
  EXPECT_EQ(apply(s, Value::nat(4), 100), nat(6));
  EXPECT_EQ(apply(s, Value::nat(3), 100), nat(3));
  EXPECT_EQ(apply(stripe_model_member(rec::Term::constant(5), 2, 0, "K5"), Value::nat(8), 100), nat(10));
  const auto s1 = stripe_model_member(rec::Term::succ(), 2, 1, "S");
  EXPECT_EQ(apply(s1, Value::nat(5), 100), nat(7));
  EXPECT_EQ(apply(s1, Value::nat(4), 100), nat(4));
}

TEST(Stripe, SuiteWitnesses) {
  for (const auto& [name, t] : rec::benchmark_suite()) {
    const auto m = stripe_model_member(t, 2, 0, name);
    for (unsigned n = 0; n <= 64; n += 7) {
      const Nat arg(n);
      const Outcome base = rec::eval_term(t, std::span<const Nat>(&arg, 1), 1'000'000);
      ASSERT_TRUE(base.is_converged());
      EXPECT_EQ(apply(m, Value::nat(2 * n), 1'000'000), Outcome::converged(Value(Nat(2 * base.value().as_nat()))))
          << name;
      EXPECT_EQ(apply(m, Value::nat(2 * n + 1), 1'000'000), nat(2 * n + 1)) << name;
    }
  }
}

TEST(Stripe, Family) {
  const auto fam = stripe_family(3);
  std::vector<std::string> names;
  for (const auto& e : fam) names.push_back(e.name());
  EXPECT_EQ(names, (std::vector<std::string>{"stripe(1,0)", "stripe(2,0)", "stripe(2,1)", "stripe(3,0)",
                                              "stripe(3,1)", "stripe(3,2)"}));
}

TEST(Triangular, Examples) {
  EXPECT_EQ(tri_f(1, 0, 0), 1);
  EXPECT_EQ(tri_f(1, 2, 5), 11);
  EXPECT_EQ(tri_g(2, 2), 9);
  EXPECT_EQ(tri_pi(1), 2);
  EXPECT_EQ(tri_pi(2), 3);
  EXPECT_EQ(tri_pi(3), 1);
  EXPECT_EQ(tri_pi(8), 4);
  EXPECT_EQ(tri_pi(0), 0);
  EXPECT_EQ(tri_pi_inverse(5), 4);
}

TEST(Triangular, MatchesTableOracle) {
  const oracle::TriTable table(120);
  for (std::uint64_t n = 0; n < 10'000; ++n) {
    ASSERT_EQ(tri_pi(n), table.pi(n)) << n;
    ASSERT_EQ(tri_pi_inverse(tri_pi(n)), n);
    for (std::uint64_t i = 0; i <= 3; ++i) {
      ASSERT_EQ(tri_g(i, n), table.g(i, n));
      for (std::uint64_t j = 0; j <= 4; ++j) ASSERT_EQ(tri_f(i, j, n), table.f(i, j, n)) << i << j << n;
    }
  }
}

TEST(Triangular, CompositionLaw) {
  for (unsigned i = 0; i <= 5; ++i) {
    for (unsigned k = 0; k <= 5; ++k) {
      if (i + k == 0) continue;
      for (unsigned j = 0; j <= 5; ++j) {
        for (unsigned l = 0; l <= 5; ++l) {
          for (unsigned n = 0; n <= 2000; n += 13) {
            ASSERT_EQ(tri_f(i, j, tri_f(k, l, n)), tri_f(i + k, j, n)) << i << j << k << l << " " << n;
          }
        }
      }
    }
  }
}

TEST(Triangular, Disjointness) {
  for (unsigned i = 1; i <= 5; ++i) {
    for (unsigned j = 1; j <= 5; ++j) {
      for (unsigned n = j * j + 1; n <= 2000; ++n) {
        ASSERT_LT(tri_f(i - 1, j, n), tri_g(i, n));
        ASSERT_LT(tri_g(i, n), tri_f(i, j, n));
      }
    }
  }
}

TEST(Triangular, ConjugationTable) {
  const auto pi = Encoding::tri_pi();
  auto agree = [](const PartialMap& x, const PartialMap& y) {
    for (unsigned n = 0; n <= 300; ++n) {
      if (apply(x, Value::nat(n), 1000) != apply(y, Value::nat(n), 1000)) return false;
    }
    return true;
  };
  EXPECT_TRUE(agree(pushforward(pi, tri_iota()), tri_iota()));
  for (unsigned k = 0; k <= 10; ++k) EXPECT_TRUE(agree(pushforward(pi, tri_kappa(k)), tri_kappa(tri_pi(k)))) << k;
  for (unsigned i = 1; i <= 3; ++i) {
    for (unsigned j = 0; j <= 3; ++j) EXPECT_TRUE(agree(pushforward(pi, tri_f_map(i, j)), tri_f_map(i, j + 1)));
    EXPECT_TRUE(agree(pushforward(pi, tri_g_map(i)), tri_f_map(i, 1)));
  }
}

TEST(Triangular, Models) {
  auto [a, b] = tri_models(2, 2, 1);
  // iota, kappa_0, kappa_1; four f's; two g's.
  EXPECT_EQ(a.size(), 9u);
  EXPECT_EQ(b.size(), 7u);
  EXPECT_TRUE(a.contains("g_1"));
  EXPECT_FALSE(b.contains("g_1"));
  EXPECT_TRUE(is_strict_submodel_by_name(b, a));

  ASSERT_TRUE(a.has_enumerator());
  std::set<std::string> seen;
  for (std::size_t t = 0; t < 60; ++t) {
    auto m = a.enumerate(t);
    ASSERT_TRUE(m);
    EXPECT_TRUE(seen.insert(m->name()).second) << m->name();
  }
  EXPECT_TRUE(seen.contains("f_1_3"));
  EXPECT_TRUE(seen.contains("g_4"));
  for (std::size_t t = 0; t < 60; ++t) EXPECT_NE(b.enumerate(t)->name().rfind("g_", 0), 0u);
}

TEST(Narrowness, Examples) {
  const auto id = narrowness(Encoding::identity(Domain::nat), 100);
  ASSERT_TRUE(id.bound_if_narrow);
  EXPECT_EQ(*id.bound_if_narrow, 1u);
  EXPECT_EQ(id.cycles.size(), 100u);

  std::vector<std::pair<Nat, Nat>> swaps;
  for (unsigned k = 0; k < 100; k += 2) {
    swaps.emplace_back(k, k + 1);
    swaps.emplace_back(k + 1, k);
  }
  const auto sw = narrowness(Encoding::finite_table(swaps), 100);
  EXPECT_EQ(sw.bound_if_narrow, std::optional<std::size_t>(2));
  EXPECT_EQ(sw.period, std::optional<std::size_t>(2));

  const auto tri = narrowness(Encoding::tri_pi(), 100);
  EXPECT_EQ(tri.max_cycle_length, 19u);
  EXPECT_EQ(tri.bound_if_narrow, std::optional<std::size_t>(19));
  ASSERT_EQ(tri.cycles.size(), 10u);
  for (std::size_t m = 0; m < 10; ++m) {
    ASSERT_EQ(tri.cycles[m].size(), 2 * m + 1);
    EXPECT_EQ(tri.cycles[m].front(), m * m);
  }
  EXPECT_TRUE(tri.escaping.empty());
}

TEST(Narrowness, EscapingAndErrors) {
  // Rows 10+ start at 100; a prefix of 90 cuts row 9 short.
  const auto cut = narrowness(Encoding::tri_pi(), 90);
  EXPECT_FALSE(cut.bound_if_narrow);
  EXPECT_EQ(cut.escaping, (std::vector<std::size_t>{81}));
  EXPECT_EQ(cut.max_cycle_length, 17u);
  const auto halve = Encoding::custom(
      "halve", Domain::nat, Domain::nat, [](const Value& x) { return Value(Nat(x.as_nat() / 2)); },
      [](const Value& y) { return std::optional<Value>(Value(Nat(y.as_nat() * 2))); }, false);
  EXPECT_THROW(narrowness(halve, 10), Error);
  // Injective but not onto: every orbit escapes.
  EXPECT_EQ(narrowness(Encoding::stripe(2, 0), 10).escaping, (std::vector<std::size_t>{1, 3, 5, 7, 9}));
  EXPECT_THROW(narrowness(Encoding::bits_bijection(), 10), DomainError);
}

TEST(Narrowness, CycleLengthGrowsWithRow) {
  const auto r = narrowness(Encoding::tri_pi(), 400);
  for (const auto& c : r.cycles) {
    const std::size_t root = static_cast<std::size_t>(std::sqrt(static_cast<double>(c.front())));
    EXPECT_EQ(c.size(), 2 * root + 1);
  }
}

TEST(Godel, Examples) {
  EXPECT_EQ(godel_encode(List::nil()), 0);
  EXPECT_EQ(godel_encode(List::cons(List::nil(), List::nil())), 1);
  EXPECT_EQ(godel_encode(List::of({List::nil(), List::nil()})), 3);
  EXPECT_EQ(godel_decode(3), List::of({List::nil(), List::nil()}));
}

TEST(Godel, Bijection) {
  for (unsigned n = 0; n < (1u << 16); ++n) ASSERT_EQ(godel_encode(godel_decode(n)), n);
  // Random lists: independent construction from the formula.
  std::mt19937_64 rng(5);
  std::function<List(int)> gen = [&](int depth) {
    List out;
    const int len = depth <= 0 ? 0 : static_cast<int>(rng() % 3);
    std::vector<List> xs;
    for (int k = 0; k < len; ++k) xs.push_back(gen(depth - 1));
    return List::of(xs);
  };
  std::function<Nat(const List&)> code = [&](const List& l) -> Nat {
    if (l.is_nil()) return 0;
    return (Nat(1) << u(code(l.head()))) * (2 * code(l.tail()) + 1);
  };
  for (int k = 0; k < 300; ++k) {
    const List l = gen(3);
    const Nat c = code(l);
    EXPECT_EQ(godel_encode(l), c);
    EXPECT_EQ(godel_decode(c), l);
  }
}

TEST(Godel, ListModelMirrorsNatModel) {
  Model base("Rec", Domain::nat, {PartialMap::from_term("S", rec::Term::succ())});
  const Model lisp = godel_list_model(base, "Lisp");
  EXPECT_EQ(lisp.domain(), Domain::list);
  const List one = List::cons(List::nil(), List::nil());
  EXPECT_EQ(apply(lisp.members()[0], Value(List::nil()), 100), Outcome::converged(Value(one)));
}

TEST(Diagonal, Examples) {
  const auto& defs = rec::standard_definitions();
  EXPECT_EQ(diag_h(defs.at("double"), 2, 100), 8);
  EXPECT_EQ(diag_h(rec::Term::identity(), 0, 100), 2);
  EXPECT_EQ(diag_h(defs.at("double"), 0, 100), 2);
  EXPECT_THROW(diag_h(rec::Term::identity(), 2, 5), BoundError);
  EXPECT_THROW(diag_h(defs.at("isqrt"), 1, 100), Error);
}

TEST(Re, Examples) {
  const auto zeros = re_family(OracleH::zeros(), 3);
  EXPECT_EQ(zeros.rho.encode(Value::nat(5)), Value::nat(10));
  EXPECT_EQ(apply(zeros.h_i, Value::nat(7), 100), nat(0));

  const auto par = re_family(OracleH::parity(), 2);
  EXPECT_EQ(par.rho.encode(Value::nat(3)), Value::nat(7));
  EXPECT_EQ(apply(par.h_i, Value::nat(3), 100), Outcome::diverged());
  EXPECT_EQ(apply(par.h_prime_i, Value::nat(3), 100), nat(0));
  EXPECT_EQ(par.rho.encode(Value::nat(0)), Value::nat(0));

  EXPECT_THROW(re_family(OracleH("ones", [](const Nat&) { return 1u; }), 1), ValidationError);
  EXPECT_THROW(OracleH("two", [](const Nat&) { return 2u; })(Nat(3)), ValidationError);
}

TEST(Re, SimulationEquation) {
  for (const auto& h : {OracleH::zeros(), OracleH::parity(), OracleH::pseudorandom(9)}) {
    for (unsigned i = 0; i <= 8; ++i) {
      const auto fam = re_family(h, i);
      for (unsigned n = 0; n <= 64; ++n) {
        const Outcome lhs = apply(fam.h_prime_i, fam.rho.encode(Value::nat(n)), 100);
        const Outcome rhs = encode_outcome(fam.rho, apply(fam.h_i, Value::nat(n), 100));
        ASSERT_EQ(lhs, rhs) << h.name() << " i=" << i << " n=" << n;
      }
    }
  }
}

TEST(Re, RhoDecodes) {
  const auto rho = re_encoding(OracleH::pseudorandom(3));
  for (unsigned n = 0; n < 200; ++n) EXPECT_EQ(*rho.decode(rho.encode(Value::nat(n))), Value::nat(n));
  // Exactly one of 2n and 2n+1 is in the range.
  for (unsigned n = 0; n < 200; ++n) {
    EXPECT_NE(rho.decode(Value::nat(2 * n)).has_value(), rho.decode(Value::nat(2 * n + 1)).has_value());
  }
}
