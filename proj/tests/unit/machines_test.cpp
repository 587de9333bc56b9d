#include <gtest/gtest.h>

#include "simlab/core/errors.hpp"
#include "simlab/machines/bits.hpp"
#include "simlab/machines/cm.hpp"
#include "simlab/machines/compile.hpp"
#include "simlab/machines/library.hpp"
#include "simlab/machines/tm.hpp"
#include "simlab/recdsl/eval.hpp"
#include "simlab/recdsl/library.hpp"
#include "simlab/recdsl/parse.hpp"
#include "support/oracles.hpp"

using namespace simlab;
using namespace simlab::machines;

namespace {

Outcome bits(const char* s) { return Outcome::converged(Value(Bits(s))); }
Outcome nat(std::uint64_t n) { return Outcome::converged(Value::nat(n)); }

Outcome eval_unary(const rec::Term& t, std::uint64_t n, std::uint64_t fuel) {
  const Nat arg(n);
  return rec::eval_term(t, std::span<const Nat>(&arg, 1), fuel);
}

}  // namespace

TEST(Bits, EnumerationOrder) {
  const char* first[] = {"", "0", "1", "00", "01", "10", "11", "000"};
  for (unsigned n = 0; n < 8; ++n) EXPECT_EQ(nat_to_bits(n).str(), first[n]) << n;
  const auto order = oracle::bit_strings_in_order(5000);
  for (unsigned n = 0; n < order.size(); ++n) {
    ASSERT_EQ(nat_to_bits(n).str(), order[n]) << n;
    ASSERT_EQ(bits_to_nat(Bits(order[n])), n);
  }
}

TEST(Bits, LargeValuesRoundTrip) {
  const Nat big = (Nat(1) << 200) + 12345;
  EXPECT_EQ(bits_to_nat(nat_to_bits(big)), big);
  EXPECT_EQ(nat_to_bits(big).size(), 200u);
}

TEST(Tm, LibraryExamples) {
  EXPECT_EQ(run_tm(tm_erase(), Bits("101"), 1000), bits(""));
  EXPECT_EQ(run_tm(tm_identity(), Bits("0110"), 1000), bits("0110"));
  EXPECT_EQ(run_tm(tm_binary_successor(), Bits("01"), 1000), bits("10"));
  EXPECT_EQ(run_tm(tm_binary_successor(), Bits("11"), 1000), bits("000"));
  EXPECT_EQ(run_tm(tm_binary_successor(), Bits(""), 1000), bits("0"));
}

TEST(Tm, SuccessorMatchesBijection) {
  for (unsigned n = 0; n < 2000; ++n) {
    EXPECT_EQ(run_tm(tm_binary_successor(), nat_to_bits(n), 10'000), Outcome::converged(Value(nat_to_bits(n + 1))))
        << n;
  }
}

TEST(Tm, FuelAndLoops) {
  const auto loop = parse_tm("start a\nhalt h\na 0 a 0 S\na 1 a 1 S\na _ a _ S\n");
  EXPECT_EQ(run_tm(loop, Bits("1"), 500), Outcome::fuel_exhausted());
  // One step to notice the halt state.
  EXPECT_EQ(run_tm(tm_identity(), Bits("1"), 1), bits("1"));
  EXPECT_EQ(run_tm(tm_identity(), Bits("1"), 0), Outcome::fuel_exhausted());
}

TEST(Tm, ParseErrors) {
  EXPECT_THROW(parse_tm("start a\nhalt h\na 0 h 0 R\n"), ValidationError);  // missing a 1, a _
  EXPECT_THROW(parse_tm("start a\nhalt h\na 0 h 0 X\na 1 h 1 R\na _ h _ R\n"), ParseError);
  EXPECT_THROW(parse_tm("start a\nhalt h\na 0 h 0 R\na 0 h 0 R\na 1 h 1 R\na _ h _ R\n"), ParseError);
  EXPECT_THROW(parse_tm("halt h\n"), ParseError);
  const auto p = parse_tm(tm_binary_successor_source());
  EXPECT_EQ(to_string(parse_tm(to_string(p))), to_string(p));
}

TEST(Cm, Examples) {
  CmProgram halt_only{1, 0, 0, {{CmInstruction::Op::halt, 0, 0}}};
  EXPECT_EQ(run_cm(halt_only, 5, 100), nat(5));
  CmProgram inc_once{1, 0, 0, {{CmInstruction::Op::inc, 0, 0}, {CmInstruction::Op::halt, 0, 0}}};
  EXPECT_EQ(run_cm(inc_once, 4, 100), nat(5));
  CmProgram forever{1, 0, 0, {{CmInstruction::Op::jump, 0, 0}}};
  EXPECT_EQ(run_cm(forever, 0, 1000), Outcome::fuel_exhausted());
}

TEST(Cm, ParseAndRun) {
  const auto p = parse_cm(R"(# n -> n + 3
registers 2
input 0
output 1
loop: decjz 0 done
      inc 1
      jump loop
done: inc 1
      inc 1
      inc 1
      halt
)");
  for (unsigned n = 0; n < 30; ++n) EXPECT_EQ(run_cm(p, n, 10'000), nat(n + 3));
  EXPECT_EQ(parse_cm(to_string(p)).code, p.code);
  EXPECT_THROW(parse_cm("inc 0\njump nowhere\n"), ParseError);
  EXPECT_THROW(parse_cm("registers 1\ninc 3\n"), ValidationError);
  // Running off the end halts.
  EXPECT_EQ(run_cm(parse_cm("inc 0\ninc 0\n"), 1, 100), nat(3));
}

TEST(Cm, BigRegisters) {
  const auto p = parse_cm("inc 0\n");
  const Nat big = Nat(1) << 100;
  EXPECT_EQ(run_cm(p, big, 10), Outcome::converged(Value(Nat(big + 1))));
}

TEST(Compile, Examples) {
  const auto& defs = rec::standard_definitions();
  EXPECT_EQ(run_cm(compile_rec_to_cm(rec::Term::succ()), 7, 1000), nat(8));
  EXPECT_EQ(run_cm(compile_rec_to_cm(rec::parse_term("(C add I (K 3))", defs)), 4, 10'000), nat(7));
  EXPECT_EQ(run_cm(compile_rec_to_cm(defs.at("isqrt")), 10, 1'000'000), nat(3));
  EXPECT_EQ(run_cm(compile_rec_to_cm(rec::parse_term("(C ACK (K 3) I)")), 3, 1'000'000), nat(61));
}

TEST(Compile, Unsupported) {
  EXPECT_THROW(compile_rec_to_cm(rec::parse_term("(C ACK I I)")), CompileError);
  EXPECT_THROW(compile_rec_to_cm(rec::parse_term("(R (P 1 1) (C S (P 2 3)))")), CompileError);
}

TEST(Compile, PartialTermsStayPartial) {
  for (const auto& [name, t] : rec::partial_suite()) {
    const auto cm = compile_rec_to_cm(t);
    for (unsigned n = 0; n < 12; ++n) {
      const Outcome want = eval_unary(t, n, 20'000);
      const Outcome got = run_cm(cm, n, 2'000'000);
      if (want.is_converged()) {
        EXPECT_EQ(got, want) << name << " at " << n;
      } else {
        EXPECT_EQ(got, Outcome::fuel_exhausted()) << name << " at " << n;
      }
    }
  }
}

TEST(Compile, AgreesWithEvaluatorOnRandomTerms) {
  oracle::TermGen gen(77);
  int compared = 0;
  for (int k = 0; k < 300; ++k) {
    const rec::Term t = gen.gen(1, 3);
    const auto cm = compile_rec_to_cm(t);
    for (unsigned n = 0; n < 6; ++n) {
      const Outcome want = eval_unary(t, n, 200'000);
      if (!want.is_converged()) continue;
      const Outcome got = run_cm(cm, n, 50'000'000);
      ASSERT_EQ(got, want) << rec::to_string(t) << " at " << n;
      ++compared;
    }
  }
  EXPECT_GT(compared, 1000);
}

TEST(Compile, RegistersBesidesOutputAreIrrelevant) {
  // Compiled programs read only the input register and write only the output.
  const auto cm = compile_rec_to_cm(rec::standard_definitions().at("square"));
  EXPECT_EQ(cm.input, 0u);
  EXPECT_EQ(cm.output, 1u);
  EXPECT_GE(cm.registers, 2u);
}
