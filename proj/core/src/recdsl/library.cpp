#include "simlab/recdsl/library.hpp"

#include <utility>

namespace simlab::rec {
namespace {

Definitions build() {
  Definitions d;
  auto def = [&d](const std::string& name, std::string_view text) {
    d.emplace(name, parse_term(text, d));
  };
  def("add", "(R (P 1 1) (C S (P 2 3)))");            // add(y, x) = x + y
  def("mul", "(R Z (C add (P 3 3) (P 2 3)))");         // mul(y, x) = x * y
  def("pred", "(C (R Z (P 1 3)) I I)");
  def("sub_rev", "(R (P 1 1) (C pred (P 2 3)))");      // sub_rev(y, x) = x - y, truncated
  def("monus", "(C sub_rev (P 2 2) (P 1 2))");         // monus(a, b) = a - b, truncated
  def("double", "(C add I I)");
  def("square", "(C mul I I)");
  def("sg", "(C monus (K 1) (C monus (K 1) I))");
  def("parity", "(C (R Z (C monus (C (K 1) (P 1 3)) (P 2 3))) I I)");
  def("dist", "(C add (C monus (P 1 2) (P 2 2)) (C monus (P 2 2) (P 1 2)))");
  // least i with (i+1)^2 > n
  def("isqrt", "(M (C monus (C S (P 2 2)) (C square (C S (P 1 2)))))");
  // least i with 2(i+1) > n
  def("half", "(M (C monus (C S (P 2 2)) (C double (C S (P 1 2)))))");
  return d;
}

}  // namespace

const Definitions& standard_definitions() {
  static const Definitions defs = build();
  return defs;
}

std::vector<NamedTerm> benchmark_suite() {
  const auto& d = standard_definitions();
  const std::pair<const char*, const char*> entries[] = {
      {"zero", "Z"},
      {"succ", "S"},
      {"id", "I"},
      {"const3", "(K 3)"},
      {"plus2", "(C S S)"},
      {"plus3", "(C add I (K 3))"},
      {"double", "double"},
      {"times3", "(C mul (K 3) I)"},
      {"square", "square"},
      {"pred", "pred"},
      {"minus3", "(C monus I (K 3))"},
      {"sg", "sg"},
      {"parity", "parity"},
      {"dist5", "(C dist I (K 5))"},
      {"half", "half"},
      {"isqrt", "isqrt"},
      {"ack1", "(C ACK (K 1) I)"},
      {"ack2", "(C ACK (K 2) I)"},
  };
  std::vector<NamedTerm> out;
  for (const auto& [name, text] : entries) out.push_back({name, parse_term(text, d)});
  return out;
}

std::vector<NamedTerm> partial_suite() {
  const auto& d = standard_definitions();
  const std::pair<const char*, const char*> entries[] = {
      // defined on even inputs only
      {"exact_half", "(M (C dist (C double (P 1 2)) (P 2 2)))"},
      // defined on perfect squares only
      {"exact_sqrt", "(M (C dist (C square (P 1 2)) (P 2 2)))"},
      {"never", "(M (C S (P 1 2)))"},
  };
  std::vector<NamedTerm> out;
  for (const auto& [name, text] : entries) out.push_back({name, parse_term(text, d)});
  return out;
}

}  // namespace simlab::rec
