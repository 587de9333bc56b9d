#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "simlab/core/nat.hpp"

namespace simlab::rec {

// Terms of the recursive-function language. Conventions:
//  - Z, S, I and (K k) are unary; Proj(i, k) is 1-based.
//  - PrimRec(base, step) recurses on its FIRST argument:
//      f(0, x...)   = base(x...)
//      f(y+1, x...) = step(y, f(y, x...), x...)
//  - Mu(f) searches f's FIRST argument:
//      (Mu f)(x...) = least i with f(i, x...) = 0, all f(j, x...) defined for j < i.
//  - Ack is the binary Ackermann-Peter function.
// Arities are checked at construction; a Term is always well formed.
class Term {
 public:
  enum class Kind { zero, succ, proj, comp, primrec, mu, ack, constant, identity };

  static Term zero();
  static Term succ();
  static Term proj(std::size_t i, std::size_t k);
  static Term comp(Term f, std::vector<Term> gs);
  static Term primrec(Term base, Term step);
  static Term mu(Term f);
  static Term ack();
  static Term constant(Nat k);
  static Term identity();

  Kind kind() const noexcept;
  std::size_t arity() const noexcept;

  // Proj(i, k): 1-based index.
  std::size_t proj_index() const;
  // Comp(f, ...) and Mu(f): f.
  const Term& head() const;
  // Comp(_, g1..gk): the g's.
  const std::vector<Term>& args() const;
  const Term& base() const;
  const Term& step() const;
  const Nat& constant_value() const;

  friend bool operator==(const Term& a, const Term& b);

  struct Node;

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Canonical text in the term grammar; parse_term(to_string(t)) == t.
std::string to_string(const Term& t);

enum class TermClass { prim, general };

// PRIM iff the term contains neither Mu nor Ack.
TermClass classify(const Term& t);

// Comp(t1, t2) for unary t1, t2.
Term compose_unary(const Term& t1, const Term& t2);

}  // namespace simlab::rec
