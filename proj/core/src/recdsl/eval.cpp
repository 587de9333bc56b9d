#include "simlab/recdsl/eval.hpp"

#include <vector>

#include "simlab/core/errors.hpp"

namespace simlab::rec {
namespace {

enum class Status { ok, exhausted };

Status eval(const Term& t, std::span<const Nat> args, Fuel& fuel, Nat& out);

Status ack(const Nat& m0, const Nat& n0, Fuel& fuel, Nat& out) {
  std::vector<Nat> stack{m0};
  Nat cur = n0;
  while (!stack.empty()) {
    if (!fuel.spend()) return Status::exhausted;
    Nat m = std::move(stack.back());
    stack.pop_back();
    if (m == 0) {
      cur += 1;
    } else if (cur == 0) {
      stack.push_back(m - 1);
      cur = 1;
    } else {
      stack.push_back(m - 1);
      stack.push_back(std::move(m));
      cur -= 1;
    }
  }
  out = std::move(cur);
  return Status::ok;
}

Status eval(const Term& t, std::span<const Nat> args, Fuel& fuel, Nat& out) {
  if (!fuel.spend()) return Status::exhausted;
  switch (t.kind()) {
    case Term::Kind::zero: out = 0; return Status::ok;
    case Term::Kind::succ: out = args[0] + 1; return Status::ok;
    case Term::Kind::identity: out = args[0]; return Status::ok;
    case Term::Kind::constant: out = t.constant_value(); return Status::ok;
    case Term::Kind::proj: out = args[t.proj_index() - 1]; return Status::ok;
    case Term::Kind::ack: return ack(args[0], args[1], fuel, out);
    case Term::Kind::comp: {
      const auto& gs = t.args();
      std::vector<Nat> vals(gs.size());
      for (std::size_t j = 0; j < gs.size(); ++j) {
        if (eval(gs[j], args, fuel, vals[j]) != Status::ok) return Status::exhausted;
      }
      return eval(t.head(), vals, fuel, out);
    }
    case Term::Kind::primrec: {
      const Nat& y = args[0];
      std::span<const Nat> rest = args.subspan(1);
      Nat acc;
      if (eval(t.base(), rest, fuel, acc) != Status::ok) return Status::exhausted;
      std::vector<Nat> sargs(rest.size() + 2);
      std::copy(rest.begin(), rest.end(), sargs.begin() + 2);
      for (Nat c = 0; c < y; ++c) {
        if (!fuel.spend()) return Status::exhausted;
        sargs[0] = c;
        sargs[1] = std::move(acc);
        if (eval(t.step(), sargs, fuel, acc) != Status::ok) return Status::exhausted;
      }
      out = std::move(acc);
      return Status::ok;
    }
    case Term::Kind::mu: {
      std::vector<Nat> margs(args.size() + 1);
      std::copy(args.begin(), args.end(), margs.begin() + 1);
      for (Nat i = 0;; ++i) {
        if (!fuel.spend()) return Status::exhausted;
        margs[0] = i;
        Nat v;
        if (eval(t.head(), margs, fuel, v) != Status::ok) return Status::exhausted;
        if (v == 0) {
          out = i;
          return Status::ok;
        }
      }
    }
  }
  return Status::exhausted;
}

}  // namespace

Outcome eval_term(const Term& t, std::span<const Nat> args, Fuel& fuel) {
  if (args.size() != t.arity()) {
    throw ArityError("term " + to_string(t) + " has arity " + std::to_string(t.arity()) +
                     ", given " + std::to_string(args.size()) + " arguments");
  }
  for (const auto& a : args) {
    if (a < 0) throw DomainError("negative argument " + a.str());
  }
  Nat out;
  if (eval(t, args, fuel, out) != Status::ok) return Outcome::fuel_exhausted();
  return Outcome::converged(Value(std::move(out)));
}

Outcome eval_term(const Term& t, std::span<const Nat> args, std::uint64_t fuel) {
  Fuel f(fuel);
  return eval_term(t, args, f);
}

}  // namespace simlab::rec
