#pragma once

// Independent reference implementations used as test oracles. None of these
// share code with the library beyond the Term accessors.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "simlab/core/nat.hpp"
#include "simlab/recdsl/term.hpp"

namespace oracle {

using simlab::Nat;
using simlab::rec::Term;

// Naive recursive evaluator. Gives up (nullopt) after `budget` calls
// instead of counting fuel the way the library does.
class RefEval {
 public:
  explicit RefEval(std::uint64_t budget) : budget_(budget) {}

  std::optional<Nat> operator()(const Term& t, const std::vector<Nat>& args) {
    if (calls_++ > budget_) return std::nullopt;
    switch (t.kind()) {
      case Term::Kind::zero: return Nat(0);
      case Term::Kind::succ: return args[0] + 1;
      case Term::Kind::identity: return args[0];
      case Term::Kind::constant: return t.constant_value();
      case Term::Kind::proj: return args[t.proj_index() - 1];
      case Term::Kind::ack: return ack(args[0], args[1]);
      case Term::Kind::comp: {
        std::vector<Nat> vals;
        for (const auto& g : t.args()) {
          auto v = (*this)(g, args);
          if (!v) return std::nullopt;
          vals.push_back(*v);
        }
        return (*this)(t.head(), vals);
      }
      case Term::Kind::primrec: {
        // f(y, x) computed bottom-up from the definition.
        std::vector<Nat> rest(args.begin() + 1, args.end());
        auto acc = (*this)(t.base(), rest);
        for (Nat c = 0; acc && c < args[0]; ++c) {
          std::vector<Nat> s{c, *acc};
          s.insert(s.end(), rest.begin(), rest.end());
          acc = (*this)(t.step(), s);
        }
        return acc;
      }
      case Term::Kind::mu: {
        for (Nat i = 0;; ++i) {
          std::vector<Nat> s{i};
          s.insert(s.end(), args.begin(), args.end());
          auto v = (*this)(t.head(), s);
          if (!v) return std::nullopt;
          if (*v == 0) return i;
        }
      }
    }
    return std::nullopt;
  }

 private:
  std::optional<Nat> ack(const Nat& m, const Nat& n) {
    if (calls_++ > budget_) return std::nullopt;
    if (m == 0) return n + 1;
    if (n == 0) return ack(m - 1, 1);
    auto inner = ack(m, n - 1);
    if (!inner) return std::nullopt;
    return ack(m - 1, *inner);
  }

  std::uint64_t budget_;
  std::uint64_t calls_ = 0;
};

// Textbook Ackermann by memoised recursion on small arguments.
inline std::uint64_t ackermann(std::uint64_t m, std::uint64_t n) {
  static std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> memo;
  if (m == 0) return n + 1;
  auto key = std::make_pair(m, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const std::uint64_t v = n == 0 ? ackermann(m - 1, 1) : ackermann(m - 1, ackermann(m, n - 1));
  memo[key] = v;
  return v;
}

// The naturals laid out row by row: row m is m^2 .. m^2 + 2m.
class TriTable {
 public:
  explicit TriTable(std::uint64_t rows) {
    std::uint64_t next = 0;
    for (std::uint64_t m = 0; m < rows; ++m) {
      rows_.emplace_back();
      for (std::uint64_t k = 0; k < 2 * m + 1; ++k) {
        rows_.back().push_back(next);
        row_of_.push_back(m);
        ++next;
      }
    }
  }

  std::uint64_t row_of(std::uint64_t n) const { return row_of_.at(n); }
  const std::vector<std::uint64_t>& row(std::uint64_t m) const { return rows_.at(m); }
  std::uint64_t size() const { return row_of_.size(); }

  std::uint64_t f(std::uint64_t i, std::uint64_t j, std::uint64_t n) const {
    const auto& r = row(row_of(n) + i);
    return r[j % r.size()];
  }
  std::uint64_t g(std::uint64_t i, std::uint64_t n) const { return row(row_of(n) + i).front(); }
  // Next entry of the same row, wrapping.
  std::uint64_t pi(std::uint64_t n) const {
    const auto& r = row(row_of(n));
    const std::uint64_t col = n - r.front();
    return r[(col + 1) % r.size()];
  }

 private:
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::uint64_t> row_of_;
};

// Binary-without-leading-one, by counting through strings in length-lex order.
inline std::vector<std::string> bit_strings_in_order(std::size_t count) {
  std::vector<std::string> out{""};
  for (std::size_t len = 1; out.size() < count; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len) && out.size() < count; ++v) {
      std::string s(len, '0');
      for (std::size_t b = 0; b < len; ++b) {
        if ((v >> (len - 1 - b)) & 1) s[b] = '1';
      }
      out.push_back(s);
    }
  }
  return out;
}

// Random well-formed terms of a given arity, for differential tests.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : rng_(seed) {}

  Term unary(int depth) { return gen(1, depth); }

  Term gen(std::size_t arity, int depth) {
    const unsigned pick = depth <= 0 ? below(2) : below(8);
    switch (pick) {
      case 0: return leaf(arity);
      case 1: return Term::proj(1 + below(static_cast<unsigned>(arity)), arity);
      case 2:
      case 3: {
        const std::size_t m = 1 + below(2);
        std::vector<Term> gs;
        for (std::size_t k = 0; k < m; ++k) gs.push_back(gen(arity, depth - 1));
        return Term::comp(gen(m, depth - 1), std::move(gs));
      }
      case 4:
      case 5:
        if (arity >= 2) return Term::primrec(gen(arity - 1, depth - 1), gen(arity + 1, depth - 1));
        return Term::comp(Term::primrec(gen(1, depth - 1), gen(3, depth - 1)), {Term::identity(), Term::identity()});
      case 6: {
        // Searches that usually terminate: least i with body(i, x) = 0 where
        // the body is a truncated difference.
        const Term sub = Term::primrec(Term::proj(1, 1), Term::comp(pred(), {Term::proj(2, 3)}));
        const Term monus = Term::comp(sub, {Term::proj(2, 2), Term::proj(1, 2)});
        const Term x = arity == 1 ? Term::proj(2, 2) : Term::proj(2 + below(static_cast<unsigned>(arity)), arity + 1);
        const Term body = Term::comp(monus, {x, Term::proj(1, arity + 1)});
        return Term::mu(body);
      }
      default: {
        // The compiler only takes Ack sections (C ACK (K m) g).
        if (arity != 1) return gen(arity, depth - 1);
        return Term::comp(Term::ack(), {Term::constant(below(3)), gen(1, depth - 1)});
      }
    }
  }

 private:
  static Term pred() {
    return Term::comp(Term::primrec(Term::zero(), Term::proj(1, 3)), {Term::identity(), Term::identity()});
  }

  Term leaf(std::size_t arity) {
    if (arity != 1) return Term::proj(1 + below(static_cast<unsigned>(arity)), arity);
    switch (below(4)) {
      case 0: return Term::zero();
      case 1: return Term::succ();
      case 2: return Term::identity();
      default: return Term::constant(below(4));
    }
  }

  unsigned below(unsigned n) { return static_cast<unsigned>(rng_() % n); }

  std::mt19937_64 rng_;
};

}  // namespace oracle
