#include "simlab/recdsl/term.hpp"

#include "simlab/core/errors.hpp"

namespace simlab::rec {

struct Term::Node {
  Kind kind;
  std::size_t arity = 0;
  std::size_t index = 0;  // proj
  Nat constant = 0;
  // comp: f, g1..gk; primrec: base, step; mu: f
  std::vector<Term> children;
  std::vector<Term> comp_args;
};

namespace {

std::shared_ptr<Term::Node> make(Term::Kind kind, std::size_t arity) {
  auto n = std::make_shared<Term::Node>();
  n->kind = kind;
  n->arity = arity;
  return n;
}

}  // namespace

Term Term::zero() { return Term(make(Kind::zero, 1)); }
Term Term::succ() { return Term(make(Kind::succ, 1)); }
Term Term::ack() { return Term(make(Kind::ack, 2)); }
Term Term::identity() { return Term(make(Kind::identity, 1)); }

Term Term::constant(Nat k) {
  if (k < 0) throw ArityError("constant (K " + k.str() + ") must be a natural number");
  auto n = make(Kind::constant, 1);
  n->constant = std::move(k);
  return Term(std::move(n));
}

Term Term::proj(std::size_t i, std::size_t k) {
  if (k == 0 || i == 0 || i > k) {
    throw ArityError("arity mismatch in (P " + std::to_string(i) + " " + std::to_string(k) +
                     "): need 1 <= i <= k");
  }
  auto n = make(Kind::proj, k);
  n->index = i;
  return Term(std::move(n));
}

Term Term::comp(Term f, std::vector<Term> gs) {
  auto describe = [&] {
    std::string s = "(C " + to_string(f);
    for (const auto& g : gs) s += " " + to_string(g);
    return s + ")";
  };
  if (gs.empty()) throw ArityError("arity mismatch in " + describe() + ": no argument terms");
  if (f.arity() != gs.size()) {
    throw ArityError("arity mismatch in " + describe() + ": " + to_string(f) + " takes " +
                     std::to_string(f.arity()) + " arguments, given " + std::to_string(gs.size()));
  }
  const std::size_t arity = gs.front().arity();
  for (const auto& g : gs) {
    if (g.arity() != arity) {
      throw ArityError("arity mismatch in " + describe() + ": " + to_string(g) + " has arity " +
                       std::to_string(g.arity()) + ", expected " + std::to_string(arity));
    }
  }
  auto n = make(Kind::comp, arity);
  n->children.push_back(std::move(f));
  n->comp_args = std::move(gs);
  return Term(std::move(n));
}

Term Term::primrec(Term base, Term step) {
  if (step.arity() != base.arity() + 2) {
    throw ArityError("arity mismatch in (R " + to_string(base) + " " + to_string(step) +
                     "): step " + to_string(step) + " has arity " + std::to_string(step.arity()) +
                     ", expected " + std::to_string(base.arity() + 2));
  }
  auto n = make(Kind::primrec, base.arity() + 1);
  n->children.push_back(std::move(base));
  n->children.push_back(std::move(step));
  return Term(std::move(n));
}

Term Term::mu(Term f) {
  if (f.arity() == 0) {
    throw ArityError("arity mismatch in (M " + to_string(f) + "): body needs arity >= 1");
  }
  auto n = make(Kind::mu, f.arity() - 1);
  n->children.push_back(std::move(f));
  return Term(std::move(n));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }
std::size_t Term::arity() const noexcept { return node_->arity; }

std::size_t Term::proj_index() const {
  if (node_->kind != Kind::proj) throw Error("not a projection");
  return node_->index;
}

const Term& Term::head() const {
  if (node_->kind != Kind::comp && node_->kind != Kind::mu) throw Error("term has no head");
  return node_->children.front();
}

const std::vector<Term>& Term::args() const {
  if (node_->kind != Kind::comp) throw Error("not a composition");
  return node_->comp_args;
}

const Term& Term::base() const {
  if (node_->kind != Kind::primrec) throw Error("not a primitive recursion");
  return node_->children[0];
}

const Term& Term::step() const {
  if (node_->kind != Kind::primrec) throw Error("not a primitive recursion");
  return node_->children[1];
}

const Nat& Term::constant_value() const {
  if (node_->kind != Kind::constant) throw Error("not a constant");
  return node_->constant;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const Term::Node& x = *a.node_;
  const Term::Node& y = *b.node_;
  return x.kind == y.kind && x.arity == y.arity && x.index == y.index &&
         x.constant == y.constant && x.children == y.children && x.comp_args == y.comp_args;
}

namespace {

void append(std::string& out, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::zero: out += "Z"; return;
    case Term::Kind::succ: out += "S"; return;
    case Term::Kind::identity: out += "I"; return;
    case Term::Kind::ack: out += "ACK"; return;
    case Term::Kind::proj:
      out += "(P " + std::to_string(t.proj_index()) + " " + std::to_string(t.arity()) + ")";
      return;
    case Term::Kind::constant: out += "(K " + t.constant_value().str() + ")"; return;
    case Term::Kind::comp:
      out += "(C ";
      append(out, t.head());
      for (const auto& g : t.args()) {
        out += ' ';
        append(out, g);
      }
      out += ')';
      return;
    case Term::Kind::primrec:
      out += "(R ";
      append(out, t.base());
      out += ' ';
      append(out, t.step());
      out += ')';
      return;
    case Term::Kind::mu:
      out += "(M ";
      append(out, t.head());
      out += ')';
      return;
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  append(out, t);
  return out;
}

TermClass classify(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::mu:
    case Term::Kind::ack: return TermClass::general;
    case Term::Kind::comp:
      if (classify(t.head()) == TermClass::general) return TermClass::general;
      for (const auto& g : t.args()) {
        if (classify(g) == TermClass::general) return TermClass::general;
      }
      return TermClass::prim;
    case Term::Kind::primrec:
      return classify(t.base()) == TermClass::general || classify(t.step()) == TermClass::general
                 ? TermClass::general
                 : TermClass::prim;
    default: return TermClass::prim;
  }
}

Term compose_unary(const Term& t1, const Term& t2) {
  if (t1.arity() != 1 || t2.arity() != 1) {
    throw ArityError("compose_unary needs unary terms, got " + to_string(t1) + " and " +
                     to_string(t2));
  }
  return Term::comp(t1, {t2});
}

}  // namespace simlab::rec
