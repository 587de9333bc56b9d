#include "simlab/core/partial_map.hpp"

#include <optional>

#include "simlab/core/errors.hpp"
#include "simlab/machines/cm.hpp"
#include "simlab/machines/tm.hpp"
#include "simlab/recdsl/eval.hpp"
#include "simlab/recdsl/term.hpp"

namespace simlab {

struct PartialMap::Node {
  Kind kind;
  std::string name;
  Domain domain;

  std::optional<rec::Term> term;
  std::shared_ptr<const machines::TmProgram> tm;
  std::shared_ptr<const machines::CmProgram> cm;
  BuiltinFn fn;
  std::vector<std::pair<Value, Value>> points;

  // conjugate: push selects rho o inner o rho^-1, otherwise rho^-1 o inner o rho
  std::optional<Encoding> encoding;
  bool push = false;
  PartialMap inner;

  // composed: f o g
  PartialMap f;
  PartialMap g;
};

namespace {

std::shared_ptr<PartialMap::Node> make_node(PartialMap::Kind kind, std::string name, Domain domain) {
  auto n = std::make_shared<PartialMap::Node>();
  n->kind = kind;
  n->name = std::move(name);
  n->domain = domain;
  return n;
}

}  // namespace

PartialMap PartialMap::from_term(std::string name, const rec::Term& term) {
  if (term.arity() != 1) {
    throw InvalidMap("invalid map: term " + rec::to_string(term) + " has arity " +
                     std::to_string(term.arity()) + ", maps must be unary");
  }
  auto n = make_node(Kind::term, std::move(name), Domain::nat);
  n->term = term;
  return PartialMap(std::move(n));
}

PartialMap PartialMap::turing(std::string name, const machines::TmProgram& program) {
  program.validate();
  auto n = make_node(Kind::turing, std::move(name), Domain::bits);
  n->tm = std::make_shared<const machines::TmProgram>(program);
  return PartialMap(std::move(n));
}

PartialMap PartialMap::counter(std::string name, const machines::CmProgram& program) {
  program.validate();
  auto n = make_node(Kind::counter, std::move(name), Domain::nat);
  n->cm = std::make_shared<const machines::CmProgram>(program);
  return PartialMap(std::move(n));
}

PartialMap PartialMap::builtin(std::string name, Domain domain, BuiltinFn fn) {
  if (!fn) throw InvalidMap("invalid map: builtin " + name + " has no body");
  auto n = make_node(Kind::builtin, std::move(name), domain);
  n->fn = std::move(fn);
  return PartialMap(std::move(n));
}

PartialMap PartialMap::table(std::string name, Domain domain,
                             std::vector<std::pair<Value, Value>> points) {
  for (std::size_t k = 0; k < points.size(); ++k) {
    require_domain(points[k].first, domain, "table " + name);
    require_domain(points[k].second, domain, "table " + name);
    for (std::size_t j = 0; j < k; ++j) {
      if (points[j].first == points[k].first) {
        throw InvalidMap("invalid map: table " + name + " lists " + to_string(points[k].first) +
                         " twice");
      }
    }
  }
  auto n = make_node(Kind::table, std::move(name), domain);
  n->points = std::move(points);
  return PartialMap(std::move(n));
}

PartialMap PartialMap::compose(const PartialMap& f, const PartialMap& g) {
  if (!f.valid() || !g.valid()) throw InvalidMap("invalid map: composing an unset map");
  if (f.domain() != g.domain()) {
    throw DomainError("wrong domain: cannot compose " + f.name() + " with " + g.name());
  }
  auto n = make_node(Kind::composed, f.name() + "." + g.name(), f.domain());
  n->f = f;
  n->g = g;
  return PartialMap(std::move(n));
}

PartialMap::Kind PartialMap::kind() const {
  if (!node_) throw InvalidMap("invalid map");
  return node_->kind;
}

const std::string& PartialMap::name() const {
  if (!node_) throw InvalidMap("invalid map");
  return node_->name;
}

Domain PartialMap::domain() const {
  if (!node_) throw InvalidMap("invalid map");
  return node_->domain;
}

PartialMap PartialMap::renamed(std::string name) const {
  if (!node_) throw InvalidMap("invalid map");
  auto n = std::make_shared<Node>(*node_);
  n->name = std::move(name);
  return PartialMap(std::move(n));
}

Outcome apply(const PartialMap& m, const Value& x, Fuel& fuel) {
  if (!m.node_) throw InvalidMap("invalid map");
  const PartialMap::Node& n = *m.node_;
  if (x.domain() != n.domain) {
    throw DomainError("wrong domain: " + n.name + " takes " + std::string(to_string(n.domain)) +
                      ", got " + std::string(to_string(x.domain())));
  }
  switch (n.kind) {
    case PartialMap::Kind::term: {
      const Nat arg = x.as_nat();
      return rec::eval_term(*n.term, std::span<const Nat>(&arg, 1), fuel);
    }
    case PartialMap::Kind::turing: return machines::run_tm(*n.tm, x.as_bits(), fuel);
    case PartialMap::Kind::counter: return machines::run_cm(*n.cm, x.as_nat(), fuel);
    case PartialMap::Kind::builtin:
      if (!fuel.spend()) return Outcome::fuel_exhausted();
      return n.fn(x, fuel);
    case PartialMap::Kind::table:
      if (!fuel.spend()) return Outcome::fuel_exhausted();
      for (const auto& [from, to] : n.points) {
        if (from == x) return Outcome::converged(to);
      }
      return Outcome::diverged();
    case PartialMap::Kind::conjugate: {
      const Encoding& e = *n.encoding;
      if (n.push) {
        auto pre = e.decode(x);
        if (!pre) return Outcome::diverged();
        return encode_outcome(e, apply(n.inner, *pre, fuel));
      }
      Outcome r = apply(n.inner, e.encode(x), fuel);
      if (!r.is_converged()) return r;
      auto back = e.decode(r.value());
      if (!back) return Outcome::diverged();
      return Outcome::converged(std::move(*back));
    }
    case PartialMap::Kind::composed: {
      Outcome r = apply(n.g, x, fuel);
      if (!r.is_converged()) return r;
      return apply(n.f, r.value(), fuel);
    }
  }
  throw InvalidMap("invalid map");
}

Outcome apply(const PartialMap& m, const Value& x, std::uint64_t fuel) {
  Fuel meter(fuel);
  return apply(m, x, meter);
}

PartialMap pushforward(const Encoding& e, const PartialMap& g) {
  if (!g.valid()) throw InvalidMap("invalid map");
  if (g.domain() != e.source()) {
    throw DomainError("wrong domain: pushforward along " + e.name() + " needs a map over " +
                      std::string(to_string(e.source())));
  }
  auto n = make_node(PartialMap::Kind::conjugate, "push[" + e.name() + "](" + g.name() + ")",
                     e.target());
  n->encoding = e;
  n->push = true;
  n->inner = g;
  return PartialMap(std::move(n));
}

PartialMap pullback(const Encoding& e, const PartialMap& f) {
  if (!f.valid()) throw InvalidMap("invalid map");
  if (f.domain() != e.target()) {
    throw DomainError("wrong domain: pullback along " + e.name() + " needs a map over " +
                      std::string(to_string(e.target())));
  }
  auto n = make_node(PartialMap::Kind::conjugate, "pull[" + e.name() + "](" + f.name() + ")",
                     e.source());
  n->encoding = e;
  n->push = false;
  n->inner = f;
  return PartialMap(std::move(n));
}

}  // namespace simlab
