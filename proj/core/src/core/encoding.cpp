#include "simlab/core/encoding.hpp"

#include <map>

#include "simlab/constructions/godel.hpp"
#include "simlab/constructions/triangular.hpp"
#include "simlab/core/errors.hpp"
#include "simlab/machines/bits.hpp"

namespace simlab {

struct Encoding::Node {
  Kind kind;
  Domain source;
  Domain target;
  std::string name;
  bool bijective = false;

  Nat d = 1;  // stripe
  Nat r = 0;
  std::map<Nat, Nat> forward;  // finite_table
  std::map<Nat, Nat> backward;
  std::shared_ptr<const Node> outer;  // composed
  std::shared_ptr<const Node> inner;  // composed, inverse
  EncodeFn encode_fn;                 // custom
  DecodeFn decode_fn;
};

namespace {

using Node = Encoding::Node;

Value encode_node(const Node& n, const Value& x);
std::optional<Value> decode_node(const Node& n, const Value& y);

Value encode_node(const Node& n, const Value& x) {
  require_domain(x, n.source, "encode(" + n.name + ")");
  switch (n.kind) {
    case Encoding::Kind::identity: return x;
    case Encoding::Kind::stripe: return Value(n.d * x.as_nat() + n.r);
    case Encoding::Kind::tri_pi: return Value(constructions::tri_pi(x.as_nat()));
    case Encoding::Kind::bits_bijection: return Value(machines::nat_to_bits(x.as_nat()));
    case Encoding::Kind::godel_pairing: return Value(constructions::godel_encode(x.as_list()));
    case Encoding::Kind::finite_table: {
      auto it = n.forward.find(x.as_nat());
      return it == n.forward.end() ? x : Value(it->second);
    }
    case Encoding::Kind::composed: return encode_node(*n.outer, encode_node(*n.inner, x));
    case Encoding::Kind::inverse: {
      auto back = decode_node(*n.inner, x);
      if (!back) throw Error("encoding " + n.name + " is not total: " + to_string(x) + " is off-range");
      return *back;
    }
    case Encoding::Kind::custom: return n.encode_fn(x);
  }
  throw Error("corrupt encoding");
}

std::optional<Value> decode_node(const Node& n, const Value& y) {
  require_domain(y, n.target, "decode(" + n.name + ")");
  switch (n.kind) {
    case Encoding::Kind::identity: return y;
    case Encoding::Kind::stripe: {
      const Nat& v = y.as_nat();
      if (v < n.r) return std::nullopt;
      const Nat shifted = v - n.r;
      if (shifted % n.d != 0) return std::nullopt;
      return Value(Nat(shifted / n.d));
    }
    case Encoding::Kind::tri_pi: return Value(constructions::tri_pi_inverse(y.as_nat()));
    case Encoding::Kind::bits_bijection: return Value(machines::bits_to_nat(y.as_bits()));
    case Encoding::Kind::godel_pairing: return Value(constructions::godel_decode(y.as_nat()));
    case Encoding::Kind::finite_table: {
      auto it = n.backward.find(y.as_nat());
      return it == n.backward.end() ? y : Value(it->second);
    }
    case Encoding::Kind::composed: {
      auto mid = decode_node(*n.outer, y);
      if (!mid) return std::nullopt;
      return decode_node(*n.inner, *mid);
    }
    case Encoding::Kind::inverse: return encode_node(*n.inner, y);
    case Encoding::Kind::custom: return n.decode_fn(y);
  }
  throw Error("corrupt encoding");
}

std::shared_ptr<Node> make_node(Encoding::Kind kind, Domain source, Domain target, std::string name,
                                bool bijective) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->source = source;
  n->target = target;
  n->name = std::move(name);
  n->bijective = bijective;
  return n;
}

}  // namespace

Encoding Encoding::identity(Domain domain) {
  return Encoding(make_node(Kind::identity, domain, domain, "identity", true));
}

Encoding Encoding::stripe(const Nat& d, const Nat& r) {
  if (d < 1) throw ValidationError("stripe encoding needs d >= 1");
  if (r < 0 || r >= d) throw ValidationError("stripe encoding needs 0 <= r < d");
  auto n = make_node(Kind::stripe, Domain::nat, Domain::nat,
                     "stripe(" + d.str() + "," + r.str() + ")", d == 1);
  n->d = d;
  n->r = r;
  return Encoding(std::move(n));
}

Encoding Encoding::tri_pi() {
  return Encoding(make_node(Kind::tri_pi, Domain::nat, Domain::nat, "tri_pi", true));
}

Encoding Encoding::bits_bijection() {
  return Encoding(make_node(Kind::bits_bijection, Domain::nat, Domain::bits, "bits", true));
}

Encoding Encoding::godel_pairing() {
  return Encoding(make_node(Kind::godel_pairing, Domain::list, Domain::nat, "godel", true));
}

Encoding Encoding::finite_table(std::vector<std::pair<Nat, Nat>> images) {
  auto n = make_node(Kind::finite_table, Domain::nat, Domain::nat, "", true);
  std::string name = "table[";
  for (const auto& [from, to] : images) {
    if (from < 0 || to < 0) throw ValidationError("finite table entries must be naturals");
    if (!n->forward.emplace(from, to).second) {
      throw ValidationError("finite table maps " + from.str() + " twice");
    }
    if (!n->backward.emplace(to, from).second) {
      throw ValidationError("finite table is not injective: " + to.str() + " is hit twice");
    }
    if (name.size() > 6) name += ',';
    name += from.str() + ">" + to.str();
  }
  for (const auto& [to, from] : n->backward) {
    if (!n->forward.contains(to)) {
      throw ValidationError("finite table is not a permutation of its points: " + to.str() +
                            " is an image but not a listed point");
    }
  }
  n->name = name + "]";
  return Encoding(std::move(n));
}

Encoding Encoding::inverse(const Encoding& e) {
  if (!e.is_bijection()) throw ValidationError("cannot invert non-bijective encoding " + e.name());
  if (e.kind() == Kind::inverse) return Encoding(e.node_->inner);
  std::string name = e.kind() == Kind::tri_pi ? "tri_pi_inverse" : "inverse(" + e.name() + ")";
  auto n = make_node(Kind::inverse, e.target(), e.source(), std::move(name), true);
  n->inner = e.node_;
  return Encoding(std::move(n));
}

Encoding Encoding::custom(std::string name, Domain source, Domain target, EncodeFn encode,
                          DecodeFn decode, bool bijective) {
  if (!encode || !decode) throw ValidationError("custom encoding " + name + " needs both directions");
  auto n = make_node(Kind::custom, source, target, std::move(name), bijective);
  n->encode_fn = std::move(encode);
  n->decode_fn = std::move(decode);
  return Encoding(std::move(n));
}

Encoding::Kind Encoding::kind() const noexcept { return node_->kind; }
Domain Encoding::source() const noexcept { return node_->source; }
Domain Encoding::target() const noexcept { return node_->target; }
const std::string& Encoding::name() const noexcept { return node_->name; }
bool Encoding::is_bijection() const noexcept { return node_->bijective; }

std::pair<Nat, Nat> Encoding::stripe_params() const {
  if (node_->kind != Kind::stripe) throw Error(name() + " is not a stripe encoding");
  return {node_->d, node_->r};
}

Value Encoding::encode(const Value& x) const { return encode_node(*node_, x); }

std::optional<Value> Encoding::decode(const Value& y) const { return decode_node(*node_, y); }

Encoding compose_encodings(const Encoding& outer, const Encoding& inner) {
  if (inner.target() != outer.source()) {
    throw DomainError("cannot compose " + outer.name() + " after " + inner.name() + ": " +
                      std::string(to_string(inner.target())) + " vs " +
                      std::string(to_string(outer.source())));
  }
  if (outer.kind() == Encoding::Kind::identity) return inner;
  if (inner.kind() == Encoding::Kind::identity) return outer;
  auto n = make_node(Encoding::Kind::composed, inner.source(), outer.target(),
                     outer.name() + "." + inner.name(), outer.is_bijection() && inner.is_bijection());
  n->outer = outer.node_;
  n->inner = inner.node_;
  return Encoding(std::move(n));
}

Outcome encode_outcome(const Encoding& e, const Outcome& o) {
  if (!o.is_converged()) return o;
  return Outcome::converged(e.encode(o.value()));
}

}  // namespace simlab
