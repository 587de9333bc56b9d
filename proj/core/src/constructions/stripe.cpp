#include "simlab/constructions/stripe.hpp"

#include "simlab/core/errors.hpp"

namespace simlab::constructions {
namespace {

void check_params(const Nat& d, const Nat& r) {
  if (d < 2) throw DomainError("stripe needs d >= 2, got " + d.str());
  if (r < 0 || r >= d) throw DomainError("stripe needs 0 <= r < d, got r = " + r.str());
}

}  // namespace

Encoding stripe_encoding(const Nat& d, const Nat& r) {
  check_params(d, r);
  return Encoding::stripe(d, r);
}

PartialMap stripe_model_member(const PartialMap& f, const Nat& d, const Nat& r) {
  check_params(d, r);
  if (f.domain() != Domain::nat) throw DomainError("stripe members need a map over naturals");
  std::string name = "stripe(" + d.str() + "," + r.str() + ")[" + f.name() + "]";
  return PartialMap::builtin(std::move(name), Domain::nat, [f, d, r](const Value& x, Fuel& fuel) {
    const Nat& n = x.as_nat();
    if (n < r || (n - r) % d != 0) return Outcome::converged(x);
    Outcome y = apply(f, Value(Nat((n - r) / d)), fuel);
    if (!y.is_converged()) return y;
    return Outcome::converged(Value(Nat(d * y.value().as_nat() + r)));
  });
}

PartialMap stripe_model_member(const rec::Term& t, const Nat& d, const Nat& r, std::string name) {
  return stripe_model_member(PartialMap::from_term(std::move(name), t), d, r);
}

Model stripe_model(const Model& base, const Nat& d, const Nat& r, std::string name) {
  check_params(d, r);
  std::vector<PartialMap> members;
  for (const auto& f : base.members()) members.push_back(stripe_model_member(f, d, r));
  Model::Enumerator next;
  if (base.has_enumerator()) {
    next = [base, d, r](std::size_t i) -> std::optional<PartialMap> {
      auto f = base.enumerate(i);
      if (!f) return std::nullopt;
      return stripe_model_member(*f, d, r);
    };
  }
  return Model(std::move(name), Domain::nat, std::move(members), std::move(next));
}

std::vector<Encoding> stripe_family(unsigned d_max) {
  std::vector<Encoding> out;
  for (unsigned d = 1; d <= d_max; ++d) {
    for (unsigned r = 0; r < d; ++r) out.push_back(Encoding::stripe(d, r));
  }
  return out;
}

}  // namespace simlab::constructions
