#include "simlab/constructions/godel.hpp"

#include "simlab/core/errors.hpp"

namespace simlab::constructions {
namespace {

// 2^a for a code a; anything wider is far beyond desk scale.
constexpr unsigned max_exponent = 1u << 24;

}  // namespace

Nat godel_encode(const List& x) {
  // Walk the spine iteratively; recurse only into heads.
  std::vector<const List*> spine;
  for (const List* p = &x; !p->is_nil(); p = &p->tail()) spine.push_back(p);
  Nat code = 0;
  for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
    const Nat a = godel_encode((*it)->head());
    if (a > max_exponent) throw BoundError("godel code too large to encode");
    code = (Nat(1) << a.convert_to<unsigned>()) * (2 * code + 1);
  }
  return code;
}

List godel_decode(const Nat& n) {
  if (n < 0) throw DomainError("godel_decode of a negative number");
  std::vector<List> heads;
  Nat rest = n;
  while (rest != 0) {
    const unsigned a = boost::multiprecision::lsb(rest);
    heads.push_back(godel_decode(Nat(a)));
    rest >>= a;
    rest >>= 1;  // (2b + 1) -> b
  }
  return List::of(std::move(heads));
}

Model godel_list_model(const Model& nat_model, std::string name) {
  if (nat_model.domain() != Domain::nat) throw DomainError("godel_list_model needs a model over naturals");
  return pullback(Encoding::godel_pairing(), nat_model, std::move(name));
}

}  // namespace simlab::constructions
