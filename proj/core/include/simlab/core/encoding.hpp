#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simlab/core/outcome.hpp"
#include "simlab/core/value.hpp"

namespace simlab {

// A total injection between domains together with its partial inverse.
// decode(y) is defined exactly on the range of encode. Encodings are
// immutable values; copies share their representation.
class Encoding {
 public:
  enum class Kind {
    identity,
    stripe,          // n -> d*n + r over the naturals
    tri_pi,          // row-cycling permutation of the triangular array
    bits_bijection,  // n -> shortest binary form of n+1 without its leading 1
    godel_pairing,   // pure lists -> naturals
    finite_table,    // finite permutation of naturals, identity elsewhere
    composed,
    inverse,
    custom,
  };

  using EncodeFn = std::function<Value(const Value&)>;
  using DecodeFn = std::function<std::optional<Value>(const Value&)>;

  static Encoding identity(Domain domain);
  // d >= 1, r < d.
  static Encoding stripe(const Nat& d, const Nat& r);
  static Encoding tri_pi();
  static Encoding bits_bijection();
  static Encoding godel_pairing();
  // The listed pairs must form a permutation of their key set.
  static Encoding finite_table(std::vector<std::pair<Nat, Nat>> images);
  // Only valid for encodings known to be bijections.
  static Encoding inverse(const Encoding& e);
  // Escape hatch for encodings defined by closed formulas elsewhere (the
  // Example-RE rho, test permutations). The caller vouches for injectivity
  // and for decode being the exact inverse on the range.
  static Encoding custom(std::string name, Domain source, Domain target, EncodeFn encode,
                         DecodeFn decode, bool bijective = false);

  Kind kind() const noexcept;
  Domain source() const noexcept;
  Domain target() const noexcept;
  const std::string& name() const noexcept;
  bool is_bijection() const noexcept;

  // Stripe parameters; throws if kind() != stripe.
  std::pair<Nat, Nat> stripe_params() const;

  Value encode(const Value& x) const;
  std::optional<Value> decode(const Value& y) const;

  struct Node;

 private:
  explicit Encoding(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend Encoding compose_encodings(const Encoding& outer, const Encoding& inner);

  std::shared_ptr<const Node> node_;
};

// x -> outer(inner(x)). inner's target must equal outer's source.
Encoding compose_encodings(const Encoding& outer, const Encoding& inner);

// Lifts an encoding to outcomes: converged values are encoded, bottom stays
// bottom, an undecided outcome stays undecided.
Outcome encode_outcome(const Encoding& e, const Outcome& o);

}  // namespace simlab
