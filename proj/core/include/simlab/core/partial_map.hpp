#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "simlab/core/encoding.hpp"
#include "simlab/core/outcome.hpp"
#include "simlab/core/value.hpp"

namespace simlab {

namespace rec {
class Term;
}
namespace machines {
struct TmProgram;
struct CmProgram;
}  // namespace machines

// An evaluable partial function D -> D + {bottom}. Evaluation is
// deterministic and fuel-monotone: if apply converges at fuel F it converges
// to the same value at every larger fuel.
class PartialMap {
 public:
  enum class Kind { term, turing, counter, builtin, table, conjugate, composed };

  using BuiltinFn = std::function<Outcome(const Value&, Fuel&)>;

  // An unset map; apply() on it raises InvalidMap.
  PartialMap() = default;

  // Unary recursive-function term over the naturals.
  static PartialMap from_term(std::string name, const rec::Term& term);
  // Turing machine over bit strings.
  static PartialMap turing(std::string name, const machines::TmProgram& program);
  // Counter machine over the naturals.
  static PartialMap counter(std::string name, const machines::CmProgram& program);
  // Closed-form function. The callable must spend fuel for its work and be
  // a pure function of its input.
  static PartialMap builtin(std::string name, Domain domain, BuiltinFn fn);
  // Finite graph; undefined (Diverged) off the listed points.
  static PartialMap table(std::string name, Domain domain,
                          std::vector<std::pair<Value, Value>> points);
  // f o g.
  static PartialMap compose(const PartialMap& f, const PartialMap& g);

  bool valid() const noexcept { return node_ != nullptr; }
  Kind kind() const;
  const std::string& name() const;
  Domain domain() const;

  PartialMap renamed(std::string name) const;

  struct Node;

 private:
  explicit PartialMap(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend Outcome apply(const PartialMap&, const Value&, Fuel&);
  friend PartialMap pushforward(const Encoding&, const PartialMap&);
  friend PartialMap pullback(const Encoding&, const PartialMap&);

  std::shared_ptr<const Node> node_;
};

Outcome apply(const PartialMap& m, const Value& x, Fuel& fuel);
Outcome apply(const PartialMap& m, const Value& x, std::uint64_t fuel);

// rho(g) = rho o g o rho^-1, defined on rng rho and Diverged elsewhere (the
// minimal extension).
PartialMap pushforward(const Encoding& e, const PartialMap& g);
// <rho>f = rho^-1 o f o rho; Diverged where f leaves rng rho.
PartialMap pullback(const Encoding& e, const PartialMap& f);

}  // namespace simlab
