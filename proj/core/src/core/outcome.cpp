#include "simlab/core/outcome.hpp"

#include "simlab/core/errors.hpp"

namespace simlab {

const Value& Outcome::value() const {
  if (!value_) throw Error("outcome has no value");
  return *value_;
}

std::string to_string(const Outcome& o) {
  switch (o.kind()) {
    case Outcome::Kind::converged: return to_string(o.value());
    case Outcome::Kind::diverged: return "diverged";
    case Outcome::Kind::fuel_exhausted: return "fuel-exhausted";
  }
  return {};
}

}  // namespace simlab
