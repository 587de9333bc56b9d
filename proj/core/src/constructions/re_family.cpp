#include "simlab/constructions/re_family.hpp"

#include "simlab/core/errors.hpp"

namespace simlab::constructions {
namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

OracleH::OracleH(std::string name, std::function<unsigned(const Nat&)> h)
    : name_(std::move(name)), h_(std::move(h)) {
  if (!h_) throw ValidationError("oracle " + name_ + " has no function");
}

OracleH OracleH::zeros() {
  return OracleH("zeros", [](const Nat&) { return 0u; });
}

OracleH OracleH::parity() {
  return OracleH("parity", [](const Nat& n) { return static_cast<unsigned>(n & 1); });
}

OracleH OracleH::pseudorandom(std::uint64_t seed) {
  return OracleH("pseudorandom(" + std::to_string(seed) + ")", [seed](const Nat& n) -> unsigned {
    if (n == 0) return 0;
    const auto low = static_cast<std::uint64_t>(n & Nat(~std::uint64_t{0}));
    const auto high = static_cast<std::uint64_t>(n >> 64);
    return static_cast<unsigned>(splitmix(splitmix(seed ^ low) ^ high) & 1);
  });
}

unsigned OracleH::operator()(const Nat& n) const {
  const unsigned v = h_(n);
  if (v > 1) throw ValidationError("oracle " + name_ + " returned " + std::to_string(v) + ", not 0 or 1");
  return v;
}

Encoding re_encoding(const OracleH& h) {
  if (h(0) != 0) throw ValidationError("oracle " + h.name() + " must satisfy h(0) = 0");
  return Encoding::custom(
      "rho[" + h.name() + "]", Domain::nat, Domain::nat,
      [h](const Value& x) { return Value(Nat(2 * x.as_nat() + h(x.as_nat()))); },
      [h](const Value& y) -> std::optional<Value> {
        const Nat n = y.as_nat() / 2;
        if (2 * n + h(n) != y.as_nat()) return std::nullopt;
        return Value(n);
      });
}

ReFamily re_family(const OracleH& h, const Nat& i) {
  Encoding rho = re_encoding(h);
  auto h_i = PartialMap::builtin("h_" + i.str(), Domain::nat, [h, i](const Value& x, Fuel&) {
    const Nat& n = x.as_nat();
    return n < i || h(n) == 0 ? Outcome::converged(Value::nat(0)) : Outcome::diverged();
  });
  auto h_prime_i = PartialMap::builtin("h'_" + i.str(), Domain::nat, [i](const Value& x, Fuel&) {
    const Nat& n = x.as_nat();
    return n / 2 < i || n % 2 == 0 ? Outcome::converged(Value::nat(0)) : Outcome::diverged();
  });
  return ReFamily{std::move(h_i), std::move(h_prime_i), std::move(rho)};
}

ReModels re_models(const OracleH& h, unsigned i_max) {
  std::vector<PartialMap> source, target;
  for (unsigned i = 0; i <= i_max; ++i) {
    ReFamily f = re_family(h, i);
    source.push_back(std::move(f.h_i));
    target.push_back(std::move(f.h_prime_i));
  }
  return ReModels{Model("RE[" + h.name() + "]", Domain::nat, std::move(source)),
                  Model("RE'[" + h.name() + "]", Domain::nat, std::move(target))};
}

}  // namespace simlab::constructions
