#include "simlab/constructions/triangular.hpp"

#include "simlab/core/errors.hpp"

namespace simlab::constructions {
namespace {

Nat as_input(const Value& x) { return x.as_nat(); }

PartialMap nat_builtin(std::string name, std::function<Nat(const Nat&)> fn) {
  return PartialMap::builtin(std::move(name), Domain::nat,
                             [fn = std::move(fn)](const Value& x, Fuel&) {
                               return Outcome::converged(Value(fn(as_input(x))));
                             });
}

std::string idx(const Nat& n) { return n.str(); }

// Level L of the enumeration: kappa_L, f_{i,j} for i + j = L, then g_L.
std::optional<PartialMap> enumerate_level(std::size_t index, bool with_g) {
  if (index == 0) return tri_iota();
  std::size_t rest = index - 1;
  for (std::size_t level = 0;; ++level) {
    const std::size_t fs = level >= 2 ? level - 1 : 0;
    const std::size_t gs = with_g && level >= 1 ? 1 : 0;
    const std::size_t size = 1 + fs + gs;
    if (rest < size) {
      if (rest == 0) return tri_kappa(level);
      if (rest <= fs) {
        const std::size_t i = rest;
        return tri_f_map(i, level - i);
      }
      return tri_g_map(level);
    }
    rest -= size;
  }
}

}  // namespace

Nat tri_f(const Nat& i, const Nat& j, const Nat& n) {
  const Nat row = isqrt(n) + i;
  return row * row + j % (2 * row + 1);
}

Nat tri_g(const Nat& i, const Nat& n) {
  const Nat row = isqrt(n) + i;
  return row * row;
}

Nat tri_pi(const Nat& n) {
  const Nat m = isqrt(n);
  const Nat base = m * m;
  return base + (n - base + 1) % (2 * m + 1);
}

Nat tri_pi_inverse(const Nat& n) {
  const Nat m = isqrt(n);
  const Nat base = m * m;
  return base + (n - base + 2 * m) % (2 * m + 1);
}

PartialMap tri_iota() { return nat_builtin("iota", [](const Nat& n) { return n; }); }

PartialMap tri_kappa(const Nat& k) {
  return nat_builtin("kappa_" + idx(k), [k](const Nat&) { return k; });
}

PartialMap tri_f_map(const Nat& i, const Nat& j) {
  return nat_builtin("f_" + idx(i) + "_" + idx(j), [i, j](const Nat& n) { return tri_f(i, j, n); });
}

PartialMap tri_g_map(const Nat& i) {
  return nat_builtin("g_" + idx(i), [i](const Nat& n) { return tri_g(i, n); });
}

Model tri_k_model(unsigned k_max) {
  std::vector<PartialMap> members{tri_iota()};
  for (unsigned k = 0; k <= k_max; ++k) members.push_back(tri_kappa(k));
  return Model("K", Domain::nat, std::move(members), [](std::size_t index) -> std::optional<PartialMap> {
    return index == 0 ? tri_iota() : tri_kappa(index - 1);
  });
}

Model tri_f_model(unsigned i_max, unsigned j_max) {
  std::vector<PartialMap> members;
  for (unsigned i = 1; i <= i_max; ++i) {
    for (unsigned j = 1; j <= j_max; ++j) members.push_back(tri_f_map(i, j));
  }
  // Diagonals i + j = 2, 3, ...
  return Model("F", Domain::nat, std::move(members), [](std::size_t index) -> std::optional<PartialMap> {
    for (std::size_t sum = 2;; ++sum) {
      if (index < sum - 1) return tri_f_map(index + 1, sum - 1 - index);
      index -= sum - 1;
    }
  });
}

Model tri_g_model(unsigned i_max) {
  std::vector<PartialMap> members;
  for (unsigned i = 1; i <= i_max; ++i) members.push_back(tri_g_map(i));
  return Model("G", Domain::nat, std::move(members),
               [](std::size_t index) -> std::optional<PartialMap> { return tri_g_map(index + 1); });
}

TriModels tri_models(unsigned i_max, unsigned j_max, unsigned k_max) {
  if (i_max < 1 || j_max < 1) throw DomainError("tri_models needs i_max, j_max >= 1");
  const Model k = tri_k_model(k_max);
  const Model f = tri_f_model(i_max, j_max);
  const Model g = tri_g_model(i_max);

  std::vector<PartialMap> b_members = k.members();
  b_members.insert(b_members.end(), f.members().begin(), f.members().end());
  std::vector<PartialMap> a_members = b_members;
  a_members.insert(a_members.end(), g.members().begin(), g.members().end());

  return TriModels{
      Model("A", Domain::nat, std::move(a_members),
            [](std::size_t index) { return enumerate_level(index, true); }),
      Model("B", Domain::nat, std::move(b_members),
            [](std::size_t index) { return enumerate_level(index, false); }),
  };
}

}  // namespace simlab::constructions
