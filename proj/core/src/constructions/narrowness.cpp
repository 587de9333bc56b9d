#include "simlab/constructions/narrowness.hpp"

#include <numeric>

#include "simlab/core/errors.hpp"

namespace simlab::constructions {

NarrownessReport narrowness(const Encoding& e, std::size_t prefix) {
  if (e.source() != Domain::nat || e.target() != Domain::nat) {
    throw DomainError("narrowness needs a permutation of the naturals, got " + e.name());
  }
  // image[x] == prefix marks "leaves the prefix"
  std::vector<std::size_t> image(prefix);
  std::vector<bool> hit(prefix, false);
  for (std::size_t x = 0; x < prefix; ++x) {
    const Nat y = e.encode(Value(Nat(x))).as_nat();
    if (y >= prefix) {
      image[x] = prefix;
      continue;
    }
    const auto yi = y.convert_to<std::size_t>();
    if (hit[yi]) throw Error("not a permutation: " + y.str() + " has two preimages in the prefix");
    hit[yi] = true;
    image[x] = yi;
  }

  NarrownessReport r;
  r.prefix = prefix;
  std::vector<bool> seen(prefix, false);
  for (std::size_t x = 0; x < prefix; ++x) {
    if (seen[x]) continue;
    std::vector<std::size_t> orbit{x};
    seen[x] = true;
    bool closed = false;
    bool merged = false;
    for (std::size_t y = image[x];; y = image[y]) {
      if (y == x) {
        closed = true;
        break;
      }
      if (y == prefix) break;
      // Joined an escaping orbit that was already reported.
      if (seen[y]) {
        merged = true;
        break;
      }
      seen[y] = true;
      orbit.push_back(y);
    }
    if (closed) {
      r.max_cycle_length = std::max(r.max_cycle_length, orbit.size());
      ++r.cycle_lengths_histogram[orbit.size()];
      r.cycles.push_back(std::move(orbit));
    } else if (!merged) {
      r.escaping.push_back(x);
    }
  }

  r.is_permutation_on_prefix = r.escaping.empty();
  if (r.escaping.empty()) r.bound_if_narrow = r.max_cycle_length;
  if (!r.cycles.empty()) {
    std::size_t period = 1;
    for (const auto& [len, count] : r.cycle_lengths_histogram) period = std::lcm(period, len);
    r.period = period;
  }
  return r;
}

}  // namespace simlab::constructions
