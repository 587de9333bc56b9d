#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "simlab/core/encoding.hpp"

namespace simlab::constructions {

struct NarrownessReport {
  std::size_t prefix = 0;
  bool is_permutation_on_prefix = false;
  // Longest cycle that closes inside the prefix.
  std::size_t max_cycle_length = 0;
  // Present iff every element of the prefix lies on a cycle contained in
  // the prefix; equals max_cycle_length then.
  std::optional<std::size_t> bound_if_narrow;
  // lcm of the closed cycle lengths: the least k with pi^k = id on the
  // closed part of the prefix.
  std::optional<std::size_t> period;
  std::map<std::size_t, std::size_t> cycle_lengths_histogram;
  // Closed cycles, each starting at its least element, ordered by that element.
  std::vector<std::vector<std::size_t>> cycles;
  // Least element of each orbit that leaves the prefix.
  std::vector<std::size_t> escaping;
};

// Cycle decomposition of a permutation of the naturals restricted to
// [0, prefix). Raises Error("not a permutation") if two prefix elements
// share an image, and DomainError unless e is naturals -> naturals.
NarrownessReport narrowness(const Encoding& e, std::size_t prefix);

}  // namespace simlab::constructions
