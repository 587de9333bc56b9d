#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simlab/core/outcome.hpp"

namespace simlab::machines {

enum class Symbol : std::uint8_t { zero = 0, one = 1, blank = 2 };
enum class Move : std::int8_t { left = -1, stay = 0, right = 1 };

struct TmTransition {
  std::size_t next;
  Symbol write;
  Move move;

  friend bool operator==(const TmTransition&, const TmTransition&) = default;
};

// Single-tape machine over {0, 1, blank}. Every non-halt state has a
// transition for every symbol; the halt state has none.
struct TmProgram {
  std::vector<std::string> states;
  std::size_t start = 0;
  std::size_t halt = 0;
  // table[state][symbol]
  std::vector<std::array<std::optional<TmTransition>, 3>> table;

  // Raises ValidationError describing the first defect.
  void validate() const;
};

// Line-oriented text format:
//
//   # comment
//   start <state>
//   halt  <state>
//   <state> <read> <next-state> <write> <move>     read/write in {0,1,_}, move in {L,R,S}
TmProgram parse_tm(std::string_view text);
std::string to_string(const TmProgram& p);

// The head starts on the first input cell. On halting the result is the
// maximal contiguous {0,1} block under the head (empty if the head is on a
// blank).
Outcome run_tm(const TmProgram& p, const Bits& input, Fuel& fuel);
Outcome run_tm(const TmProgram& p, const Bits& input, std::uint64_t fuel);

}  // namespace simlab::machines
