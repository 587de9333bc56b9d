#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "simlab/core/outcome.hpp"

namespace simlab::machines {

struct CmInstruction {
  enum class Op : std::uint8_t { inc, decjz, jump, halt };

  Op op = Op::halt;
  std::size_t reg = 0;     // inc, decjz
  std::size_t target = 0;  // decjz, jump: instruction index

  friend bool operator==(const CmInstruction&, const CmInstruction&) = default;
};

// Counter machine with `registers` unbounded registers. All registers start
// at zero except `input`; the result is read from `output` on halt. Running
// off the end of the code is a halt.
struct CmProgram {
  std::size_t registers = 1;
  std::size_t input = 0;
  std::size_t output = 0;
  std::vector<CmInstruction> code;

  void validate() const;
};

// Line-oriented text format:
//
//   # comment
//   registers <k>
//   input <r>
//   output <r>
//   [label:] inc <r>
//   [label:] decjz <r> <label|index>
//   [label:] jump <label|index>
//   [label:] halt
CmProgram parse_cm(std::string_view text);
std::string to_string(const CmProgram& p);

Outcome run_cm(const CmProgram& p, const Nat& input, Fuel& fuel);
Outcome run_cm(const CmProgram& p, const Nat& input, std::uint64_t fuel);

}  // namespace simlab::machines
