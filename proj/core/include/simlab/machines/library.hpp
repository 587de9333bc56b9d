#pragma once

#include <string_view>

#include "simlab/machines/tm.hpp"

namespace simlab::machines {

// Successor under the nat/bits bijection: increments 1d and drops the
// leading 1 again. "01" -> "10", "11" -> "000", "" -> "0".
const TmProgram& tm_binary_successor();
// Blanks the input and halts on a blank; always yields the empty string,
// which encodes 0.
const TmProgram& tm_erase();
// Start state is the halt state.
const TmProgram& tm_identity();

std::string_view tm_binary_successor_source();
std::string_view tm_erase_source();
std::string_view tm_identity_source();

}  // namespace simlab::machines
