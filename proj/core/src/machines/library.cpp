#include "simlab/machines/library.hpp"

namespace simlab::machines {
namespace {

constexpr std::string_view successor_src = R"(# successor on the bijective binary strings
start scan
halt done
scan 0 scan 0 R
scan 1 scan 1 R
scan _ carry _ L
carry 1 carry 0 L
carry 0 done 1 S
carry _ done 0 S
)";

constexpr std::string_view erase_src = R"(start e
halt h
e 0 e _ R
e 1 e _ R
e _ h _ S
)";

constexpr std::string_view identity_src = R"(start h
halt h
)";

}  // namespace

const TmProgram& tm_binary_successor() {
  static const TmProgram p = parse_tm(successor_src);
  return p;
}

const TmProgram& tm_erase() {
  static const TmProgram p = parse_tm(erase_src);
  return p;
}

const TmProgram& tm_identity() {
  static const TmProgram p = parse_tm(identity_src);
  return p;
}

std::string_view tm_binary_successor_source() { return successor_src; }
std::string_view tm_erase_source() { return erase_src; }
std::string_view tm_identity_source() { return identity_src; }

}  // namespace simlab::machines
