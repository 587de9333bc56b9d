#pragma once

#include <ostream>

namespace simlab::cli {

// Whole command-line front end; returns the process exit code.
int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace simlab::cli
