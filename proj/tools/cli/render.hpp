#pragma once

#include <string>

#include "simlab/simcheck/report.hpp"

namespace simlab::cli {

enum class Format { text, structured };

// Both renderings carry the same content and are byte-identical across runs.
std::string render_report(const simcheck::SimReport& r, Format format, const std::string& scenario = "");

// 0 Verified, 1 Refuted, 2 Unknown.
int exit_code(simcheck::Verdict v) noexcept;
inline constexpr int usage_error = 3;

}  // namespace simlab::cli
