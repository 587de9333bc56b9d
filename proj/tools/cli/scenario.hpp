#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simlab/core/encoding.hpp"
#include "simlab/core/model.hpp"
#include "simlab/simcheck/simcheck.hpp"

namespace simlab::cli {

struct CheckSpec {
  std::string kind;  // simulation | equivalence | closure | pullback-law | probe
  std::string a;     // model names; closure uses `a` only
  std::string b;
  std::vector<std::string> encodings;  // simulation/pullback-law: 1; equivalence: e_ab, e_ba; probe: family
  simcheck::EquivalenceMode mode = simcheck::EquivalenceMode::plain;
};

// Plan as written in the file; resolved against the checked domain by
// resolve_plan so command-line overrides can be applied first.
struct PlanSpec {
  // Either a range of canonical indices or explicit values.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> range;
  std::vector<std::string> values;
  // Random subset of a range, drawn with `seed`.
  std::optional<std::size_t> sample_count;
  std::uint64_t seed = 0;
  std::uint64_t fuel = 1'000'000;
  std::size_t enumeration_limit = 256;
  std::vector<std::string> b_sample;
  std::vector<std::string> a_sample;
};

struct Scenario {
  std::string name;
  std::string description;
  std::vector<std::pair<std::string, Model>> models;
  std::vector<std::pair<std::string, Encoding>> encodings;
  CheckSpec check;
  PlanSpec plan;

  const Model& model(std::string_view name) const;
  const Encoding& encoding(std::string_view name) const;
  // Domain of the plan inputs: the simulated side of the check.
  Domain input_domain() const;
};

// Raises ParseError (JSON syntax, with line and column) or ValidationError
// (unresolved names, bad parameters; the message names the JSON path).
Scenario parse_scenario(std::string_view text, const std::string& origin,
                        const std::filesystem::path& base_dir);
Scenario load_scenario(const std::filesystem::path& path);

// "a..b" inclusive. Raises ValidationError otherwise.
std::pair<std::uint64_t, std::uint64_t> parse_range(std::string_view text);

simcheck::TestPlan resolve_plan(const PlanSpec& spec, Domain domain);

simcheck::SimReport execute(const Scenario& s);
simcheck::SimReport execute(const Scenario& s, const simcheck::TestPlan& plan);

}  // namespace simlab::cli
