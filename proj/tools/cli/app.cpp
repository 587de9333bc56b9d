#include "cli/app.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/render.hpp"
#include "cli/scenario.hpp"
#include "simlab/constructions/godel.hpp"
#include "simlab/constructions/narrowness.hpp"
#include "simlab/constructions/triangular.hpp"
#include "simlab/core/errors.hpp"
#include "simlab/machines/cm.hpp"
#include "simlab/machines/compile.hpp"
#include "simlab/machines/tm.hpp"
#include "simlab/recdsl/library.hpp"
#include "simlab/recdsl/parse.hpp"

#ifndef SIMLAB_SCENARIO_DIR
#define SIMLAB_SCENARIO_DIR "scenarios"
#endif

namespace simlab::cli {
namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Options {
  std::string format = "text";
  std::optional<std::uint64_t> fuel;
  std::optional<std::string> inputs;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> sample;

  // run
  std::string scenario;
  // tri
  std::string op;
  std::uint64_t i = 1, j = 1;
  std::optional<std::string> n;
  bool inverse = false;
  std::size_t prefix = 100;
  // encode
  std::string scheme;
  std::uint64_t d = 2, r = 0;
  std::optional<std::string> value;
  bool decode = false;
  // compile
  std::string term;
  std::string target = "cm";
  // exec
  std::string machine;
  std::string input = "0";
};

Format format_of(const Options& o) { return o.format == "structured" ? Format::structured : Format::text; }

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw ValidationError("cannot read " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path find_scenario(const std::string& name) {
  const fs::path given(name);
  if (fs::exists(given)) return given;
  for (const fs::path& dir : {fs::path(SIMLAB_SCENARIO_DIR), fs::path("scenarios")}) {
    for (const fs::path& candidate : {dir / name, dir / (name + ".json")}) {
      if (fs::exists(candidate)) return candidate;
    }
  }
  throw ValidationError("no scenario file or bundled scenario named '" + name + "'");
}

int cmd_run(const Options& o, std::ostream& out) {
  Scenario s = load_scenario(find_scenario(o.scenario));
  if (o.fuel) s.plan.fuel = *o.fuel;
  if (o.inputs) {
    s.plan.range = parse_range(*o.inputs);
    s.plan.values.clear();
  }
  if (o.seed) s.plan.seed = *o.seed;
  if (o.sample) s.plan.sample_count = *o.sample;
  const auto report = execute(s, resolve_plan(s.plan, s.input_domain()));
  out << render_report(report, format_of(o), s.name);
  return exit_code(report.aggregate);
}

std::vector<Nat> points(const Options& o) {
  std::vector<Nat> out;
  if (o.inputs) {
    const auto [first, last] = parse_range(*o.inputs);
    for (auto k = first;; ++k) {
      out.emplace_back(k);
      if (k == last) break;
    }
  } else if (o.n) {
    out.push_back(parse_nat(*o.n));
  } else {
    throw ValidationError("give --n or --inputs");
  }
  return out;
}

int cmd_tri(const Options& o, std::ostream& out) {
  const bool structured = format_of(o) == Format::structured;
  if (o.op == "cycles") {
    const auto rep = constructions::narrowness(Encoding::tri_pi(), o.prefix);
    if (structured) {
      json j;
      j["prefix"] = rep.prefix;
      j["is_permutation_on_prefix"] = rep.is_permutation_on_prefix;
      j["max_cycle_length"] = rep.max_cycle_length;
      j["bound_if_narrow"] = rep.bound_if_narrow ? json(*rep.bound_if_narrow) : json(nullptr);
      j["period"] = rep.period ? json(*rep.period) : json(nullptr);
      json hist = json::object();
      for (const auto& [len, count] : rep.cycle_lengths_histogram) hist[std::to_string(len)] = count;
      j["cycle_lengths_histogram"] = hist;
      j["cycles"] = rep.cycles;
      j["escaping"] = rep.escaping;
      out << j.dump(2) << "\n";
      return 0;
    }
    out << "prefix " << rep.prefix << "\ncycles";
    for (const auto& c : rep.cycles) {
      out << " (";
      for (std::size_t k = 0; k < c.size(); ++k) out << (k ? " " : "") << c[k];
      out << ")";
    }
    out << "\nmax cycle length " << rep.max_cycle_length << "\n";
    if (rep.bound_if_narrow) out << "bound on prefix " << *rep.bound_if_narrow << "\n";
    if (rep.period) out << "period " << *rep.period << "\n";
    out << "histogram";
    for (const auto& [len, count] : rep.cycle_lengths_histogram) out << " " << len << ":" << count;
    out << "\n";
    if (!rep.escaping.empty()) {
      out << "escaping";
      for (auto x : rep.escaping) out << " " << x;
      out << "\n";
    }
    return 0;
  }

  std::function<Nat(const Nat&)> fn;
  std::string label;
  if (o.op == "f") {
    fn = [&](const Nat& n) { return constructions::tri_f(o.i, o.j, n); };
    label = "f_" + std::to_string(o.i) + "_" + std::to_string(o.j);
  } else if (o.op == "g") {
    fn = [&](const Nat& n) { return constructions::tri_g(o.i, n); };
    label = "g_" + std::to_string(o.i);
  } else if (o.op == "pi") {
    fn = o.inverse ? constructions::tri_pi_inverse : constructions::tri_pi;
    label = o.inverse ? "pi_inverse" : "pi";
  } else {
    throw ValidationError("unknown --op '" + o.op + "'");
  }
  const auto ns = points(o);
  if (structured) {
    json rows = json::array();
    for (const auto& n : ns) rows.push_back({{"n", n.str()}, {"value", fn(n).str()}});
    out << json{{"op", label}, {"results", rows}}.dump(2) << "\n";
  } else {
    for (const auto& n : ns) out << label << "(" << n << ") = " << fn(n) << "\n";
  }
  return 0;
}

int cmd_encode(const Options& o, std::ostream& out) {
  Encoding e = Encoding::identity(Domain::nat);
  if (o.scheme == "stripe") e = Encoding::stripe(o.d, o.r);
  else if (o.scheme == "bits") e = Encoding::bits_bijection();
  else if (o.scheme == "godel") e = Encoding::godel_pairing();
  else if (o.scheme == "tri-pi") e = Encoding::tri_pi();
  else throw ValidationError("unknown --scheme '" + o.scheme + "'");

  const Domain from = o.decode ? e.target() : e.source();
  std::vector<Value> xs;
  if (o.value) {
    xs.push_back(parse_value(*o.value, from));
  } else if (o.inputs) {
    const auto [first, last] = parse_range(*o.inputs);
    for (auto k = first;; ++k) {
      xs.push_back(canonical_value(from, Nat(k)));
      if (k == last) break;
    }
  } else {
    throw ValidationError("give --value or --inputs");
  }

  json rows = json::array();
  for (const auto& x : xs) {
    std::optional<Value> y = o.decode ? e.decode(x) : std::optional<Value>(e.encode(x));
    const std::string shown = y ? to_string(*y) : "undefined";
    if (format_of(o) == Format::structured) {
      rows.push_back({{"input", to_string(x)}, {"output", y ? json(shown) : json(nullptr)}});
    } else {
      out << (o.decode ? "decode " : "encode ") << e.name() << " " << to_string(x) << " = " << shown << "\n";
    }
  }
  if (format_of(o) == Format::structured) {
    out << json{{"scheme", e.name()}, {"direction", o.decode ? "decode" : "encode"}, {"results", rows}}.dump(2)
        << "\n";
  }
  return 0;
}

int cmd_compile(const Options& o, std::ostream& out) {
  if (o.target != "cm") throw ValidationError("unsupported --target '" + o.target + "', only cm");
  const rec::Term t = rec::parse_term(o.term, rec::standard_definitions());
  const machines::CmProgram p = machines::compile_rec_to_cm(t);
  if (format_of(o) == Format::structured) {
    out << json{{"term", rec::to_string(t)},
                {"registers", p.registers},
                {"instructions", p.code.size()},
                {"program", machines::to_string(p)}}
               .dump(2)
        << "\n";
  } else {
    out << "# compiled from " << rec::to_string(t) << "\n" << machines::to_string(p);
  }
  return 0;
}

int cmd_exec(const Options& o, std::ostream& out) {
  const fs::path path(o.machine);
  const std::string text = read_file(path);
  Fuel fuel(o.fuel.value_or(1'000'000));
  Outcome result = Outcome::fuel_exhausted();
  if (path.extension() == ".tm") {
    result = machines::run_tm(machines::parse_tm(text), parse_value(o.input, Domain::bits).as_bits(), fuel);
  } else if (path.extension() == ".cm") {
    result = machines::run_cm(machines::parse_cm(text), parse_value(o.input, Domain::nat).as_nat(), fuel);
  } else {
    throw ValidationError("machine file must end in .tm or .cm: " + o.machine);
  }
  if (format_of(o) == Format::structured) {
    json j{{"machine", path.filename().string()}, {"input", o.input}};
    j["outcome"] = result.is_converged() ? "converged" : "fuel_exhausted";
    j["value"] = result.is_converged() ? json(to_string(result.value())) : json(nullptr);
    j["steps"] = fuel.spent();
    out << j.dump(2) << "\n";
  } else {
    out << to_string(result) << "\nsteps " << fuel.spent() << "\n";
  }
  return result.is_converged() ? 0 : 2;
}

}  // namespace

int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"simlab: models of computation, encodings and finite-scale simulation checks"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  };

  auto* run = app.add_subcommand("run", "Run a scenario file or bundled scenario");
  run->add_option("scenario", o.scenario, "Path or bundled name")->required();
  run->add_option("--fuel", o.fuel, "Step budget per evaluation");
  run->add_option("--inputs", o.inputs, "Input range a..b (canonical indices of the input domain)");
  run->add_option("--seed", o.seed, "Seed for sampled plans");
  run->add_option("--sample", o.sample, "Test a random subset of this size");
  add_format(run);

  auto* tri = app.add_subcommand("tri", "Triangular array: f, g, pi and its cycles");
  tri->add_option("--op", o.op, "f, g, pi or cycles")->required()->check(CLI::IsMember({"f", "g", "pi", "cycles"}));
  tri->add_option("--i", o.i, "Row offset");
  tri->add_option("--j", o.j, "Column");
  tri->add_option("--n", o.n, "Argument");
  tri->add_option("--inputs", o.inputs, "Argument range a..b");
  tri->add_flag("--inverse", o.inverse, "Use the inverse of pi");
  tri->add_option("--prefix", o.prefix, "Prefix for cycles");
  add_format(tri);

  auto* enc = app.add_subcommand("encode", "Apply an encoding or its partial inverse");
  enc->add_option("--scheme", o.scheme, "stripe, bits, godel or tri-pi")
      ->required()
      ->check(CLI::IsMember({"stripe", "bits", "godel", "tri-pi"}));
  enc->add_option("--d", o.d, "Stripe modulus");
  enc->add_option("--r", o.r, "Stripe residue");
  enc->add_option("--value", o.value, "Value to encode (or decode)");
  enc->add_option("--inputs", o.inputs, "Range a..b of canonical values");
  enc->add_flag("--decode", o.decode, "Decode instead of encode");
  add_format(enc);

  auto* comp = app.add_subcommand("compile", "Compile a unary term to a counter machine");
  comp->add_option("--term", o.term, "Term text; standard definitions are in scope")->required();
  comp->add_option("--target", o.target, "Only cm");
  add_format(comp);

  auto* exec = app.add_subcommand("exec", "Run a .tm or .cm machine file");
  exec->add_option("--machine", o.machine, "Machine file")->required();
  exec->add_option("--input", o.input, "Input value (bits for .tm, natural for .cm)");
  exec->add_option("--fuel", o.fuel, "Step budget");
  add_format(exec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage_error;
  }

  try {
    if (run->parsed()) return cmd_run(o, out);
    if (tri->parsed()) return cmd_tri(o, out);
    if (enc->parsed()) return cmd_encode(o, out);
    if (comp->parsed()) return cmd_compile(o, out);
    if (exec->parsed()) return cmd_exec(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  return usage_error;
}

}  // namespace simlab::cli
