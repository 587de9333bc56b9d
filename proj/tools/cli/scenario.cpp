#include "cli/scenario.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "simlab/constructions/godel.hpp"
#include "simlab/constructions/re_family.hpp"
#include "simlab/constructions/stripe.hpp"
#include "simlab/constructions/triangular.hpp"
#include "simlab/core/errors.hpp"
#include "simlab/machines/cm.hpp"
#include "simlab/machines/compile.hpp"
#include "simlab/machines/library.hpp"
#include "simlab/machines/tm.hpp"
#include "simlab/recdsl/library.hpp"
#include "simlab/recdsl/parse.hpp"

namespace simlab::cli {
namespace {

using json = nlohmann::ordered_json;

class Loader {
 public:
  Loader(std::string origin, std::filesystem::path base_dir)
      : origin_(std::move(origin)), base_dir_(std::move(base_dir)) {}

  Scenario load(const json& root) {
    if (!root.is_object()) fail("", "scenario must be a JSON object");
    for (const auto& [key, _] : root.items()) {
      static const std::set<std::string> known{"name",   "description", "definitions", "models",
                                               "encodings", "check",   "plan"};
      if (!known.contains(key)) fail(key, "unknown key");
    }
    Scenario s;
    s.name = opt_string(root, "name", "", "").value_or(origin_);
    s.description = opt_string(root, "description", "", "").value_or("");
    defs_ = rec::standard_definitions();
    if (root.contains("definitions")) definitions(root["definitions"]);
    if (root.contains("encodings")) {
      for (const auto& [name, spec] : object(root["encodings"], "encodings").items()) {
        s.encodings.emplace_back(name, encoding(spec, "encodings." + name, s));
      }
    }
    for (const auto& [name, spec] : object(need(root, "models", ""), "models").items()) {
      if (find_model(s, name)) fail("models." + name, "duplicate model name");
      s.models.emplace_back(name, model(name, spec, "models." + name, s));
    }
    s.check = check(need(root, "check", ""), s);
    if (root.contains("plan")) s.plan = plan(root["plan"]);
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& path, const std::string& message) const {
    throw ValidationError(origin_ + ": " + (path.empty() ? "" : path + ": ") + message);
  }

  const json& need(const json& j, const std::string& key, const std::string& path) const {
    if (!j.is_object() || !j.contains(key)) fail(path, "missing required key '" + key + "'");
    return j[key];
  }

  const json& object(const json& j, const std::string& path) const {
    if (!j.is_object()) fail(path, "expected an object");
    return j;
  }

  std::string string(const json& j, const std::string& key, const std::string& path) const {
    const json& v = need(j, key, path);
    if (!v.is_string()) fail(join(path, key), "expected a string");
    return v.get<std::string>();
  }

  std::optional<std::string> opt_string(const json& j, const std::string& key, const std::string& path,
                                        const std::string&) const {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_string()) fail(join(path, key), "expected a string");
    return j[key].get<std::string>();
  }

  std::uint64_t uint(const json& j, const std::string& key, const std::string& path,
                     std::optional<std::uint64_t> fallback = std::nullopt) const {
    if (!j.contains(key)) {
      if (fallback) return *fallback;
      fail(path, "missing required key '" + key + "'");
    }
    const json& v = j[key];
    if (!v.is_number_unsigned()) fail(join(path, key), "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }

  void definitions(const json& j) {
    for (const auto& [name, text] : object(j, "definitions").items()) {
      if (!text.is_string()) fail("definitions." + name, "expected a term string");
      defs_.insert_or_assign(name, term(text.get<std::string>(), "definitions." + name));
    }
  }

  rec::Term term(const std::string& text, const std::string& path) const {
    try {
      return rec::parse_term(text, defs_);
    } catch (const ParseError& e) {
      fail(path, std::string("term: ") + e.what());
    } catch (const ArityError& e) {
      fail(path, std::string("term: ") + e.what());
    }
  }

  std::string read_file(const std::string& file, const std::string& path) const {
    const std::filesystem::path p = base_dir_ / file;
    std::ifstream in(p);
    if (!in) fail(path, "cannot read " + p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  // A program member: {"file": ...}, {"source": ...}, {"library": ...} or a bare file name.
  std::string program_text(const json& spec, const std::string& path, bool tm) const {
    if (spec.is_string()) return read_file(spec.get<std::string>(), path);
    object(spec, path);
    if (spec.contains("file")) return read_file(string(spec, "file", path), path);
    if (spec.contains("source")) return string(spec, "source", path);
    if (tm && spec.contains("library")) {
      const std::string lib = string(spec, "library", path);
      if (lib == "successor") return std::string(machines::tm_binary_successor_source());
      if (lib == "erase") return std::string(machines::tm_erase_source());
      if (lib == "identity") return std::string(machines::tm_identity_source());
      fail(join(path, "library"), "unknown library machine '" + lib + "'");
    }
    fail(path, tm ? "expected 'file', 'source' or 'library'" : "expected 'file', 'source' or 'compile'");
  }

  const Model* find_model(const Scenario& s, const std::string& name) const {
    for (const auto& [n, m] : s.models) {
      if (n == name) return &m;
    }
    return nullptr;
  }

  const Model& ref_model(const Scenario& s, const json& j, const std::string& key, const std::string& path) const {
    const std::string name = string(j, key, path);
    const Model* m = find_model(s, name);
    if (m == nullptr) fail(join(path, key), "unknown model '" + name + "' (models must be defined before use)");
    return *m;
  }

  const Encoding& ref_encoding(const Scenario& s, const std::string& name, const std::string& path) const {
    for (const auto& [n, e] : s.encodings) {
      if (n == name) return e;
    }
    fail(path, "unknown encoding '" + name + "'");
  }

  constructions::OracleH oracle(const json& j, const std::string& path) const {
    if (j.is_string()) {
      const std::string kind = j.get<std::string>();
      if (kind == "zeros") return constructions::OracleH::zeros();
      if (kind == "parity") return constructions::OracleH::parity();
      if (kind == "pseudorandom") return constructions::OracleH::pseudorandom(0);
      fail(path, "unknown oracle '" + kind + "'");
    }
    const std::string kind = string(j, "kind", path);
    if (kind == "pseudorandom") return constructions::OracleH::pseudorandom(uint(j, "seed", path, 0));
    return oracle(json(kind), path);
  }

  Domain domain(const json& j, const std::string& path) const {
    const std::string d = opt_string(j, "domain", path, "").value_or("nat");
    auto parsed = parse_domain(d);
    if (!parsed) fail(join(path, "domain"), "unknown domain '" + d + "'");
    return *parsed;
  }

  Encoding encoding(const json& j, const std::string& path, const Scenario& s) const {
    object(j, path);
    const std::string scheme = string(j, "scheme", path);
    try {
      if (scheme == "identity") return Encoding::identity(domain(j, path));
      if (scheme == "stripe") return Encoding::stripe(uint(j, "d", path), uint(j, "r", path, 0));
      if (scheme == "tri-pi") return Encoding::tri_pi();
      if (scheme == "tri-pi-inverse") return Encoding::inverse(Encoding::tri_pi());
      if (scheme == "bits") return Encoding::bits_bijection();
      if (scheme == "godel") return Encoding::godel_pairing();
      if (scheme == "re") return constructions::re_encoding(oracle(need(j, "oracle", path), join(path, "oracle")));
      if (scheme == "inverse") return Encoding::inverse(ref_encoding(s, string(j, "of", path), join(path, "of")));
      if (scheme == "compose") {
        return compose_encodings(ref_encoding(s, string(j, "outer", path), join(path, "outer")),
                                 ref_encoding(s, string(j, "inner", path), join(path, "inner")));
      }
      if (scheme == "table") {
        const json& pairs = need(j, "pairs", path);
        if (!pairs.is_array()) fail(join(path, "pairs"), "expected [[from, to], ...]");
        std::vector<std::pair<Nat, Nat>> images;
        for (const auto& p : pairs) {
          if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned()) {
            fail(join(path, "pairs"), "expected [[from, to], ...] with naturals");
          }
          images.emplace_back(p[0].get<std::uint64_t>(), p[1].get<std::uint64_t>());
        }
        return Encoding::finite_table(std::move(images));
      }
    } catch (const ValidationError&) {
      throw;
    } catch (const Error& e) {
      fail(path, e.what());
    }
    fail(join(path, "scheme"), "unknown encoding scheme '" + scheme + "'");
  }

  Model model(const std::string& name, const json& j, const std::string& path, const Scenario& s) const {
    object(j, path);
    const std::string kind = string(j, "kind", path);
    if (kind == "dsl-terms") {
      std::vector<PartialMap> members;
      if (auto suite = opt_string(j, "suite", path, "")) {
        std::vector<rec::NamedTerm> terms;
        if (*suite == "benchmark") terms = rec::benchmark_suite();
        else if (*suite == "partial") terms = rec::partial_suite();
        else fail(join(path, "suite"), "unknown suite '" + *suite + "'");
        for (const auto& t : terms) members.push_back(PartialMap::from_term(t.name, t.term));
      }
      if (j.contains("members")) {
        for (const auto& [member, text] : object(j["members"], join(path, "members")).items()) {
          const std::string mpath = join(path, "members." + member);
          if (!text.is_string()) fail(mpath, "expected a term string");
          const rec::Term t = term(text.get<std::string>(), mpath);
          if (t.arity() != 1) fail(mpath, "member terms must be unary, got arity " + std::to_string(t.arity()));
          members.push_back(PartialMap::from_term(member, t));
        }
      }
      return make_model(name, Domain::nat, std::move(members), path);
    }
    if (kind == "tm-program" || kind == "cm-program") {
      const bool tm = kind == "tm-program";
      std::vector<PartialMap> members;
      for (const auto& [member, spec] : object(need(j, "members", path), join(path, "members")).items()) {
        const std::string mpath = join(path, "members." + member);
        try {
          if (tm) {
            members.push_back(PartialMap::turing(member, machines::parse_tm(program_text(spec, mpath, true))));
          } else if (spec.is_object() && spec.contains("compile")) {
            const rec::Term t = term(string(spec, "compile", mpath), join(mpath, "compile"));
            members.push_back(PartialMap::counter(member, machines::compile_rec_to_cm(t)));
          } else {
            members.push_back(PartialMap::counter(member, machines::parse_cm(program_text(spec, mpath, false))));
          }
        } catch (const ValidationError& e) {
          if (std::string_view(e.what()).starts_with(origin_)) throw;
          fail(mpath, e.what());
        } catch (const Error& e) {
          fail(mpath, e.what());
        }
      }
      return make_model(name, tm ? Domain::bits : Domain::nat, std::move(members), path);
    }
    if (kind == "builtin-construction") return construction(name, j, path, s);
    fail(join(path, "kind"), "unknown model kind '" + kind + "'");
  }

  Model make_model(const std::string& name, Domain d, std::vector<PartialMap> members, const std::string& path) const {
    try {
      return Model(name, d, std::move(members));
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }

  Model construction(const std::string& name, const json& j, const std::string& path, const Scenario& s) const {
    const std::string c = string(j, "construction", path);
    try {
      if (c == "stripe") {
        return constructions::stripe_model(ref_model(s, j, "of", path), uint(j, "d", path, 2), uint(j, "r", path, 0),
                                           name);
      }
      if (c == "tri") {
        const auto i_max = static_cast<unsigned>(uint(j, "i_max", path, 3));
        const auto j_max = static_cast<unsigned>(uint(j, "j_max", path, 3));
        const auto k_max = static_cast<unsigned>(uint(j, "k_max", path, 5));
        const std::string which = opt_string(j, "model", path, "").value_or("A");
        Model m = [&]() -> Model {
          if (which == "A") return constructions::tri_models(i_max, j_max, k_max).a;
          if (which == "B") return constructions::tri_models(i_max, j_max, k_max).b;
          if (which == "K") return constructions::tri_k_model(k_max);
          if (which == "F") return constructions::tri_f_model(i_max, j_max);
          if (which == "G") return constructions::tri_g_model(i_max);
          fail(join(path, "model"), "expected one of A, B, K, F, G");
        }();
        return rename(m, name);
      }
      if (c == "godel") return constructions::godel_list_model(ref_model(s, j, "of", path), name);
      if (c == "re") {
        const auto models = constructions::re_models(oracle(need(j, "oracle", path), join(path, "oracle")),
                                                     static_cast<unsigned>(uint(j, "i_max", path, 8)));
        const std::string side = opt_string(j, "side", path, "").value_or("source");
        if (side == "source") return rename(models.source, name);
        if (side == "target") return rename(models.target, name);
        fail(join(path, "side"), "expected 'source' or 'target'");
      }
      if (c == "pushforward" || c == "pullback") {
        const Model& of = ref_model(s, j, "of", path);
        const Encoding& e = ref_encoding(s, string(j, "encoding", path), join(path, "encoding"));
        return c == "pushforward" ? pushforward(e, of, name) : pullback(e, of, name);
      }
    } catch (const ValidationError&) {
      throw;
    } catch (const Error& e) {
      fail(path, e.what());
    }
    fail(join(path, "construction"), "unknown construction '" + c + "'");
  }

  static Model rename(const Model& m, const std::string& name) {
    return Model(name, m.domain(), m.members(),
                 m.has_enumerator() ? Model::Enumerator([m](std::size_t i) { return m.enumerate(i); })
                                    : Model::Enumerator{});
  }

  CheckSpec check(const json& j, Scenario& s) const {
    const std::string path = "check";
    object(j, path);
    CheckSpec c;
    c.kind = string(j, "kind", path);
    auto model_ref = [&](const std::string& key) {
      const std::string n = string(j, key, path);
      if (!find_model(s, n)) fail(join(path, key), "unknown model '" + n + "'");
      return n;
    };
    auto encoding_ref = [&](const std::string& key) {
      const std::string n = string(j, key, path);
      ref_encoding(s, n, join(path, key));
      return n;
    };
    if (c.kind == "simulation" || c.kind == "pullback-law") {
      c.a = model_ref("a");
      c.b = model_ref("b");
      c.encodings = {encoding_ref("encoding")};
    } else if (c.kind == "equivalence") {
      c.a = model_ref("a");
      c.b = model_ref("b");
      c.encodings = {encoding_ref("e_ab"), encoding_ref("e_ba")};
      const std::string mode = opt_string(j, "mode", path, "").value_or("plain");
      auto m = simcheck::parse_equivalence_mode(mode);
      if (!m) fail(join(path, "mode"), "expected plain, strong or isomorphism");
      c.mode = *m;
    } else if (c.kind == "closure") {
      c.a = model_ref("model");
    } else if (c.kind == "probe") {
      c.a = model_ref("a");
      c.b = model_ref("b");
      const json& family = need(j, "family", path);
      if (family.is_array()) {
        for (const auto& e : family) {
          if (!e.is_string()) fail("check.family", "expected encoding names");
          ref_encoding(s, e.get<std::string>(), "check.family");
          c.encodings.push_back(e.get<std::string>());
        }
      } else if (family.is_object() && family.contains("stripes")) {
        for (const auto& e : constructions::stripe_family(static_cast<unsigned>(uint(family, "stripes", "check.family")))) {
          bool present = false;
          for (const auto& [n, _] : s.encodings) present = present || n == e.name();
          if (!present) s.encodings.emplace_back(e.name(), e);
          c.encodings.push_back(e.name());
        }
      } else {
        fail("check.family", "expected a list of encoding names or {\"stripes\": d_max}");
      }
      if (c.encodings.empty()) fail("check.family", "probe needs a non-empty encoding family");
    } else {
      fail("check.kind", "unknown check kind '" + c.kind + "'");
    }
    return c;
  }

  PlanSpec plan(const json& j) const {
    const std::string path = "plan";
    object(j, path);
    PlanSpec p;
    if (j.contains("inputs")) {
      const json& in = j["inputs"];
      if (in.is_string()) {
        try {
          p.range = parse_range(in.get<std::string>());
        } catch (const ValidationError& e) {
          fail("plan.inputs", e.what());
        }
      } else if (in.is_array()) {
        for (const auto& v : in) {
          if (v.is_number_unsigned()) p.values.push_back(std::to_string(v.get<std::uint64_t>()));
          else if (v.is_string()) p.values.push_back(v.get<std::string>());
          else fail("plan.inputs", "expected naturals or value strings");
        }
        if (p.values.empty()) fail("plan.inputs", "input list is empty");
      } else {
        fail("plan.inputs", "expected \"a..b\" or a list of values");
      }
    }
    if (j.contains("sample")) p.sample_count = uint(j, "sample", path);
    p.seed = uint(j, "seed", path, 0);
    p.fuel = uint(j, "fuel", path, p.fuel);
    if (p.fuel == 0) fail("plan.fuel", "fuel must be at least 1");
    p.enumeration_limit = uint(j, "enumeration_limit", path, p.enumeration_limit);
    for (const char* key : {"b_sample", "a_sample"}) {
      if (!j.contains(key)) continue;
      if (!j[key].is_array()) fail(join(path, key), "expected a list of member names");
      auto& out = std::string_view(key) == "b_sample" ? p.b_sample : p.a_sample;
      for (const auto& n : j[key]) {
        if (!n.is_string()) fail(join(path, key), "expected a list of member names");
        out.push_back(n.get<std::string>());
      }
    }
    return p;
  }

  std::string origin_;
  std::filesystem::path base_dir_;
  rec::Definitions defs_;
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

const Model& Scenario::model(std::string_view n) const {
  for (const auto& [name, m] : models) {
    if (name == n) return m;
  }
  throw ValidationError("unknown model '" + std::string(n) + "'");
}

const Encoding& Scenario::encoding(std::string_view n) const {
  for (const auto& [name, e] : encodings) {
    if (name == n) return e;
  }
  throw ValidationError("unknown encoding '" + std::string(n) + "'");
}

Domain Scenario::input_domain() const { return check.kind == "closure" ? model(check.a).domain() : model(check.b).domain(); }

std::pair<std::uint64_t, std::uint64_t> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  auto number = [&](std::string_view s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos || s.size() > 18) {
      throw ValidationError("bad range '" + std::string(text) + "', expected a..b");
    }
    return std::stoull(std::string(s));
  };
  if (dots == std::string_view::npos) throw ValidationError("bad range '" + std::string(text) + "', expected a..b");
  const auto first = number(text.substr(0, dots));
  const auto last = number(text.substr(dots + 2));
  if (first > last) throw ValidationError("empty range '" + std::string(text) + "'");
  return {first, last};
}

simcheck::TestPlan resolve_plan(const PlanSpec& spec, Domain domain) {
  simcheck::TestPlan plan;
  plan.fuel = spec.fuel;
  plan.enumeration_limit = spec.enumeration_limit;
  plan.b_sample = spec.b_sample;
  plan.a_sample = spec.a_sample;
  if (!spec.values.empty()) {
    for (const auto& v : spec.values) plan.inputs.push_back(parse_value(v, domain));
  } else {
    const auto [first, last] = spec.range.value_or(std::pair<std::uint64_t, std::uint64_t>{0, 64});
    std::vector<std::uint64_t> indices;
    for (std::uint64_t i = first;; ++i) {
      indices.push_back(i);
      if (i == last) break;
    }
    if (spec.sample_count && *spec.sample_count < indices.size()) {
      // Partial Fisher-Yates with raw engine output, so the subset is the
      // same on every platform.
      std::mt19937_64 rng(spec.seed);
      for (std::size_t i = 0; i < *spec.sample_count; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (indices.size() - i));
        std::swap(indices[i], indices[j]);
      }
      indices.resize(*spec.sample_count);
      std::sort(indices.begin(), indices.end());
    }
    for (auto i : indices) plan.inputs.push_back(canonical_value(domain, Nat(i)));
  }
  plan.validate();
  return plan;
}

Scenario parse_scenario(std::string_view text, const std::string& origin, const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(origin + ": " + what, line, column);
  }
  return Loader(origin, base_dir).load(root);
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read scenario " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.filename().string(), path.parent_path());
}

simcheck::SimReport execute(const Scenario& s) { return execute(s, resolve_plan(s.plan, s.input_domain())); }

simcheck::SimReport execute(const Scenario& s, const simcheck::TestPlan& plan) {
  const CheckSpec& c = s.check;
  try {
    if (c.kind == "simulation") {
      return simcheck::check_simulation(s.model(c.a), s.model(c.b), s.encoding(c.encodings[0]), plan);
    }
    if (c.kind == "pullback-law") {
      return simcheck::check_pullback_law(s.model(c.a), s.model(c.b), s.encoding(c.encodings[0]), plan);
    }
    if (c.kind == "equivalence") {
      return simcheck::check_equivalence(s.model(c.a), s.model(c.b), s.encoding(c.encodings[0]),
                                         s.encoding(c.encodings[1]), plan, c.mode);
    }
    if (c.kind == "closure") return simcheck::check_closure(s.model(c.a), plan);
    if (c.kind == "probe") {
      std::vector<Encoding> family;
      for (const auto& n : c.encodings) family.push_back(s.encoding(n));
      return simcheck::probe_encodings(s.model(c.a), s.model(c.b), family, plan).summary(c.a, c.b);
    }
  } catch (const Error& e) {
    throw Error("scenario " + s.name + ": " + e.what());
  }
  throw ValidationError("scenario " + s.name + ": unknown check kind '" + c.kind + "'");
}

}  // namespace simlab::cli
