#include "cli/render.hpp"

#include <json.hpp>

namespace simlab::cli {
namespace {

using json = nlohmann::ordered_json;
using simcheck::SimReport;

json outcome_json(const Outcome& o) {
  json j;
  switch (o.kind()) {
    case Outcome::Kind::converged:
      j["kind"] = "converged";
      j["value"] = to_string(o.value());
      break;
    case Outcome::Kind::diverged: j["kind"] = "diverged"; break;
    case Outcome::Kind::fuel_exhausted: j["kind"] = "fuel_exhausted"; break;
  }
  return j;
}

json report_json(const SimReport& r) {
  json j;
  j["claim"] = {{"kind", r.claim.kind},
                {"a", r.claim.a},
                {"b", r.claim.b},
                {"encodings", r.claim.encodings},
                {"mode", r.claim.mode}};
  j["aggregate"] = std::string(to_string(r.aggregate));
  json members = json::array();
  for (const auto& m : r.members) {
    json mj;
    mj["member"] = m.member;
    mj["verdict"] = std::string(to_string(m.verdict));
    mj["witness"] = m.witness ? json(*m.witness) : json(nullptr);
    json failures = json::array();
    for (const auto& f : m.failures) {
      failures.push_back({{"candidate", f.candidate},
                          {"input", to_string(f.input)},
                          {"expected", outcome_json(f.expected)},
                          {"got", outcome_json(f.got)}});
    }
    mj["failures"] = std::move(failures);
    mj["undecided_candidates"] = m.undecided_candidates;
    mj["undecided_points"] = m.undecided_points;
    mj["note"] = m.note;
    members.push_back(std::move(mj));
  }
  j["members"] = std::move(members);
  j["statistics"] = {{"inputs_tested", r.stats.inputs_tested},
                     {"evaluations", r.stats.evaluations},
                     {"candidates_examined", r.stats.candidates_examined},
                     {"fuel_per_evaluation", r.stats.fuel_per_evaluation},
                     {"fuel_spent", r.stats.fuel_spent}};
  j["notes"] = r.notes;
  json parts = json::array();
  for (const auto& p : r.parts) parts.push_back(report_json(p));
  j["parts"] = std::move(parts);
  return j;
}

std::string outcome_text(const Outcome& o) { return to_string(o); }

std::string detail(const simcheck::MemberResult& m) {
  std::string s;
  switch (m.verdict) {
    case simcheck::Verdict::verified:
      if (m.witness) s = "witness " + *m.witness;
      break;
    case simcheck::Verdict::refuted:
      if (!m.failures.empty()) {
        const auto& f = m.failures.front();
        s = "x=" + to_string(f.input) + ": expected " + outcome_text(f.expected) + ", got " + outcome_text(f.got) +
            " (" + f.candidate + ")";
        if (m.failures.size() > 1) s += "; " + std::to_string(m.failures.size() - 1) + " more candidates fail";
      }
      break;
    case simcheck::Verdict::unknown:
      s = std::to_string(m.undecided_points) + " undecided points; candidates:";
      for (const auto& c : m.undecided_candidates) s += " " + c;
      break;
  }
  if (!m.note.empty()) s += s.empty() ? m.note : " [" + m.note + "]";
  return s;
}

void text(std::string& out, const SimReport& r, const std::string& indent) {
  out += indent + "claim: " + r.claim.kind;
  if (!r.claim.a.empty()) out += " a=" + r.claim.a;
  if (!r.claim.b.empty()) out += " b=" + r.claim.b;
  for (const auto& e : r.claim.encodings) out += " encoding=" + e;
  if (!r.claim.mode.empty()) out += " mode=" + r.claim.mode;
  out += "\n" + indent + "aggregate: " + std::string(to_string(r.aggregate)) + "\n";

  if (!r.members.empty()) {
    std::size_t width = 6;
    for (const auto& m : r.members) width = std::max(width, m.member.size());
    auto row = [&](const std::string& a, const std::string& b, const std::string& c) {
      std::string line = indent + a + std::string(width - a.size() + 2, ' ') + b;
      if (!c.empty()) line += std::string(10 - b.size(), ' ') + c;
      out += line + "\n";
    };
    row("member", "verdict", "detail");
    for (const auto& m : r.members) row(m.member, std::string(to_string(m.verdict)), detail(m));
  }

  const auto& st = r.stats;
  out += indent + "statistics: inputs " + std::to_string(st.inputs_tested) + ", evaluations " +
         std::to_string(st.evaluations) + ", candidates " + std::to_string(st.candidates_examined) +
         ", fuel/evaluation " + std::to_string(st.fuel_per_evaluation) + ", fuel spent " +
         std::to_string(st.fuel_spent) + "\n";
  for (const auto& n : r.notes) out += indent + "note: " + n + "\n";
  for (std::size_t i = 0; i < r.parts.size(); ++i) {
    out += indent + "part " + std::to_string(i + 1) + ":\n";
    text(out, r.parts[i], indent + "  ");
  }
}

}  // namespace

std::string render_report(const SimReport& r, Format format, const std::string& scenario) {
  if (format == Format::structured) {
    json j;
    if (!scenario.empty()) j["scenario"] = scenario;
    json body = report_json(r);
    for (auto& [k, v] : body.items()) j[k] = std::move(v);
    return j.dump(2) + "\n";
  }
  std::string out;
  if (!scenario.empty()) out += "scenario: " + scenario + "\n";
  text(out, r, "");
  return out;
}

int exit_code(simcheck::Verdict v) noexcept {
  switch (v) {
    case simcheck::Verdict::verified: return 0;
    case simcheck::Verdict::refuted: return 1;
    case simcheck::Verdict::unknown: return 2;
  }
  return usage_error;
}

}  // namespace simlab::cli
