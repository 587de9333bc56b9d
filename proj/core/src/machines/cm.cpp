#include "simlab/machines/cm.hpp"

#include <limits>
#include <map>
#include <sstream>

#include "simlab/core/errors.hpp"

namespace simlab::machines {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(std::move(w));
  return words;
}

bool all_digits(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

template <class Reg>
Outcome run(const CmProgram& p, Reg input, Fuel& fuel) {
  std::vector<Reg> regs(p.registers, Reg(0));
  regs[p.input] = std::move(input);
  std::size_t pc = 0;
  const std::size_t end = p.code.size();
  // Falling off the end and executing halt both cost one step.
  for (bool halted = false; !halted;) {
    if (!fuel.spend()) return Outcome::fuel_exhausted();
    if (pc >= end) break;
    const CmInstruction& ins = p.code[pc];
    switch (ins.op) {
      case CmInstruction::Op::inc:
        regs[ins.reg] += 1;
        ++pc;
        break;
      case CmInstruction::Op::decjz:
        if (regs[ins.reg] == 0) {
          pc = ins.target;
        } else {
          regs[ins.reg] -= 1;
          ++pc;
        }
        break;
      case CmInstruction::Op::jump: pc = ins.target; break;
      case CmInstruction::Op::halt: halted = true; break;
    }
  }
  return Outcome::converged(Value(Nat(regs[p.output])));
}

}  // namespace

void CmProgram::validate() const {
  if (registers == 0) throw ValidationError("counter machine needs at least one register");
  if (input >= registers) throw ValidationError("input register " + std::to_string(input) + " out of range");
  if (output >= registers) throw ValidationError("output register " + std::to_string(output) + " out of range");
  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto& ins = code[i];
    const bool uses_reg = ins.op == CmInstruction::Op::inc || ins.op == CmInstruction::Op::decjz;
    const bool jumps = ins.op == CmInstruction::Op::decjz || ins.op == CmInstruction::Op::jump;
    if (uses_reg && ins.reg >= registers) {
      throw ValidationError("instruction " + std::to_string(i) + " uses register " + std::to_string(ins.reg) +
                            " of " + std::to_string(registers));
    }
    if (jumps && ins.target > code.size()) {
      throw ValidationError("instruction " + std::to_string(i) + " jumps to " + std::to_string(ins.target) +
                            ", past the end of the code");
    }
  }
}

CmProgram parse_cm(std::string_view text) {
  struct Pending {
    std::size_t instruction;
    std::string label;
    std::size_t line;
  };
  CmProgram p;
  std::optional<std::size_t> registers;
  std::map<std::string, std::size_t> labels;
  std::vector<Pending> pending;
  std::size_t max_reg = 0;

  auto reg = [&](const std::string& s, std::size_t line) {
    if (!all_digits(s) || s.size() > 9) throw ParseError("bad register '" + s + "'", line, 1);
    const std::size_t r = std::stoul(s);
    max_reg = std::max(max_reg, r);
    return r;
  };

  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto w = split(line);
    if (w.empty()) continue;
    if (w[0].back() == ':') {
      std::string label = w[0].substr(0, w[0].size() - 1);
      if (label.empty() || all_digits(label)) throw ParseError("bad label '" + w[0] + "'", lineno, 1);
      if (!labels.emplace(label, p.code.size()).second) {
        throw ParseError("duplicate label '" + label + "'", lineno, 1);
      }
      w.erase(w.begin());
      if (w.empty()) continue;
    }
    const std::string& op = w[0];
    auto arity = [&](std::size_t n) {
      if (w.size() != n + 1) {
        throw ParseError("'" + op + "' takes " + std::to_string(n) + " operand(s)", lineno, 1);
      }
    };
    auto target = [&](const std::string& s) -> std::size_t {
      if (all_digits(s)) return std::stoul(s);
      pending.push_back({p.code.size(), s, lineno});
      return 0;
    };
    if (op == "registers") {
      arity(1);
      if (!all_digits(w[1])) throw ParseError("bad register count '" + w[1] + "'", lineno, 1);
      registers = std::stoul(w[1]);
    } else if (op == "input") {
      arity(1);
      p.input = reg(w[1], lineno);
    } else if (op == "output") {
      arity(1);
      p.output = reg(w[1], lineno);
    } else if (op == "inc") {
      arity(1);
      p.code.push_back({CmInstruction::Op::inc, reg(w[1], lineno), 0});
    } else if (op == "decjz") {
      arity(2);
      const std::size_t r = reg(w[1], lineno);
      const std::size_t t = target(w[2]);
      p.code.push_back({CmInstruction::Op::decjz, r, t});
    } else if (op == "jump") {
      arity(1);
      const std::size_t t = target(w[1]);
      p.code.push_back({CmInstruction::Op::jump, 0, t});
    } else if (op == "halt") {
      arity(0);
      p.code.push_back({CmInstruction::Op::halt, 0, 0});
    } else {
      throw ParseError("unknown instruction '" + op + "'", lineno, 1);
    }
  }
  for (const auto& pd : pending) {
    auto it = labels.find(pd.label);
    if (it == labels.end()) throw ParseError("undefined label '" + pd.label + "'", pd.line, 1);
    p.code[pd.instruction].target = it->second;
  }
  p.registers = registers.value_or(max_reg + 1);
  p.validate();
  return p;
}

std::string to_string(const CmProgram& p) {
  std::string out = "registers " + std::to_string(p.registers) + "\ninput " + std::to_string(p.input) +
                    "\noutput " + std::to_string(p.output) + "\n";
  for (const auto& ins : p.code) {
    switch (ins.op) {
      case CmInstruction::Op::inc: out += "inc " + std::to_string(ins.reg) + "\n"; break;
      case CmInstruction::Op::decjz:
        out += "decjz " + std::to_string(ins.reg) + " " + std::to_string(ins.target) + "\n";
        break;
      case CmInstruction::Op::jump: out += "jump " + std::to_string(ins.target) + "\n"; break;
      case CmInstruction::Op::halt: out += "halt\n"; break;
    }
  }
  return out;
}

Outcome run_cm(const CmProgram& p, const Nat& input, Fuel& fuel) {
  p.validate();
  if (input < 0) throw DomainError("negative counter machine input");
  // Registers can grow by at most one per step, so 64 bits suffice whenever
  // input + budget does.
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max() / 2;
  if (input < cap && fuel.remaining() < cap) {
    return run<std::uint64_t>(p, input.convert_to<std::uint64_t>(), fuel);
  }
  return run<Nat>(p, input, fuel);
}

Outcome run_cm(const CmProgram& p, const Nat& input, std::uint64_t fuel) {
  Fuel f(fuel);
  return run_cm(p, input, f);
}

}  // namespace simlab::machines
