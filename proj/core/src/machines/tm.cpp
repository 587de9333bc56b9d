#include "simlab/machines/tm.hpp"

#include <deque>
#include <map>
#include <sstream>

#include "simlab/core/errors.hpp"

namespace simlab::machines {
namespace {

char symbol_char(Symbol s) {
  switch (s) {
    case Symbol::zero: return '0';
    case Symbol::one: return '1';
    case Symbol::blank: return '_';
  }
  return '?';
}

char move_char(Move m) {
  switch (m) {
    case Move::left: return 'L';
    case Move::right: return 'R';
    case Move::stay: return 'S';
  }
  return '?';
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(std::move(w));
  return words;
}

}  // namespace

void TmProgram::validate() const {
  if (states.empty()) throw ValidationError("turing machine has no states");
  if (table.size() != states.size()) throw ValidationError("transition table size does not match state count");
  if (start >= states.size()) throw ValidationError("start state out of range");
  if (halt >= states.size()) throw ValidationError("halt state out of range");
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (int sym = 0; sym < 3; ++sym) {
      const auto& t = table[s][sym];
      const std::string where = "state " + states[s] + " reading " + symbol_char(static_cast<Symbol>(sym));
      if (s == halt) {
        if (t) throw ValidationError("halt state has a transition: " + where);
        continue;
      }
      if (!t) throw ValidationError("missing transition for " + where);
      if (t->next >= states.size()) throw ValidationError("transition target out of range for " + where);
    }
  }
}

TmProgram parse_tm(std::string_view text) {
  TmProgram p;
  std::map<std::string, std::size_t> index;
  auto state = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, p.states.size());
    if (fresh) {
      p.states.push_back(name);
      p.table.emplace_back();
    }
    return it->second;
  };
  std::optional<std::size_t> start, halt;

  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto w = split(line);
    if (w.empty()) continue;
    if (w[0] == "start" || w[0] == "halt") {
      if (w.size() != 2) throw ParseError("expected '" + w[0] + " <state>'", lineno, 1);
      auto& slot = w[0] == "start" ? start : halt;
      if (slot) throw ParseError("duplicate '" + w[0] + "' line", lineno, 1);
      slot = state(w[1]);
      continue;
    }
    if (w.size() != 5) {
      throw ParseError("expected '<state> <read> <next> <write> <move>'", lineno, 1);
    }
    auto sym = [&](const std::string& s) {
      if (s == "0") return Symbol::zero;
      if (s == "1") return Symbol::one;
      if (s == "_") return Symbol::blank;
      throw ParseError("bad symbol '" + s + "', expected 0, 1 or _", lineno, 1);
    };
    Move move;
    if (w[4] == "L") move = Move::left;
    else if (w[4] == "R") move = Move::right;
    else if (w[4] == "S") move = Move::stay;
    else throw ParseError("bad move '" + w[4] + "', expected L, R or S", lineno, 1);

    const std::size_t from = state(w[0]);
    const Symbol read = sym(w[1]);
    const std::size_t next = state(w[2]);
    const Symbol write = sym(w[3]);
    auto& slot = p.table[from][static_cast<int>(read)];
    if (slot) throw ParseError("duplicate transition for state " + w[0] + " reading " + w[1], lineno, 1);
    slot = TmTransition{next, write, move};
  }
  if (!start) throw ParseError("missing 'start' line", 0, 0);
  if (!halt) throw ParseError("missing 'halt' line", 0, 0);
  p.start = *start;
  p.halt = *halt;
  p.validate();
  return p;
}

std::string to_string(const TmProgram& p) {
  std::string out = "start " + p.states.at(p.start) + "\nhalt " + p.states.at(p.halt) + "\n";
  for (std::size_t s = 0; s < p.table.size(); ++s) {
    for (int sym = 0; sym < 3; ++sym) {
      if (const auto& t = p.table[s][sym]) {
        out += p.states[s] + ' ' + symbol_char(static_cast<Symbol>(sym)) + ' ' + p.states[t->next] + ' ' +
               symbol_char(t->write) + ' ' + move_char(t->move) + '\n';
      }
    }
  }
  return out;
}

Outcome run_tm(const TmProgram& p, const Bits& input, Fuel& fuel) {
  p.validate();
  std::deque<Symbol> tape;
  for (char c : input.str()) tape.push_back(c == '1' ? Symbol::one : Symbol::zero);
  if (tape.empty()) tape.push_back(Symbol::blank);
  std::size_t head = 0;
  std::size_t state = p.start;

  while (true) {
    if (!fuel.spend()) return Outcome::fuel_exhausted();
    if (state == p.halt) break;
    const TmTransition& t = *p.table[state][static_cast<int>(tape[head])];
    tape[head] = t.write;
    state = t.next;
    if (t.move == Move::left) {
      if (head == 0) tape.push_front(Symbol::blank);
      else --head;
    } else if (t.move == Move::right) {
      ++head;
      if (head == tape.size()) tape.push_back(Symbol::blank);
    }
  }

  if (tape[head] == Symbol::blank) return Outcome::converged(Bits{});
  std::size_t lo = head, hi = head;
  while (lo > 0 && tape[lo - 1] != Symbol::blank) --lo;
  while (hi + 1 < tape.size() && tape[hi + 1] != Symbol::blank) ++hi;
  std::string digits;
  for (std::size_t i = lo; i <= hi; ++i) digits.push_back(tape[i] == Symbol::one ? '1' : '0');
  return Outcome::converged(Bits(std::move(digits)));
}

Outcome run_tm(const TmProgram& p, const Bits& input, std::uint64_t fuel) {
  Fuel f(fuel);
  return run_tm(p, input, f);
}

}  // namespace simlab::machines
