#include "simlab/core/value.hpp"

#include <cctype>

#include "simlab/constructions/godel.hpp"
#include "simlab/core/errors.hpp"
#include "simlab/machines/bits.hpp"

namespace simlab {

std::string_view to_string(Domain d) noexcept {
  switch (d) {
    case Domain::nat: return "nat";
    case Domain::bits: return "bits";
    case Domain::list: return "list";
  }
  return "?";
}

std::optional<Domain> parse_domain(std::string_view text) noexcept {
  if (text == "nat") return Domain::nat;
  if (text == "bits") return Domain::bits;
  if (text == "list") return Domain::list;
  return std::nullopt;
}

Bits::Bits(std::string digits) : digits_(std::move(digits)) {
  for (char c : digits_) {
    if (c != '0' && c != '1') throw DomainError("bit string contains '" + std::string(1, c) + "'");
  }
}

struct List::Cell {
  List head;
  List tail;
};

List List::cons(List head, List tail) {
  return List(std::make_shared<const Cell>(Cell{std::move(head), std::move(tail)}));
}

List List::of(std::vector<List> elements) {
  List out;
  for (auto it = elements.rbegin(); it != elements.rend(); ++it) out = cons(std::move(*it), out);
  return out;
}

const List& List::head() const {
  if (!cell_) throw DomainError("head of nil");
  return cell_->head;
}

const List& List::tail() const {
  if (!cell_) throw DomainError("tail of nil");
  return cell_->tail;
}

std::size_t List::length() const noexcept {
  std::size_t n = 0;
  for (const Cell* c = cell_.get(); c != nullptr; c = c->tail.cell_.get()) ++n;
  return n;
}

bool operator==(const List& a, const List& b) {
  const List::Cell* x = a.cell_.get();
  const List::Cell* y = b.cell_.get();
  while (x != nullptr && y != nullptr) {
    if (x == y) return true;
    if (!(x->head == y->head)) return false;
    x = x->tail.cell_.get();
    y = y->tail.cell_.get();
  }
  return x == y;
}

namespace {

void append_list(std::string& out, const List& l) {
  out += '(';
  bool first = true;
  for (const List* p = &l; !p->is_nil(); p = &p->tail()) {
    if (!first) out += ' ';
    first = false;
    append_list(out, p->head());
  }
  out += ')';
}

class ListReader {
 public:
  explicit ListReader(std::string_view text) : text_(text) {}

  List read_all() {
    skip_ws();
    List l = read();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters after list");
    return l;
  }

 private:
  List read() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
    ++pos_;
    std::vector<List> elements;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) fail("unclosed '('");
      if (text_[pos_] == ')') {
        ++pos_;
        return List::of(std::move(elements));
      }
      elements.push_back(read());
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, 1, pos_ + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const List& list) {
  std::string out;
  append_list(out, list);
  return out;
}

List parse_list(std::string_view text) { return ListReader(text).read_all(); }

Value::Value(Nat n) : v_(std::move(n)) {
  if (std::get<Nat>(v_) < 0) throw DomainError("natural numbers are non-negative");
}

Domain Value::domain() const noexcept {
  switch (v_.index()) {
    case 0: return Domain::nat;
    case 1: return Domain::bits;
    default: return Domain::list;
  }
}

const Nat& Value::as_nat() const {
  if (const auto* n = std::get_if<Nat>(&v_)) return *n;
  throw DomainError("wrong domain: expected nat, got " + std::string(to_string(domain())));
}

const Bits& Value::as_bits() const {
  if (const auto* b = std::get_if<Bits>(&v_)) return *b;
  throw DomainError("wrong domain: expected bits, got " + std::string(to_string(domain())));
}

const List& Value::as_list() const {
  if (const auto* l = std::get_if<List>(&v_)) return *l;
  throw DomainError("wrong domain: expected list, got " + std::string(to_string(domain())));
}

std::string to_string(const Value& v) {
  switch (v.domain()) {
    case Domain::nat: return v.as_nat().str();
    case Domain::bits: return "b\"" + v.as_bits().str() + "\"";
    case Domain::list: return to_string(v.as_list());
  }
  return {};
}

Value parse_value(std::string_view text, Domain domain) {
  switch (domain) {
    case Domain::nat: return Value(parse_nat(text));
    case Domain::bits: {
      // Accept both the report form b"0110" and bare digits; "e" or an
      // empty string is the empty word.
      std::string_view s = text;
      if (s.size() >= 3 && s.substr(0, 2) == "b\"" && s.back() == '"') s = s.substr(2, s.size() - 3);
      if (s == "e" || s == "eps") s = {};
      for (char c : s) {
        if (c != '0' && c != '1') throw ParseError("bit strings use only 0 and 1", 1, 1);
      }
      return Value(Bits(std::string(s)));
    }
    case Domain::list: return Value(parse_list(text));
  }
  throw DomainError("unknown domain");
}

Value canonical_value(Domain domain, const Nat& index) {
  switch (domain) {
    case Domain::nat: return Value(index);
    case Domain::bits: return Value(machines::nat_to_bits(index));
    case Domain::list: return Value(constructions::godel_decode(index));
  }
  throw DomainError("unknown domain");
}

void require_domain(const Value& v, Domain expected, std::string_view context) {
  if (v.domain() != expected) {
    throw DomainError("wrong domain in " + std::string(context) + ": expected " +
                      std::string(to_string(expected)) + ", got " + std::string(to_string(v.domain())));
  }
}

}  // namespace simlab
