#include "simlab/recdsl/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "simlab/core/errors.hpp"

namespace simlab::rec {
namespace {

struct Token {
  enum class Type { open, close, atom, end } type;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip();
    const std::size_t line = line_;
    const std::size_t column = column_;
    if (pos_ >= text_.size()) return {Token::Type::end, {}, line, column};
    const char c = text_[pos_];
    if (c == '(' || c == ')') {
      advance();
      return {c == '(' ? Token::Type::open : Token::Type::close, std::string(1, c), line, column};
    }
    std::string atom;
    while (pos_ < text_.size()) {
      const char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';') break;
      atom += d;
      advance();
    }
    return {Token::Type::atom, std::move(atom), line, column};
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const Definitions* defs) : lexer_(text), defs_(defs) {}

  Term parse_all() {
    Token t = lexer_.next();
    if (t.type == Token::Type::end) throw ParseError("empty term", t.line, t.column);
    Term term = parse(t);
    Token rest = lexer_.next();
    if (rest.type != Token::Type::end) {
      throw ParseError("unexpected '" + rest.text + "' after complete term", rest.line, rest.column);
    }
    return term;
  }

 private:
  Term parse(const Token& t) {
    switch (t.type) {
      case Token::Type::end: throw ParseError("unexpected end of input", t.line, t.column);
      case Token::Type::close: throw ParseError("unexpected ')'", t.line, t.column);
      case Token::Type::atom: return atom(t);
      case Token::Type::open: return form(t);
    }
    throw ParseError("unreachable", t.line, t.column);
  }

  Term atom(const Token& t) {
    if (t.text == "Z") return Term::zero();
    if (t.text == "S") return Term::succ();
    if (t.text == "I") return Term::identity();
    if (t.text == "ACK") return Term::ack();
    if (defs_ != nullptr) {
      if (auto it = defs_->find(t.text); it != defs_->end()) return it->second;
    }
    if (std::isdigit(static_cast<unsigned char>(t.text.front()))) {
      throw ParseError("expected a term, got number " + t.text, t.line, t.column);
    }
    throw ParseError("unknown symbol '" + t.text + "'", t.line, t.column);
  }

  Term form(const Token& open) {
    Token head = lexer_.next();
    if (head.type != Token::Type::atom) {
      throw ParseError("expected an operator after '('", head.line, head.column);
    }
    try {
      if (head.text == "P") {
        const std::size_t i = number(lexer_.next());
        const std::size_t k = number(lexer_.next());
        close();
        return Term::proj(i, k);
      }
      if (head.text == "K") {
        Token n = lexer_.next();
        Nat k = big_number(n);
        close();
        return Term::constant(std::move(k));
      }
      if (head.text == "C") {
        Term f = parse(lexer_.next());
        std::vector<Term> gs;
        for (Token t = lexer_.next(); t.type != Token::Type::close; t = lexer_.next()) {
          gs.push_back(parse(t));
        }
        return Term::comp(std::move(f), std::move(gs));
      }
      if (head.text == "R") {
        Term base = parse(lexer_.next());
        Term step = parse(lexer_.next());
        close();
        return Term::primrec(std::move(base), std::move(step));
      }
      if (head.text == "M") {
        Term f = parse(lexer_.next());
        close();
        return Term::mu(std::move(f));
      }
    } catch (const ArityError& e) {
      if (std::string_view(e.what()).starts_with("line ")) throw;
      throw ArityError("line " + std::to_string(open.line) + ", column " +
                       std::to_string(open.column) + ": " + e.what());
    }
    throw ParseError("unknown operator '" + head.text + "'", head.line, head.column);
  }

  void close() {
    Token t = lexer_.next();
    if (t.type != Token::Type::close) {
      throw ParseError(t.type == Token::Type::end ? "missing ')'" : "expected ')', got '" + t.text + "'",
                       t.line, t.column);
    }
  }

  Nat big_number(const Token& t) {
    if (t.type != Token::Type::atom) throw ParseError("expected a number", t.line, t.column);
    for (char c : t.text) {
      if (c < '0' || c > '9') throw ParseError("expected a number, got '" + t.text + "'", t.line, t.column);
    }
    return parse_nat(t.text);
  }

  std::size_t number(const Token& t) {
    Nat n = big_number(t);
    if (n > 1'000'000) throw ParseError("index " + t.text + " is too large", t.line, t.column);
    return n.convert_to<std::size_t>();
  }

  Lexer lexer_;
  const Definitions* defs_;
};

}  // namespace

Term parse_term(std::string_view text) { return Parser(text, nullptr).parse_all(); }

Term parse_term(std::string_view text, const Definitions& definitions) {
  return Parser(text, &definitions).parse_all();
}

}  // namespace simlab::rec
