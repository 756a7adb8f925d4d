#include "dioq/parser.hpp"

#include "dioq/error.hpp"

#include <cctype>

namespace dioq {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, NameTable& names) : text_(text), names_(names) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  std::size_t pos() const { return pos_; }
  void rewind(std::size_t p) { pos_ = p; }

  Nat digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return nat_from_decimal(std::string(text_.substr(start, pos_ - start)));
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      fail("expected identifier");
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  NameTable& names() { return names_; }

 private:
  std::string_view text_;
  NameTable& names_;
  std::size_t pos_ = 0;
};

TermRef parse_sum(Cursor& c);

TermRef parse_atom(Cursor& c) {
  char ch = c.peek();
  if (ch == '0') {
    c.eat('0');
    return t_zero();
  }
  if (ch == '#') {
    c.eat('#');
    return bnum(c.digits());
  }
  if (ch == '(') {
    c.eat('(');
    TermRef t = parse_sum(c);
    c.expect(')');
    return t;
  }
  if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
    std::size_t mark = c.pos();
    std::string name = c.ident();
    if (name == "S") {
      if (c.peek() == '(') {
        c.eat('(');
        TermRef t = parse_sum(c);
        c.expect(')');
        return t_succ(t);
      }
      c.rewind(mark);
      c.fail("'S' is reserved; expected 'S(...)'");
    }
    std::uint32_t idx;
    try {
      idx = c.names().intern(name);
    } catch (const std::invalid_argument& e) {
      c.rewind(mark);
      c.fail(e.what());
    }
    return t_var(idx);
  }
  c.fail("expected term");
}

TermRef parse_prod(Cursor& c) {
  TermRef t = parse_atom(c);
  while (c.eat('*')) t = t_mul(t, parse_atom(c));
  return t;
}

TermRef parse_sum(Cursor& c) {
  TermRef t = parse_prod(c);
  while (c.eat('+')) t = t_add(t, parse_prod(c));
  return t;
}

FormulaRef parse_disj(Cursor& c);

FormulaRef parse_fatom(Cursor& c) {
  // '(' is ambiguous between a parenthesized formula and a parenthesized
  // term on the left of '='; try the equation reading first and fall back.
  std::size_t mark = c.pos();
  if (c.peek() == '(') {
    try {
      TermRef t = parse_sum(c);
      c.expect('=');
      c.expect('#');
      return PositiveFormula::make_atom(t, c.digits());
    } catch (const ParseError&) {
      c.rewind(mark);
    }
    c.eat('(');
    FormulaRef f = parse_disj(c);
    c.expect(')');
    return f;
  }
  TermRef t = parse_sum(c);
  c.expect('=');
  c.expect('#');
  return PositiveFormula::make_atom(t, c.digits());
}

FormulaRef parse_conj(Cursor& c) {
  std::vector<FormulaRef> parts{parse_fatom(c)};
  while (c.eat('&')) parts.push_back(parse_fatom(c));
  return PositiveFormula::make_and(std::move(parts));
}

FormulaRef parse_disj(Cursor& c) {
  std::vector<FormulaRef> parts{parse_conj(c)};
  while (c.eat('|')) parts.push_back(parse_conj(c));
  return PositiveFormula::make_or(std::move(parts));
}

}  // namespace

TermRef parse_term(std::string_view text, NameTable& names) {
  Cursor c(text, names);
  TermRef t = parse_sum(c);
  if (!c.at_end()) c.fail("trailing input after term");
  return t;
}

Equation parse_equation(std::string_view text, NameTable& names) {
  Cursor c(text, names);
  TermRef lhs = parse_sum(c);
  c.expect('=');
  TermRef rhs = parse_sum(c);
  if (!c.at_end()) c.fail("trailing input after equation");
  return Equation{lhs, rhs};
}

FormulaRef parse_formula(std::string_view text, NameTable& names) {
  Cursor c(text, names);
  FormulaRef f = parse_disj(c);
  if (!c.at_end()) c.fail("trailing input after formula");
  return f;
}

ParsedInput parse_input(std::string_view text, NameTable& names) {
  bool connective = text.find('&') != std::string_view::npos ||
                    text.find('|') != std::string_view::npos;
  if (connective) return ParsedInput{parse_formula(text, names)};
  return ParsedInput{parse_equation(text, names)};
}

}  // namespace dioq
