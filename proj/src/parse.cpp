#include "duval/parse.hpp"

#include <algorithm>
#include <cctype>

namespace duval {

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;

  explicit Lexer(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
};

class PolyParser {
 public:
  PolyParser(const std::string& text, const VarSetPtr& vs) : lex_(text), vs_(vs) {}

  Poly parse() {
    Poly p = expr();
    if (!lex_.eof()) throw ParseError("trailing input at '" + rest() + "'");
    return p;
  }

 private:
  std::string rest() { return lex_.s.substr(lex_.i); }

  Poly expr() {
    Poly p = lex_.accept('-') ? -term() : (lex_.accept('+'), term());
    while (true) {
      if (lex_.accept('+'))
        p += term();
      else if (lex_.accept('-'))
        p -= term();
      else
        break;
    }
    return p;
  }

  Poly term() {
    Poly p = factor();
    while (true) {
      char c = lex_.peek();
      if (c == '*') {
        lex_.take();
        p = p * factor();
      } else if (c == '/') {
        // Rational coefficient written as p/q where both sides are integers.
        lex_.take();
        Poly d = factor();
        if (!d.is_constant() || d.is_zero())
          throw ParseError("'/' only divides by a nonzero integer");
        p = p * (Rat(1) / d.constant_term());
      } else {
        break;
      }
    }
    return p;
  }

  Poly factor() {
    if (lex_.accept('-')) return -factor();
    if (lex_.accept('+')) return factor();
    Poly base = atom();
    if (lex_.accept('^')) {
      int n = integer();
      return base.pow(n);
    }
    return base;
  }

  Poly atom() {
    char c = lex_.peek();
    if (c == '(') {
      lex_.take();
      Poly p = expr();
      if (!lex_.accept(')')) throw ParseError("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly::constant(vs_, Rat(integer()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = identifier();
      int v = vs_->index(name);
      if (v < 0) throw ParseError("unknown variable '" + name + "'");
      return Poly::variable(vs_, v);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'");
  }

  int integer() {
    lex_.skip_ws();
    size_t start = lex_.i;
    while (lex_.i < lex_.s.size() && std::isdigit(static_cast<unsigned char>(lex_.s[lex_.i])))
      ++lex_.i;
    if (lex_.i == start) throw ParseError("expected integer");
    return std::stoi(lex_.s.substr(start, lex_.i - start));
  }

  std::string identifier() {
    lex_.skip_ws();
    size_t start = lex_.i;
    while (lex_.i < lex_.s.size()) {
      char c = lex_.s[lex_.i];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        ++lex_.i;
      else
        break;
    }
    return lex_.s.substr(start, lex_.i - start);
  }

  Lexer lex_;
  VarSetPtr vs_;
};

}  // namespace

Poly parse_poly(const std::string& text, const VarSetPtr& vs) {
  return PolyParser(text, vs).parse();
}

VarSetPtr parse_vars_header(const std::string& line) {
  std::string body = line;
  auto colon = body.find(':');
  if (colon != std::string::npos) {
    std::string head = body.substr(0, colon);
    head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
    if (head != "vars") throw ParseError("expected 'vars:' header");
    body = body.substr(colon + 1);
  }
  auto vs = make_vars(body);
  if (vs->arity() == 0) throw ParseError("empty vars header");
  return vs;
}

}  // namespace duval
