#include <cctype>
#include <sstream>

#include "orthoforms/polynomial.hpp"

namespace orthoforms {

namespace {

void append_monomial(std::ostream& os, const Monomial& m, const VariableSpace& sp) {
  bool first = true;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    unsigned e = m.exp(i);
    if (e == 0) continue;
    if (!first) os << "*";
    first = false;
    os << sp.name(i);
    if (e > 1) os << "^" << e;
  }
}

}  // namespace

std::string Polynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rat c = t.coeff;
    if (first) {
      if (rat_sign(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (rat_sign(c) < 0 ? " - " : " + ");
      if (rat_sign(c) < 0) c = -c;
    }
    first = false;
    if (t.mono.is_unit()) {
      os << rat_to_string(c);
    } else {
      if (c != 1) os << rat_to_string(c) << "*";
      append_monomial(os, t.mono, *space_);
    }
  }
  return os.str();
}

namespace {

// Grammar:
//   poly   := [sign] term ((' ')* sign term)*
//   term   := coeff ['*' factors] | factors
//   factors:= factor ('*' factor)*
//   factor := ident ['^' uint]
//   coeff  := uint ['/' uint]
// Signs may be repeated ("- -x" is rejected; a single sign per term).
class Parser {
public:
  Parser(std::string_view text, SpacePtr space)
      : text_(text), space_(std::move(space)) {}

  Polynomial run() {
    std::vector<Polynomial::Term> terms;
    skip_ws();
    if (eof()) throw ParseError("empty input", pos_);
    bool first = true;
    while (!eof()) {
      int sign = 1;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      parse_term(sign, terms);
      first = false;
      skip_ws();
    }
    return Polynomial::from_terms(space_, std::move(terms));
  }

private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Int parse_uint() {
    std::size_t start = pos_;
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
      digits.push_back(text_[pos_++]);
    if (digits.empty()) throw ParseError("expected a number", start);
    return Int(digits);
  }

  unsigned parse_exponent() {
    std::size_t start = pos_;
    Int e = parse_uint();
    if (e > 65535) throw ParseError("exponent too large", start);
    return unsigned(e.get_ui());
  }

  std::string parse_ident() {
    std::size_t start = pos_;
    std::string name;
    auto is_ident = [](char c, bool lead) {
      unsigned char u = static_cast<unsigned char>(c);
      return std::isalpha(u) || c == '_' || (!lead && std::isdigit(u));
    };
    if (eof() || !is_ident(peek(), true))
      throw ParseError("expected a variable name", start);
    while (!eof() && is_ident(peek(), false)) name.push_back(text_[pos_++]);
    return name;
  }

  void parse_term(int sign, std::vector<Polynomial::Term>& out) {
    skip_ws();
    Rat coeff(sign);
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Int num = parse_uint();
      Int den(1);
      if (peek() == '/') {
        ++pos_;
        std::size_t dpos = pos_;
        den = parse_uint();
        if (den == 0) throw ParseError("zero denominator", dpos);
      }
      coeff *= rat(num, den);
      saw_coeff = true;
    }
    Monomial mono(space_->size());
    bool saw_var = false;
    for (;;) {
      skip_ws();
      bool star = false;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        star = true;
      }
      unsigned char c = static_cast<unsigned char>(peek());
      if (!(std::isalpha(c) || peek() == '_')) {
        if (star) throw ParseError("expected a variable after '*'", pos_);
        break;
      }
      if (saw_var && !star) {
        // adjacency like "x y" without an operator
        throw ParseError("expected '*', '^', '+' or '-'", pos_);
      }
      std::size_t vpos = pos_;
      std::string name = parse_ident();
      auto idx = space_->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", vpos);
      unsigned e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        e = parse_exponent();
      }
      unsigned long total = (unsigned long)mono.exp(*idx) + e;
      if (total > 65535) throw ParseError("exponent too large", vpos);
      mono.set_exp(*idx, unsigned(total));
      saw_var = true;
    }
    if (!saw_coeff && !saw_var)
      throw ParseError("expected a term", pos_);
    out.push_back({std::move(mono), std::move(coeff)});
  }

  std::string_view text_;
  SpacePtr space_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, SpacePtr space) {
  return Parser(text, std::move(space)).run();
}

}  // namespace orthoforms
