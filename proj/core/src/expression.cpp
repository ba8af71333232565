#include "akzeta/expression.hpp"

#include <boost/math/constants/constants.hpp>
#include <cctype>
#include <string>

namespace akzeta {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Real parse() {
    Real value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("cannot parse expression \"" + std::string(text_) + "\": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Real expression() {
    Real value = term();
    for (;;) {
      if (accept('+')) value += term();
      else if (accept('-')) value -= term();
      else return value;
    }
  }

  Real term() {
    Real value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        Real d = unary();
        if (d == 0) fail("division by zero");
        value /= d;
      } else {
        return value;
      }
    }
  }

  Real unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  Real primary() {
    skip_space();
    if (accept('(')) {
      Real value = expression();
      if (!accept(')')) fail("missing ')'");
      return value;
    }
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "pi") return boost::math::constants::pi<Real>();
      if (name == "sqrt") {
        if (!accept('(')) fail("expected '(' after sqrt");
        Real arg = expression();
        if (!accept(')')) fail("missing ')'");
        if (arg < 0) fail("sqrt of a negative number");
        return sqrt(arg);
      }
      fail("unknown name '" + std::string(name) + "'");
    }
    return number();
  }

  Real number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      } else {
        pos_ = save;
      }
    }
    if (start == pos_) fail("expected a number");
    try {
      return Real(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      fail("bad number");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view text) {
  std::size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  return std::string(text.substr(a, b - a));
}

Integer parse_integer(const std::string& s, std::string_view original) {
  std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw DomainError("cannot parse rational \"" + std::string(original) + "\"");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw DomainError("cannot parse rational \"" + std::string(original) + "\"");
  // Strip leading zeros so the digits are never read as octal.
  std::size_t first = i;
  while (first + 1 < s.size() && s[first] == '0') ++first;
  const Integer magnitude(s.substr(first));
  return s[0] == '-' ? Integer(-magnitude) : magnitude;
}

}  // namespace

Real parse_real(std::string_view text) { return Parser(text).parse(); }

Rational parse_rational(std::string_view text) {
  const std::string s = trim(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const Integer num = parse_integer(trim(s.substr(0, slash)), text);
    const Integer den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw DomainError("rational \"" + std::string(text) + "\" has a zero denominator");
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    const bool negative = !whole.empty() && whole[0] == '-';
    const std::string digits = (whole == "-" || whole == "+" || whole.empty() ? std::string(whole) + "0" : whole) + frac;
    Integer den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    if (frac.empty() && (whole.empty() || whole == "-" || whole == "+"))
      throw DomainError("cannot parse rational \"" + std::string(text) + "\"");
    Rational q(parse_integer(digits, text), den);
    if (negative && q > 0) q = -q;
    return q;
  }
  return Rational(parse_integer(s, text));
}

}  // namespace akzeta
