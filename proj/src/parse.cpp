#include "xqcalc/parse.hpp"

#include <cctype>
#include <charconv>
#include <numbers>

namespace xqcalc {

namespace {

constexpr int kMaxLiteralExponent = 64;

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

class Parser {
 public:
  Parser(std::string_view text, int dim) : text_(text), dim_(dim) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (!eof()) fail(std::string("unexpected '") + peek() + "'");
    return p;
  }

 private:
  std::string_view text_;
  int dim_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Poly expr() {
    Poly lhs = term();
    for (;;) {
      if (accept('+')) lhs = lhs + term();
      else if (accept('-')) lhs = lhs - term();
      else return lhs;
    }
  }

  Poly term() {
    Poly lhs = unary();
    while (accept('*')) lhs = lhs * unary();
    return lhs;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (!accept('^')) return base;
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("exponent must be a non-negative integer literal");
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.' || peek() == 'e' || peek() == 'E')
      fail("exponent must be a non-negative integer literal");
    int k = 0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, k);
    if (res.ec != std::errc{} || k > kMaxLiteralExponent) {
      pos_ = start;
      fail("exponent too large");
    }
    return pow(base, k);
  }

  Poly primary() {
    skip_ws();
    if (eof()) fail("unexpected end of input");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail(std::string("unexpected '") + c + "'");
  }

  Poly number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t save = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = save;
        fail("malformed number exponent");
      }
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    double v = 0.0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (res.ec != std::errc{} || res.ptr != text_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    return Poly::constant(dim_, v);
  }

  Poly identifier() {
    const std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    std::string_view id = text_.substr(start, pos_ - start);
    if (id == "pi") return Poly::constant(dim_, std::numbers::pi);
    int axis = -1;
    if (id == "x") axis = 0;
    else if (id == "y") axis = 1;
    else if (id == "z") axis = 2;
    if (axis < 0 || axis >= dim_) {
      pos_ = start;
      fail("unknown variable '" + std::string(id) + "' for dimension " + std::to_string(dim_));
    }
    return Poly::variable(dim_, axis);
  }
};

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at " + std::to_string(position) + ": " + message),
      position_(position) {}

Poly parse_poly(std::string_view text, int dim) {
  if (dim < 1 || dim > kMaxDim) throw DimensionError("parse_poly: dimension must be 1..3");
  return Parser(text, dim).parse();
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  static constexpr char kVars[] = {'x', 'y', 'z'};
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0.0;
    const double mag = negative ? -c : c;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;

    std::string mono;
    for (int i = 0; i < p.dim(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += kVars[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) out += format_number(mag);
    else if (mag == 1.0) out += mono;
    else out += format_number(mag) + "*" + mono;
  }
  return out;
}

std::string to_string(const UniPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const double c = p.coeff(k);
    if (c == 0.0) continue;
    const bool negative = c < 0.0;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    const double mag = negative ? -c : c;
    if (k == 0) {
      out += format_number(mag);
      continue;
    }
    if (mag != 1.0) out += format_number(mag) + "*";
    out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace xqcalc
