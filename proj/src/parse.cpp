#include "eqsing/parse.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "eqsing/errors.hpp"

namespace eqsing {

namespace {

constexpr std::uint32_t kMaxPower = 1u << 16;
constexpr std::size_t kMaxInferredVars = 64;

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 6 || std::stoul(d) > kMaxPower) {
      pos_ = at;
      fail("exponent too large");
    }
    std::uint32_t k = static_cast<std::uint32_t>(std::stoul(d));
    Polynomial result = Polynomial::constant(nvars_, 1);
    while (k > 0) {
      if (k & 1u) result = result * base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return result;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      const std::size_t at = pos_;
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected a variable index after 'x'");
      const std::string d = digits();
      const unsigned long idx = d.size() > 9 ? 0 : std::stoul(d);
      if (idx == 0 || idx > nvars_) {
        pos_ = at;
        fail("variable x" + d + " outside x1..x" + std::to_string(nvars_));
      }
      return Polynomial::variable(nvars_, idx - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(digits());
      if (accept('/')) {
        const std::size_t at = pos_;
        Rational den(digits());
        if (den == 0) {
          pos_ = at;
          fail("division by zero");
        }
        value /= den;
      }
      value.canonicalize();
      return Polynomial::constant(nvars_, value);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

std::size_t largest_index(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1, v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && v < 1'000'000'000)
      v = v * 10 + static_cast<std::size_t>(text[j++] - '0');
    best = std::max(best, v);
  }
  return best;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::optional<std::size_t> nvars) {
  std::size_t n = nvars.value_or(0);
  if (!nvars) n = std::clamp<std::size_t>(largest_index(text), 1, kMaxInferredVars);
  return Parser(text, n).parse();
}

}  // namespace eqsing
