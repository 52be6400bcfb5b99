#include "ffgamma/parse.hpp"

#include <cctype>

#include "ffgamma/errors.hpp"

namespace ffgamma {
namespace {

class Parser {
 public:
  Parser(std::string_view s, const GaloisField& f) : s_(s), f_(f) {}

  RationalK run() {
    RationalK v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalK expr() {
    RationalK v = term();
    for (;;) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  RationalK term() {
    RationalK v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        const std::size_t at = pos_;
        RationalK d = unary();
        if (d.is_zero()) throw DomainError("zero denominator at position " + std::to_string(at));
        v = v / d;
      } else {
        return v;
      }
    }
  }

  RationalK unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RationalK power() {
    RationalK base = atom();
    if (!eat('^')) return base;
    skip();
    const unsigned long long n = digits();
    RationalK r(Poly::constant(f_, 1));
    for (unsigned long long i = 0; i < n; ++i) r = r * base;
    return r;
  }

  unsigned long long digits() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected a non-negative integer");
    unsigned long long n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      n = n * 10 + static_cast<unsigned>(s_[pos_] - '0');
      if (n > 100000) fail("integer too large");
      ++pos_;
    }
    return n;
  }

  RationalK atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == 'T') {
      ++pos_;
      return RationalK(Poly::variable(f_));
    }
    if (c == '(') {
      ++pos_;
      RationalK v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const unsigned long long n = digits();
      return RationalK(Poly::constant(f_, f_.from_int(static_cast<long long>(n % f_.p()))));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const GaloisField& f_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalK parse_elem(std::string_view text, const GaloisField& f) { return Parser(text, f).run(); }

Poly parse_poly(std::string_view text, const GaloisField& f) {
  RationalK r = parse_elem(text, f);
  if (!r.is_poly()) throw DomainError("expected a polynomial in T, got " + r.to_string());
  return r.num();
}

}  // namespace ffgamma
