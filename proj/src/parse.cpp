#include "sl1d/parse.hpp"

#include <cctype>

#include "sl1d/error.hpp"

namespace sl1d {

namespace {

class Parser {
 public:
  Parser(const FieldTower& F, const std::string& s, int prec) : F_(F), s_(s), prec_(prec) {}

  DElem run() {
    DElem x = expr();
    skip();
    if (i_ != s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
    return x;
  }

 private:
  const FieldTower& F_;
  const std::string& s_;
  int prec_;
  std::size_t i_ = 0;

  [[noreturn]] void error(const std::string& what) const {
    raise(ErrorKind::BadInput, "parse error at column " + std::to_string(i_ + 1) + ": " + what);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  long long integer() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) error("integer expected");
    if (i_ - start > 9) error("integer too long");
    return std::stoll(s_.substr(start, i_ - start));
  }

  DElem fit(const DElem& x) const { return prec_ >= kExact ? x : x.with_precision(prec_); }

  DElem invert(const DElem& x) const {
    if (x.is_zero()) raise(ErrorKind::NotAUnit, "inverse of zero");
    return inv_any(fit(x));
  }

  DElem expr() {
    DElem x = term();
    for (;;) {
      if (eat('+'))
        x = x + term();
      else if (eat('-'))
        x = x - term();
      else
        return x;
    }
  }

  DElem term() {
    DElem x = unary();
    while (eat('*')) x = x * unary();
    return x;
  }

  DElem unary() {
    if (eat('-')) return -unary();
    return power_();
  }

  DElem power_() {
    DElem x = atom();
    if (!eat('^')) return x;
    const bool neg = eat('-');
    const long long e = integer();
    if (e > 100000) error("exponent too large");
    if (!neg) return power(x, static_cast<int>(e));
    return power(invert(x), static_cast<int>(e));
  }

  DElem atom() {
    skip();
    if (i_ >= s_.size()) error("unexpected end of input");
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) return DElem::constant(F_, F_.scalar(integer()));
    if (s_.compare(i_, 3, "inv") == 0) {
      i_ += 3;
      if (!eat('(')) error("'(' expected after inv");
      DElem x = expr();
      if (!eat(')')) error("')' expected");
      return invert(x);
    }
    if (c == 'O') {
      ++i_;
      if (!eat('(') || !eat('n')) error("'O(n^k)' expected");
      int k = 1;
      if (eat('^')) {
        const bool neg = eat('-');
        k = static_cast<int>(integer());
        if (neg) k = -k;
      }
      if (!eat(')')) error("')' expected");
      return DElem::zero(F_, k);
    }
    if (c == '(') {
      ++i_;
      DElem x = expr();
      if (!eat(')')) error("')' expected");
      return x;
    }
    ++i_;
    switch (c) {
      case 'n': return DElem::nu_power(F_, 1);
      case 'p': return DElem::pi_power(F_, 1);
      case 'g': return DElem::constant(F_, F_.generator());
      case 't': {
        const long long k = integer();
        if (k >= F_.size()) error("field code out of range");
        return DElem::constant(F_, static_cast<Fql>(k));
      }
      default: --i_; error("unknown symbol");
    }
  }
};

}  // namespace

DElem parse_elem(const FieldTower& F, const std::string& text, int prec) {
  DElem x = Parser(F, text, prec).run();
  return prec >= kExact ? x : x.with_precision(std::min(prec, x.prec()));
}

std::string format_elem(const DElem& x) {
  std::string out;
  if (!x.is_zero())
    for (int e = x.lo(); e < x.hi(); ++e) {
      const Fql c = x.coeff(e);
      if (c == 0) continue;
      std::string t;
      if (e != 0) t = e == 1 ? "n" : "n^" + std::to_string(e);
      if (c != 1 || e == 0) t += (t.empty() ? "" : "*") + (c == 1 ? std::string("1") : "t" + std::to_string(c));
      out += (out.empty() ? "" : " + ") + t;
    }
  if (out.empty()) out = "0";
  if (!x.exact()) out += " + O(n^" + std::to_string(x.prec()) + ")";
  return out;
}

}  // namespace sl1d
