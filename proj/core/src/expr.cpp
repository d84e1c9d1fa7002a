#include "parakov/expr.hpp"

#include <cctype>

#include "parakov/errors.hpp"

namespace parakov {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const FieldPtr& fld) : s_(text), fld_(fld) {}

  RatFunc parse() {
    RatFunc e = expr();
    skip_ws();
    if (pos_ != s_.size()) err("unexpected trailing input");
    return e;
  }

 private:
  const std::string& s_;
  FieldPtr fld_;
  size_t pos_ = 0;
  int sqrt_depth_ = 0;

  [[noreturn]] void err(const std::string& msg) {
    fail(ErrorCode::parse_error,
         "parse error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  RatFunc expr() {
    RatFunc acc = term();
    while (true) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    while (true) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        RatFunc d = unary();
        if (d.is_zero()) err("division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    while (eat('^')) {
      bool neg = eat('-');
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        err("expected integer exponent");
      long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + (s_[pos_] - '0');
        if (e > 4096) err("exponent too large");
        ++pos_;
      }
      if (neg && base.is_zero()) err("zero to a negative power");
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  RatFunc atom() {
    skip_ws();
    if (pos_ >= s_.size()) err("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(s_.substr(start, pos_ - start));
      return RatFunc::constant(ParamElem::from_rat(fld_, Rat(v)));
    }
    if (c == '(') {
      ++pos_;
      RatFunc e = expr();
      if (!eat(')')) err("expected ')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "sqrt") {
        if (!eat('(')) err("expected '(' after sqrt");
        if (++sqrt_depth_ > 8) {
          fail(ErrorCode::deep_radical, "radical nesting deeper than 8");
        }
        RatFunc arg = expr();
        --sqrt_depth_;
        if (!eat(')')) err("expected ')'");
        if (!arg.is_constant()) err("sqrt argument must be z-free");
        if (arg.is_zero()) return RatFunc::zero(fld_);
        return RatFunc::constant(adjoin_sqrt(fld_, arg.constant_value()));
      }
      if (name == "z") return RatFunc::z(fld_);
      const auto& params = fld_->param_names();
      for (size_t i = 0; i < params.size(); ++i)
        if (params[i] == name)
          return RatFunc::constant(ParamElem::param(fld_, static_cast<int>(i)));
      pos_ = start;
      err("unknown name '" + name + "'");
    }
    err(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

RatFunc parse_expr(const std::string& text, const FieldPtr& fld) {
  Parser p(text, fld);
  return p.parse();
}

}  // namespace parakov
