#include "parakov/ratfunc.hpp"

#include "parakov/errors.hpp"

namespace parakov {

RatFunc::RatFunc(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RatFunc::normalize() {
  if (den_.is_zero()) fail(ErrorCode::division_by_zero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = ZPoly::one(num_.field() ? num_.field() : den_.field());
    num_ = ZPoly::zero(den_.field());
    return;
  }
  ZPoly g = zpoly_gcd(num_, den_);
  if (g.deg() > 0) {
    num_ = num_.divrem(g).first;
    den_ = den_.divrem(g).first;
  }
  ParamElem linv = den_.lc().inverse();
  num_ = num_.mul_elem(linv);
  den_ = den_.mul_elem(linv);
}

RatFunc RatFunc::zero(const FieldPtr& f) { return RatFunc(ZPoly::zero(f), ZPoly::one(f)); }
RatFunc RatFunc::one(const FieldPtr& f) { return RatFunc(ZPoly::one(f), ZPoly::one(f)); }
RatFunc RatFunc::z(const FieldPtr& f) { return RatFunc(ZPoly::z(f), ZPoly::one(f)); }

RatFunc RatFunc::constant(const ParamElem& c) {
  return RatFunc(ZPoly::constant(c), ZPoly::one(c.field()));
}

RatFunc RatFunc::from_poly(const ZPoly& p) {
  return RatFunc(p, ZPoly::one(p.field()));
}

ParamElem RatFunc::constant_value() const {
  if (!is_constant()) fail(ErrorCode::internal_error, "constant_value of non-constant");
  return num_.coeff(0) * den_.coeff(0).inverse();
}

bool RatFunc::operator==(const RatFunc& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

RatFunc RatFunc::reduced(ZPoly num, ZPoly den) {
  RatFunc r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

namespace {
ZPoly exact_quot(const ZPoly& a, const ZPoly& b) { return a.divrem(b).first; }
}  // namespace

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

// Henrici addition: both operands are reduced, so only gcds of denominator
// parts are needed and the result comes out reduced.
RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  ZPoly g = zpoly_gcd(den_, o.den_);
  if (g.deg() <= 0)
    return reduced(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  ZPoly da = exact_quot(den_, g);
  ZPoly db = exact_quot(o.den_, g);
  ZPoly t = num_ * db + o.num_ * da;
  if (t.is_zero()) return RatFunc::zero(field());
  ZPoly h = zpoly_gcd(t, g);
  if (h.deg() > 0) {
    t = exact_quot(t, h);
    g = exact_quot(g, h);
  }
  return reduced(std::move(t), da * db * g);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

// cross-cancel against the opposite denominator, then the product is reduced
RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc::zero(field());
  ZPoly g1 = zpoly_gcd(num_, o.den_);
  ZPoly g2 = zpoly_gcd(o.num_, den_);
  ZPoly na = g1.deg() > 0 ? exact_quot(num_, g1) : num_;
  ZPoly nb = g2.deg() > 0 ? exact_quot(o.num_, g2) : o.num_;
  ZPoly da = g2.deg() > 0 ? exact_quot(den_, g2) : den_;
  ZPoly db = g1.deg() > 0 ? exact_quot(o.den_, g1) : o.den_;
  return reduced(na * nb, da * db);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) fail(ErrorCode::division_by_zero, "division by zero rational function");
  return *this * o.inverse();
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) fail(ErrorCode::division_by_zero, "inverse of zero");
  ParamElem linv = num_.lc().inverse();
  return reduced(den_.mul_elem(linv), num_.mul_elem(linv));
}

RatFunc RatFunc::pow(long e) const {
  if (e == 0) return RatFunc::one(field());
  RatFunc base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  RatFunc r = RatFunc::one(field());
  while (n > 0) {
    if (n & 1ul) r = r * base;
    base = base * base;
    n >>= 1ul;
  }
  return r;
}

// Quotient rule with the multiplicity drop factored out: for d' the
// z-derivative and g = gcd(d, d'), the fraction
//   (n' (d/g) - n (d'/g)) / (d (d/g))
// is already reduced, since every pole keeps exactly one extra order.
RatFunc RatFunc::derivative_z() const {
  if (is_zero() || is_poly()) return reduced(num_.derivative_z(), ZPoly::one(field()));
  ZPoly dp = den_.derivative_z();
  ZPoly g = zpoly_gcd(den_, dp);
  ZPoly d1 = g.deg() > 0 ? exact_quot(den_, g) : den_;
  ZPoly e = g.deg() > 0 ? exact_quot(dp, g) : dp;
  ZPoly n = num_.derivative_z() * d1 - num_ * e;
  if (n.is_zero()) return RatFunc::zero(field());
  return reduced(std::move(n), den_ * d1);
}

// same shrunken form, but a z-constant factor of den may differentiate to a
// multiple of itself, so reduce the result the slow way
RatFunc RatFunc::derivative_t(int var) const {
  if (is_zero() || is_poly()) return reduced(num_.derivative_t(var), ZPoly::one(field()));
  ZPoly dp = den_.derivative_t(var);
  if (dp.is_zero()) return RatFunc(num_.derivative_t(var), den_);
  ZPoly g = zpoly_gcd(den_, dp);
  ZPoly d1 = g.deg() > 0 ? exact_quot(den_, g) : den_;
  ZPoly e = g.deg() > 0 ? exact_quot(dp, g) : dp;
  return RatFunc(num_.derivative_t(var) * d1 - num_ * e, den_ * d1);
}

int RatFunc::order_at(const ParamElem& alpha) const {
  if (is_zero()) fail(ErrorCode::internal_error, "order_at of zero");
  auto mult = [&](const ZPoly& p) {
    int m = 0;
    ZPoly q = p;
    ZPoly lin(p.field(), {-alpha, ParamElem::one(p.field())});
    while (true) {
      auto [qu, re] = q.divrem(lin);
      if (!re.is_zero()) break;
      ++m;
      q = qu;
    }
    return m;
  };
  return mult(num_) - mult(den_);
}

int RatFunc::order_at_infinity() const {
  if (is_zero()) fail(ErrorCode::internal_error, "order_at_infinity of zero");
  return den_.deg() - num_.deg();
}

ParamElem RatFunc::eval(const ParamElem& at) const {
  ParamElem d = den_.eval(at);
  if (d.is_zero()) fail(ErrorCode::division_by_zero, "evaluation at a pole");
  return num_.eval(at) * d.inverse();
}

std::string RatFunc::to_string() const {
  if (is_poly()) return num_.to_string();
  std::string ns = num_.to_string();
  std::string ds = den_.to_string();
  auto fully_wrapped = [](const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
    int depth = 0;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0) return false;
    }
    return true;
  };
  auto wrap = [&](const std::string& s) {
    bool simple = s.find(' ') == std::string::npos && s.find('*') == std::string::npos &&
                  s.find('/') == std::string::npos;
    return simple || fully_wrapped(s) ? s : "(" + s + ")";
  };
  return wrap(ns) + "/" + wrap(ds);
}

}  // namespace parakov
