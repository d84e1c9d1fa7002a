#include "parakov/param_elem.hpp"

#include <cmath>

#include "parakov/errors.hpp"

namespace parakov {

MRat::MRat(MPoly n, MPoly d) {
  if (d.is_zero()) fail(ErrorCode::division_by_zero, "zero denominator");
  if (n.is_zero()) {
    num = MPoly(n.nvars());
    den = MPoly::constant(n.nvars(), Rat(1));
    return;
  }
  MPoly g = mpoly_gcd(n, d);
  if (!g.is_constant()) {
    n = *n.divide_exact(g);
    d = *d.divide_exact(g);
  }
  Rat lc = d.leading_coeff();
  num = n.mul_rat(Rat(1) / lc);
  den = d.mul_rat(Rat(1) / lc);
}

MRat MRat::from_poly(MPoly p) {
  MRat r;
  r.den = MPoly::constant(p.nvars(), Rat(1));
  r.num = std::move(p);
  return r;
}

MRat MRat::constant(int nvars, const Rat& c) {
  return from_poly(MPoly::constant(nvars, c));
}

MRat MRat::operator-() const {
  MRat r;
  r.num = -num;
  r.den = den;
  return r;
}

MRat MRat::operator+(const MRat& o) const {
  return MRat(num * o.den + o.num * den, den * o.den);
}

MRat MRat::operator-(const MRat& o) const {
  return MRat(num * o.den - o.num * den, den * o.den);
}

MRat MRat::operator*(const MRat& o) const { return MRat(num * o.num, den * o.den); }

MRat MRat::inverse() const {
  if (is_zero()) fail(ErrorCode::division_by_zero, "inverse of zero");
  return MRat(den, num);
}

MRat MRat::derivative(int var) const {
  return MRat(num.derivative(var) * den - num * den.derivative(var), den * den);
}

std::optional<Rat> MRat::as_rat() const {
  if (!num.is_constant() || !den.is_constant()) return std::nullopt;
  return num.constant_value();  // den is the constant 1 by normalization
}

std::string MRat::to_string(const std::vector<std::string>& names) const {
  if (den.is_constant()) return num.to_string(names);
  return "(" + num.to_string(names) + ")/(" + den.to_string(names) + ")";
}

namespace {

using Coords = std::vector<MRat>;

int level_of(size_t size) {
  int l = 0;
  while ((size_t{1} << l) < size) ++l;
  return l;
}

bool coords_zero(const Coords& a) {
  for (const auto& m : a)
    if (!m.is_zero()) return false;
  return true;
}

Coords coords_lift(const Coords& a, size_t size, int nvars) {
  Coords r = a;
  r.resize(size, MRat::constant(nvars, Rat(0)));
  return r;
}

Coords coords_add(const Coords& a, const Coords& b) {
  Coords r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Coords coords_neg(const Coords& a) {
  Coords r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Coords coords_mul(const Field& f, const Coords& a, const Coords& b);

Coords half_low(const Coords& a) { return Coords(a.begin(), a.begin() + a.size() / 2); }
Coords half_high(const Coords& a) { return Coords(a.begin() + a.size() / 2, a.end()); }

Coords coords_join(Coords lo, Coords hi) {
  for (auto& m : hi) lo.push_back(std::move(m));
  return lo;
}

Coords coords_mul(const Field& f, const Coords& a, const Coords& b) {
  if (a.size() == 1) return {a[0] * b[0]};
  int gen = level_of(a.size()) - 1;
  Coords a0 = half_low(a), a1 = half_high(a);
  Coords b0 = half_low(b), b1 = half_high(b);
  const Coords& rad = f.gen_radicand(gen);
  Coords lo = coords_add(coords_mul(f, a0, b0),
                         coords_mul(f, coords_mul(f, a1, b1), rad));
  Coords hi = coords_add(coords_mul(f, a0, b1), coords_mul(f, a1, b0));
  return coords_join(std::move(lo), std::move(hi));
}

Coords coords_inv(const Field& f, const Coords& a) {
  if (a.size() == 1) return {a[0].inverse()};
  Coords a0 = half_low(a), a1 = half_high(a);
  int gen = level_of(a.size()) - 1;
  if (coords_zero(a1)) {
    Coords lo = coords_inv(f, a0);
    Coords hi(a1.size(), MRat::constant(a[0].num.nvars(), Rat(0)));
    return coords_join(std::move(lo), std::move(hi));
  }
  const Coords& rad = f.gen_radicand(gen);
  // norm = a0^2 - a1^2 * rad lives one level down; nonzero because the
  // radicand is not a square at its level.
  Coords norm = coords_add(coords_mul(f, a0, a0),
                           coords_neg(coords_mul(f, coords_mul(f, a1, a1), rad)));
  if (coords_zero(norm))
    fail(ErrorCode::internal_error, "tower norm vanished; radicand was a square");
  Coords ninv = coords_inv(f, norm);
  Coords lo = coords_mul(f, a0, ninv);
  Coords hi = coords_neg(coords_mul(f, a1, ninv));
  return coords_join(std::move(lo), std::move(hi));
}

Coords coords_deriv(const Field& f, const Coords& a, int var) {
  if (a.size() == 1) return {a[0].derivative(var)};
  Coords a0 = half_low(a), a1 = half_high(a);
  int gen = level_of(a.size()) - 1;
  Coords d0 = coords_deriv(f, a0, var);
  Coords d1 = coords_deriv(f, a1, var);
  const Coords& rad = f.gen_radicand(gen);
  Coords drad = coords_deriv(f, rad, var);
  if (!coords_zero(drad)) {
    // d(s) = d(rad)/(2 rad) * s
    Coords dlog = coords_mul(f, drad, coords_inv(f, rad));
    for (auto& m : dlog) m = m * MRat::constant(m.num.nvars(), make_rat(1, 2));
    d1 = coords_add(d1, coords_mul(f, a1, dlog));
  }
  return coords_join(std::move(d0), std::move(d1));
}

std::optional<Coords> coords_sqrt(const Field& f, const Coords& a, int nvars);

// Canonical sign: first nonzero coordinate's numerator has positive leading
// rational coefficient.
Coords coords_canon_sign(Coords a) {
  for (const auto& m : a) {
    if (m.is_zero()) continue;
    if (sgn(m.num.leading_coeff()) < 0) return coords_neg(a);
    break;
  }
  return a;
}

std::optional<Coords> coords_sqrt(const Field& f, const Coords& a, int nvars) {
  if (a.size() == 1) {
    const MRat& x = a[0];
    if (x.is_zero()) return Coords{x};
    auto h = (x.num * x.den).sqrt_exact();
    if (!h) return std::nullopt;
    MRat root(*h, x.den);
    if (!(root * root == x)) return std::nullopt;
    return Coords{root};
  }
  Coords x0 = half_low(a), x1 = half_high(a);
  int gen = level_of(a.size()) - 1;
  const Coords& rad = f.gen_radicand(gen);
  auto lift1 = [&](std::optional<Coords> r, bool high) -> std::optional<Coords> {
    if (!r) return std::nullopt;
    Coords zero(r->size(), MRat::constant(nvars, Rat(0)));
    return high ? coords_join(zero, std::move(*r))
                : coords_join(std::move(*r), zero);
  };
  if (coords_zero(x1)) {
    if (auto y = coords_sqrt(f, x0, nvars)) return lift1(y, false);
    // (b*s)^2 = b^2 * rad
    Coords q = coords_mul(f, x0, coords_inv(f, rad));
    if (auto y = coords_sqrt(f, q, nvars)) return lift1(y, true);
    return std::nullopt;
  }
  // Need u, v one level down with u^2 + v^2 rad = x0 and 2uv = x1.
  Coords delta = coords_add(coords_mul(f, x0, x0),
                            coords_neg(coords_mul(f, coords_mul(f, x1, x1), rad)));
  auto d = coords_sqrt(f, delta, nvars);
  if (!d) return std::nullopt;
  MRat half = MRat::constant(nvars, make_rat(1, 2));
  for (int sign = 0; sign < 2; ++sign) {
    Coords cand = sign == 0 ? coords_add(x0, *d)
                            : coords_add(x0, coords_neg(*d));
    for (auto& m : cand) m = m * half;
    if (coords_zero(cand)) continue;
    auto u = coords_sqrt(f, cand, nvars);
    if (!u || coords_zero(*u)) continue;
    Coords two_u = *u;
    for (auto& m : two_u) m = m * MRat::constant(nvars, Rat(2));
    Coords v = coords_mul(f, x1, coords_inv(f, two_u));
    return coords_join(std::move(*u), std::move(v));
  }
  return std::nullopt;
}

// Searches products of generator radicands: any square in the tower is a
// base-level square times a subset of radicands, so dividing by each
// generator at most once (in increasing order) is exhaustive.
std::optional<ParamElem> tower_sqrt_from(const FieldPtr& fld, const ParamElem& x,
                                         int from_gen) {
  if (auto r = coords_sqrt(*fld, x.coords(), fld->nparams()))
    return ParamElem(fld, coords_canon_sign(std::move(*r)));
  for (int g = from_gen; g < fld->ngens(); ++g) {
    ParamElem gen_rad(fld, coords_lift(fld->gen_radicand(g), size_t{1} << g,
                                       fld->nparams()));
    auto q = tower_sqrt_from(fld, x / gen_rad, g + 1);
    if (!q) continue;
    std::vector<MRat> s_coords(size_t{1} << (g + 1),
                               MRat::constant(fld->nparams(), Rat(0)));
    s_coords[size_t{1} << g] = MRat::constant(fld->nparams(), Rat(1));
    ParamElem root = *q * ParamElem(fld, std::move(s_coords));
    return ParamElem(fld, coords_canon_sign(root.coords()));
  }
  return std::nullopt;
}

}  // namespace

Field::Field(std::vector<std::string> param_names) : params_(std::move(param_names)) {}

ParamElem::ParamElem(FieldPtr fld, std::vector<MRat> coords)
    : fld_(std::move(fld)), c_(std::move(coords)) {
  trim();
}

void ParamElem::trim() {
  while (c_.size() > 1) {
    bool top_zero = true;
    for (size_t i = c_.size() / 2; i < c_.size(); ++i)
      if (!c_[i].is_zero()) {
        top_zero = false;
        break;
      }
    if (!top_zero) break;
    c_.resize(c_.size() / 2);
  }
}

int ParamElem::level() const { return level_of(c_.size()); }

ParamElem ParamElem::zero(const FieldPtr& f) {
  return ParamElem(f, {MRat::constant(f->nparams(), Rat(0))});
}

ParamElem ParamElem::one(const FieldPtr& f) {
  return ParamElem(f, {MRat::constant(f->nparams(), Rat(1))});
}

ParamElem ParamElem::from_rat(const FieldPtr& f, const Rat& c) {
  return ParamElem(f, {MRat::constant(f->nparams(), c)});
}

ParamElem ParamElem::from_long(const FieldPtr& f, long v) {
  return from_rat(f, Rat(v));
}

ParamElem ParamElem::param(const FieldPtr& f, int index) {
  return ParamElem(f, {MRat::from_poly(MPoly::variable(f->nparams(), index))});
}

ParamElem ParamElem::from_mrat(const FieldPtr& f, MRat m) {
  return ParamElem(f, {std::move(m)});
}

bool ParamElem::is_zero() const { return coords_zero(c_); }

bool ParamElem::operator==(const ParamElem& o) const {
  if (fld_.get() != o.fld_.get())
    fail(ErrorCode::internal_error, "comparing elements of different fields");
  size_t n = std::max(c_.size(), o.c_.size());
  Coords a = coords_lift(c_, n, fld_->nparams());
  Coords b = coords_lift(o.c_, n, fld_->nparams());
  return a == b;
}

ParamElem ParamElem::operator-() const { return ParamElem(fld_, coords_neg(c_)); }

ParamElem ParamElem::operator+(const ParamElem& o) const {
  size_t n = std::max(c_.size(), o.c_.size());
  return ParamElem(fld_, coords_add(coords_lift(c_, n, fld_->nparams()),
                                    coords_lift(o.c_, n, fld_->nparams())));
}

ParamElem ParamElem::operator-(const ParamElem& o) const { return *this + (-o); }

ParamElem ParamElem::operator*(const ParamElem& o) const {
  size_t n = std::max(c_.size(), o.c_.size());
  return ParamElem(fld_, coords_mul(*fld_, coords_lift(c_, n, fld_->nparams()),
                                    coords_lift(o.c_, n, fld_->nparams())));
}

ParamElem ParamElem::operator/(const ParamElem& o) const { return *this * o.inverse(); }

ParamElem ParamElem::inverse() const {
  if (is_zero()) fail(ErrorCode::division_by_zero, "inverse of zero");
  return ParamElem(fld_, coords_inv(*fld_, c_));
}

ParamElem ParamElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  ParamElem r = one(fld_);
  ParamElem base = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u > 0) {
    if (u & 1ul) r = r * base;
    base = base * base;
    u >>= 1ul;
  }
  return r;
}

ParamElem ParamElem::derivative(int var) const {
  return ParamElem(fld_, coords_deriv(*fld_, c_, var));
}

std::optional<Rat> ParamElem::as_rat() const {
  if (c_.size() != 1) return std::nullopt;
  return c_[0].as_rat();
}

bool ParamElem::is_base() const { return c_.size() == 1; }

const MRat& ParamElem::base_mrat() const {
  if (!is_base()) fail(ErrorCode::internal_error, "base_mrat on tower element");
  return c_[0];
}

std::optional<ParamElem> ParamElem::sqrt_in_tower() const {
  if (is_zero()) return ParamElem::zero(fld_);
  return tower_sqrt_from(fld_, *this, 0);
}

std::string ParamElem::to_string() const {
  const auto& names = fld_->param_names();
  std::vector<std::string> parts;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    std::string gens;
    for (int b = 0; (size_t{1} << b) <= j; ++b) {
      if (j & (size_t{1} << b)) {
        if (!gens.empty()) gens += "*";
        gens += fld_->gen_display(b);
      }
    }
    std::string coord = c_[j].to_string(names);
    if (gens.empty()) {
      parts.push_back(coord);
    } else if (coord == "1") {
      parts.push_back(gens);
    } else if (coord == "-1") {
      parts.push_back("-" + gens);
    } else {
      parts.push_back("(" + coord + ")*" + gens);
    }
  }
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) {
    if (parts[i][0] == '-')
      out += " - " + parts[i].substr(1);
    else
      out += " + " + parts[i];
  }
  return out;
}

ParamElem adjoin_sqrt(const FieldPtr& f, const ParamElem& radicand) {
  if (radicand.is_zero())
    fail(ErrorCode::unsupported_radicand, "sqrt of zero radicand");
  if (auto s = radicand.sqrt_in_tower()) return *s;
  int g = f->ngens();
  Field::Gen gen;
  gen.radicand = coords_lift(radicand.coords(), size_t{1} << g, f->nparams());
  gen.display = "sqrt(" + radicand.to_string() + ")";
  f->gens_.push_back(std::move(gen));
  std::vector<MRat> s_coords(size_t{1} << (g + 1),
                             MRat::constant(f->nparams(), Rat(0)));
  s_coords[size_t{1} << g] = MRat::constant(f->nparams(), Rat(1));
  return ParamElem(f, std::move(s_coords));
}

}  // namespace parakov
