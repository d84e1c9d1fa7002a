#include "parakov/zpoly.hpp"

#include "parakov/errors.hpp"

namespace parakov {

ZPoly::ZPoly(FieldPtr fld, std::vector<ParamElem> coeffs)
    : fld_(std::move(fld)), c_(std::move(coeffs)) {
  trim();
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ZPoly ZPoly::zero(const FieldPtr& f) { return ZPoly(f, {}); }

ZPoly ZPoly::one(const FieldPtr& f) { return ZPoly(f, {ParamElem::one(f)}); }

ZPoly ZPoly::z(const FieldPtr& f) {
  return ZPoly(f, {ParamElem::zero(f), ParamElem::one(f)});
}

ZPoly ZPoly::constant(ParamElem c) {
  FieldPtr f = c.field();
  return ZPoly(f, {std::move(c)});
}

ZPoly ZPoly::monomial(ParamElem c, int deg) {
  FieldPtr f = c.field();
  std::vector<ParamElem> cs(static_cast<size_t>(deg) + 1, ParamElem::zero(f));
  cs[deg] = std::move(c);
  return ZPoly(f, std::move(cs));
}

ParamElem ZPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return ParamElem::zero(fld_);
  return c_[k];
}

const ParamElem& ZPoly::lc() const {
  if (c_.empty()) fail(ErrorCode::internal_error, "lc of zero polynomial");
  return c_.back();
}

bool ZPoly::operator==(const ZPoly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  const FieldPtr& f = fld_ ? fld_ : o.fld_;
  std::vector<ParamElem> cs(std::max(c_.size(), o.c_.size()), ParamElem::zero(f));
  for (size_t i = 0; i < c_.size(); ++i) cs[i] = cs[i] + c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) cs[i] = cs[i] + o.c_[i];
  return ZPoly(f, std::move(cs));
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator*(const ZPoly& o) const {
  const FieldPtr& f = fld_ ? fld_ : o.fld_;
  if (is_zero() || o.is_zero()) return ZPoly::zero(f);
  std::vector<ParamElem> cs(c_.size() + o.c_.size() - 1, ParamElem::zero(f));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      cs[i + j] = cs[i + j] + c_[i] * o.c_[j];
    }
  }
  return ZPoly(f, std::move(cs));
}

ZPoly ZPoly::mul_elem(const ParamElem& c) const {
  ZPoly r = *this;
  for (auto& k : r.c_) k = k * c;
  r.trim();
  return r;
}

ZPoly ZPoly::pow(unsigned e) const {
  ZPoly r = ZPoly::one(fld_);
  ZPoly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

std::pair<ZPoly, ZPoly> ZPoly::divrem(const ZPoly& d) const {
  if (d.is_zero()) fail(ErrorCode::division_by_zero, "polynomial division by zero");
  ZPoly rem = *this;
  std::vector<ParamElem> quo(
      std::max<size_t>(1, c_.size() > d.c_.size() ? c_.size() - d.c_.size() + 1 : 1),
      ParamElem::zero(fld_));
  ParamElem dinv = d.lc().inverse();
  while (!rem.is_zero() && rem.deg() >= d.deg()) {
    int k = rem.deg() - d.deg();
    ParamElem q = rem.lc() * dinv;
    quo[k] = quo[k] + q;
    rem = rem - ZPoly::monomial(q, k) * d;
  }
  return {ZPoly(fld_, std::move(quo)), rem};
}

ZPoly ZPoly::derivative_z() const {
  if (c_.size() <= 1) return ZPoly::zero(fld_);
  std::vector<ParamElem> cs(c_.size() - 1, ParamElem::zero(fld_));
  for (size_t i = 1; i < c_.size(); ++i)
    cs[i - 1] = c_[i] * ParamElem::from_long(fld_, static_cast<long>(i));
  return ZPoly(fld_, std::move(cs));
}

ZPoly ZPoly::derivative_t(int var) const {
  std::vector<ParamElem> cs = c_;
  for (auto& c : cs) c = c.derivative(var);
  return ZPoly(fld_, std::move(cs));
}

ParamElem ZPoly::eval(const ParamElem& at) const {
  ParamElem acc = ParamElem::zero(fld_);
  for (int i = deg(); i >= 0; --i) acc = acc * at + c_[i];
  return acc;
}

ZPoly ZPoly::taylor_shift(const ParamElem& shift) const {
  // Horner composition with (z + shift).
  ZPoly acc = ZPoly::zero(fld_);
  ZPoly lin(fld_, {shift, ParamElem::one(fld_)});
  for (int i = deg(); i >= 0; --i)
    acc = acc * lin + ZPoly::constant(c_[i]);
  return acc;
}

ZPoly ZPoly::monic() const {
  if (is_zero()) return *this;
  return mul_elem(lc().inverse());
}

std::string ZPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = deg(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    std::string cs = c_[k].to_string();
    bool simple = cs.find(' ') == std::string::npos;
    bool neg = simple && !cs.empty() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    std::string zs = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    std::string body;
    if (k == 0) {
      body = simple ? mag : "(" + cs + ")";
      if (!simple) neg = false;
    } else if (simple && mag == "1") {
      body = zs;
    } else if (simple) {
      body = mag + "*" + zs;
    } else {
      body = "(" + cs + ")*" + zs;
      neg = false;
    }
    if (first) {
      out += (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

namespace {

bool all_base(const ZPoly& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_base()) return false;
  return true;
}

// Denominator-cleared image in Q[t..., z], z as the extra top variable. The
// t-only content this introduces is a unit of K(z) and washes out when the
// result is made monic.
MPoly clear_to_mpoly(const ZPoly& p, int nvars) {
  MPoly den = MPoly::constant(nvars, Rat(1));
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    const MPoly& d = c.base_mrat().den;
    den = *(den * d).divide_exact(mpoly_gcd(den, d));
  }
  MPoly out(nvars + 1);
  for (int k = 0; k <= p.deg(); ++k) {
    ParamElem ck = p.coeff(k);
    if (ck.is_zero()) continue;
    const MRat& m = ck.base_mrat();
    MPoly scaled = *den.divide_exact(m.den) * m.num;
    for (const auto& [mono, c] : scaled.terms()) {
      Mono mm = mono;
      mm.push_back(static_cast<unsigned>(k));
      out.add_term(mm, c);
    }
  }
  out.normalize_sorted();
  return out;
}

ZPoly zpoly_from_mpoly(const MPoly& p, const FieldPtr& fld, int nvars) {
  std::vector<MPoly> cs;
  for (const auto& [mono, c] : p.terms()) {
    int k = static_cast<int>(mono[static_cast<size_t>(nvars)]);
    if (static_cast<int>(cs.size()) <= k) cs.resize(k + 1, MPoly(nvars));
    Mono mm(mono.begin(), mono.end() - 1);
    cs[static_cast<size_t>(k)].add_term(mm, c);
  }
  std::vector<ParamElem> coeffs;
  for (auto& cp : cs) {
    cp.normalize_sorted();
    coeffs.push_back(ParamElem::from_mrat(fld, MRat::from_poly(cp)));
  }
  return ZPoly(fld, std::move(coeffs));
}

}  // namespace

ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
  if (!a.is_zero() && !b.is_zero() && all_base(a) && all_base(b)) {
    // Euclidean remainders over K(z) swell badly; the primitive PRS on the
    // cleared polynomials stays polynomial-sized.
    int nvars = a.field()->nparams();
    MPoly g = mpoly_gcd(clear_to_mpoly(a, nvars), clear_to_mpoly(b, nvars));
    return zpoly_from_mpoly(g, a.field(), nvars).monic();
  }
  while (!b.is_zero()) {
    ZPoly r = a.divrem(b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.is_zero() ? a : a.monic();
}

std::optional<ZPoly> zpoly_sqrt(const ZPoly& p) {
  const FieldPtr& f = p.field();
  if (p.is_zero()) return p;
  if (p.deg() % 2 != 0) return std::nullopt;
  int m = p.deg() / 2;
  auto lead = p.lc().sqrt_in_tower();
  if (!lead) return std::nullopt;
  std::vector<ParamElem> h(static_cast<size_t>(m) + 1, ParamElem::zero(f));
  h[m] = *lead;
  ParamElem inv2l = (*lead * ParamElem::from_long(f, 2)).inverse();
  for (int k = m - 1; k >= 0; --k) {
    ParamElem c = p.coeff(m + k);
    for (int i = k + 1; i <= m; ++i) {
      int j = m + k - i;
      if (j > m || j <= k) continue;
      c = c - h[i] * h[j];
    }
    h[k] = c * inv2l;
  }
  ZPoly cand(f, std::move(h));
  if (cand * cand == p) return cand;
  return std::nullopt;
}

std::vector<std::pair<ZPoly, int>> squarefree_decompose(const ZPoly& p) {
  std::vector<std::pair<ZPoly, int>> out;
  if (p.deg() <= 0) return out;
  ZPoly w = p.monic();
  ZPoly g = zpoly_gcd(w, w.derivative_z());
  ZPoly y;
  if (g.is_constant()) {
    out.push_back({w, 1});
    return out;
  }
  ZPoly c = w.divrem(g).first;  // square-free part accumulator
  y = w.derivative_z().divrem(g).first;
  int i = 1;
  while (c.deg() > 0) {
    ZPoly zz = y - c.derivative_z();
    ZPoly gi = zpoly_gcd(c, zz);
    if (gi.deg() > 0) out.push_back({gi, i});
    c = c.divrem(gi).first;
    y = zz.divrem(gi).first;
    ++i;
  }
  return out;
}

}  // namespace parakov
