#include "parakov/dspace.hpp"

#include <algorithm>

#include "parakov/errors.hpp"

namespace parakov {

namespace {

Rat rat_gcd(const Rat& a, const Rat& b) {
  mpz_class n;
  mpz_gcd(n.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  return Rat(n) / Rat(l);
}

}  // namespace

void canonical_scale(std::vector<ParamElem>& a, RatFunc& b) {
  if (a.empty() && b.is_zero()) return;
  const FieldPtr& fld = !a.empty() ? a.front().field() : b.field();
  int nvars = fld->nparams();
  std::vector<const MRat*> coords;
  for (const auto& ai : a)
    for (const auto& c : ai.coords()) coords.push_back(&c);
  for (const auto& c : b.num().coeffs())
    for (const auto& cc : c.coords()) coords.push_back(&cc);

  MPoly lcm = MPoly::constant(nvars, 1);
  MPoly gcd = MPoly::constant(nvars, 0);
  bool any = false;
  for (const MRat* c : coords) {
    if (c->is_zero()) continue;
    any = true;
    MPoly g = mpoly_gcd(lcm, c->den);
    auto q = lcm.divide_exact(g);
    lcm = (*q) * c->den;
    gcd = mpoly_gcd(gcd, c->num);
  }
  if (!any) return;
  MRat u(lcm, gcd);
  ParamElem scale = ParamElem::from_mrat(fld, u);
  for (auto& ai : a) ai = ai * scale;
  b = b * RatFunc::constant(scale);

  // rational content and leading sign
  Rat content(0);
  Rat lead(0);
  std::vector<Rat> rats;
  auto collect = [&](const ParamElem& e) {
    for (const auto& c : e.coords()) {
      if (c.is_zero()) continue;
      for (const auto& [mono, q] : c.num.terms()) {
        (void)mono;
        rats.push_back(q);
      }
      if (lead == 0) lead = c.num.leading_coeff() / c.den.leading_coeff();
    }
  };
  for (const auto& ai : a) collect(ai);
  for (const auto& c : b.num().coeffs()) collect(c);
  for (const auto& q : rats) content = content == 0 ? abs(q) : rat_gcd(content, abs(q));
  if (content == 0) return;
  Rat mult = 1 / content;
  if (lead < 0) mult = -mult;
  if (mult != 1) {
    ParamElem ms = ParamElem::from_rat(fld, mult);
    for (auto& ai : a) ai = ai * ms;
    b = b * RatFunc::constant(ms);
  }
}

DSpace integrability_space(const RatFunc& r) {
  const FieldPtr& fld = r.field();
  int n = fld->nparams();
  LinDiffOp L = LinDiffOp::variational(r);
  std::vector<RatFunc> rhs;
  for (int i = 0; i < n; ++i) rhs.push_back(-r.derivative_t(i));
  ParametricSolutions ps = parametric_rational_solutions(L, rhs);

  DSpace out;
  out.diagnostics = ps.diagnostics;
  out.kernel = ps.kernel;

  // echelon-reduce the a-parts, carrying the witnesses b along
  std::vector<DSpaceElement> rows;
  for (auto& e : ps.basis) rows.push_back({std::move(e.a), std::move(e.y)});
  size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    size_t pr = rank;
    while (pr < rows.size() && rows[pr].a[col].is_zero()) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[pr], rows[rank]);
    ParamElem inv = rows[rank].a[col].inverse();
    for (auto& c : rows[rank].a) c = c * inv;
    rows[rank].b = rows[rank].b * RatFunc::constant(inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i].a[col].is_zero()) continue;
      ParamElem f = rows[i].a[col];
      for (int j = 0; j < n; ++j)
        rows[i].a[j] = rows[i].a[j] - f * rows[rank].a[j];
      rows[i].b = rows[i].b - RatFunc::constant(f) * rows[rank].b;
    }
    ++rank;
  }
  for (size_t i = rank; i < rows.size(); ++i) {
    // a-part vanished after reduction; the leftover witness is kernel
    if (!rows[i].b.is_zero()) out.kernel.push_back(rows[i].b);
  }
  rows.resize(rank);
  for (auto& e : rows) canonical_scale(e.a, e.b);
  for (const auto& e : rows) out.certs.push_back(reconstruct_connection(r, e));
  out.basis = std::move(rows);
  if (out.basis.size() >= 2)
    out.diagnostics.push_back(
        "pairwise flatness between distinct basis directions is not checked; "
        "certificates cover each direction against the main derivation");
  return out;
}

ConnectionCertificate reconstruct_connection(const RatFunc& r, const DSpaceElement& e) {
  const FieldPtr& fld = r.field();
  RatFunc half = RatFunc::constant(ParamElem::from_rat(fld, make_rat(1, 2)));
  RatFunc b1 = e.b.derivative_z();
  RatFunc b2 = b1.derivative_z();
  ConnectionCertificate cert;
  cert.B[0][0] = -(half * b1);
  cert.B[0][1] = e.b;
  cert.B[1][0] = e.b * r - half * b2;
  cert.B[1][1] = half * b1;
  cert.zero_curvature = verify_zero_curvature(r, e.a, cert.B);
  return cert;
}

bool verify_zero_curvature(const RatFunc& r, const std::vector<ParamElem>& a,
                           const Connection& B) {
  const FieldPtr& fld = r.field();
  auto d_param = [&](const RatFunc& f) {
    RatFunc acc = RatFunc::zero(fld);
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      acc = acc + RatFunc::constant(a[i]) * f.derivative_t(static_cast<int>(i));
    }
    return acc;
  };
  Connection A;
  A[0][0] = RatFunc::zero(fld);
  A[0][1] = RatFunc::one(fld);
  A[1][0] = r;
  A[1][1] = RatFunc::zero(fld);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      RatFunc commut = RatFunc::zero(fld);
      for (int k = 0; k < 2; ++k)
        commut = commut + B[i][k] * A[k][j] - A[i][k] * B[k][j];
      RatFunc lhs = d_param(A[i][j]) - B[i][j].derivative_z() - commut;
      if (!lhs.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace parakov
