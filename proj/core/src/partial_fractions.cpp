#include "parakov/partial_fractions.hpp"

#include <algorithm>

#include "parakov/errors.hpp"
#include "parakov/laurent.hpp"

namespace parakov {

namespace {

// Roots of a squarefree polynomial, extending the tower for quadratics.
void squarefree_roots(const ZPoly& g, std::vector<ParamElem>& out) {
  const FieldPtr& fld = g.field();
  if (g.deg() <= 0) return;
  if (g.deg() == 1) {
    out.push_back(-(g.coeff(0) * g.coeff(1).inverse()));
    return;
  }
  if (g.deg() == 2) {
    ParamElem a = g.coeff(2), b = g.coeff(1), c = g.coeff(0);
    ParamElem disc = b * b - ParamElem::from_long(fld, 4) * a * c;
    if (disc.is_zero()) {
      // not reachable for squarefree input, kept defensive
      ParamElem root = -(b * (ParamElem::from_long(fld, 2) * a).inverse());
      out.push_back(root);
      out.push_back(root);
      return;
    }
    ParamElem s = adjoin_sqrt(fld, disc);
    ParamElem half = (ParamElem::from_long(fld, 2) * a).inverse();
    out.push_back((-b + s) * half);
    out.push_back((-b - s) * half);
    return;
  }
  // Integer-root peeling for higher degrees.
  ZPoly rem = g;
  bool peeled = true;
  while (rem.deg() >= 3 && peeled) {
    peeled = false;
    for (long k = 0; k <= 64 && !peeled; ++k) {
      for (long sgn : {1L, -1L}) {
        long cand = sgn * k;
        if (sgn < 0 && k == 0) continue;
        ParamElem at = ParamElem::from_long(fld, cand);
        if (rem.eval(at).is_zero()) {
          out.push_back(at);
          ZPoly lin(fld, {-at, ParamElem::one(fld)});
          rem = rem.divrem(lin).first;
          peeled = true;
          break;
        }
      }
    }
  }
  if (rem.deg() >= 3)
    fail(ErrorCode::unsupported_denominator,
         "cannot split denominator factor of degree " + std::to_string(rem.deg()));
  squarefree_roots(rem, out);
}

}  // namespace

std::vector<std::pair<ParamElem, int>> denominator_roots(const ZPoly& den) {
  std::vector<std::pair<ParamElem, int>> roots;
  for (const auto& [g, mult] : squarefree_decompose(den)) {
    std::vector<ParamElem> rs;
    squarefree_roots(g, rs);
    for (const auto& r : rs) roots.push_back({r, mult});
  }
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    return x.first.to_string() < y.first.to_string();
  });
  return roots;
}

PartialFractions partial_fractions(const RatFunc& f) {
  const FieldPtr& fld = f.field();
  PartialFractions pf;
  pf.poly_part = f.num().divrem(f.den()).first;
  for (const auto& [loc, m] : denominator_roots(f.den())) {
    // Shift to w = z - loc; f = ns / (w^m es) with es(0) != 0.
    std::vector<ParamElem> ns = f.num().taylor_shift(loc).coeffs();
    std::vector<ParamElem> es = f.den().taylor_shift(loc).coeffs();
    es.erase(es.begin(), es.begin() + m);
    std::vector<ParamElem> s = series_div(ns, es, m, fld);
    PoleTerm term;
    term.location = loc;
    term.order = m;
    term.principal.assign(m, ParamElem::zero(fld));
    for (int k = 0; k < m; ++k) term.principal[k] = s[m - 1 - k];
    while (!term.principal.empty() && term.principal.back().is_zero()) {
      term.principal.pop_back();
      --term.order;
    }
    if (term.order > 0) pf.poles.push_back(std::move(term));
  }
  return pf;
}

RatFunc recombine(const PartialFractions& pf, const FieldPtr& fld) {
  RatFunc acc = RatFunc::from_poly(pf.poly_part);
  for (const auto& p : pf.poles) {
    RatFunc lin(ZPoly(fld, {-p.location, ParamElem::one(fld)}), ZPoly::one(fld));
    for (size_t k = 0; k < p.principal.size(); ++k) {
      if (p.principal[k].is_zero()) continue;
      acc = acc + RatFunc::constant(p.principal[k]) / lin.pow(static_cast<long>(k) + 1);
    }
  }
  return acc;
}

}  // namespace parakov
