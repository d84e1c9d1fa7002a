#include "parakov/laurent.hpp"

#include <algorithm>

#include "parakov/errors.hpp"

namespace parakov {

std::vector<ParamElem> series_div(const std::vector<ParamElem>& num,
                                  const std::vector<ParamElem>& den, int nterms,
                                  const FieldPtr& fld) {
  if (den.empty() || den[0].is_zero())
    fail(ErrorCode::internal_error, "series division needs a unit constant term");
  std::vector<ParamElem> out(nterms, ParamElem::zero(fld));
  ParamElem d0inv = den[0].inverse();
  for (int k = 0; k < nterms; ++k) {
    ParamElem acc =
        k < static_cast<int>(num.size()) ? num[k] : ParamElem::zero(fld);
    for (int i = 1; i <= k && i < static_cast<int>(den.size()); ++i)
      acc = acc - den[i] * out[k - i];
    out[k] = acc * d0inv;
  }
  return out;
}

namespace {

int trailing_valuation(const std::vector<ParamElem>& c) {
  for (size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) return static_cast<int>(i);
  return -1;
}

}  // namespace

std::vector<ParamElem> laurent_at(const RatFunc& f, const ParamElem& alpha,
                                  int k_lo, int k_hi) {
  const FieldPtr& fld = f.field();
  int width = k_hi - k_lo + 1;
  std::vector<ParamElem> out(width, ParamElem::zero(fld));
  if (f.is_zero() || width <= 0) return out;
  std::vector<ParamElem> ns = f.num().taylor_shift(alpha).coeffs();
  std::vector<ParamElem> ds = f.den().taylor_shift(alpha).coeffs();
  int vn = trailing_valuation(ns);
  int vd = trailing_valuation(ds);
  ns.erase(ns.begin(), ns.begin() + vn);
  ds.erase(ds.begin(), ds.begin() + vd);
  int val = vn - vd;  // f = w^val * (ns/ds), ds[0] != 0
  if (k_hi < val) return out;
  std::vector<ParamElem> s = series_div(ns, ds, k_hi - val + 1, fld);
  for (int k = std::max(k_lo, val); k <= k_hi; ++k) out[k - k_lo] = s[k - val];
  return out;
}

std::vector<ParamElem> laurent_at_infinity(const RatFunc& f, int k_lo, int k_hi) {
  const FieldPtr& fld = f.field();
  int width = k_hi - k_lo + 1;
  std::vector<ParamElem> out(width, ParamElem::zero(fld));
  if (f.is_zero() || width <= 0) return out;
  std::vector<ParamElem> ns = f.num().coeffs();
  std::vector<ParamElem> ds = f.den().coeffs();
  std::reverse(ns.begin(), ns.end());
  std::reverse(ds.begin(), ds.end());
  // f(1/w) = w^(deg den - deg num) rev(num)/rev(den), rev(den)[0] = lc != 0.
  int shift = f.den().deg() - f.num().deg();
  int top = f.num().deg() - f.den().deg();  // highest power of z present
  if (k_lo > top) return out;
  int need = -k_lo - shift + 1;  // series index of z^(k_lo)
  std::vector<ParamElem> s = series_div(ns, ds, need, fld);
  for (int k = k_lo; k <= std::min(k_hi, top); ++k) {
    int j = -k - shift;
    if (j >= 0) out[k - k_lo] = s[j];
  }
  return out;
}

}  // namespace parakov
