#include "parakov/lindiffop.hpp"

#include <algorithm>
#include <map>

#include "parakov/errors.hpp"
#include "parakov/laurent.hpp"
#include "parakov/partial_fractions.hpp"

namespace parakov {

LinDiffOp::LinDiffOp(std::vector<RatFunc> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) fail(ErrorCode::internal_error, "empty operator");
}

LinDiffOp LinDiffOp::schrodinger(const RatFunc& r) {
  const FieldPtr& f = r.field();
  return LinDiffOp({-r, RatFunc::zero(f), RatFunc::one(f)});
}

LinDiffOp LinDiffOp::variational(const RatFunc& r) {
  const FieldPtr& f = r.field();
  RatFunc half = RatFunc::constant(ParamElem::from_rat(f, make_rat(1, 2)));
  RatFunc two = RatFunc::constant(ParamElem::from_long(f, 2));
  return LinDiffOp({-r.derivative_z(), -(two * r), RatFunc::zero(f), half});
}

RatFunc LinDiffOp::apply(const RatFunc& y) const {
  RatFunc acc = RatFunc::zero(field());
  RatFunc d = y;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) acc = acc + coeffs_[i] * d;
    if (i + 1 < coeffs_.size()) d = d.derivative_z();
  }
  return acc;
}

RatFunc to_normal_form(const RatFunc& p, const RatFunc& q) {
  const FieldPtr& f = p.field();
  RatFunc quarter = RatFunc::constant(ParamElem::from_rat(f, make_rat(1, 4)));
  RatFunc half = RatFunc::constant(ParamElem::from_rat(f, make_rat(1, 2)));
  return quarter * p * p + half * p.derivative_z() - q;
}

Singularities singularities(const RatFunc& r) {
  Singularities s;
  if (r.is_zero()) {
    s.infinity_order = kOrderAtInfinityOfZero;
    return s;
  }
  s.poles = denominator_roots(r.den());
  s.infinity_order = r.order_at_infinity();
  return s;
}

int order_drop_at(const LinDiffOp& L, const ParamElem& alpha) {
  int best = 0;
  bool any = false;
  for (int i = 0; i <= L.order(); ++i) {
    const RatFunc& c = L.coeff(i);
    if (c.is_zero()) continue;
    int v = c.order_at(alpha) - i;
    if (!any || v < best) best = v;
    any = true;
  }
  return best;
}

int growth_shift_at_infinity(const LinDiffOp& L) {
  int best = 0;
  bool any = false;
  for (int i = 0; i <= L.order(); ++i) {
    const RatFunc& c = L.coeff(i);
    if (c.is_zero()) continue;
    int v = -c.order_at_infinity() - i;
    if (!any || v > best) best = v;
    any = true;
  }
  return best;
}

namespace {

// Falling factorial x(x-1)...(x-i+1) with x = sign * nu, as a poly in nu.
ZPoly falling_factorial(const FieldPtr& f, int i, int sign) {
  ZPoly acc = ZPoly::one(f);
  for (int l = 0; l < i; ++l) {
    // factor: sign*nu - l
    ZPoly lin(f, {ParamElem::from_long(f, -l), ParamElem::from_long(f, sign)});
    acc = acc * lin;
  }
  return acc;
}

// Integer roots of a nonzero rational-coefficient polynomial given as exact
// rationals: clear denominators, use divisors of the trailing coefficient.
std::vector<long> integer_roots_rational(const std::vector<Rat>& coeffs) {
  std::vector<long> out;
  int n = static_cast<int>(coeffs.size()) - 1;
  while (n >= 0 && coeffs[n] == 0) --n;
  if (n <= 0) return out;
  mpz_class lcm(1);
  for (int i = 0; i <= n; ++i) {
    mpz_class d = coeffs[i].get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    lcm = lcm / g * d;
  }
  std::vector<mpz_class> ic(n + 1);
  for (int i = 0; i <= n; ++i) {
    Rat scaled = coeffs[i] * Rat(lcm);
    ic[i] = scaled.get_num();
  }
  int v = 0;
  while (v <= n && ic[v] == 0) ++v;
  if (v > 0) out.push_back(0);
  if (v > n) return out;
  mpz_class a0 = abs(ic[v]);
  auto eval_at = [&](long k) {
    mpz_class acc = 0;
    for (int i = n; i >= v; --i) acc = acc * k + ic[i];
    return acc == 0;
  };
  // Divisor enumeration by trial division; indicial constants stay small in
  // practice, fall back to a bounded scan otherwise.
  std::vector<mpz_class> divs;
  if (a0 <= 1000000000000L) {
    long a = a0.get_si();
    for (long d = 1; static_cast<long long>(d) * d <= a; ++d) {
      if (a % d == 0) {
        divs.push_back(d);
        divs.push_back(a / d);
      }
    }
  } else {
    for (long d = 1; d <= 100000; ++d)
      if (mpz_divisible_ui_p(a0.get_mpz_t(), d)) divs.push_back(d);
  }
  for (const auto& d : divs) {
    if (!d.fits_slong_p()) continue;
    long k = d.get_si();
    if (eval_at(k)) out.push_back(k);
    if (eval_at(-k)) out.push_back(-k);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Indicial finish_indicial(ZPoly poly) {
  Indicial ind;
  ind.poly = std::move(poly);
  const FieldPtr& fld = ind.poly.field();
  if (ind.poly.is_zero()) {
    ind.diagnostics.push_back("indicial polynomial vanished identically");
    return ind;
  }
  // Project to a nonzero rational-coefficient polynomial via evaluation of
  // one tower coordinate at a sample point; every exact rational root of the
  // indicial polynomial survives the projection, candidates are re-verified.
  int nparams = fld->nparams();
  size_t maxcoords = 1;
  for (int k = 0; k <= ind.poly.deg(); ++k)
    maxcoords = std::max(maxcoords, ind.poly.coeff(k).coords().size());
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<Rat> point(nparams);
    for (int i = 0; i < nparams; ++i)
      point[i] = make_rat(3 + 2 * i + attempt, 1 + (attempt % 3));
    bool ok = true;
    std::vector<std::vector<Rat>> proj(maxcoords,
                                       std::vector<Rat>(ind.poly.deg() + 1, 0));
    for (int k = 0; k <= ind.poly.deg() && ok; ++k) {
      ParamElem ck = ind.poly.coeff(k);
      const auto& coords = ck.coords();
      for (size_t j = 0; j < coords.size() && ok; ++j) {
        Rat dv = coords[j].den.eval(point);
        if (dv == 0) {
          ok = false;
          break;
        }
        proj[j][k] = coords[j].num.eval(point) / dv;
      }
    }
    if (!ok) continue;
    for (size_t j = 0; j < maxcoords; ++j) {
      bool nonzero = false;
      for (const Rat& c : proj[j])
        if (c != 0) nonzero = true;
      if (!nonzero) continue;
      for (long cand : integer_roots_rational(proj[j])) {
        if (ind.poly.eval(ParamElem::from_long(fld, cand)).is_zero())
          ind.integer_roots.push_back(cand);
      }
      std::sort(ind.integer_roots.begin(), ind.integer_roots.end());
      ind.integer_roots.erase(
          std::unique(ind.integer_roots.begin(), ind.integer_roots.end()),
          ind.integer_roots.end());
      if (static_cast<int>(ind.integer_roots.size()) < ind.poly.deg())
        ind.diagnostics.push_back(
            "indicial polynomial (in the exponent nu, written z) " +
            ind.poly.to_string() +
            " has parameter-dependent or non-integer roots; integer root list "
            "assumes generic parameter values");
      return ind;
    }
  }
  fail(ErrorCode::internal_error, "could not project indicial polynomial");
}

}  // namespace

Indicial indicial_at(const LinDiffOp& L, const ParamElem& alpha) {
  const FieldPtr& fld = L.field();
  int mu = order_drop_at(L, alpha);
  ZPoly poly = ZPoly::zero(fld);
  for (int i = 0; i <= L.order(); ++i) {
    const RatFunc& c = L.coeff(i);
    if (c.is_zero()) continue;
    int m = c.order_at(alpha);
    if (m - i != mu) continue;
    ParamElem lead = laurent_at(c, alpha, m, m)[0];
    poly = poly + falling_factorial(fld, i, -1).mul_elem(lead);
  }
  return finish_indicial(std::move(poly));
}

Indicial indicial_at_infinity(const LinDiffOp& L) {
  const FieldPtr& fld = L.field();
  int mu = growth_shift_at_infinity(L);
  ZPoly poly = ZPoly::zero(fld);
  for (int i = 0; i <= L.order(); ++i) {
    const RatFunc& c = L.coeff(i);
    if (c.is_zero()) continue;
    int d = -c.order_at_infinity();
    if (d - i != mu) continue;
    ParamElem lead = laurent_at_infinity(c, d, d)[0];
    poly = poly + falling_factorial(fld, i, 1).mul_elem(lead);
  }
  return finish_indicial(std::move(poly));
}

}  // namespace parakov
