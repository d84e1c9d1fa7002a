#include "parakov/rational_solve.hpp"

#include <algorithm>

#include "parakov/errors.hpp"
#include "parakov/partial_fractions.hpp"

namespace parakov {

namespace {

ZPoly zpoly_lcm(const ZPoly& a, const ZPoly& b) {
  ZPoly g = zpoly_gcd(a, b);
  return (a.divrem(g).first * b).monic();
}

// Divide every coefficient and rhs by the leading coefficient so candidate
// poles of solutions show up as poles of the normalized data.
void make_monic(LinDiffOp& L, std::vector<RatFunc>& rhs_list) {
  const RatFunc& lc = L.coeff(L.order());
  if (lc.is_constant() && lc.constant_value() == ParamElem::one(lc.field())) return;
  std::vector<RatFunc> cs = L.coeffs();
  RatFunc inv = lc.inverse();
  for (auto& c : cs) c = c * inv;
  for (auto& r : rhs_list) r = r * inv;
  L = LinDiffOp(std::move(cs));
}

std::vector<ParamElem> collect_pole_locations(const LinDiffOp& L,
                                              const std::vector<RatFunc>& rhs_list) {
  std::vector<ParamElem> locs;
  auto add_from = [&](const RatFunc& f) {
    if (f.is_zero() || f.is_poly()) return;
    for (const auto& [loc, mult] : denominator_roots(f.den())) {
      (void)mult;
      bool seen = false;
      for (const auto& l : locs)
        if (l == loc) seen = true;
      if (!seen) locs.push_back(loc);
    }
  };
  for (const auto& c : L.coeffs()) add_from(c);
  for (const auto& r : rhs_list) add_from(r);
  std::sort(locs.begin(), locs.end(), [](const ParamElem& x, const ParamElem& y) {
    return x.to_string() < y.to_string();
  });
  return locs;
}

struct BuiltSystem {
  Mat A;
  Vec b;
  int ncols = 0;
};

// Rows match powers of z in the cleared identity
//   sum_k q_k L(z^k/D) - sum_i a_i rhs_i = inhom.
// Assembled entirely in polynomial arithmetic: with Q_0 = N and
// Q_{j+1} = Q_j' D - (j+1) D' Q_j, the j-th derivative of N/D equals
// Q_j / D^(j+1), so scaling the identity by lcm(coefficient and rhs
// denominators) * D^(order+1) clears every column. A common nonzero
// polynomial scale keeps the solution set.
BuiltSystem build_system(const LinDiffOp& L, const ZPoly& denom, int numdeg,
                         const std::vector<RatFunc>& acols, const RatFunc& inhom) {
  const FieldPtr& fld = L.field();
  int order = L.order();
  ZPoly common = ZPoly::one(fld);
  for (const auto& c : L.coeffs())
    if (!c.is_zero()) common = zpoly_lcm(common, c.den());
  common = common * denom.pow(static_cast<unsigned>(order + 1));
  for (const auto& rc : acols)
    if (!rc.is_zero()) common = zpoly_lcm(common, rc.den());
  if (!inhom.is_zero()) common = zpoly_lcm(common, inhom.den());

  // multiplier of Q_j in the cleared identity
  std::vector<ZPoly> mult;
  for (int j = 0; j <= order; ++j) {
    const RatFunc& cj = L.coeff(j);
    if (cj.is_zero()) {
      mult.push_back(ZPoly::zero(fld));
      continue;
    }
    ZPoly scale =
        common.divrem(cj.den() * denom.pow(static_cast<unsigned>(j + 1))).first;
    mult.push_back(cj.num() * scale);
  }
  ZPoly dprime = denom.derivative_z();

  std::vector<ZPoly> cleared;
  int maxdeg = 0;
  for (int k = 0; k <= numdeg; ++k) {
    ZPoly q = ZPoly::monomial(ParamElem::one(fld), k);
    ZPoly acc = ZPoly::zero(fld);
    for (int j = 0; j <= order; ++j) {
      if (!mult[j].is_zero()) acc = acc + mult[j] * q;
      if (j < order)
        q = q.derivative_z() * denom -
            q.mul_elem(ParamElem::from_long(fld, j + 1)) * dprime;
    }
    maxdeg = std::max(maxdeg, acc.deg());
    cleared.push_back(std::move(acc));
  }
  for (const auto& rc : acols) {
    ZPoly n = rc.is_zero() ? ZPoly::zero(fld)
                           : -(rc.num() * common.divrem(rc.den()).first);
    maxdeg = std::max(maxdeg, n.deg());
    cleared.push_back(std::move(n));
  }
  ZPoly rhs_poly = inhom.is_zero()
                       ? ZPoly::zero(fld)
                       : inhom.num() * common.divrem(inhom.den()).first;
  maxdeg = std::max(maxdeg, rhs_poly.deg());
  BuiltSystem sys;
  sys.ncols = static_cast<int>(cleared.size());
  // column order in the result: q columns first here; callers that want
  // a-colum pivot preference pass them reordered
  sys.A.assign(maxdeg + 1, Vec(cleared.size(), ParamElem::zero(fld)));
  sys.b.assign(maxdeg + 1, ParamElem::zero(fld));
  for (size_t j = 0; j < cleared.size(); ++j)
    for (int d = 0; d <= cleared[j].deg(); ++d) sys.A[d][j] = cleared[j].coeff(d);
  for (int d = 0; d <= rhs_poly.deg(); ++d) sys.b[d] = rhs_poly.coeff(d);
  return sys;
}

RatFunc assemble(const FieldPtr& fld, const ZPoly& denom, const Vec& q, int numdeg) {
  std::vector<ParamElem> cs(q.begin(), q.begin() + numdeg + 1);
  return RatFunc(ZPoly(fld, std::move(cs)), denom);
}

}  // namespace

AnsatzBounds solver_bounds(const LinDiffOp& L_in, const std::vector<RatFunc>& rhs_in) {
  LinDiffOp L = L_in;
  std::vector<RatFunc> rhs_list = rhs_in;
  make_monic(L, rhs_list);
  const FieldPtr& fld = L.field();
  AnsatzBounds out;
  out.denom = ZPoly::one(fld);
  for (const auto& alpha : collect_pole_locations(L, rhs_list)) {
    Indicial ind = indicial_at(L, alpha);
    for (const auto& d : ind.diagnostics) out.diagnostics.push_back(d);
    long B = 0;
    for (long nu : ind.integer_roots)
      if (nu > B) B = nu;
    int mu = order_drop_at(L, alpha);
    for (const auto& r : rhs_list) {
      if (r.is_zero()) continue;
      long forced = mu - r.order_at(alpha);
      if (forced > B) B = forced;
    }
    if (B > 0) {
      ZPoly lin(fld, {-alpha, ParamElem::one(fld)});
      out.denom = out.denom * lin.pow(static_cast<unsigned>(B));
    }
  }
  Indicial ind_inf = indicial_at_infinity(L);
  for (const auto& d : ind_inf.diagnostics) out.diagnostics.push_back(d);
  bool have_n = false;
  long N = 0;
  for (long nu : ind_inf.integer_roots) {
    if (!have_n || nu > N) N = nu;
    have_n = true;
  }
  int mu_inf = growth_shift_at_infinity(L);
  for (const auto& r : rhs_list) {
    if (r.is_zero()) continue;
    long forced = -r.order_at_infinity() - mu_inf;
    if (!have_n || forced > N) N = forced;
    have_n = true;
  }
  out.numdeg = have_n ? static_cast<int>(N) + out.denom.deg() : -1;
  if (out.numdeg < 0) out.numdeg = -1;
  return out;
}

int max_solver_bound(const LinDiffOp& L, const std::vector<RatFunc>& rhs_list) {
  AnsatzBounds b = solver_bounds(L, rhs_list);
  int best = b.numdeg;
  for (const auto& [g, m] : squarefree_decompose(b.denom)) {
    (void)g;
    best = std::max(best, m);
  }
  return best;
}

RationalSolutions rational_solutions(const LinDiffOp& L_in, const RatFunc& rhs_in) {
  LinDiffOp L = L_in;
  std::vector<RatFunc> rhs_list = {rhs_in};
  make_monic(L, rhs_list);
  const FieldPtr& fld = L.field();
  RatFunc rhs = rhs_list[0];
  AnsatzBounds bounds = solver_bounds(L, {rhs});
  RationalSolutions out;
  out.diagnostics = bounds.diagnostics;
  out.particular = RatFunc::zero(fld);
  if (bounds.numdeg < 0) {
    out.found_particular = rhs.is_zero();
    return out;
  }
  BuiltSystem sys = build_system(L, bounds.denom, bounds.numdeg, {}, rhs);
  LinearSolution sol = solve_linear(sys.A, sys.b, fld);
  out.found_particular = sol.consistent;
  if (sol.consistent && !rhs.is_zero())
    out.particular = assemble(fld, bounds.denom, sol.particular, bounds.numdeg);
  for (const auto& v : sol.nullspace) {
    RatFunc y = assemble(fld, bounds.denom, v, bounds.numdeg);
    if (!y.is_zero()) out.kernel.push_back(y);
  }
  return out;
}

ParametricSolutions parametric_rational_solutions(const LinDiffOp& L_in,
                                                  const std::vector<RatFunc>& rhs_in) {
  LinDiffOp L = L_in;
  std::vector<RatFunc> rhs_list = rhs_in;
  make_monic(L, rhs_list);
  const FieldPtr& fld = L.field();
  size_t m = rhs_list.size();
  AnsatzBounds bounds = solver_bounds(L, rhs_list);
  ParametricSolutions out;
  out.diagnostics = bounds.diagnostics;
  int numdeg = bounds.numdeg;
  BuiltSystem sys = build_system(L, bounds.denom, numdeg, rhs_list, RatFunc::zero(fld));
  // Reorder columns so the a-part is pivot-preferred: [a | q].
  size_t nq = static_cast<size_t>(numdeg + 1);
  Mat A(sys.A.size(), Vec(sys.ncols, ParamElem::zero(fld)));
  for (size_t r = 0; r < sys.A.size(); ++r) {
    for (size_t i = 0; i < m; ++i) A[r][i] = sys.A[r][nq + i];
    for (size_t k = 0; k < nq; ++k) A[r][m + k] = sys.A[r][k];
  }
  LinearSolution sol = solve_linear(std::move(A), Vec(sys.A.size(), ParamElem::zero(fld)), fld);
  for (const auto& v : sol.nullspace) {
    std::vector<ParamElem> a(v.begin(), v.begin() + m);
    Vec q(v.begin() + m, v.end());
    bool a_zero = true;
    for (const auto& ai : a)
      if (!ai.is_zero()) a_zero = false;
    RatFunc y = numdeg >= 0 ? assemble(fld, bounds.denom, q, numdeg)
                            : RatFunc::zero(fld);
    if (a_zero) {
      if (!y.is_zero()) out.kernel.push_back(y);
    } else {
      out.basis.push_back({std::move(a), y});
    }
  }
  return out;
}

RationalSolutions oracle_rational_solutions(const LinDiffOp& L, const RatFunc& rhs,
                                            int bound) {
  const FieldPtr& fld = L.field();
  std::vector<ZPoly> factors;
  auto add_factors = [&](const ZPoly& p) {
    if (p.deg() <= 0) return;
    for (const auto& [g, mult] : squarefree_decompose(p)) {
      (void)mult;
      bool seen = false;
      for (const auto& f : factors)
        if (f == g) seen = true;
      if (!seen) factors.push_back(g);
    }
  };
  for (const auto& c : L.coeffs()) {
    if (c.is_zero()) continue;
    add_factors(c.den());
  }
  add_factors(L.coeff(L.order()).num());
  if (!rhs.is_zero()) add_factors(rhs.den());
  ZPoly denom = ZPoly::one(fld);
  for (const auto& f : factors) denom = denom * f.pow(static_cast<unsigned>(bound));
  int numdeg = bound + denom.deg();
  RationalSolutions out;
  out.particular = RatFunc::zero(fld);
  BuiltSystem sys = build_system(L, denom, numdeg, {}, rhs);
  LinearSolution sol = solve_linear(sys.A, sys.b, fld);
  out.found_particular = sol.consistent;
  if (sol.consistent && !rhs.is_zero())
    out.particular = assemble(fld, denom, sol.particular, numdeg);
  for (const auto& v : sol.nullspace) {
    RatFunc y = assemble(fld, denom, v, numdeg);
    if (!y.is_zero()) out.kernel.push_back(y);
  }
  return out;
}

}  // namespace parakov
