#include "parakov/galois.hpp"

#include <algorithm>
#include <functional>

#include "parakov/errors.hpp"
#include "parakov/linear_solve.hpp"
#include "parakov/rational_solve.hpp"

namespace parakov {

ProductForm product_form(const RatFunc& f) {
  const FieldPtr& fld = f.field();
  PartialFractions pf = partial_fractions(f);
  ProductForm out;
  // integrate the polynomial part
  ZPoly tail_poly = ZPoly::zero(fld);
  for (int k = 0; k <= pf.poly_part.deg(); ++k) {
    ParamElem c = pf.poly_part.coeff(k);
    if (c.is_zero()) continue;
    tail_poly = tail_poly +
                ZPoly::monomial(c * ParamElem::from_long(fld, k + 1).inverse(), k + 1);
  }
  out.tail = RatFunc::from_poly(tail_poly);
  for (const auto& p : pf.poles) {
    if (!p.principal.empty() && !p.principal[0].is_zero())
      out.exponents.push_back({p.location, p.principal[0]});
    ZPoly lin(fld, {-p.location, ParamElem::one(fld)});
    for (size_t k = 1; k < p.principal.size(); ++k) {
      if (p.principal[k].is_zero()) continue;
      // c/(z-a)^(k+1) integrates to -c/(k (z-a)^k)
      ParamElem c = -(p.principal[k] * ParamElem::from_long(fld, static_cast<long>(k)).inverse());
      out.tail = out.tail + RatFunc(ZPoly::constant(c), lin.pow(static_cast<unsigned>(k)));
    }
  }
  return out;
}

namespace {

std::string coef_times(const ParamElem& c, const std::string& sym) {
  const FieldPtr& fld = c.field();
  if (c == ParamElem::one(fld)) return sym;
  if (c == -ParamElem::one(fld)) return "-" + sym;
  return "(" + c.to_string() + ")*" + sym;
}

std::string linear_combo(const std::vector<std::pair<ParamElem, std::string>>& terms) {
  std::string out;
  for (const auto& [c, sym] : terms) {
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coef_times(c, sym);
  }
  return out.empty() ? "0" : out;
}

// Inverse of a square matrix over the parameter field.
Mat invert(const Mat& W, const FieldPtr& fld) {
  size_t n = W.size();
  Mat inv(n, Vec(n, ParamElem::zero(fld)));
  for (size_t j = 0; j < n; ++j) {
    Vec e(n, ParamElem::zero(fld));
    e[j] = ParamElem::one(fld);
    LinearSolution s = solve_linear(W, e, fld);
    if (!s.consistent || !s.nullspace.empty())
      fail(ErrorCode::internal_error, "singular matrix in group assembly");
    for (size_t i = 0; i < n; ++i) inv[i][j] = s.particular[i];
  }
  return inv;
}

ParamElem det(const Mat& M, const FieldPtr& fld) {
  size_t n = M.size();
  if (n == 0) return ParamElem::one(fld);
  Mat A = M;
  ParamElem d = ParamElem::one(fld);
  for (size_t col = 0; col < n; ++col) {
    size_t pr = col;
    while (pr < n && A[pr][col].is_zero()) ++pr;
    if (pr == n) return ParamElem::zero(fld);
    if (pr != col) {
      std::swap(A[pr], A[col]);
      d = -d;
    }
    d = d * A[col][col];
    ParamElem inv = A[col][col].inverse();
    for (size_t i = col + 1; i < n; ++i) {
      ParamElem f = A[i][col] * inv;
      for (size_t j = col; j < n; ++j) A[i][j] = A[i][j] - f * A[col][j];
    }
  }
  return d;
}

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

GroupDescription multiplicative_group(const ProductForm& pf, const FieldPtr& fld) {
  GroupDescription g;
  int n = fld->nparams();
  std::vector<std::string> names = fld->param_names();
  auto uname = [&](int i) { return "u[" + names[i] + "]"; };

  std::vector<ParamElem> betas;
  for (const auto& [loc, beta] : pf.exponents) {
    (void)loc;
    if (!beta.is_zero()) betas.push_back(beta);
  }

  // parameter-dependence vectors v_j = (d beta_j / d t_i)_i
  std::vector<Vec> v;
  for (const auto& b : betas) {
    Vec col(n, ParamElem::zero(fld));
    bool dep = false;
    for (int i = 0; i < n; ++i) {
      col[i] = b.derivative(i);
      if (!col[i].is_zero()) dep = true;
    }
    if (dep) v.push_back(std::move(col));
  }

  if (v.empty()) {
    bool all_rational = true;
    for (const auto& b : betas)
      if (!b.as_rat()) all_rational = false;
    bool tail_zfree = pf.tail.is_zero() || pf.tail.is_constant();
    if (all_rational && tail_zfree) {
      mpz_class N(1);
      for (const auto& b : betas) {
        mpz_class q = b.as_rat()->get_den();
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), N.get_mpz_t(), q.get_mpz_t());
        N = N / gg * q;
      }
      g.tag = "cyclic";
      g.order = N.get_si();
      g.relations.push_back("alpha^" + N.get_str() + " = 1");
      return g;
    }
    g.tag = "torus";
    for (int i = 0; i < n; ++i) g.relations.push_back(uname(i) + " = 0");
    g.notes.push_back("all exponents are parameter-free; character is a differential constant");
    return g;
  }

  // independent columns by Gaussian elimination, kept in encounter order
  std::vector<Vec> basis;
  std::vector<Vec> reduced;  // echelon forms of the basis columns
  std::vector<int> pivot_rows;
  for (const auto& col : v) {
    Vec w = col;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (w[pivot_rows[k]].is_zero()) continue;
      ParamElem f = w[pivot_rows[k]] * reduced[k][pivot_rows[k]].inverse();
      for (int i = 0; i < n; ++i) w[i] = w[i] - f * reduced[k][i];
    }
    int pr = -1;
    for (int i = 0; i < n; ++i)
      if (!w[i].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    basis.push_back(col);
    reduced.push_back(w);
    pivot_rows.push_back(pr);
  }
  int rho = static_cast<int>(basis.size());
  g.tag = "torus";
  g.notes.push_back("character constrained to the span of " + std::to_string(rho) +
                    " exponent gradient(s)");

  // (rho+1)-minors of [basis | u] force u into the span
  if (rho < n && n <= 10) {
    std::vector<std::vector<int>> subs;
    subsets_of_size(n, rho + 1, subs);
    for (const auto& rows : subs) {
      std::vector<std::pair<ParamElem, std::string>> terms;
      bool all_zero = true;
      for (int drop = 0; drop <= rho; ++drop) {
        Mat sub;
        for (int l = 0; l <= rho; ++l) {
          if (l == drop) continue;
          Vec row;
          for (int j = 0; j < rho; ++j) row.push_back(basis[j][rows[l]]);
          sub.push_back(std::move(row));
        }
        ParamElem cof = det(sub, fld);
        if (drop % 2 == 1) cof = -cof;
        if (!cof.is_zero()) all_zero = false;
        terms.push_back({cof, uname(rows[drop])});
      }
      if (!all_zero) g.relations.push_back(linear_combo(terms) + " = 0");
    }
  }

  // span coefficients must be differential constants: D[t_l](W^-1 u_rows) = 0
  Mat W(rho, Vec(rho, ParamElem::zero(fld)));
  for (int l = 0; l < rho; ++l)
    for (int j = 0; j < rho; ++j) W[l][j] = basis[j][pivot_rows[l]];
  Mat Winv = invert(W, fld);
  for (int j = 0; j < rho; ++j) {
    std::vector<std::pair<ParamElem, std::string>> terms;
    for (int l = 0; l < rho; ++l) terms.push_back({Winv[j][l], uname(pivot_rows[l])});
    std::string expr = linear_combo(terms);
    for (int l2 = 0; l2 < n; ++l2)
      g.relations.push_back("D[" + names[l2] + "](" + expr + ") = 0");
  }
  return g;
}

UnipotentData unipotent_part(const RatFunc& f) {
  const FieldPtr& fld = f.field();
  UnipotentData u;
  RatFunc two = RatFunc::constant(ParamElem::from_long(fld, 2));
  LinDiffOp L({-(two * f), RatFunc::one(fld)});
  RationalSolutions sol = rational_solutions(L, RatFunc::one(fld));
  u.diagnostics = sol.diagnostics;
  if (sol.found_particular) {
    u.has_rational_h = true;
    u.h = sol.particular;
  }
  u.f_parameter_free = true;
  for (int i = 0; i < fld->nparams(); ++i)
    if (!f.derivative_t(i).is_zero()) u.f_parameter_free = false;
  return u;
}

GroupDescription case1_group(const Case1Certificate& cert, UnipotentData* uni_out) {
  const FieldPtr& fld = cert.f.field();
  ProductForm pf = product_form(cert.f);
  UnipotentData uni = unipotent_part(cert.f);
  if (uni_out) *uni_out = uni;

  bool all_int = true;
  for (const auto& [loc, beta] : pf.exponents) {
    (void)loc;
    auto r = beta.as_rat();
    if (!r || !rat_is_integer(*r)) all_int = false;
  }
  bool tail_zfree = pf.tail.is_zero() || pf.tail.is_constant();

  GroupDescription g;
  if (all_int && tail_zfree) {
    // exp(int f) is itself rational
    if (uni.has_rational_h) {
      g.tag = "trivial";
      g.relations.push_back("alpha = 1");
      g.notes.push_back("both solutions rational");
    } else {
      g.tag = "unipotent";
      g.relations.push_back("alpha = 1");
      g.notes.push_back("rational first solution; second needs a logarithm (additive group)");
    }
    return g;
  }

  GroupDescription M = multiplicative_group(pf, fld);
  g.order = M.order;
  g.relations = M.relations;
  g.notes = M.notes;
  if (uni.has_rational_h) {
    g.tag = "diagonal";
    g.notes.push_back("second solution is a rational multiple of the inverse solution");
  } else if (uni.f_parameter_free) {
    g.tag = "borel";
    g.notes.push_back("full additive unipotent radical over the constants");
  } else {
    g.tag = "borel";
    g.notes.push_back("unipotent radical present; its parameterized equations stay implicit");
  }
  if (M.tag == "cyclic") g.notes.push_back("multiplicative part: cyclic of order " + std::to_string(M.order));
  return g;
}

namespace {

ZPoly compose(const ZPoly& p, const ZPoly& q) {
  const FieldPtr& fld = p.field();
  ZPoly acc = ZPoly::zero(fld);
  for (int i = p.deg(); i >= 0; --i)
    acc = acc * q + ZPoly::constant(p.coeff(i));
  return acc;
}

}  // namespace

GroupDescription case2_group(const Case2Certificate& cert) {
  const FieldPtr& fld = cert.a.field();
  GroupDescription g;
  g.tag = "dihedral";
  g.notes.push_back("solutions permuted by an order-two reflection");

  const RatFunc& disc = cert.discriminant;
  // shape: disc = c * m(z) * rho(z)^2 with m monic squarefree
  ParamElem c = disc.num().lc();
  ZPoly m = ZPoly::one(fld);
  ZPoly rho_num = ZPoly::one(fld), rho_den = ZPoly::one(fld);
  for (const auto& [gfac, mult] : squarefree_decompose(disc.num())) {
    if (mult % 2 == 1) m = m * gfac;
    rho_num = rho_num * gfac.pow(static_cast<unsigned>(mult / 2));
  }
  for (const auto& [gfac, mult] : squarefree_decompose(disc.den())) {
    if (mult % 2 == 1) {
      m = m * gfac;
      rho_den = rho_den * gfac.pow(static_cast<unsigned>((mult + 1) / 2));
    } else {
      rho_den = rho_den * gfac.pow(static_cast<unsigned>(mult / 2));
    }
  }
  RatFunc rho(rho_num, rho_den);
  RatFunc check = RatFunc::constant(c) * RatFunc::from_poly(m) * rho * rho;
  if (!(check == disc))
    fail(ErrorCode::internal_error, "discriminant shape split failed");

  if (m.deg() != 1) {
    g.notes.push_back("multiplicative part implicit (discriminant square-free part has degree " +
                      std::to_string(m.deg()) + ")");
    return g;
  }
  ParamElem alpha0 = -m.coeff(0);
  // substitute z = xi^2 + alpha0; integrand of int sqrt(disc) dz is
  // 2 sqrt(c) xi^2 rho(xi^2 + alpha0) in xi
  ZPoly shift(fld, {alpha0, ParamElem::zero(fld), ParamElem::one(fld)});
  RatFunc rho_xi(compose(rho.num(), shift), compose(rho.den(), shift));
  RatFunc integrand = RatFunc(ZPoly::monomial(ParamElem::from_long(fld, 2), 2),
                              ZPoly::one(fld)) *
                      rho_xi;
  PartialFractions pfr = partial_fractions(integrand);
  bool logs = false;
  for (const auto& p : pfr.poles)
    if (!p.principal.empty() && !p.principal[0].is_zero()) logs = true;
  if (logs) {
    g.notes.push_back("multiplicative part implicit (logarithmic terms in the cover integral)");
    return g;
  }
  g.notes.push_back("multiplicative part: C*");
  g.notes.push_back("cover integral is logarithm-free; diagonal subgroup is the full torus");
  return g;
}

GroupDescription case3_group(const Case3Certificate& cert) {
  GroupDescription g;
  g.tag = "finite_primitive";
  g.notes.push_back("logarithmic derivative is algebraic of degree " +
                    std::to_string(cert.n) + " over the rational functions");
  g.notes.push_back("finite primitive group witnessed; naming the exact type is out of scope");
  return g;
}

}  // namespace parakov
