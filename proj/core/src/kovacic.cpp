#include "parakov/kovacic.hpp"

#include <algorithm>

#include "parakov/errors.hpp"
#include "parakov/laurent.hpp"
#include "parakov/linear_solve.hpp"
#include "parakov/rational_solve.hpp"

namespace parakov {

namespace {

constexpr int kDegreeCap = 512;

RatFunc simple_pole(const FieldPtr& fld, const ParamElem& c, const ParamElem& res) {
  ZPoly lin(fld, {-c, ParamElem::one(fld)});
  return RatFunc(ZPoly::constant(res), lin);
}

struct LocalOption {
  RatFunc sqrt_part;  // signed [sqrt r] contribution at this place
  ParamElem alpha;
};

void push_unique(std::vector<LocalOption>& v, LocalOption opt) {
  for (const auto& o : v)
    if (o.alpha == opt.alpha && o.sqrt_part == opt.sqrt_part) return;
  v.push_back(std::move(opt));
}

// [sqrt r] principal square root at a finite pole of order 2v >= 4 together
// with both alpha choices.
std::vector<LocalOption> case1_even_pole(const RatFunc& r, const ParamElem& c, int v) {
  const FieldPtr& fld = r.field();
  std::vector<ParamElem> rc = laurent_at(r, c, -2 * v, -(v + 1));
  auto coeff = [&](int k) { return rc[k + 2 * v]; };  // coefficient of (z-c)^k
  std::vector<ParamElem> u(v + 1, ParamElem::zero(fld));
  u[v] = adjoin_sqrt(fld, coeff(-2 * v));
  ParamElem inv2uv = (ParamElem::from_long(fld, 2) * u[v]).inverse();
  for (int m = v - 1; m >= 2; --m) {
    int k = v + m;
    ParamElem acc = coeff(-k);
    for (int i = m + 1; i <= v - 1; ++i) {
      int j = k - i;
      if (j < m + 1 || j > v - 1) continue;
      acc = acc - u[i] * u[j];
    }
    u[m] = acc * inv2uv;
  }
  RatFunc s = RatFunc::zero(fld);
  ZPoly lin(fld, {-c, ParamElem::one(fld)});
  for (int i = 2; i <= v; ++i)
    s = s + RatFunc(ZPoly::constant(u[i]), lin.pow(static_cast<unsigned>(i)));
  ParamElem b = laurent_at(r - s * s, c, -(v + 1), -(v + 1))[0];
  ParamElem half = ParamElem::from_rat(fld, make_rat(1, 2));
  ParamElem vv = ParamElem::from_long(fld, v);
  ParamElem ratio = b * u[v].inverse();
  std::vector<LocalOption> opts;
  push_unique(opts, {s, (ratio + vv) * half});
  push_unique(opts, {-s, (-ratio + vv) * half});
  return opts;
}

// [sqrt r] polynomial part at infinity for order -2v <= 0 with both alphas.
std::vector<LocalOption> case1_infinity_poly(const RatFunc& r, int v) {
  const FieldPtr& fld = r.field();
  std::vector<ParamElem> rc = laurent_at_infinity(r, v - 1 >= 0 ? 0 : v - 1, 2 * v);
  int base = v - 1 >= 0 ? 0 : v - 1;
  auto coeff = [&](int k) { return rc[k - base]; };
  std::vector<ParamElem> u(v + 1, ParamElem::zero(fld));
  u[v] = adjoin_sqrt(fld, coeff(2 * v));
  ParamElem inv2uv = (ParamElem::from_long(fld, 2) * u[v]).inverse();
  for (int m = v - 1; m >= 0; --m) {
    int k = v + m;
    ParamElem acc = coeff(k);
    for (int i = m + 1; i <= v - 1; ++i) {
      int j = k - i;
      if (j < m + 1 || j > v - 1) continue;
      acc = acc - u[i] * u[j];
    }
    u[m] = acc * inv2uv;
  }
  ZPoly spoly = ZPoly::zero(fld);
  for (int i = 0; i <= v; ++i)
    spoly = spoly + ZPoly::monomial(u[i], i);
  RatFunc s = RatFunc::from_poly(spoly);
  ParamElem b = v >= 1 ? laurent_at_infinity(r - s * s, v - 1, v - 1)[0]
                       : laurent_at_infinity(r - s * s, -1, -1)[0];
  ParamElem half = ParamElem::from_rat(fld, make_rat(1, 2));
  ParamElem vv = ParamElem::from_long(fld, v);
  ParamElem ratio = b * u[v].inverse();
  std::vector<LocalOption> opts;
  push_unique(opts, {s, (ratio - vv) * half});
  push_unique(opts, {-s, (-ratio - vv) * half});
  return opts;
}

std::optional<long> nonneg_int_value(const ParamElem& e) {
  auto r = e.as_rat();
  if (!r) return std::nullopt;
  if (!rat_is_integer(*r)) return std::nullopt;
  auto l = rat_to_long(*r);
  if (!l || *l < 0) return std::nullopt;
  return l;
}

// Odometer over option lists; applies fn to every tuple, stops when fn
// returns true.
template <typename T, typename Fn>
bool enumerate_tuples(const std::vector<std::vector<T>>& lists, Fn&& fn) {
  std::vector<size_t> idx(lists.size(), 0);
  for (const auto& l : lists)
    if (l.empty()) return false;
  while (true) {
    std::vector<const T*> tuple;
    tuple.reserve(lists.size());
    for (size_t i = 0; i < lists.size(); ++i) tuple.push_back(&lists[i][idx[i]]);
    if (fn(tuple)) return true;
    size_t pos = lists.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < lists[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) return false;
    }
    if (lists.empty()) return false;
  }
}

}  // namespace

CaseScreen necessary_conditions(const Singularities& s) {
  CaseScreen sc;
  bool c1_poles = true, c3_poles = true, c2_pole = false;
  for (const auto& [loc, order] : s.poles) {
    (void)loc;
    if (!(order % 2 == 0 || order == 1)) c1_poles = false;
    if (order > 2) c3_poles = false;
    if (order == 2 || (order > 2 && order % 2 == 1)) c2_pole = true;
  }
  int o = s.infinity_order;
  sc.case1 = c1_poles && (o > 2 || o % 2 == 0);
  sc.case2 = c2_pole;
  sc.case3 = c3_poles && o >= 2;
  if (!sc.case1) sc.notes.push_back("pole/infinity orders exclude a hyperexponential solution");
  if (!sc.case2) sc.notes.push_back("pole orders exclude a quadratic minimal polynomial");
  if (!sc.case3) sc.notes.push_back("pole/infinity orders exclude an algebraic logarithmic derivative");
  return sc;
}

std::vector<ZPoly> polynomial_kernel(const LinDiffOp& L, int maxdeg) {
  const FieldPtr& fld = L.field();
  std::vector<ZPoly> out;
  if (maxdeg < 0) return out;
  std::vector<RatFunc> cols;
  for (int k = 0; k <= maxdeg; ++k)
    cols.push_back(L.apply(RatFunc::from_poly(ZPoly::monomial(ParamElem::one(fld), k))));
  ZPoly common = ZPoly::one(fld);
  for (const auto& c : cols)
    if (!c.is_zero()) {
      ZPoly g = zpoly_gcd(common, c.den());
      common = (common.divrem(g).first * c.den()).monic();
    }
  int maxrow = 0;
  std::vector<ZPoly> cleared;
  for (const auto& c : cols) {
    ZPoly n = c.num() * common.divrem(c.den()).first;
    maxrow = std::max(maxrow, n.deg());
    cleared.push_back(std::move(n));
  }
  Mat A(maxrow + 1, Vec(maxdeg + 1, ParamElem::zero(fld)));
  for (int k = 0; k <= maxdeg; ++k)
    for (int d = 0; d <= cleared[k].deg(); ++d) A[d][k] = cleared[k].coeff(d);
  LinearSolution sol = solve_linear(std::move(A), Vec(maxrow + 1, ParamElem::zero(fld)), fld);
  for (const auto& v : sol.nullspace) {
    ZPoly p(fld, v);
    if (!p.is_zero()) out.push_back(p);
  }
  return out;
}

std::optional<Case1Certificate> case1_search(const RatFunc& r, const Singularities& s,
                                             std::vector<std::string>* trace) {
  const FieldPtr& fld = r.field();
  ParamElem one = ParamElem::one(fld);
  ParamElem half = ParamElem::from_rat(fld, make_rat(1, 2));

  std::vector<std::vector<LocalOption>> pole_opts;
  for (const auto& [c, order] : s.poles) {
    std::vector<LocalOption> opts;
    if (order == 1) {
      opts.push_back({RatFunc::zero(fld), one});
    } else if (order == 2) {
      ParamElem b = laurent_at(r, c, -2, -2)[0];
      ParamElem disc = one + ParamElem::from_long(fld, 4) * b;
      if (disc.is_zero()) {
        opts.push_back({RatFunc::zero(fld), half});
      } else {
        ParamElem sq = adjoin_sqrt(fld, disc);
        push_unique(opts, {RatFunc::zero(fld), (one + sq) * half});
        push_unique(opts, {RatFunc::zero(fld), (one - sq) * half});
      }
    } else if (order % 2 == 0) {
      opts = case1_even_pole(r, c, order / 2);
    } else {
      return std::nullopt;  // screen already excluded this
    }
    pole_opts.push_back(std::move(opts));
  }

  std::vector<LocalOption> inf_opts;
  int o = s.infinity_order;
  if (o > 2) {
    inf_opts.push_back({RatFunc::zero(fld), ParamElem::zero(fld)});
    push_unique(inf_opts, {RatFunc::zero(fld), one});
  } else if (o == 2) {
    ParamElem b = laurent_at_infinity(r, -2, -2)[0];
    ParamElem disc = one + ParamElem::from_long(fld, 4) * b;
    if (disc.is_zero()) {
      inf_opts.push_back({RatFunc::zero(fld), half});
    } else {
      ParamElem sq = adjoin_sqrt(fld, disc);
      push_unique(inf_opts, {RatFunc::zero(fld), (one + sq) * half});
      push_unique(inf_opts, {RatFunc::zero(fld), (one - sq) * half});
    }
  } else if (o % 2 == 0) {
    inf_opts = case1_infinity_poly(r, -o / 2);
  } else {
    return std::nullopt;
  }

  std::vector<std::vector<LocalOption>> lists;
  lists.push_back(std::move(inf_opts));
  for (auto& p : pole_opts) lists.push_back(std::move(p));

  std::optional<Case1Certificate> found;
  enumerate_tuples(lists, [&](const std::vector<const LocalOption*>& tuple) {
    ParamElem d_elem = tuple[0]->alpha;
    for (size_t i = 1; i < tuple.size(); ++i) d_elem = d_elem - tuple[i]->alpha;
    auto d = nonneg_int_value(d_elem);
    if (!d) return false;
    if (*d > kDegreeCap) {
      if (trace) trace->push_back("degree candidate " + std::to_string(*d) + " exceeds cap");
      return false;
    }
    RatFunc theta = tuple[0]->sqrt_part;
    for (size_t i = 1; i < tuple.size(); ++i) {
      theta = theta + tuple[i]->sqrt_part +
              simple_pole(fld, s.poles[i - 1].first, tuple[i]->alpha);
    }
    RatFunc a0 = theta.derivative_z() + theta * theta - r;
    LinDiffOp Lp({a0, RatFunc::constant(ParamElem::from_long(fld, 2)) * theta,
                  RatFunc::one(fld)});
    for (const ZPoly& P : polynomial_kernel(Lp, static_cast<int>(*d))) {
      RatFunc Pf = RatFunc::from_poly(P);
      RatFunc f = theta + Pf.derivative_z() / Pf;
      if (f.derivative_z() + f * f == r) {
        found = Case1Certificate{f};
        if (trace)
          trace->push_back("hyperexponential witness found with degree " +
                           std::to_string(*d));
        return true;
      }
    }
    return false;
  });
  return found;
}

namespace {

std::vector<long> case2_local_set(const FieldPtr& fld, const ParamElem& b_coeff,
                                  bool at_infinity_low, long low_order) {
  std::vector<long> es;
  if (at_infinity_low) {
    es.push_back(low_order);
    return es;
  }
  es.push_back(2);
  ParamElem disc = ParamElem::one(fld) + ParamElem::from_long(fld, 4) * b_coeff;
  if (auto sq = disc.sqrt_in_tower()) {
    if (auto s_rat = sq->as_rat()) {
      for (int sign : {1, -1}) {
        Rat e = 2 + 2 * (sign > 0 ? *s_rat : -*s_rat);
        if (rat_is_integer(e)) {
          if (auto l = rat_to_long(e)) es.push_back(*l);
        }
      }
    }
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return es;
}

}  // namespace

std::optional<Case2Certificate> case2_search(const RatFunc& r, const Singularities& s,
                                             std::vector<std::string>* trace) {
  const FieldPtr& fld = r.field();
  ParamElem half = ParamElem::from_rat(fld, make_rat(1, 2));

  std::vector<std::vector<long>> pole_sets;
  for (const auto& [c, order] : s.poles) {
    if (order == 1) {
      pole_sets.push_back({4});
    } else if (order == 2) {
      ParamElem b = laurent_at(r, c, -2, -2)[0];
      pole_sets.push_back(case2_local_set(fld, b, false, 0));
    } else {
      pole_sets.push_back({order});
    }
  }
  std::vector<long> inf_set;
  int o = s.infinity_order;
  if (o > 2) {
    inf_set = {0, 2, 4};
  } else if (o == 2) {
    ParamElem b = laurent_at_infinity(r, -2, -2)[0];
    inf_set = case2_local_set(fld, b, false, 0);
  } else {
    inf_set = {o};
  }

  std::vector<std::vector<long>> lists;
  lists.push_back(inf_set);
  for (auto& p : pole_sets) lists.push_back(p);

  std::optional<Case2Certificate> found;
  enumerate_tuples(lists, [&](const std::vector<const long*>& tuple) {
    long sum = 0;
    for (size_t i = 1; i < tuple.size(); ++i) sum += *tuple[i];
    long twice_d = *tuple[0] - sum;
    if (twice_d < 0 || twice_d % 2 != 0) return false;
    long d = twice_d / 2;
    if (d > kDegreeCap) {
      if (trace) trace->push_back("degree candidate " + std::to_string(d) + " exceeds cap");
      return false;
    }
    RatFunc theta = RatFunc::zero(fld);
    for (size_t i = 1; i < tuple.size(); ++i)
      theta = theta + simple_pole(fld, s.poles[i - 1].first,
                                  ParamElem::from_long(fld, *tuple[i]) * half);
    RatFunc th1 = theta.derivative_z();
    RatFunc th2 = th1.derivative_z();
    RatFunc three = RatFunc::constant(ParamElem::from_long(fld, 3));
    RatFunc four = RatFunc::constant(ParamElem::from_long(fld, 4));
    RatFunc two = RatFunc::constant(ParamElem::from_long(fld, 2));
    RatFunc A0 = th2 + three * theta * th1 + theta * theta * theta -
                 four * r * theta - two * r.derivative_z();
    RatFunc A1 = three * theta * theta + three * th1 - four * r;
    RatFunc A2 = three * theta;
    LinDiffOp Lp({A0, A1, A2, RatFunc::one(fld)});
    for (const ZPoly& P : polynomial_kernel(Lp, static_cast<int>(d))) {
      RatFunc Pf = RatFunc::from_poly(P);
      RatFunc phi = theta + Pf.derivative_z() / Pf;
      RatFunc a = -phi;
      RatFunc hf = RatFunc::constant(half);
      RatFunc b = hf * phi.derivative_z() + hf * phi * phi - r;
      RatFunc disc = a * a - four * b;
      if (disc.is_zero()) continue;
      if (zpoly_sqrt(disc.num()) && zpoly_sqrt(disc.den())) continue;  // square: case 1 shape
      // both quadratic roots solve the Riccati equation iff:
      if (!(disc.derivative_z() / (two * disc) == a)) continue;
      if (!(-(hf * a.derivative_z()) + hf * a * a - b == r)) continue;
      found = Case2Certificate{a, b, disc};
      if (trace)
        trace->push_back("quadratic witness found with degree " + std::to_string(d));
      return true;
    }
    return false;
  });
  return found;
}

namespace {

std::vector<long> case3_local_set(const FieldPtr& fld, const ParamElem& b_coeff, int n) {
  std::vector<long> es;
  ParamElem disc = ParamElem::one(fld) + ParamElem::from_long(fld, 4) * b_coeff;
  std::optional<Rat> s_rat;
  if (auto sq = disc.sqrt_in_tower()) s_rat = sq->as_rat();
  for (long k = -n / 2; k <= n / 2; ++k) {
    if (k == 0) {
      es.push_back(6);
      continue;
    }
    if (!s_rat) continue;
    Rat e = 6 + make_rat(12 * k, n) * (*s_rat);
    if (rat_is_integer(e)) {
      if (auto l = rat_to_long(e)) es.push_back(*l);
    }
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return es;
}

// Polynomial coefficient list of a poly-in-w with RatFunc coefficients,
// reduced modulo the monic minimal polynomial m.
bool verify_case3_identity(const RatFunc& r, const std::vector<RatFunc>& m) {
  const FieldPtr& fld = r.field();
  int n = static_cast<int>(m.size()) - 1;
  std::vector<RatFunc> T(n + 2, RatFunc::zero(fld));
  // T = sum a_i' w^i + (r - w^2) sum i a_i w^(i-1)
  for (int i = 0; i <= n; ++i) T[i] = T[i] + m[i].derivative_z();
  for (int i = 1; i <= n; ++i) {
    RatFunc ia = RatFunc::constant(ParamElem::from_long(fld, i)) * m[i];
    T[i - 1] = T[i - 1] + r * ia;
    T[i + 1] = T[i + 1] - ia;
  }
  // reduce modulo monic m
  for (int d = n + 1; d >= n; --d) {
    if (T[d].is_zero()) continue;
    RatFunc lead = T[d];
    for (int i = 0; i <= n; ++i) T[d - n + i] = T[d - n + i] - lead * m[i];
  }
  for (const auto& c : T)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

std::optional<Case3Certificate> case3_search(const RatFunc& r, const Singularities& s,
                                             std::vector<std::string>* trace) {
  const FieldPtr& fld = r.field();
  for (int n : {4, 6, 12}) {
    std::vector<std::vector<long>> pole_sets;
    for (const auto& [c, order] : s.poles) {
      if (order == 1) {
        pole_sets.push_back({12});
      } else {
        ParamElem b = laurent_at(r, c, -2, -2)[0];
        pole_sets.push_back(case3_local_set(fld, b, n));
      }
    }
    std::vector<long> inf_set;
    if (s.infinity_order == 2) {
      ParamElem b = laurent_at_infinity(r, -2, -2)[0];
      inf_set = case3_local_set(fld, b, n);
    } else {
      inf_set = case3_local_set(fld, ParamElem::zero(fld), n);
    }

    // S = product (z - c), theta = (n/12) sum e_c/(z - c)
    ZPoly S = ZPoly::one(fld);
    for (const auto& [c, order] : s.poles) {
      (void)order;
      S = S * ZPoly(fld, {-c, ParamElem::one(fld)});
    }
    RatFunc Sr = RatFunc::from_poly(S) * RatFunc::from_poly(S) * r;
    if (!Sr.is_poly()) continue;  // screen guarantees this; defensive
    ZPoly S2r = Sr.num();
    ZPoly Sd = S.derivative_z();

    std::vector<std::vector<long>> lists;
    lists.push_back(inf_set);
    for (auto& p : pole_sets) lists.push_back(p);

    std::optional<Case3Certificate> found;
    enumerate_tuples(lists, [&](const std::vector<const long*>& tuple) {
      long sum = 0;
      for (size_t i = 1; i < tuple.size(); ++i) sum += *tuple[i];
      long dn = static_cast<long>(n) * (*tuple[0] - sum);
      if (dn < 0 || dn % 12 != 0) return false;
      long d = dn / 12;
      if (d > kDegreeCap) {
        if (trace) trace->push_back("degree candidate " + std::to_string(d) + " exceeds cap");
        return false;
      }
      RatFunc theta = RatFunc::zero(fld);
      for (size_t i = 1; i < tuple.size(); ++i)
        theta = theta + simple_pole(fld, s.poles[i - 1].first,
                                    ParamElem::from_rat(fld, make_rat(n * *tuple[i], 12)));
      RatFunc Sth = RatFunc::from_poly(S) * theta;
      if (!Sth.is_poly()) return false;
      ZPoly Stheta = Sth.num();

      // run the linear recursion on each basis monomial of P
      std::vector<std::vector<ZPoly>> Pis;  // Pis[j][i] with i in [0, n+1]
      std::vector<ZPoly> tails;             // P_(-1) per basis monomial
      for (long j = 0; j <= d; ++j) {
        std::vector<ZPoly> P(n + 2, ZPoly::zero(fld));
        P[n] = -ZPoly::monomial(ParamElem::one(fld), static_cast<int>(j));
        ZPoly tail = ZPoly::zero(fld);
        for (int i = n; i >= 0; --i) {
          ZPoly next =
              -(S * P[i].derivative_z()) +
              (Sd.mul_elem(ParamElem::from_long(fld, n - i)) - Stheta) * P[i] -
              S2r.mul_elem(ParamElem::from_long(fld,
                                                static_cast<long>(n - i) * (i + 1))) *
                  P[i + 1];
          if (i > 0)
            P[i - 1] = next;
          else
            tail = next;
        }
        Pis.push_back(std::move(P));
        tails.push_back(std::move(tail));
      }
      int maxrow = 0;
      for (const auto& t : tails) maxrow = std::max(maxrow, t.deg());
      Mat A(maxrow + 1, Vec(d + 1, ParamElem::zero(fld)));
      for (long j = 0; j <= d; ++j)
        for (int dd = 0; dd <= tails[j].deg(); ++dd) A[dd][j] = tails[j].coeff(dd);
      LinearSolution sol =
          solve_linear(std::move(A), Vec(maxrow + 1, ParamElem::zero(fld)), fld);
      for (const auto& v : sol.nullspace) {
        std::vector<RatFunc> mp(n + 1, RatFunc::zero(fld));
        bool nontrivial = false;
        for (long j = 0; j <= d; ++j)
          if (!v[j].is_zero()) nontrivial = true;
        if (!nontrivial) continue;
        // a_i = S^i P_i / (n-i)!
        RatFunc Spow = RatFunc::one(fld);
        std::vector<ZPoly> Pcomb(n + 1, ZPoly::zero(fld));
        for (int i = 0; i <= n; ++i)
          for (long j = 0; j <= d; ++j)
            Pcomb[i] = Pcomb[i] + Pis[j][i].mul_elem(v[j]);
        for (int i = 0; i <= n; ++i) {
          Rat fact = 1;
          for (int l = 2; l <= n - i; ++l) fact *= l;
          mp[i] = Spow * RatFunc::from_poly(Pcomb[i]) *
                  RatFunc::constant(ParamElem::from_rat(fld, Rat(1) / fact));
          Spow = Spow * RatFunc::from_poly(S);
        }
        if (mp[n].is_zero()) continue;
        RatFunc lead_inv = mp[n].inverse();
        for (auto& c : mp) c = c * lead_inv;
        if (verify_case3_identity(r, mp)) {
          found = Case3Certificate{n, mp};
          if (trace)
            trace->push_back("algebraic witness of degree " + std::to_string(n) +
                             " found with auxiliary degree " + std::to_string(d));
          return true;
        }
      }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

KovacicResult classify(const RatFunc& r) {
  KovacicResult res;
  res.sing = singularities(r);
  res.screen = necessary_conditions(res.sing);
  if (res.screen.case1) {
    res.case1 = case1_search(r, res.sing, &res.trace);
    if (res.case1) {
      res.case_id = 1;
      return res;
    }
    res.trace.push_back("hyperexponential search exhausted without a witness");
  }
  if (res.screen.case2) {
    res.case2 = case2_search(r, res.sing, &res.trace);
    if (res.case2) {
      res.case_id = 2;
      return res;
    }
    res.trace.push_back("quadratic search exhausted without a witness");
  }
  if (res.screen.case3) {
    res.case3 = case3_search(r, res.sing, &res.trace);
    if (res.case3) {
      res.case_id = 3;
      return res;
    }
    res.trace.push_back("algebraic search exhausted without a witness");
  }
  res.case_id = 4;
  res.trace.push_back("differential Galois group is Zariski-dense in SL2");
  return res;
}

}  // namespace parakov
