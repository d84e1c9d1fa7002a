#pragma once

// Deterministic randomized cross-check of the bounded rational solver against
// the brute-force oracle box. Shared by the fuzz test and the acceptance
// runner so both report on the identical instance stream.

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "parakov/rational_solve.hpp"

namespace parakov::testing {

struct FuzzStats {
  int instances = 0;
  int with_particular = 0;
  int kernel_elements = 0;
  std::vector<std::string> issues;  // empty means full agreement
};

namespace fuzz_detail {

inline ZPoly zpoly_lcm(const ZPoly& a, const ZPoly& b) {
  ZPoly g = zpoly_gcd(a, b);
  return (a * b).divrem(g).first.monic();
}

// v in span(basis) over the parameter field, by matching numerator
// coefficients over a common denominator.
inline bool in_span(const RatFunc& v, const std::vector<RatFunc>& basis,
                    const FieldPtr& fld) {
  if (v.is_zero()) return true;
  if (basis.empty()) return false;
  ZPoly den = v.den();
  for (const auto& w : basis) den = zpoly_lcm(den, w.den());
  auto lift = [&](const RatFunc& x) {
    return x.num() * den.divrem(x.den()).first;
  };
  ZPoly target = lift(v);
  std::vector<ZPoly> cols;
  int maxdeg = target.deg();
  for (const auto& w : basis) {
    cols.push_back(lift(w));
    maxdeg = std::max(maxdeg, cols.back().deg());
  }
  Mat A(maxdeg + 1, Vec(basis.size(), ParamElem::zero(fld)));
  Vec rhs(maxdeg + 1, ParamElem::zero(fld));
  for (int d = 0; d <= maxdeg; ++d) {
    if (d <= target.deg()) rhs[d] = target.coeff(d);
    for (size_t j = 0; j < cols.size(); ++j)
      if (d <= cols[j].deg()) A[d][j] = cols[j].coeff(d);
  }
  return solve_linear(A, rhs, fld).consistent;
}

inline bool same_span(const std::vector<RatFunc>& a,
                      const std::vector<RatFunc>& b, const FieldPtr& fld) {
  if (a.size() != b.size()) return false;
  for (const auto& v : a)
    if (!in_span(v, b, fld)) return false;
  for (const auto& v : b)
    if (!in_span(v, a, fld)) return false;
  return true;
}

inline ParamElem random_coeff(std::mt19937& rng, const FieldPtr& fld) {
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> kind(0, 4);
  if (fld->nparams() > 0 && kind(rng) == 0) {
    std::uniform_int_distribution<int> pick(0, fld->nparams() - 1);
    ParamElem t = ParamElem::param(fld, pick(rng));
    int c = small(rng);
    return t * ParamElem::from_long(fld, c == 0 ? 1 : c);
  }
  return ParamElem::from_long(fld, small(rng));
}

inline ZPoly random_numerator(std::mt19937& rng, const FieldPtr& fld, int maxdeg) {
  std::uniform_int_distribution<int> dd(0, maxdeg);
  int d = dd(rng);
  std::vector<ParamElem> c;
  for (int k = 0; k <= d; ++k) c.push_back(random_coeff(rng, fld));
  ZPoly p(fld, std::move(c));
  if (p.is_zero()) return ZPoly::one(fld);
  return p;
}

// denominators built from z and z-1 with total pole order <= 3
inline ZPoly random_denominator(std::mt19937& rng, const FieldPtr& fld) {
  std::uniform_int_distribution<int> da(0, 3);
  int a = da(rng);
  std::uniform_int_distribution<int> db(0, 3 - a);
  int b = db(rng);
  ZPoly den = ZPoly::one(fld);
  ZPoly z = ZPoly::z(fld);
  ZPoly zm1 = z - ZPoly::one(fld);
  for (int i = 0; i < a; ++i) den = den * z;
  for (int i = 0; i < b; ++i) den = den * zm1;
  return den;
}

inline RatFunc random_ratfunc(std::mt19937& rng, const FieldPtr& fld, int maxdeg) {
  return RatFunc(random_numerator(rng, fld, maxdeg),
                 random_denominator(rng, fld));
}

// M composed after p d/dz - p', which annihilates p; M has order m with a
// polynomial top coefficient, so the result has order m + 1 and a kernel
// that provably contains p.
inline LinDiffOp random_op_with_kernel(std::mt19937& rng, const FieldPtr& fld,
                                       const ZPoly& p, int m) {
  std::vector<RatFunc> d1{RatFunc::from_poly(p)};
  std::vector<RatFunc> d0{-RatFunc::from_poly(p.derivative_z())};
  for (int k = 1; k <= m; ++k) {
    d1.push_back(d1.back().derivative_z());
    d0.push_back(d0.back().derivative_z());
  }
  std::vector<RatFunc> res(m + 2, RatFunc::zero(fld));
  std::uniform_int_distribution<int> top(1, 3);
  for (int i = 0; i <= m; ++i) {
    // constant top coefficient: the composed lead is then a multiple of p
    // itself, whose roots the pole analysis can always split
    RatFunc mi = i == m ? RatFunc::constant(ParamElem::from_long(fld, top(rng)))
                        : random_ratfunc(rng, fld, 2);
    long binom = 1;
    for (int k = 0; k <= i; ++k) {
      if (k > 0) binom = binom * (i - k + 1) / k;
      RatFunc w = mi * RatFunc::constant(ParamElem::from_long(fld, binom));
      res[i + 1 - k] = res[i + 1 - k] + w * d1[k];
      res[i - k] = res[i - k] + w * d0[k];
    }
  }
  return LinDiffOp(res);
}

}  // namespace fuzz_detail

inline FuzzStats run_solver_oracle_fuzz(int n_instances, unsigned seed = 20260814u,
                                        std::ostream* progress = nullptr) {
  using namespace fuzz_detail;
  FuzzStats stats;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> nparams_d(0, 2);
  std::uniform_int_distribution<int> order_d(1, 3);
  std::uniform_int_distribution<int> rhs_kind_d(0, 2);
  std::uniform_int_distribution<int> plant_d(0, 3);
  const std::vector<std::string> names{"t0", "t1"};

  for (int iter = 0; iter < n_instances; ++iter) {
    int np = nparams_d(rng);
    FieldPtr fld = std::make_shared<Field>(
        std::vector<std::string>(names.begin(), names.begin() + np));
    int order = order_d(rng);
    bool planted_kernel = plant_d(rng) == 0;
    RatFunc kernel_witness = RatFunc::zero(fld);
    LinDiffOp L = [&] {
      if (planted_kernel) {
        ZPoly p = random_numerator(rng, fld, 2);
        kernel_witness = RatFunc::from_poly(p);
        return random_op_with_kernel(rng, fld, p, order - 1);
      }
      std::vector<RatFunc> coeffs;
      for (int i = 0; i < order; ++i)
        coeffs.push_back(random_ratfunc(rng, fld, 4));
      // nonzero leading coefficient, kept simple so bounds stay tame
      coeffs.push_back(RatFunc::from_poly(random_numerator(rng, fld, 1)));
      return LinDiffOp(coeffs);
    }();

    RatFunc rhs = RatFunc::zero(fld);
    int kind = rhs_kind_d(rng);
    if (kind == 1) {
      // plant a polynomial solution so the forced rhs keeps pole orders
      // within the instance ranges
      rhs = L.apply(RatFunc::from_poly(random_numerator(rng, fld, 2)));
    } else if (kind == 2) {
      rhs = random_ratfunc(rng, fld, 2);
    }

    if (progress)
      (*progress) << "instance " << iter << " np=" << np << " order=" << order
                  << " kind=" << kind << " ..." << std::endl;
    auto t0 = std::chrono::steady_clock::now();
    RationalSolutions fast = rational_solutions(L, rhs);
    // one extra multiplicity layer beyond the solver's own bound, so the
    // oracle box strictly contains everything the solver claims to cover
    int bound = std::max(max_solver_bound(L, {rhs}) + 1, 3);
    RationalSolutions slow = oracle_rational_solutions(L, rhs, bound);
    if (progress) {
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
      (*progress) << "  bound=" << bound << " " << ms << "ms" << std::endl;
    }

    ++stats.instances;
    auto complain = [&](const std::string& what) {
      std::ostringstream os;
      os << "instance " << iter << " (order " << order << ", " << np
         << " params): " << what;
      stats.issues.push_back(os.str());
    };

    if (kind == 1 && !fast.found_particular)
      complain("planted particular solution missed");
    if (planted_kernel && !in_span(kernel_witness, fast.kernel, fld))
      complain("planted kernel element missed");
    if (fast.found_particular != slow.found_particular) {
      complain("solver and oracle disagree on solvability");
      continue;
    }
    if (fast.found_particular) {
      ++stats.with_particular;
      if (L.apply(fast.particular) != rhs) complain("solver particular fails");
      if (L.apply(slow.particular) != rhs) complain("oracle particular fails");
      // particulars may differ by a kernel element
      if (!in_span(fast.particular - slow.particular, slow.kernel, fld))
        complain("particulars differ by a non-kernel element");
    }
    if (fast.kernel.size() != slow.kernel.size()) {
      complain("kernel dimensions differ");
      continue;
    }
    stats.kernel_elements += (int)fast.kernel.size();
    for (const auto& k : fast.kernel)
      if (!L.apply(k).is_zero()) complain("solver kernel element fails");
    for (const auto& k : slow.kernel)
      if (!L.apply(k).is_zero()) complain("oracle kernel element fails");
    if (!same_span(fast.kernel, slow.kernel, fld))
      complain("kernels are not mutual spans");
  }
  return stats;
}

}  // namespace parakov::testing
