#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parakov/lindiffop.hpp"
#include "parakov/ratfunc.hpp"

namespace parakov {

// Which solution classes survive the pole/infinity order screen.
struct CaseScreen {
  bool case1 = false;
  bool case2 = false;
  bool case3 = false;
  std::vector<std::string> notes;
};
CaseScreen necessary_conditions(const Singularities& s);

// Hyperexponential witness: f with dz f + f^2 = r, solution exp(int f).
struct Case1Certificate {
  RatFunc f;
};

// Quadratic witness: both roots of w^2 + a w + b solve the Riccati equation;
// discriminant = a^2 - 4b is a non-square in K(z).
struct Case2Certificate {
  RatFunc a, b, discriminant;
};

// Algebraic witness: monic minimal polynomial of w = y'/y of degree n over
// K(z), n in {4, 6, 12}; min_poly[i] multiplies w^i.
struct Case3Certificate {
  int n = 0;
  std::vector<RatFunc> min_poly;
};

struct KovacicResult {
  int case_id = 4;
  Singularities sing;
  CaseScreen screen;
  std::optional<Case1Certificate> case1;
  std::optional<Case2Certificate> case2;
  std::optional<Case3Certificate> case3;
  std::vector<std::string> trace;
};

// Full classification of Y'' = r Y over the parameter tower. Certificates
// are verified exactly before being returned; enumeration order is
// deterministic (plus sign before minus, poles sorted by printed location,
// first verified certificate wins).
KovacicResult classify(const RatFunc& r);

std::optional<Case1Certificate> case1_search(const RatFunc& r, const Singularities& s,
                                             std::vector<std::string>* trace);
std::optional<Case2Certificate> case2_search(const RatFunc& r, const Singularities& s,
                                             std::vector<std::string>* trace);
std::optional<Case3Certificate> case3_search(const RatFunc& r, const Singularities& s,
                                             std::vector<std::string>* trace);

// Polynomial kernel of sum_i coeffs[i] dz^i up to the given degree.
std::vector<ZPoly> polynomial_kernel(const LinDiffOp& L, int maxdeg);

}  // namespace parakov
