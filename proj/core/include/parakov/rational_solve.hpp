#pragma once

#include <string>
#include <vector>

#include "parakov/lindiffop.hpp"
#include "parakov/linear_solve.hpp"

namespace parakov {

struct AnsatzBounds {
  ZPoly denom;      // product of (z - alpha)^B over candidate poles
  int numdeg = -1;  // numerator degree bound; -1 means no candidate
  std::vector<std::string> diagnostics;
};

// Pole and degree bounds for rational solutions of L(y) = combination of the
// right-hand sides, from local exponent data plus forcing by the rhs orders.
AnsatzBounds solver_bounds(const LinDiffOp& L, const std::vector<RatFunc>& rhs_list);

struct RationalSolutions {
  bool found_particular = false;
  RatFunc particular;
  std::vector<RatFunc> kernel;
  std::vector<std::string> diagnostics;
};

// All rational solutions of L(y) = rhs, poles confined to singularities of L
// and rhs with exponent-bounded orders.
RationalSolutions rational_solutions(const LinDiffOp& L, const RatFunc& rhs);

struct ParametricSolutions {
  struct Element {
    std::vector<ParamElem> a;
    RatFunc y;
  };
  std::vector<Element> basis;   // solutions with a nonzero parameter part
  std::vector<RatFunc> kernel;  // rational kernel of L (a = 0 part)
  std::vector<std::string> diagnostics;
};

// Solution space of L(y) = sum_i a_i rhs_i with a_i in the parameter field.
ParametricSolutions parametric_rational_solutions(const LinDiffOp& L,
                                                  const std::vector<RatFunc>& rhs_list);

// Independent cross-check with a crude uniform box: denominator is the
// product of every denominator factor (and cleared leading coefficient)
// raised to `bound`, numerator degree is bound + deg of that product.
RationalSolutions oracle_rational_solutions(const LinDiffOp& L, const RatFunc& rhs,
                                            int bound);

// Largest pole/degree bound the solver derived, used to size oracle boxes.
int max_solver_bound(const LinDiffOp& L, const std::vector<RatFunc>& rhs_list);

}  // namespace parakov
