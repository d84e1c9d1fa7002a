#pragma once

#include <utility>
#include <vector>

#include "parakov/ratfunc.hpp"

namespace parakov {

// Roots of den inside (an extension of) the radical tower, with multiplicity,
// sorted by printed location. Linear factors give roots directly; quadratic
// factors adjoin the square root of their discriminant; higher-degree factors
// are peeled by integer roots in [-64, 64] and must reduce to degree <= 2,
// otherwise an unsupported_denominator error is raised.
std::vector<std::pair<ParamElem, int>> denominator_roots(const ZPoly& den);

struct PoleTerm {
  ParamElem location;
  int order;
  // principal[k] multiplies (z - location)^-(k+1), k = 0 .. order-1.
  std::vector<ParamElem> principal;
};

struct PartialFractions {
  ZPoly poly_part;
  std::vector<PoleTerm> poles;
};

// Exact decomposition over the (possibly extended) tower:
//   f = poly_part + sum over poles of sum_k principal[k]/(z-loc)^(k+1).
PartialFractions partial_fractions(const RatFunc& f);

// Recombine a decomposition (testing aid).
RatFunc recombine(const PartialFractions& pf, const FieldPtr& fld);

}  // namespace parakov
