#pragma once

#include <string>
#include <utility>
#include <vector>

#include "parakov/kovacic.hpp"
#include "parakov/partial_fractions.hpp"

namespace parakov {

// Splitting of a Riccati witness f into simple-pole exponents plus the
// z-derivative of a rational tail: f = sum beta_j/(z - c_j) + dz(tail), so
// exp(int f) = prod (z - c_j)^beta_j * exp(tail).
struct ProductForm {
  std::vector<std::pair<ParamElem, ParamElem>> exponents;  // (pole, residue)
  RatFunc tail;
};
ProductForm product_form(const RatFunc& f);

struct GroupDescription {
  std::string tag;
  long order = 0;  // finite cyclic order when > 0
  std::vector<std::string> relations;
  std::vector<std::string> notes;
};

// Constraints on the diagonal character alpha of exp(int f). Relation strings
// write u[name] for (d/d name alpha)/alpha and D[name] for d/d name.
GroupDescription multiplicative_group(const ProductForm& pf, const FieldPtr& fld);

struct UnipotentData {
  bool has_rational_h = false;  // dz h - 2 f h = 1 solvable in K(z)
  RatFunc h;
  bool f_parameter_free = false;
  std::vector<std::string> diagnostics;
};
UnipotentData unipotent_part(const RatFunc& f);

GroupDescription case1_group(const Case1Certificate& cert, UnipotentData* uni_out);
GroupDescription case2_group(const Case2Certificate& cert);
GroupDescription case3_group(const Case3Certificate& cert);

}  // namespace parakov
