#pragma once

#include <vector>

#include "parakov/param_elem.hpp"

namespace parakov {

using Vec = std::vector<ParamElem>;
using Mat = std::vector<Vec>;

struct LinearSolution {
  bool consistent = false;
  Vec particular;              // free variables set to zero
  std::vector<Vec> nullspace;  // echelon basis of the homogeneous space
};

// Exact Gauss-Jordan over the parameter field. Earlier columns are preferred
// as pivots, so nullspace vectors are echelon in the later (free) columns.
LinearSolution solve_linear(Mat A, Vec b, const FieldPtr& fld);

}  // namespace parakov
