#pragma once

#include <vector>

#include "parakov/ratfunc.hpp"

namespace parakov {

// First nterms coefficients of the power series num/den; requires den[0] != 0.
std::vector<ParamElem> series_div(const std::vector<ParamElem>& num,
                                  const std::vector<ParamElem>& den, int nterms,
                                  const FieldPtr& fld);

// Laurent coefficients c_k of (z - alpha)^k for k in [k_lo, k_hi], indexed
// by k - k_lo.
std::vector<ParamElem> laurent_at(const RatFunc& f, const ParamElem& alpha,
                                  int k_lo, int k_hi);

// Laurent coefficients c_k of z^k in the expansion at infinity (descending
// powers of z) for k in [k_lo, k_hi], indexed by k - k_lo.
std::vector<ParamElem> laurent_at_infinity(const RatFunc& f, int k_lo, int k_hi);

}  // namespace parakov
