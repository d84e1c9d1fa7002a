#pragma once

#include <array>
#include <string>
#include <vector>

#include "parakov/rational_solve.hpp"

namespace parakov {

struct DSpaceElement {
  std::vector<ParamElem> a;  // coefficients of the parameter derivations
  RatFunc b;
};

using Connection = std::array<std::array<RatFunc, 2>, 2>;

struct ConnectionCertificate {
  Connection B;
  bool zero_curvature = false;
};

struct DSpace {
  std::vector<DSpaceElement> basis;          // echelon in the a-part, primitive scaling
  std::vector<ConnectionCertificate> certs;  // one per basis element
  std::vector<RatFunc> kernel;               // rational kernel of the variational operator
  std::vector<std::string> diagnostics;
};

// Maximal space of parameter directions sum_i a_i d/dt_i that prolong to a
// flat connection: witnesses b with (1/2)b''' - 2 r b' - r' b + sum_i a_i dr/dt_i = 0.
DSpace integrability_space(const RatFunc& r);

// Trace-zero gauge: B = [[-b'/2, b], [b r - b''/2, b'/2]].
ConnectionCertificate reconstruct_connection(const RatFunc& r, const DSpaceElement& e);

// Flatness of the pair (dz + A, D + B) for A = [[0,1],[r,0]] and
// D = sum_i a_i d/dt_i: checks D(A) - dz(B) = [B, A] entrywise.
bool verify_zero_curvature(const RatFunc& r, const std::vector<ParamElem>& a,
                           const Connection& B);

// Joint primitive normalization of (a, b): clears coordinate denominators,
// divides by the content, and fixes the sign of the leading entry.
void canonical_scale(std::vector<ParamElem>& a, RatFunc& b);

}  // namespace parakov
