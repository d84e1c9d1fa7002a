#pragma once

#include <string>
#include <utility>
#include <vector>

#include "parakov/ratfunc.hpp"
#include "parakov/zpoly.hpp"

namespace parakov {

// L = sum_i coeffs[i] * dz^i acting on K(z).
class LinDiffOp {
 public:
  LinDiffOp() = default;
  explicit LinDiffOp(std::vector<RatFunc> coeffs);

  // dz^2 - r, the operator of Y'' = r Y.
  static LinDiffOp schrodinger(const RatFunc& r);
  // (1/2) dz^3 - 2 r dz - r', the variational operator whose rational
  // solutions b pair with parameter directions in the integrability space.
  static LinDiffOp variational(const RatFunc& r);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RatFunc& coeff(int i) const { return coeffs_[i]; }
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }
  const FieldPtr& field() const { return coeffs_.front().field(); }

  RatFunc apply(const RatFunc& y) const;

 private:
  std::vector<RatFunc> coeffs_;
};

// y'' + p y' + q y = 0 rewritten as Y'' = r Y via Y = y exp((1/2) int p):
// r = p^2/4 + p'/2 - q.
RatFunc to_normal_form(const RatFunc& p, const RatFunc& q);

// Pole order at infinity is deg den - deg num; the zero function gets a large
// even sentinel so the case screens treat it as a deep zero at infinity.
inline constexpr int kOrderAtInfinityOfZero = 1 << 30;

struct Singularities {
  std::vector<std::pair<ParamElem, int>> poles;  // (location, order), sorted
  int infinity_order = kOrderAtInfinityOfZero;
};

// May extend the radical tower to express quadratic pole locations.
Singularities singularities(const RatFunc& r);

struct Indicial {
  ZPoly poly;                      // polynomial in nu over the parameter field
  std::vector<long> integer_roots;  // parameter-independent integer roots
  std::vector<std::string> diagnostics;  // genericity notes
};

// Local exponents at a finite point via y = (z - alpha)^(-nu): integer roots
// nu > 0 are candidate pole orders of rational solutions.
Indicial indicial_at(const LinDiffOp& L, const ParamElem& alpha);
// At infinity via y = z^nu: integer roots are candidate growth degrees.
Indicial indicial_at_infinity(const LinDiffOp& L);

// min over i of (ord_alpha coeff_i - i): ord_alpha L(y) >= ord_alpha(y) + this.
int order_drop_at(const LinDiffOp& L, const ParamElem& alpha);
// max over i of (growth_inf coeff_i - i): growth L(y) <= growth(y) + this.
int growth_shift_at_infinity(const LinDiffOp& L);

}  // namespace parakov
