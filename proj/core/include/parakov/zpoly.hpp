#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parakov/param_elem.hpp"

namespace parakov {

// Dense univariate polynomial in z over the parameter field.
// Invariant: no trailing zero coefficients (canonical), deg(0) = -1.
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(FieldPtr fld, std::vector<ParamElem> coeffs);

  static ZPoly zero(const FieldPtr& f);
  static ZPoly one(const FieldPtr& f);
  static ZPoly z(const FieldPtr& f);
  static ZPoly constant(ParamElem c);
  static ZPoly monomial(ParamElem c, int deg);

  const FieldPtr& field() const { return fld_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  ParamElem coeff(int k) const;
  const ParamElem& lc() const;
  const std::vector<ParamElem>& coeffs() const { return c_; }

  bool operator==(const ZPoly& o) const;
  bool operator!=(const ZPoly& o) const { return !(*this == o); }

  ZPoly operator-() const;
  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  ZPoly mul_elem(const ParamElem& c) const;
  ZPoly pow(unsigned e) const;

  // Quotient and remainder (field coefficients).
  std::pair<ZPoly, ZPoly> divrem(const ZPoly& d) const;

  ZPoly derivative_z() const;
  ZPoly derivative_t(int var) const;
  ParamElem eval(const ParamElem& at) const;
  // p(z + shift)
  ZPoly taylor_shift(const ParamElem& shift) const;
  ZPoly monic() const;

  std::string to_string() const;

 private:
  FieldPtr fld_;
  std::vector<ParamElem> c_;  // ascending powers

  void trim();
};

// Monic gcd (Euclid over the coefficient field); gcd(0,0) = 0.
ZPoly zpoly_gcd(ZPoly a, ZPoly b);

// Exact square root if p is a square in K[z].
std::optional<ZPoly> zpoly_sqrt(const ZPoly& p);

// Yun square-free decomposition: list of (monic square-free factor,
// multiplicity), pairwise coprime, product * lc == p.
std::vector<std::pair<ZPoly, int>> squarefree_decompose(const ZPoly& p);

}  // namespace parakov
