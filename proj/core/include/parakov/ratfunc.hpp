#pragma once

#include <string>
#include <utility>

#include "parakov/zpoly.hpp"

namespace parakov {

// Element of K(z), K the parameter field tower. Invariants: den != 0,
// gcd(num, den) constant, den monic; zero is 0/1.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(ZPoly num, ZPoly den);

  static RatFunc zero(const FieldPtr& f);
  static RatFunc one(const FieldPtr& f);
  static RatFunc z(const FieldPtr& f);
  static RatFunc constant(const ParamElem& c);
  static RatFunc from_poly(const ZPoly& p);

  const FieldPtr& field() const { return num_.field(); }
  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.deg() == 0; }
  bool is_constant() const { return is_poly() && num_.deg() <= 0; }
  ParamElem constant_value() const;  // requires is_constant

  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;
  RatFunc pow(long e) const;

  RatFunc derivative_z() const;
  RatFunc derivative_t(int var) const;

  // Order of vanishing at z = alpha: multiplicity in num minus in den.
  int order_at(const ParamElem& alpha) const;
  // Order at infinity: deg den - deg num (positive when vanishing there).
  int order_at_infinity() const;

  RatFunc eval_shifted() const = delete;
  ParamElem eval(const ParamElem& at) const;  // den(at) must be nonzero

  std::string to_string() const;

 private:
  ZPoly num_;
  ZPoly den_;
  void normalize();
  // num/den already in canonical form, skip the gcd
  static RatFunc reduced(ZPoly num, ZPoly den);
};

// A derivation on K(z): either d/dz or d/dt_i (acting on coefficients).
struct Derivation {
  enum class Kind { dz, dt };
  Kind kind = Kind::dz;
  int var = -1;  // parameter index when kind == dt

  static Derivation d_z() { return {Kind::dz, -1}; }
  static Derivation d_t(int i) { return {Kind::dt, i}; }

  RatFunc apply(const RatFunc& f) const {
    return kind == Kind::dz ? f.derivative_z() : f.derivative_t(var);
  }
  ZPoly apply(const ZPoly& p) const {
    return kind == Kind::dz ? p.derivative_z() : p.derivative_t(var);
  }
  ParamElem apply(const ParamElem& c) const {
    return kind == Kind::dz ? ParamElem::zero(c.field()) : c.derivative(var);
  }
  std::string name() const {
    return kind == Kind::dz ? "dz" : "dt" + std::to_string(var + 1);
  }
};

}  // namespace parakov
