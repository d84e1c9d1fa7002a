#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parakov/mpoly.hpp"

namespace parakov {

// Normalized fraction of parameter polynomials.
// Invariants: den != 0, gcd(num, den) constant, den has grlex-leading
// coefficient 1; zero is 0/1.
struct MRat {
  MPoly num, den;

  MRat() = default;
  MRat(MPoly n, MPoly d);
  static MRat from_poly(MPoly p);
  static MRat constant(int nvars, const Rat& c);

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const MRat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const MRat& o) const { return !(*this == o); }

  MRat operator-() const;
  MRat operator+(const MRat& o) const;
  MRat operator-(const MRat& o) const;
  MRat operator*(const MRat& o) const;
  MRat inverse() const;
  MRat derivative(int var) const;
  std::optional<Rat> as_rat() const;
  std::string to_string(const std::vector<std::string>& names) const;
};

class ParamElem;

// Parameter field: Q(t_0..t_{n-1}) extended by a tower of square roots.
// Generators are appended by adjoin_sqrt and never removed, so existing
// elements stay valid as the tower grows. Not thread-safe while adjoining.
class Field {
 public:
  explicit Field(std::vector<std::string> param_names);

  int nparams() const { return static_cast<int>(params_.size()); }
  const std::vector<std::string>& param_names() const { return params_; }
  int ngens() const { return static_cast<int>(gens_.size()); }
  // Coordinates of generator g's radicand over the first g generators.
  const std::vector<MRat>& gen_radicand(int g) const { return gens_[g].radicand; }
  const std::string& gen_display(int g) const { return gens_[g].display; }

  struct Gen {
    std::vector<MRat> radicand;  // size 2^g
    std::string display;         // canonical "sqrt(...)" print
  };

  std::vector<Gen> gens_;
  std::vector<std::string> params_;
};

using FieldPtr = std::shared_ptr<Field>;

// Element of the tower field. Coordinates over products of the first
// `level` generators; coords.size() == 2^level, trimmed so the top half is
// not identically zero (canonical form).
class ParamElem {
 public:
  ParamElem() = default;
  ParamElem(FieldPtr fld, std::vector<MRat> coords);

  static ParamElem zero(const FieldPtr& f);
  static ParamElem one(const FieldPtr& f);
  static ParamElem from_rat(const FieldPtr& f, const Rat& c);
  static ParamElem from_long(const FieldPtr& f, long v);
  static ParamElem param(const FieldPtr& f, int index);
  static ParamElem from_mrat(const FieldPtr& f, MRat m);

  const FieldPtr& field() const { return fld_; }
  int level() const;
  const std::vector<MRat>& coords() const { return c_; }

  bool is_zero() const;
  bool operator==(const ParamElem& o) const;
  bool operator!=(const ParamElem& o) const { return !(*this == o); }

  ParamElem operator-() const;
  ParamElem operator+(const ParamElem& o) const;
  ParamElem operator-(const ParamElem& o) const;
  ParamElem operator*(const ParamElem& o) const;
  ParamElem operator/(const ParamElem& o) const;
  ParamElem inverse() const;
  ParamElem pow(long e) const;

  // d/dt_var with the generator chain rule d(s)/s = d(rad)/(2 rad).
  ParamElem derivative(int var) const;

  // Rational value if the element lies in Q.
  std::optional<Rat> as_rat() const;
  // True if the element lies in the base field Q(t...) (no radicals).
  bool is_base() const;
  // Base-field value as a fraction; requires is_base().
  const MRat& base_mrat() const;

  // Square root within the current tower, if one exists (canonical sign:
  // first nonzero coordinate has positive leading rational).
  std::optional<ParamElem> sqrt_in_tower() const;

  std::string to_string() const;

 private:
  FieldPtr fld_;
  std::vector<MRat> c_;  // size is a power of two

  void trim();
};

// sqrt(radicand): returns an in-tower square root when one exists, reuses a
// generator when radicand differs from its radicand by a square, otherwise
// appends a new generator. Errors on zero radicand.
ParamElem adjoin_sqrt(const FieldPtr& f, const ParamElem& radicand);

}  // namespace parakov
