#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parakov/rat.hpp"

namespace parakov {

// Exponent vector for the parameter variables t_0..t_{n-1}.
using Mono = std::vector<unsigned>;

// Graded lexicographic order with t_0 < t_1 < ... < t_{n-1}:
// total degree first, ties broken lexicographically from the highest index.
int mono_cmp(const Mono& a, const Mono& b);

// Multivariate polynomial over Q in the parameter variables.
// Invariants: terms sorted strictly descending in grlex, no zero coefficients,
// all exponent vectors have size nvars.
class MPoly {
 public:
  MPoly() : nvars_(0) {}
  explicit MPoly(int nvars) : nvars_(nvars) {}
  static MPoly constant(int nvars, const Rat& c);
  static MPoly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant value; requires is_constant().
  Rat constant_value() const;

  const std::vector<std::pair<Mono, Rat>>& terms() const { return terms_; }

  // Leading term under grlex; requires !is_zero().
  const Mono& leading_mono() const { return terms_.front().first; }
  const Rat& leading_coeff() const { return terms_.front().second; }

  int total_degree() const;
  int degree_in(int var) const;
  // Highest variable index with positive degree, or -1 if constant.
  int top_var() const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly mul_rat(const Rat& c) const;
  MPoly pow(unsigned e) const;
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly derivative(int var) const;
  Rat eval(const std::vector<Rat>& point) const;
  // Partial evaluation of a single variable at a rational value.
  MPoly eval_var(int var, const Rat& value) const;

  // Exact division; nullopt unless o divides *this exactly.
  std::optional<MPoly> divide_exact(const MPoly& o) const;

  // Exact square root, if *this is a square in Q[t...].
  std::optional<MPoly> sqrt_exact() const;

  // Canonical associate: divide by the grlex-leading rational coefficient.
  MPoly monic() const;

  std::string to_string(const std::vector<std::string>& names) const;

  // Used by builders; restores invariants.
  void add_term(const Mono& m, const Rat& c);
  void normalize_sorted();

 private:
  int nvars_;
  std::vector<std::pair<Mono, Rat>> terms_;
};

// gcd over Q[t...]; result is monic under grlex (gcd(0,0) = 0).
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

}  // namespace parakov
