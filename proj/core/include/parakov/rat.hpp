#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "parakov/errors.hpp"

namespace parakov {

// Exact rational scalar. mpq_class is kept canonicalized by GMP as long as
// values are produced through arithmetic; explicit construction from raw
// num/den goes through make_rat below.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) fail(ErrorCode::division_by_zero, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

// Integer value when q is an integer that fits in long.
inline std::optional<long> rat_to_long(const Rat& q) {
  if (!rat_is_integer(q)) return std::nullopt;
  if (!q.get_num().fits_slong_p()) return std::nullopt;
  return q.get_num().get_si();
}

// Exact square root of a rational if it is a perfect square (and >= 0).
inline std::optional<Rat> rat_sqrt(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace parakov
