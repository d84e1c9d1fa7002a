#include "parakov/linear_solve.hpp"

#include <optional>
#include <utility>
#include <vector>

#include "parakov/errors.hpp"

namespace parakov {

namespace {

// Fraction-free Gauss-Jordan for matrices whose entries avoid the radical
// tower. Rows are cleared to parameter polynomials and every update divides
// exactly by the previous pivot (Bareiss), so entries stay minor-sized
// instead of swelling through field-element gcds. After the last step every
// pivot row carries the same pivot value, and a single field division turns
// the matrix into the reduced echelon form, which is unique; the outputs
// therefore agree with the generic elimination below.
std::optional<LinearSolution> solve_base(const Mat& A, const Vec& b,
                                         const FieldPtr& fld) {
  size_t rows = A.size();
  size_t cols = rows ? A[0].size() : 0;
  int nv = fld->nparams();
  const MPoly one = MPoly::constant(nv, Rat(1));

  std::vector<std::vector<MPoly>> M(rows);
  for (size_t i = 0; i < rows; ++i) {
    MPoly common = one;
    auto admit = [&](const ParamElem& e) {
      if (!e.is_base()) return false;
      const MPoly& d = e.base_mrat().den;
      if (!d.is_constant())
        common = *(common * d).divide_exact(mpoly_gcd(common, d));
      return true;
    };
    for (size_t j = 0; j < cols; ++j)
      if (!admit(A[i][j])) return std::nullopt;
    if (!admit(b[i])) return std::nullopt;
    auto lift = [&](const ParamElem& e) {
      const MRat& m = e.base_mrat();
      return m.num * *common.divide_exact(m.den);
    };
    M[i].reserve(cols + 1);
    for (size_t j = 0; j < cols; ++j) M[i].push_back(lift(A[i][j]));
    M[i].push_back(lift(b[i]));
  }

  std::vector<int> pivot_of_col(cols, -1);
  size_t rank = 0;
  MPoly prev = one;
  MPoly last = one;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pr = rank;
    while (pr < rows && M[pr][col].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(M[pr], M[rank]);
    const MPoly piv = M[rank][col];
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      MPoly fac = std::move(M[i][col]);
      M[i][col] = MPoly(nv);
      for (size_t j = 0; j <= cols; ++j) {
        if (j == col) continue;
        auto q = (piv * M[i][j] - fac * M[rank][j]).divide_exact(prev);
        if (!q) return std::nullopt;
        M[i][j] = std::move(*q);
      }
    }
    prev = piv;
    last = piv;
    pivot_of_col[col] = static_cast<int>(rank);
    ++rank;
  }

  LinearSolution sol;
  sol.consistent = true;
  for (size_t i = rank; i < rows; ++i)
    if (!M[i][cols].is_zero()) sol.consistent = false;
  auto as_elem = [&](const MPoly& n) {
    return ParamElem::from_mrat(fld, MRat(n, last));
  };
  sol.particular.assign(cols, ParamElem::zero(fld));
  if (sol.consistent) {
    for (size_t col = 0; col < cols; ++col)
      if (pivot_of_col[col] >= 0)
        sol.particular[col] = as_elem(M[pivot_of_col[col]][cols]);
  }
  for (size_t fc = 0; fc < cols; ++fc) {
    if (pivot_of_col[fc] >= 0) continue;
    Vec v(cols, ParamElem::zero(fld));
    v[fc] = ParamElem::one(fld);
    for (size_t col = 0; col < cols; ++col)
      if (pivot_of_col[col] >= 0) v[col] = -as_elem(M[pivot_of_col[col]][fc]);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace

LinearSolution solve_linear(Mat A, Vec b, const FieldPtr& fld) {
  size_t rows = A.size();
  size_t cols = rows ? A[0].size() : 0;
  if (b.size() != rows) fail(ErrorCode::internal_error, "rhs size mismatch");
  if (auto fast = solve_base(A, b, fld)) return *fast;
  std::vector<int> pivot_of_col(cols, -1);
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pr = rank;
    while (pr < rows && A[pr][col].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(A[pr], A[rank]);
    std::swap(b[pr], b[rank]);
    ParamElem inv = A[rank][col].inverse();
    for (size_t j = col; j < cols; ++j) A[rank][j] = A[rank][j] * inv;
    b[rank] = b[rank] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || A[i][col].is_zero()) continue;
      ParamElem factor = A[i][col];
      for (size_t j = col; j < cols; ++j)
        A[i][j] = A[i][j] - factor * A[rank][j];
      b[i] = b[i] - factor * b[rank];
    }
    pivot_of_col[col] = static_cast<int>(rank);
    ++rank;
  }
  LinearSolution sol;
  sol.consistent = true;
  for (size_t i = rank; i < rows; ++i)
    if (!b[i].is_zero()) sol.consistent = false;
  sol.particular.assign(cols, ParamElem::zero(fld));
  if (sol.consistent) {
    for (size_t col = 0; col < cols; ++col)
      if (pivot_of_col[col] >= 0) sol.particular[col] = b[pivot_of_col[col]];
  }
  for (size_t fc = 0; fc < cols; ++fc) {
    if (pivot_of_col[fc] >= 0) continue;
    Vec v(cols, ParamElem::zero(fld));
    v[fc] = ParamElem::one(fld);
    for (size_t col = 0; col < cols; ++col)
      if (pivot_of_col[col] >= 0) v[col] = -A[pivot_of_col[col]][fc];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace parakov
