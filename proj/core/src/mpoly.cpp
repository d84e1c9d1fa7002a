#include "parakov/mpoly.hpp"

#include <algorithm>
#include <map>

#include "parakov/errors.hpp"

namespace parakov {

int mono_cmp(const Mono& a, const Mono& b) {
  unsigned da = 0, db = 0;
  for (unsigned e : a) da += e;
  for (unsigned e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  // Lexicographic tie-break, highest variable index most significant.
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

MPoly MPoly::constant(int nvars, const Rat& c) {
  MPoly p(nvars);
  if (sgn(c) != 0) p.terms_.push_back({Mono(nvars, 0), c});
  return p;
}

MPoly MPoly::variable(int nvars, int index) {
  MPoly p(nvars);
  Mono m(nvars, 0);
  m.at(index) = 1;
  p.terms_.push_back({m, Rat(1)});
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree() == 0);
}

Rat MPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) fail(ErrorCode::internal_error, "constant_value on non-constant");
  return terms_.front().second;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (unsigned e : terms_.front().first) d += e;
  return static_cast<int>(d);
}

int MPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
  return d;
}

int MPoly::top_var() const {
  int v = -1;
  for (const auto& [m, c] : terms_)
    for (int i = static_cast<int>(m.size()) - 1; i > v; --i)
      if (m[i] > 0) v = i;
  return v;
}

void MPoly::add_term(const Mono& m, const Rat& c) {
  terms_.push_back({m, c});
}

void MPoly::normalize_sorted() {
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& a, const auto& b) { return mono_cmp(a.first, b.first) > 0; });
  std::vector<std::pair<Mono, Rat>> out;
  for (auto& [m, c] : terms_) {
    if (!out.empty() && mono_cmp(out.back().first, m) == 0) {
      out.back().second += c;
      if (sgn(out.back().second) == 0) out.pop_back();
    } else if (sgn(c) != 0) {
      out.push_back({m, c});
    }
  }
  terms_ = std::move(out);
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  r.terms_ = terms_;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  // Merge of two sorted term lists.
  MPoly r(nvars_);
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && mono_cmp(terms_[i].first, o.terms_[j].first) > 0)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() ||
               mono_cmp(terms_[i].first, o.terms_[j].first) < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rat c = terms_[i].second + o.terms_[j].second;
      if (sgn(c) != 0) r.terms_.push_back({terms_[i].first, c});
      ++i;
      ++j;
    }
  }
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(nvars_);
  if (terms_.empty() || o.terms_.empty()) return r;
  std::map<Mono, Rat, decltype([](const Mono& a, const Mono& b) {
             return mono_cmp(a, b) > 0;
           })>
      acc;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Mono m(nvars_);
      for (int k = 0; k < nvars_; ++k) m[k] = ma[k] + mb[k];
      acc[m] += ca * cb;
    }
  }
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) r.terms_.push_back({m, c});
  return r;
}

MPoly MPoly::mul_rat(const Rat& c) const {
  MPoly r(nvars_);
  if (sgn(c) == 0) return r;
  r.terms_ = terms_;
  for (auto& [m, k] : r.terms_) k *= c;
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = MPoly::constant(nvars_, Rat(1));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

MPoly MPoly::derivative(int var) const {
  MPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Mono d = m;
    d[var] -= 1;
    r.terms_.push_back({d, c * Rat(static_cast<long>(m[var]))});
  }
  r.normalize_sorted();
  return r;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (int k = 0; k < nvars_; ++k)
      for (unsigned e = 0; e < m[k]; ++e) term *= point[k];
    acc += term;
  }
  return acc;
}

MPoly MPoly::eval_var(int var, const Rat& value) const {
  MPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Rat coef = c;
    for (unsigned e = 0; e < m[var]; ++e) coef *= value;
    Mono mm = m;
    mm[var] = 0;
    r.terms_.push_back({mm, coef});
  }
  r.normalize_sorted();
  return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& o) const {
  if (o.is_zero()) return std::nullopt;
  MPoly rem = *this;
  MPoly quo(nvars_);
  const Mono& lmb = o.leading_mono();
  while (!rem.is_zero()) {
    const Mono& lma = rem.leading_mono();
    Mono q(nvars_);
    for (int k = 0; k < nvars_; ++k) {
      if (lma[k] < lmb[k]) return std::nullopt;
      q[k] = lma[k] - lmb[k];
    }
    MPoly t(nvars_);
    t.terms_.push_back({q, rem.leading_coeff() / o.leading_coeff()});
    quo = quo + t;
    rem = rem - t * o;
  }
  return quo;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return mul_rat(Rat(1) / leading_coeff());
}

namespace {

// Dense view of p as a univariate polynomial in variable v with MPoly
// coefficients that do not involve v.
std::vector<MPoly> uv_coeffs(const MPoly& p, int v) {
  std::vector<MPoly> cs(static_cast<size_t>(p.degree_in(v)) + 1,
                        MPoly(p.nvars()));
  for (const auto& [m, c] : p.terms()) {
    Mono mm = m;
    unsigned d = mm[v];
    mm[v] = 0;
    cs[d].add_term(mm, c);
  }
  for (auto& cp : cs) cp.normalize_sorted();
  return cs;
}

MPoly from_uv(const std::vector<MPoly>& cs, int v, int nvars) {
  MPoly r(nvars);
  for (size_t d = 0; d < cs.size(); ++d) {
    for (const auto& [m, c] : cs[d].terms()) {
      Mono mm = m;
      mm[v] += static_cast<unsigned>(d);
      r.add_term(mm, c);
    }
  }
  r.normalize_sorted();
  return r;
}

int uv_deg(const std::vector<MPoly>& cs) {
  for (int d = static_cast<int>(cs.size()) - 1; d >= 0; --d)
    if (!cs[d].is_zero()) return d;
  return -1;
}

// Pseudo-remainder of a by b in variable v: lc(b)^(da-db+1) * a mod b.
MPoly pseudo_rem(const MPoly& a, const MPoly& b, int v, int nvars) {
  auto A = uv_coeffs(a, v);
  auto B = uv_coeffs(b, v);
  int da = uv_deg(A), db = uv_deg(B);
  if (da < db) return a;
  MPoly lb = B[db];
  int steps = da - db + 1;
  for (int s = 0; s < steps; ++s) {
    int dA = uv_deg(A);
    if (dA < db) {
      // Scale remaining times to keep the classical pseudo-remainder value.
      for (auto& c : A) c = c * lb;
      continue;
    }
    MPoly la = A[dA];
    // A := lb*A - la * x^(dA-db) * B
    std::vector<MPoly> next(A.size(), MPoly(nvars));
    for (int i = 0; i <= dA; ++i) next[i] = A[i] * lb;
    for (int i = 0; i <= db; ++i)
      next[i + dA - db] = next[i + dA - db] - la * B[i];
    A = std::move(next);
  }
  return from_uv(A, v, nvars);
}

MPoly content_in(const MPoly& p, int v) {
  auto cs = uv_coeffs(p, v);
  MPoly g(p.nvars());
  for (const auto& c : cs) g = mpoly_gcd(g, c);
  return g;
}

}  // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant())
    return MPoly::constant(a.nvars(), Rat(1));
  int v = std::max(a.top_var(), b.top_var());
  if (a.degree_in(v) == 0 || b.degree_in(v) == 0) {
    // One side is free of the top variable; gcd divides its content.
    const MPoly& free_side = a.degree_in(v) == 0 ? a : b;
    const MPoly& other = a.degree_in(v) == 0 ? b : a;
    return mpoly_gcd(free_side, content_in(other, v));
  }
  MPoly ca = content_in(a, v);
  MPoly cb = content_in(b, v);
  MPoly pa = *a.divide_exact(ca);
  MPoly pb = *b.divide_exact(cb);
  MPoly c = mpoly_gcd(ca, cb);

  // Primitive PRS on the primitive parts.
  MPoly A = pa, B = pb;
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  MPoly g(a.nvars());
  while (true) {
    MPoly r = pseudo_rem(A, B, v, a.nvars());
    if (r.is_zero()) {
      g = *B.divide_exact(content_in(B, v));
      break;
    }
    if (r.degree_in(v) == 0) {
      g = MPoly::constant(a.nvars(), Rat(1));
      break;
    }
    A = B;
    B = *r.divide_exact(content_in(r, v));
  }
  return (c * g).monic();
}

std::optional<MPoly> MPoly::sqrt_exact() const {
  if (is_zero()) return MPoly(nvars_);
  if (is_constant()) {
    auto r = rat_sqrt(constant_value());
    if (!r) return std::nullopt;
    return MPoly::constant(nvars_, *r);
  }
  int v = top_var();
  auto cs = uv_coeffs(*this, v);
  int d = uv_deg(cs);
  if (d % 2 != 0) return std::nullopt;
  int m = d / 2;
  auto lead = cs[d].sqrt_exact();
  if (!lead) return std::nullopt;
  std::vector<MPoly> h(static_cast<size_t>(m) + 1, MPoly(nvars_));
  h[m] = *lead;
  MPoly two_lead = lead->mul_rat(Rat(2));
  for (int k = m - 1; k >= 0; --k) {
    // Coefficient of x^(m+k) in (*this - h_partial^2).
    MPoly c = cs[m + k];
    for (int i = k + 1; i <= m; ++i) {
      int j = m + k - i;
      if (j > m || j <= k) continue;
      c = c - h[i] * h[j];
    }
    auto q = c.divide_exact(two_lead);
    if (!q) return std::nullopt;
    h[k] = *q;
  }
  MPoly cand = from_uv(h, v, nvars_);
  if (cand * cand == *this) return cand;
  return std::nullopt;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat mag = abs(c);
    bool neg = sgn(c) < 0;
    std::string mono;
    for (int k = 0; k < nvars_; ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (m[k] > 1) mono += "^" + std::to_string(m[k]);
    }
    std::string body;
    if (mono.empty()) {
      body = rat_to_string(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = rat_to_string(mag) + "*" + mono;
    }
    if (first) {
      out += (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace parakov
