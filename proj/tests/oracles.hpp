#pragma once
// Reference computations that share no code with the library: dense integer
// polynomials, Leibniz determinants and Sylvester resultants.
#include <algorithm>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using IntPoly = std::vector<mpz_class>;  // lowest degree first

inline IntPoly trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(out);
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(out);
}

inline IntPoly scale(const IntPoly& a, const mpz_class& c) {
  IntPoly out = a;
  for (auto& x : out) x *= c;
  return trim(out);
}

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

inline mpz_class det(const std::vector<std::vector<mpz_class>>& m) {
  if (m.empty()) return 1;
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class total = 0;
  do {
    mpz_class term = permutation_sign(perm);
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline IntPoly det(const std::vector<std::vector<IntPoly>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  IntPoly total;
  do {
    IntPoly term{mpz_class(permutation_sign(perm))};
    for (std::size_t i = 0; i < n; ++i) term = mul(term, m[i][perm[i]]);
    total = add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// A bivariate polynomial in (X, Y) as coefficients in Y of X-polynomials.
using BiPoly = std::vector<IntPoly>;

/// Res_Y(p(Y), q(X, Y)) via the Sylvester matrix; p has integer coefficients.
inline IntPoly resultant_y(const IntPoly& p, const BiPoly& q) {
  const std::size_t n = p.size() - 1;
  const std::size_t m = q.size() - 1;
  const std::size_t size = n + m;
  std::vector<std::vector<IntPoly>> syl(size, std::vector<IntPoly>(size));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) syl[r][r + k] = trim({p[n - k]});
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) syl[m + r][r + k] = q[m - k];
  return det(syl);
}

/// Monic polynomial over Z vanishing at x + y, for monic p(x) = 0, q(y) = 0.
inline IntPoly sum_polynomial(const IntPoly& p, const IntPoly& q) {
  // q(X - Y) expanded in powers of Y.
  const std::size_t m = q.size() - 1;
  BiPoly shifted(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    // (X - Y)^k = sum_j binom(k, j) X^{k-j} (-Y)^j
    for (std::size_t j = 0; j <= k; ++j) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), k, j);
      if (j % 2) b = -b;
      IntPoly xpow(k - j + 1);
      xpow[k - j] = b * q[k];
      shifted[j] = add(shifted[j], xpow);
    }
  }
  IntPoly r = resultant_y(p, shifted);
  if (!r.empty() && r.back() < 0) r = scale(r, -1);
  return r;
}

/// Monic polynomial over Z vanishing at x y.
inline IntPoly product_polynomial(const IntPoly& p, const IntPoly& q) {
  // Y^m q(X / Y) = sum_k q_k X^k Y^{m-k}
  const std::size_t m = q.size() - 1;
  BiPoly h(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    IntPoly xpow(k + 1);
    xpow[k] = q[k];
    h[m - k] = trim(xpow);
  }
  while (!h.empty() && h.back().empty()) h.pop_back();
  IntPoly r = resultant_y(p, h);
  if (!r.empty() && r.back() < 0) r = scale(r, -1);
  return r;
}

/// Largest d dividing both, by trial division.
inline long brute_gcd(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  if (a == 0) return b;
  if (b == 0) return a;
  for (long d = std::min(a, b); d > 1; --d)
    if (a % d == 0 && b % d == 0) return d;
  return 1;
}

/// Does g divide u in Z / m (m == 0 meaning Z), by enumeration.
inline bool brute_multiple(long u, long g, long m) {
  if (m == 0) {
    if (g == 0) return u == 0;
    for (long k = -std::abs(u); k <= std::abs(u); ++k)
      if (k * g == u) return true;
    return false;
  }
  const long target = ((u % m) + m) % m;
  for (long k = 0; k < m; ++k)
    if ((((k * g) % m) + m) % m == target) return true;
  return false;
}

/// u^n mod m by repeated multiplication.
inline long power_mod(long u, long n, long m) {
  long r = 1 % m;
  for (long i = 0; i < n; ++i) r = (r * u) % m;
  return r;
}

}  // namespace oracle
