#pragma once
// Random instance generators and model builders shared by the unit and
// acceptance tests.
#include <optional>
#include <random>
#include <vector>

#include "integra/lombardi.hpp"
#include "integra/matrix.hpp"
#include "oracles.hpp"

namespace support {

using namespace integra;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline std::vector<Element> ints(const Ring& r, std::initializer_list<long> v) {
  std::vector<Element> out;
  for (long x : v) out.push_back(Element::from_integer(r, x));
  return out;
}

inline Element num(const Ring& r, long v) { return Element::from_integer(r, v); }

inline oracle::IntPoly to_int_poly(const std::vector<Element>& v) {
  oracle::IntPoly out;
  for (const auto& e : v) out.push_back(e.integer());
  return oracle::trim(out);
}

inline std::vector<Element> from_int_poly(const Ring& r, const oracle::IntPoly& p) {
  std::vector<Element> out;
  for (const auto& c : p) out.push_back(Element::from_integer(r, c));
  return out;
}

/// Random element of a ring built from Z, Z/m and univariate layers.
inline Element random_element(Rng& rng, const Ring& r, long range = 3) {
  if (r.is_integers() || r.is_modular()) return num(r, uniform(rng, -range, range));
  if (r.is_rationals()) return Element::from_rational(r, mpq_class(uniform(rng, -range, range), uniform(rng, 1, 3)));
  const std::size_t len = r.is_monic_quotient() ? r.quotient_degree() : static_cast<std::size_t>(uniform(rng, 0, 2));
  std::vector<Element> c;
  for (std::size_t i = 0; i < len; ++i) c.push_back(random_element(rng, r.base(), range));
  return Element::from_coeffs(r, std::move(c));
}

/// Random monic polynomial of degree n over r, lowest first.
inline std::vector<Element> random_monic(Rng& rng, const Ring& r, std::size_t n, long range = 3) {
  std::vector<Element> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(random_element(rng, r, range));
  p.push_back(Element::one(r));
  return p;
}

/// u^i x^j in a finite Z/p-algebra, flattened to Z/p coordinates.
inline std::vector<Element> coords(const Element& e, const Ring& ground) { return flatten(e, ground); }

/// Solves sum_k c_k cols[k] = target over the field Z/p; nullopt if no solution.
inline std::optional<std::vector<Element>> solve_mod_p(const std::vector<std::vector<Element>>& cols,
                                                       const std::vector<Element>& target, long p) {
  const std::size_t rows = target.size();
  const std::size_t n = cols.size();
  std::vector<std::vector<long>> a(rows, std::vector<long>(n + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < n; ++k) a[r][k] = cols[k][r].integer().get_si();
    a[r][n] = target[r].integer().get_si();
  }
  auto inv = [p](long x) {
    for (long y = 1; y < p; ++y)
      if ((x * y) % p == 1) return y;
    return 0L;
  };
  std::vector<long> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv][col] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    const long s = inv(a[row][col]);
    for (auto& x : a[row]) x = (x * s) % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const long f = a[r][col];
      for (std::size_t c = 0; c <= n; ++c) a[r][c] = ((a[r][c] - f * a[row][c]) % p + p) % p;
    }
    pivot_col.push_back(static_cast<long>(col));
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (a[r][n] % p != 0) return std::nullopt;
  const Ring zp = Ring::modular(p);
  std::vector<Element> out(n, Element::zero(zp));
  for (std::size_t r = 0; r < row; ++r) out[static_cast<std::size_t>(pivot_col[r])] = num(zp, a[r][n]);
  return out;
}

/// A concrete Z/p model (u, x in algebra) together with a witness that holds in it.
struct WitnessModel {
  MembershipWitness w;
  WitnessContext ctx;
};

inline std::optional<std::vector<WitnessTerm>> find_relation(const Element& lhs, const Element& u, const Element& x,
                                                             const std::vector<std::pair<std::size_t, std::size_t>>& idx,
                                                             long p) {
  const Ring zp = Ring::modular(p);
  std::vector<std::vector<Element>> cols;
  for (const auto& [i, j] : idx) cols.push_back(coords(u.pow(i) * x.pow(j), zp));
  auto sol = solve_mod_p(cols, coords(lhs, zp), p);
  if (!sol) return std::nullopt;
  std::vector<WitnessTerm> out;
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (!(*sol)[k].is_zero()) out.push_back({idx[k].first, idx[k].second, (*sol)[k]});
  return out;
}

/// Searches random models Z/p[X]/(h)[U]/(g) with random u and x for one where
/// both membership relations of the given shape are solvable.
inline WitnessModel witness_model(Rng& rng, std::size_t n, std::size_t m, std::size_t mu, std::size_t nu, long p = 5) {
  const Ring zp = Ring::modular(p);
  std::vector<std::pair<std::size_t, std::size_t>> idx1, idx2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= nu; ++j) idx1.emplace_back(i, j);
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = 0; j <= mu; ++j)
      if ((i < m && j <= mu) || (i <= m && j < mu)) idx2.emplace_back(i, j);
  for (int attempt = 0; attempt < 400; ++attempt) {
    const std::size_t dh = static_cast<std::size_t>(uniform(rng, 1, 3));
    const std::size_t dg = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(std::min<std::size_t>(n, 3))));
    const Ring rx = Ring::monic_quotient(zp, random_monic(rng, zp, dh, p), "X");
    const Ring b = Ring::monic_quotient(rx, random_monic(rng, rx, dg, p), "U");
    const Element u = attempt % 3 == 0 ? Element::generator(b) : random_element(rng, b, p);
    const Element x = attempt % 2 == 0 ? embed(Element::generator(rx), b) : random_element(rng, b, p);
    auto r1 = find_relation(u.pow(n), u, x, idx1, p);
    if (!r1) continue;
    auto r2 = find_relation(u.pow(m) * x.pow(mu), u, x, idx2, p);
    if (!r2) continue;
    return {{zp, n, m, mu, nu, *r1, *r2}, {b, u, x, {}}};
  }
  // x = 0 and u = 0 satisfy every shape.
  const Ring b = Ring::monic_quotient(zp, ints(zp, {0, 1}), "U");
  return {{zp, n, m, mu, nu, {}, {}}, {b, Element::zero(b), Element::zero(b), {}}};
}

/// A random SemifilCertificate over Z for u = X in Z[X]/(P), with coefficient
/// a_i drawn from I_{n-i}.
inline SemifilCertificate random_semifil_cert(Rng& rng, const Semifiltration& s, std::size_t n,
                                              const std::string& var = "X") {
  const Ring z;
  std::vector<Element> coeffs;
  for (std::size_t i = 0; i < n; ++i) {
    const Ideal ideal = s.ideal_at(n - i);
    Element a = Element::zero(z);
    for (const auto& g : ideal.generators()) a += g * num(z, uniform(rng, -2, 2));
    if (ideal.is_unit()) a = num(z, uniform(rng, -3, 3));
    coeffs.push_back(a);
  }
  coeffs.push_back(Element::one(z));
  const Ring alg = Ring::monic_quotient(z, coeffs, var);
  return {{z, alg, Element::generator(alg), coeffs, {}}, s};
}

inline Semifiltration random_principal(Rng& rng) {
  const Ring z;
  return Semifiltration::powers(Ideal(z, {num(z, uniform(rng, 2, 5))}));
}

}  // namespace support
