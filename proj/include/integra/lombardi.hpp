#pragma once

#include <map>
#include <utility>
#include <vector>

#include "integra/rees.hpp"

namespace integra {

/// One term coeff * u^i x^j.
struct WitnessTerm {
  std::size_t i = 0;
  std::size_t j = 0;
  Element coeff;

  friend bool operator==(const WitnessTerm&, const WitnessTerm&) = default;
};

/// Coefficient data for
///   u^n     = sum c_ij u^i x^j   over i < n, j <= nu                       (rel1)
///   u^m x^mu = sum d_ij u^i x^j  over (i < m, j <= mu) or (i <= m, j < mu)   (rel2)
struct MembershipWitness {
  Ring base;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t mu = 0;
  std::size_t nu = 0;
  std::vector<WitnessTerm> rel1;
  std::vector<WitnessTerm> rel2;

  friend bool operator==(const MembershipWitness&, const MembershipWitness&) = default;
};

/// Where the witness is realized: u and x in `algebra`.
struct WitnessContext {
  Ring algebra;
  Element u;
  Element x;
  Bindings bindings;

  friend bool operator==(const WitnessContext&, const WitnessContext&) = default;
};

/// Throws IndexOutOfRange / InvalidArgument / RingMismatch.
void check_witness(const MembershipWitness& w);

/// ({0..n-1} x {0..mu-1}) union ({0..m-1} x {mu..mu+nu-1}), in lex order.
std::vector<std::pair<std::size_t, std::size_t>> basis_index_set(const MembershipWitness& w);

struct NormalForm {
  std::map<std::pair<std::size_t, std::size_t>, Element> terms;
  std::size_t steps = 0;
};

/// u^I x^J as an A-combination of the basis monomials, J < mu + nu.
NormalForm normal_form(const MembershipWitness& w, std::size_t i, std::size_t j);

/// Degree n mu + m nu.
RingCertificate lombardi_cert(const MembershipWitness& w, const WitnessContext& ctx, const Options& opts = {});

/// Rewrites terms a u^i y^j (for u^m = sum ...) into terms a c^j u^i x^{mu-j}
/// of u^m x^mu, using x y = c.
std::vector<WitnessTerm> adapt_y_to_x(const std::vector<WitnessTerm>& y_terms, const Element& c, std::size_t mu);

struct NuExtraction {
  std::size_t nu = 1;
  std::vector<WitnessTerm> rel1;
};

/// For a certificate over A[w] with w bound to x: u^n = sum c_ij u^i x^j.
NuExtraction extract_nu(const RingCertificate& c);

/// The element x that the certificate's base variable is bound to.
const Element& bound_generator(const RingCertificate& c);

/// cx over A[x], cy over A[y] with x y = c in A.
RingCertificate joint_cert(const RingCertificate& cx, const RingCertificate& cy, const Element& c,
                           const Options& opts = {});
/// Output over A[t] with t bound to x y.
RingCertificate product_base_cert(const RingCertificate& cx, const RingCertificate& cy, const Options& opts = {});
/// Inputs over (A[x], Extended(I)) and (A[y], Extended(I)); output over (A[t], Extended(I)), t bound to x y.
SemifilCertificate relative_joint_cert(const SemifilCertificate& cx, const SemifilCertificate& cy,
                                       const Options& opts = {});

}  // namespace integra
