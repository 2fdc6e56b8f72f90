#pragma once

#include <optional>
#include <string>
#include <vector>

#include "integra/matrix.hpp"
#include "integra/semifiltration.hpp"

namespace integra {

/// Claim that `element` (in `algebra`) is annihilated by the monic polynomial
/// sum coeffs[k] X^k over `base`. The map base -> algebra is the canonical one,
/// except that variables listed in `bindings` are sent to their bound values.
struct RingCertificate {
  Ring base;
  Ring algebra;
  Element element;
  std::vector<Element> coeffs;
  Bindings bindings;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  friend bool operator==(const RingCertificate&, const RingCertificate&) = default;
};

/// A ring certificate whose coefficients also satisfy a_i in I_{n-i}.
struct SemifilCertificate {
  RingCertificate cert;
  Semifiltration semifiltration;

  friend bool operator==(const SemifilCertificate&, const SemifilCertificate&) = default;
};

struct Verdict {
  enum class Kind { verified, refuted, verified_modulo_membership };
  Kind kind = Kind::verified;
  std::string detail;
  std::optional<Element> value;

  bool verified() const { return kind == Kind::verified; }
  bool refuted() const { return kind == Kind::refuted; }
  /// "VERIFIED", "REFUTED <detail>" or "VERIFIED-MODULO-MEMBERSHIP".
  std::string line() const;
  int exit_code() const;
};

/// Throws MalformedCertificate on structural problems (empty or non-monic
/// coefficient list, coefficients outside the base, element outside the
/// algebra, a binding that does not respect a quotient relation).
void check_well_formed(const RingCertificate& c);

Verdict verify_ring(const RingCertificate& c);
Verdict verify_semifil(const SemifilCertificate& c);

/// X^{p-n} P(X).
RingCertificate pad(const RingCertificate& c, std::size_t p);

/// (0, ..., 0, 1) over the powers of the zero ideal: verifies iff u^n = 0.
SemifilCertificate nilpotency_cert(const Ring& ring, const Element& u, std::size_t n);

/// Generators m_1..m_n of a submodule of the algebra with u m_k = sum_i S[k][i] m_i.
struct ModulePresentation {
  Ring base;
  Ring algebra;
  Element element;
  std::vector<Element> generators;
  Matrix action;
  Bindings bindings;
};

/// charpoly of the action matrix. The output verifies whenever the presented
/// module is faithful, e.g. when 1 lies in its span.
RingCertificate module_to_cert(const ModulePresentation& mp);

/// Plain certificate underneath a semifiltration certificate.
RingCertificate forget_semifiltration(const SemifilCertificate& c);

}  // namespace integra
