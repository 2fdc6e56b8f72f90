#include "integra/ring.hpp"

#include <algorithm>
#include <sstream>

namespace integra {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ring_mismatch: return "RingMismatch";
    case ErrorCode::no_canonical_map: return "NoCanonicalMap";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::malformed_certificate: return "MalformedCertificate";
    case ErrorCode::degree_too_small: return "DegreeTooSmall";
    case ErrorCode::unverified_input: return "UnverifiedInput";
    case ErrorCode::coefficient_degree_too_high: return "CoefficientDegreeTooHigh";
    case ErrorCode::relation_failed: return "RelationFailed";
    case ErrorCode::bad_index: return "BadIndex";
    case ErrorCode::hypothesis_failed: return "HypothesisFailed";
    case ErrorCode::not_monic_after_extraction: return "NotMonicAfterExtraction";
    case ErrorCode::bad_lambda: return "BadLambda";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::paranoid_check_failed: return "ParanoidCheckFailed";
  }
  return "Error";
}

struct Ring::Node {
  Kind kind = Kind::integers;
  mpz_class modulus;
  std::optional<Ring> base;
  std::string var;
  std::vector<Element> quotient_modulus;
};

namespace {

using NodePtr = std::shared_ptr<const Ring::Node>;

NodePtr make_node(Ring::Node node) { return std::make_shared<const Ring::Node>(std::move(node)); }

template <Ring::Kind K>
const NodePtr& simple_node() {
  static const NodePtr node = [] {
    Ring::Node n;
    n.kind = K;
    return make_node(std::move(n));
  }();
  return node;
}

void check_var_name(const Ring& base, const std::string& var) {
  if (var.empty()) throw Error(ErrorCode::invalid_argument, "empty variable name");
  if (base.has_var(var))
    throw Error(ErrorCode::invalid_argument, "variable '" + var + "' already occurs in " + base.str());
}

mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

Ring::Ring() : node_(simple_node<Kind::integers>()) {}

Ring Ring::integers() { return Ring(); }

Ring Ring::modular(const mpz_class& m) {
  if (m < 2) throw Error(ErrorCode::invalid_argument, "modulus must be >= 2, got " + m.get_str());
  Node n;
  n.kind = Kind::modular;
  n.modulus = m;
  return Ring(make_node(std::move(n)));
}

Ring Ring::rationals() { return Ring(simple_node<Kind::rationals>()); }

Ring Ring::polynomial(const Ring& base, std::string var) {
  check_var_name(base, var);
  Node n;
  n.kind = Kind::polynomial;
  n.base = base;
  n.var = std::move(var);
  return Ring(make_node(std::move(n)));
}

Ring Ring::monic_quotient(const Ring& base, std::vector<Element> modulus, std::string var) {
  check_var_name(base, var);
  for (const auto& c : modulus)
    if (!(c.ring() == base))
      throw Error(ErrorCode::ring_mismatch, "quotient modulus coefficient " + c.str() + " is not in " + base.str());
  while (!modulus.empty() && modulus.back().is_zero()) modulus.pop_back();
  if (modulus.size() < 2) throw Error(ErrorCode::invalid_argument, "quotient modulus must have degree >= 1");
  if (!modulus.back().is_one()) throw Error(ErrorCode::invalid_argument, "quotient modulus must be monic");
  Node n;
  n.kind = Kind::monic_quotient;
  n.base = base;
  n.var = std::move(var);
  n.quotient_modulus = std::move(modulus);
  return Ring(make_node(std::move(n)));
}

Ring::Kind Ring::kind() const noexcept { return node_->kind; }

const mpz_class& Ring::modulus() const {
  if (!is_modular()) throw Error(ErrorCode::invalid_argument, str() + " has no integer modulus");
  return node_->modulus;
}

const Ring& Ring::base() const {
  if (!is_univariate()) throw Error(ErrorCode::invalid_argument, str() + " has no base ring");
  return *node_->base;
}

const std::string& Ring::var() const {
  if (!is_univariate()) throw Error(ErrorCode::invalid_argument, str() + " has no variable");
  return node_->var;
}

const std::vector<Element>& Ring::quotient_modulus() const {
  if (!is_monic_quotient()) throw Error(ErrorCode::invalid_argument, str() + " is not a monic quotient");
  return node_->quotient_modulus;
}

std::size_t Ring::quotient_degree() const { return quotient_modulus().size() - 1; }

const Ring& Ring::ground() const { return is_univariate() ? base().ground() : *this; }

bool Ring::has_var(std::string_view name) const {
  if (!is_univariate()) return false;
  return node_->var == name || base().has_var(name);
}

std::vector<std::string> Ring::vars() const {
  std::vector<std::string> out;
  for (const Ring* r = this; r->is_univariate(); r = &r->base()) out.push_back(r->var());
  return out;
}

bool Ring::is_field() const {
  switch (kind()) {
    case Kind::rationals: return true;
    case Kind::modular: return mpz_probab_prime_p(modulus().get_mpz_t(), 30) == 2;
    default: return false;
  }
}

std::string Ring::str() const {
  switch (kind()) {
    case Kind::integers: return "Z";
    case Kind::modular: return "Z/" + modulus().get_str();
    case Kind::rationals: return "Q";
    case Kind::polynomial: return base().str() + "[" + var() + "]";
    case Kind::monic_quotient: {
      auto f = Element::from_coeffs(Ring::polynomial(base(), var()), quotient_modulus());
      return base().str() + "[" + var() + "]/(" + f.str() + ")";
    }
  }
  return "?";
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Ring::Kind::integers:
    case Ring::Kind::rationals: return true;
    case Ring::Kind::modular: return x.modulus == y.modulus;
    case Ring::Kind::polynomial: return x.var == y.var && *x.base == *y.base;
    case Ring::Kind::monic_quotient:
      return x.var == y.var && *x.base == *y.base && x.quotient_modulus == y.quotient_modulus;
  }
  return false;
}

std::string fresh_var(std::string_view hint, std::initializer_list<const Ring*> rings) {
  auto taken = [&](const std::string& name) {
    return std::any_of(rings.begin(), rings.end(), [&](const Ring* r) { return r->has_var(name); });
  };
  std::string name(hint);
  for (int k = 1; taken(name); ++k) name = std::string(hint) + std::to_string(k);
  return name;
}

// ---------------------------------------------------------------------------
// Elements

namespace {

void require_same_ring(const Element& a, const Element& b, const char* op) {
  if (!(a.ring() == b.ring()))
    throw Error(ErrorCode::ring_mismatch,
                std::string(op) + " of elements of " + a.ring().str() + " and " + b.ring().str());
}

void strip(std::vector<Element>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

std::vector<Element> reduce_monic(std::vector<Element> p, std::span<const Element> monic) {
  const std::size_t d = monic.size() - 1;
  strip(p);
  for (std::size_t r = p.size(); r-- > d;) {
    if (p[r].is_zero()) continue;
    const Element c = p[r];
    for (std::size_t i = 0; i <= d; ++i) p[r - d + i] -= c * monic[i];
  }
  strip(p);
  return p;
}

Element::Element() : ring_(), value_(mpz_class(0)) {}

Element Element::zero(const Ring& ring) {
  switch (ring.kind()) {
    case Ring::Kind::integers:
    case Ring::Kind::modular: return Element(ring, mpz_class(0));
    case Ring::Kind::rationals: return Element(ring, mpq_class(0));
    default: return Element(ring, std::vector<Element>{});
  }
}

Element Element::one(const Ring& ring) { return from_integer(ring, 1); }

Element Element::from_integer(const Ring& ring, const mpz_class& n) {
  switch (ring.kind()) {
    case Ring::Kind::integers: return Element(ring, n);
    case Ring::Kind::modular: return Element(ring, mod_floor(n, ring.modulus()));
    case Ring::Kind::rationals: return Element(ring, mpq_class(n));
    default: return constant(ring, from_integer(ring.base(), n));
  }
}

Element Element::from_rational(const Ring& ring, const mpq_class& q) {
  if (!ring.is_rationals()) throw Error(ErrorCode::ring_mismatch, "rational literal in " + ring.str());
  mpq_class c = q;
  c.canonicalize();
  return Element(ring, c);
}

Element Element::from_coeffs(const Ring& ring, std::vector<Element> coeffs) {
  if (!ring.is_univariate()) throw Error(ErrorCode::ring_mismatch, "coefficient list for " + ring.str());
  for (const auto& c : coeffs)
    if (!(c.ring() == ring.base()))
      throw Error(ErrorCode::ring_mismatch, "coefficient " + c.str() + " is not in " + ring.base().str());
  if (ring.is_monic_quotient())
    coeffs = reduce_monic(std::move(coeffs), ring.quotient_modulus());
  else
    strip(coeffs);
  return Element(ring, std::move(coeffs));
}

Element Element::generator(const Ring& ring) {
  if (!ring.is_univariate()) throw Error(ErrorCode::invalid_argument, ring.str() + " has no generator");
  return monomial(ring, one(ring.base()), 1);
}

Element Element::constant(const Ring& ring, const Element& c) { return monomial(ring, c, 0); }

Element Element::monomial(const Ring& ring, const Element& c, std::size_t k) {
  if (!ring.is_univariate()) throw Error(ErrorCode::invalid_argument, ring.str() + " has no monomials");
  std::vector<Element> coeffs(k + 1, zero(ring.base()));
  coeffs[k] = c;
  return from_coeffs(ring, std::move(coeffs));
}

const mpz_class& Element::integer() const {
  if (const auto* z = std::get_if<mpz_class>(&value_)) return *z;
  throw Error(ErrorCode::ring_mismatch, "element of " + ring_.str() + " is not an integer residue");
}

const mpq_class& Element::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorCode::ring_mismatch, "element of " + ring_.str() + " is not a rational");
}

const std::vector<Element>& Element::coeffs() const {
  if (const auto* c = std::get_if<std::vector<Element>>(&value_)) return *c;
  throw Error(ErrorCode::ring_mismatch, "element of " + ring_.str() + " has no coefficient list");
}

Element Element::coeff(std::size_t i) const {
  const auto& c = coeffs();
  return i < c.size() ? c[i] : zero(ring_.base());
}

long Element::degree() const { return static_cast<long>(coeffs().size()) - 1; }

bool Element::is_zero() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::vector<Element>>)
          return v.empty();
        else
          return v == 0;
      },
      value_);
}

bool Element::is_one() const {
  if (ring_.is_univariate()) {
    const auto& c = coeffs();
    return c.size() == 1 && c[0].is_one();
  }
  if (ring_.is_rationals()) return rational() == 1;
  return integer() == 1;
}

Element Element::operator-() const {
  switch (ring_.kind()) {
    case Ring::Kind::integers: return Element(ring_, mpz_class(-integer()));
    case Ring::Kind::modular: return from_integer(ring_, -integer());
    case Ring::Kind::rationals: return Element(ring_, mpq_class(-rational()));
    default: {
      std::vector<Element> c = coeffs();
      for (auto& x : c) x = -x;
      return Element(ring_, std::move(c));
    }
  }
}

Element Element::pow(std::size_t e) const {
  Element result = one(ring_);
  Element base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Element operator+(const Element& a, const Element& b) {
  require_same_ring(a, b, "sum");
  const Ring& r = a.ring();
  switch (r.kind()) {
    case Ring::Kind::integers: return Element(r, mpz_class(a.integer() + b.integer()));
    case Ring::Kind::modular: {
      mpz_class s = a.integer() + b.integer();
      if (s >= r.modulus()) s -= r.modulus();
      return Element(r, s);
    }
    case Ring::Kind::rationals: return Element(r, mpq_class(a.rational() + b.rational()));
    default: {
      const auto& x = a.coeffs();
      const auto& y = b.coeffs();
      std::vector<Element> c = x.size() >= y.size() ? x : y;
      const auto& shorter = x.size() >= y.size() ? y : x;
      for (std::size_t i = 0; i < shorter.size(); ++i) c[i] += shorter[i];
      strip(c);
      return Element(r, std::move(c));
    }
  }
}

Element operator-(const Element& a, const Element& b) {
  require_same_ring(a, b, "difference");
  return a + (-b);
}

Element operator*(const Element& a, const Element& b) {
  require_same_ring(a, b, "product");
  const Ring& r = a.ring();
  switch (r.kind()) {
    case Ring::Kind::integers: return Element(r, mpz_class(a.integer() * b.integer()));
    case Ring::Kind::modular: return Element(r, mod_floor(a.integer() * b.integer(), r.modulus()));
    case Ring::Kind::rationals: return Element(r, mpq_class(a.rational() * b.rational()));
    default: {
      const auto& x = a.coeffs();
      const auto& y = b.coeffs();
      if (x.empty() || y.empty()) return Element::zero(r);
      std::vector<Element> c(x.size() + y.size() - 1, Element::zero(r.base()));
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
      }
      if (r.is_monic_quotient()) return Element(r, reduce_monic(std::move(c), r.quotient_modulus()));
      strip(c);
      return Element(r, std::move(c));
    }
  }
}

bool operator==(const Element& a, const Element& b) { return a.ring() == b.ring() && a.value_ == b.value_; }

std::string Element::str() const {
  switch (ring_.kind()) {
    case Ring::Kind::integers:
    case Ring::Kind::modular: return integer().get_str();
    case Ring::Kind::rationals: return rational().get_str();
    default: break;
  }
  const auto& c = coeffs();
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    std::string coef = c[k].str();
    const bool compound = c[k].ring().is_univariate() && c[k].coeffs().size() > 1;
    if (compound) coef = "(" + coef + ")";
    bool negative = !compound && !coef.empty() && coef[0] == '-';
    if (negative) coef = coef.substr(1);
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    if (k == 0) {
      os << coef;
      continue;
    }
    if (coef != "1") os << coef << "*";
    os << ring_.var();
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Element ring_arith(ArithOp op, const Element& a, const Element& b) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::neg: return -a;
  }
  throw Error(ErrorCode::invalid_argument, "unknown ring operation");
}

Element ring_arith(ArithOp op, const Element& a) {
  if (op != ArithOp::neg) throw Error(ErrorCode::invalid_argument, "binary operation needs two operands");
  return -a;
}

// ---------------------------------------------------------------------------
// Canonical maps

const Binding* find_binding(std::span<const Binding> bindings, std::string_view var) {
  for (const auto& b : bindings)
    if (b.var == var) return &b;
  return nullptr;
}

std::optional<Element> try_embed(const Element& a, const Ring& target, std::span<const Binding> bindings) {
  const Ring& source = a.ring();
  if (source == target) return a;

  if (source.is_univariate()) {
    if (const Binding* b = find_binding(bindings, source.var())) {
      auto value = try_embed(b->value, target);
      if (!value) return std::nullopt;
      Element acc = Element::zero(target);
      const auto& c = a.coeffs();
      for (std::size_t k = c.size(); k-- > 0;) {
        auto ck = try_embed(c[k], target, bindings);
        if (!ck) return std::nullopt;
        acc = acc * *value + *ck;
      }
      return acc;
    }
  }

  if (source.is_integers()) return Element::from_integer(target, a.integer());

  if (source.is_modular()) {
    if (target.is_modular()) {
      if (source.modulus() % target.modulus() == 0) return Element::from_integer(target, a.integer());
      return std::nullopt;
    }
  }

  if (source.is_univariate() && target.is_univariate() && source.var() == target.var()) {
    std::vector<Element> mapped;
    mapped.reserve(a.coeffs().size());
    bool ok = true;
    for (const auto& c : a.coeffs()) {
      auto m = try_embed(c, target.base(), bindings);
      if (!m) {
        ok = false;
        break;
      }
      mapped.push_back(std::move(*m));
    }
    if (ok) {
      if (source.is_polynomial()) return Element::from_coeffs(target, std::move(mapped));
      if (target.is_monic_quotient()) {
        // Quotient to quotient is well defined only when the moduli correspond.
        std::vector<Element> f;
        bool fok = true;
        for (const auto& c : source.quotient_modulus()) {
          auto m = try_embed(c, target.base(), bindings);
          if (!m) {
            fok = false;
            break;
          }
          f.push_back(std::move(*m));
        }
        if (fok && f == target.quotient_modulus()) return Element::from_coeffs(target, std::move(mapped));
      }
    }
  }

  if (target.is_univariate()) {
    if (auto c = try_embed(a, target.base(), bindings)) return Element::constant(target, *c);
  }
  return std::nullopt;
}

Element embed(const Element& a, const Ring& target, std::span<const Binding> bindings) {
  if (auto e = try_embed(a, target, bindings)) return *e;
  throw Error(ErrorCode::no_canonical_map, "no canonical map " + a.ring().str() + " -> " + target.str());
}

bool embeds_into(const Ring& source, const Ring& target, std::span<const Binding> bindings) {
  const Element probe = source.is_univariate() ? Element::generator(source) : Element::one(source);
  return try_embed(probe, target, bindings).has_value();
}

Element evaluate(std::span<const Element> coeffs, const Element& u, std::span<const Binding> bindings) {
  const Ring& target = u.ring();
  Element acc = Element::zero(target);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * u + embed(coeffs[k], target, bindings);
  return acc;
}

Element poly_eval(const Element& p, const Element& u, std::span<const Binding> bindings) {
  if (!p.ring().is_polynomial())
    throw Error(ErrorCode::invalid_argument, "poly_eval expects a polynomial, got an element of " + p.ring().str());
  return evaluate(p.coeffs(), u, bindings);
}

bool is_known_unit(const Element& a) {
  const Ring& r = a.ring();
  switch (r.kind()) {
    case Ring::Kind::integers: return a.integer() == 1 || a.integer() == -1;
    case Ring::Kind::modular: {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.integer().get_mpz_t(), r.modulus().get_mpz_t());
      return g == 1;
    }
    case Ring::Kind::rationals: return !a.is_zero();
    default: return a.coeffs().size() == 1 && is_known_unit(a.coeffs()[0]);
  }
}

}  // namespace integra
