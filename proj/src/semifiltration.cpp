#include "integra/semifiltration.hpp"

namespace integra {

struct Semifiltration::Node {
  Rule rule = Rule::trivial;
  Ring ring;
  Ideal ideal;
  std::vector<Ideal> prefix;
  std::vector<Semifiltration> children;
  std::size_t lambda = 0;
};

namespace {

std::shared_ptr<const Semifiltration::Node> share(Semifiltration::Node n) {
  return std::make_shared<const Semifiltration::Node>(std::move(n));
}

}  // namespace

Semifiltration::Semifiltration() : Semifiltration(trivial(Ring())) {}

Semifiltration Semifiltration::powers(const Ideal& ideal) {
  Node n;
  n.rule = Rule::powers;
  n.ring = ideal.ring();
  n.ideal = ideal;
  return Semifiltration(share(std::move(n)));
}

Semifiltration Semifiltration::constant(const Ideal& ideal) {
  Node n;
  n.rule = Rule::constant;
  n.ring = ideal.ring();
  n.ideal = ideal;
  return Semifiltration(share(std::move(n)));
}

Semifiltration Semifiltration::trivial(const Ring& ring) {
  Node n;
  n.rule = Rule::trivial;
  n.ring = ring;
  n.ideal = Ideal::unit(ring);
  return Semifiltration(share(std::move(n)));
}

Semifiltration Semifiltration::explicit_prefix(std::vector<Ideal> prefix, const Semifiltration& tail) {
  for (const auto& i : prefix)
    if (!(i.ring() == tail.ring()))
      throw Error(ErrorCode::ring_mismatch, "prefix ideal over " + i.ring().str() + " with tail over " +
                                                tail.ring().str());
  Node n;
  n.rule = Rule::explicit_prefix;
  n.ring = tail.ring();
  n.prefix = std::move(prefix);
  n.children = {tail};
  return Semifiltration(share(std::move(n)));
}

Semifiltration Semifiltration::product(const Semifiltration& left, const Semifiltration& right) {
  if (!(left.ring() == right.ring()))
    throw Error(ErrorCode::ring_mismatch, "product of semifiltrations over " + left.ring().str() + " and " +
                                              right.ring().str());
  Node n;
  n.rule = Rule::product;
  n.ring = left.ring();
  n.children = {left, right};
  return Semifiltration(share(std::move(n)));
}

Semifiltration Semifiltration::accelerated(const Semifiltration& inner, std::size_t lambda) {
  Node n;
  n.rule = Rule::accelerated;
  n.ring = inner.ring();
  n.children = {inner};
  n.lambda = lambda;
  return Semifiltration(share(std::move(n)));
}

Semifiltration Semifiltration::extended(const Semifiltration& inner, const Ring& target) {
  if (!embeds_into(inner.ring(), target))
    throw Error(ErrorCode::no_canonical_map, "cannot extend a semifiltration of " + inner.ring().str() + " to " +
                                                 target.str());
  Node n;
  n.rule = Rule::extended;
  n.ring = target;
  n.children = {inner};
  return Semifiltration(share(std::move(n)));
}

const Ring& Semifiltration::ring() const noexcept { return node_->ring; }
Semifiltration::Rule Semifiltration::rule() const noexcept { return node_->rule; }

const Ideal& Semifiltration::ideal() const {
  if (rule() != Rule::powers && rule() != Rule::constant)
    throw Error(ErrorCode::invalid_argument, str() + " has no defining ideal");
  return node_->ideal;
}

const std::vector<Ideal>& Semifiltration::prefix() const {
  if (rule() != Rule::explicit_prefix) throw Error(ErrorCode::invalid_argument, str() + " has no prefix");
  return node_->prefix;
}

const Semifiltration& Semifiltration::tail() const {
  if (rule() != Rule::explicit_prefix) throw Error(ErrorCode::invalid_argument, str() + " has no tail");
  return node_->children[0];
}

const Semifiltration& Semifiltration::left() const {
  if (rule() != Rule::product) throw Error(ErrorCode::invalid_argument, str() + " is not a product");
  return node_->children[0];
}

const Semifiltration& Semifiltration::right() const {
  if (rule() != Rule::product) throw Error(ErrorCode::invalid_argument, str() + " is not a product");
  return node_->children[1];
}

const Semifiltration& Semifiltration::inner() const {
  if (rule() != Rule::accelerated && rule() != Rule::extended)
    throw Error(ErrorCode::invalid_argument, str() + " has no inner semifiltration");
  return node_->children[0];
}

std::size_t Semifiltration::lambda() const {
  if (rule() != Rule::accelerated) throw Error(ErrorCode::invalid_argument, str() + " is not accelerated");
  return node_->lambda;
}

Ideal Semifiltration::ideal_at(std::size_t rho) const {
  const Node& n = *node_;
  switch (n.rule) {
    case Rule::trivial: return Ideal::unit(n.ring);
    case Rule::constant: return rho == 0 ? Ideal::unit(n.ring) : n.ideal;
    case Rule::powers: {
      Ideal acc = Ideal::unit(n.ring);
      for (std::size_t k = 0; k < rho; ++k) acc = ideal_product(acc, n.ideal);
      return acc;
    }
    case Rule::explicit_prefix: return rho < n.prefix.size() ? n.prefix[rho] : n.children[0].ideal_at(rho);
    case Rule::product: return ideal_product(n.children[0].ideal_at(rho), n.children[1].ideal_at(rho));
    case Rule::accelerated: return n.children[0].ideal_at(n.lambda * rho);
    case Rule::extended: return ideal_extend(n.children[0].ideal_at(rho), n.ring);
  }
  return Ideal::unit(n.ring);
}

std::string Semifiltration::str() const {
  const Node& n = *node_;
  switch (n.rule) {
    case Rule::trivial: return "Trivial(" + n.ring.str() + ")";
    case Rule::constant: return "Constant(" + n.ideal.str() + ")";
    case Rule::powers: return "Powers(" + n.ideal.str() + ")";
    case Rule::explicit_prefix: {
      std::string s = "Explicit([";
      for (std::size_t i = 0; i < n.prefix.size(); ++i) s += (i ? ", " : "") + n.prefix[i].str();
      return s + "], " + n.children[0].str() + ")";
    }
    case Rule::product: return "Product(" + n.children[0].str() + ", " + n.children[1].str() + ")";
    case Rule::accelerated: return "Accelerated(" + n.children[0].str() + ", " + std::to_string(n.lambda) + ")";
    case Rule::extended: return "Extended(" + n.children[0].str() + ", " + n.ring.str() + ")";
  }
  return "?";
}

bool operator==(const Semifiltration& a, const Semifiltration& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.rule == y.rule && x.ring == y.ring && x.ideal == y.ideal && x.prefix == y.prefix &&
         x.lambda == y.lambda && x.children == y.children;
}

std::string Validation::str() const {
  switch (kind) {
    case Kind::valid: return "Valid";
    case Kind::unknown: return "Unknown";
    case Kind::invalid:
      return "Invalid(" + std::to_string(a) + ", " + std::to_string(b) + ", " + (witness ? witness->str() : "?") +
             ")";
  }
  return "?";
}

Validation validate(const Semifiltration& s, std::size_t bound) {
  if (bound < 1) throw Error(ErrorCode::invalid_argument, "validation bound must be at least 1");
  bool unknown = false;
  const Element one = Element::one(s.ring());
  switch (ideal_membership(one, s.ideal_at(0))) {
    case Membership::not_member: return {Validation::Kind::invalid, 0, 0, one};
    case Membership::unknown: unknown = true; break;
    case Membership::member: break;
  }
  std::vector<Ideal> ideals;
  for (std::size_t r = 0; r <= bound; ++r) ideals.push_back(s.ideal_at(r));
  // I_0 = A makes the a = 0 row automatic; the condition is symmetric in a, b.
  for (std::size_t a = 1; 2 * a <= bound; ++a)
    for (std::size_t b = a; a + b <= bound; ++b)
      for (const auto& g : ideals[a].generators())
        for (const auto& h : ideals[b].generators()) {
          const Element gh = g * h;
          switch (ideal_membership(gh, ideals[a + b])) {
            case Membership::not_member: return {Validation::Kind::invalid, a, b, gh};
            case Membership::unknown: unknown = true; break;
            case Membership::member: break;
          }
        }
  return {unknown ? Validation::Kind::unknown : Validation::Kind::valid, 0, 0, std::nullopt};
}

Membership rees_member(const ReesHandle& h, const Element& p) {
  const Ring ambient = h.ambient();
  if (!(p.ring() == ambient))
    throw Error(ErrorCode::ring_mismatch, "Rees membership of an element of " + p.ring().str() + " in " +
                                              ambient.str());
  Membership result = Membership::member;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size() && result != Membership::not_member; ++i)
    if (!c[i].is_zero()) result = conjoin(result, ideal_membership(c[i], h.semifiltration.ideal_at(i)));
  return result;
}

Membership rees_product_witness(const ReesHandle& h, const Element& p, const Element& q) {
  return rees_member(h, p * q);
}

}  // namespace integra
