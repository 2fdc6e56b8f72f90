#include "integra/serialize.hpp"

#include <fstream>
#include <sstream>

namespace integra {

namespace {

using Path = std::string;

std::string where(const Path& p) { return p.empty() ? "(document)" : p; }

[[noreturn]] void fail(const Path& p, const std::string& msg) {
  throw Error(ErrorCode::parse_error, where(p) + ": " + msg);
}

Path sub(const Path& p, std::string_view key) { return p.empty() ? std::string(key) : p + "." + std::string(key); }
Path idx(const Path& p, std::size_t i) { return where(p) + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& j, const char* key, const Path& p) {
  if (!j.is_object()) fail(p, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(p, std::string("missing field '") + key + "'");
  return *it;
}

const Json* optional_field(const Json& j, const char* key, const Path& p) {
  if (!j.is_object()) fail(p, "expected an object");
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const Json& array(const Json& j, const Path& p) {
  if (!j.is_array()) fail(p, "expected an array");
  return j;
}

std::string string(const Json& j, const Path& p) {
  if (!j.is_string()) fail(p, "expected a string");
  return j.get<std::string>();
}

std::size_t natural(const Json& j, const Path& p) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return static_cast<std::size_t>(j.get<long long>());
  fail(p, "expected a non-negative integer");
}

mpz_class big(const Json& j, const Path& p) {
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) fail(p, "'" + s + "' is not an integer");
    return z;
  }
  fail(p, "expected an integer");
}

Json big_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

// Runs `fn`, turning semantic errors into ParseError at `p`.
template <class F>
auto guarded(const Path& p, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse_error) throw;
    fail(p, e.what());
  }
}

Ring ring_at(const Json& j, const Path& p);
Element element_at(const Json& j, const Ring& r, const Path& p);

std::vector<Element> elements_at(const Json& j, const Ring& r, const Path& p) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < array(j, p).size(); ++i) out.push_back(element_at(j[i], r, idx(p, i)));
  return out;
}

Ring ring_at(const Json& j, const Path& p) {
  const std::string kind = string(field(j, "ring", p), sub(p, "ring"));
  return guarded(p, [&] {
    if (kind == "Z") return Ring::integers();
    if (kind == "Q") return Ring::rationals();
    if (kind == "Zmod") return Ring::modular(big(field(j, "m", p), sub(p, "m")));
    if (kind == "Poly" || kind == "QuotMonic") {
      const Ring base = ring_at(field(j, "base", p), sub(p, "base"));
      std::string var = string(field(j, "var", p), sub(p, "var"));
      if (kind == "Poly") return Ring::polynomial(base, std::move(var));
      return Ring::monic_quotient(base, elements_at(field(j, "mod", p), base, sub(p, "mod")), std::move(var));
    }
    fail(sub(p, "ring"), "unknown ring kind '" + kind + "'");
  });
}

Element element_at(const Json& j, const Ring& r, const Path& p) {
  switch (r.kind()) {
    case Ring::Kind::integers:
    case Ring::Kind::modular: return Element::from_integer(r, big(j, p));
    case Ring::Kind::rationals: {
      if (!j.is_array()) return Element::from_integer(r, big(j, p));
      if (j.size() != 2) fail(p, "expected [numerator, denominator]");
      const mpz_class den = big(j[1], idx(p, 1));
      if (den == 0) fail(idx(p, 1), "zero denominator");
      mpq_class q(big(j[0], idx(p, 0)), den);
      q.canonicalize();
      return Element::from_rational(r, q);
    }
    default: return guarded(p, [&] { return Element::from_coeffs(r, elements_at(j, r.base(), p)); });
  }
}

Bindings bindings_at(const Json* j, const Ring& algebra, const Path& p) {
  Bindings out;
  if (!j) return out;
  if (!j->is_object()) fail(p, "expected an object");
  for (const auto& [var, value] : j->items()) {
    const Path vp = sub(p, var);
    if (value.is_object()) {
      const Ring r = ring_at(field(value, "ring", vp), sub(vp, "ring"));
      out.push_back({var, element_at(field(value, "value", vp), r, sub(vp, "value"))});
    } else {
      out.push_back({var, element_at(value, algebra, vp)});
    }
  }
  return out;
}

void put_bindings(Json& j, const Bindings& bs, const Ring& algebra) {
  if (bs.empty()) return;
  Json b = Json::object();
  for (const auto& x : bs) {
    if (x.value.ring() == algebra) b[x.var] = to_json(x.value);
    else b[x.var] = {{"ring", to_json(x.value.ring())}, {"value", to_json(x.value)}};
  }
  j["bind"] = std::move(b);
}

Json elements_json(const std::vector<Element>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_json(e));
  return out;
}

Ideal ideal_at(const Json& j, const Path& p) {
  const Ring r = ring_at(field(j, "ring", p), sub(p, "ring"));
  return guarded(p, [&] { return Ideal(r, elements_at(field(j, "gens", p), r, sub(p, "gens"))); });
}

Semifiltration semifiltration_at(const Json& j, const Path& p) {
  const std::string rule = string(field(j, "rule", p), sub(p, "rule"));
  return guarded(p, [&] {
    if (rule == "powers") return Semifiltration::powers(ideal_at(field(j, "ideal", p), sub(p, "ideal")));
    if (rule == "const") return Semifiltration::constant(ideal_at(field(j, "ideal", p), sub(p, "ideal")));
    if (rule == "trivial") return Semifiltration::trivial(ring_at(field(j, "ring", p), sub(p, "ring")));
    if (rule == "product")
      return Semifiltration::product(semifiltration_at(field(j, "left", p), sub(p, "left")),
                                     semifiltration_at(field(j, "right", p), sub(p, "right")));
    if (rule == "accel")
      return Semifiltration::accelerated(semifiltration_at(field(j, "inner", p), sub(p, "inner")),
                                         natural(field(j, "lambda", p), sub(p, "lambda")));
    if (rule == "extend")
      return Semifiltration::extended(semifiltration_at(field(j, "inner", p), sub(p, "inner")),
                                      ring_at(field(j, "target", p), sub(p, "target")));
    if (rule == "explicit") {
      std::vector<Ideal> prefix;
      const Path pp = sub(p, "prefix");
      const Json& arr = array(field(j, "prefix", p), pp);
      for (std::size_t i = 0; i < arr.size(); ++i) prefix.push_back(ideal_at(arr[i], idx(pp, i)));
      return Semifiltration::explicit_prefix(std::move(prefix), semifiltration_at(field(j, "tail", p), sub(p, "tail")));
    }
    fail(sub(p, "rule"), "unknown semifiltration rule '" + rule + "'");
  });
}

Matrix matrix_at(const Json& j, const Path& p) {
  const Ring r = ring_at(field(j, "ring", p), sub(p, "ring"));
  const std::size_t rows = natural(field(j, "rows", p), sub(p, "rows"));
  const std::size_t cols = natural(field(j, "cols", p), sub(p, "cols"));
  const Path dp = sub(p, "data");
  const Json& data = array(field(j, "data", p), dp);
  if (data.size() != rows) fail(dp, "expected " + std::to_string(rows) + " rows");
  std::vector<Element> flat;
  for (std::size_t i = 0; i < rows; ++i) {
    auto row = elements_at(data[i], r, idx(dp, i));
    if (row.size() != cols) fail(idx(dp, i), "expected " + std::to_string(cols) + " entries");
    for (auto& e : row) flat.push_back(std::move(e));
  }
  return Matrix(r, rows, cols, std::move(flat));
}

RingCertificate certificate_at(const Json& j, const Path& p) {
  RingCertificate c;
  c.base = ring_at(field(j, "base", p), sub(p, "base"));
  c.algebra = ring_at(field(j, "algebra", p), sub(p, "algebra"));
  c.coeffs = elements_at(field(j, "coeffs", p), c.base, sub(p, "coeffs"));
  c.element = element_at(field(j, "element", p), c.algebra, sub(p, "element"));
  c.bindings = bindings_at(optional_field(j, "bind", p), c.algebra, sub(p, "bind"));
  return c;
}

std::vector<WitnessTerm> terms_at(const Json& j, const Ring& base, const Path& p) {
  std::vector<WitnessTerm> out;
  for (std::size_t k = 0; k < array(j, p).size(); ++k) {
    const Path tp = idx(p, k);
    const Json& t = array(j[k], tp);
    if (t.size() != 3) fail(tp, "expected [i, j, coeff]");
    out.push_back({natural(t[0], idx(tp, 0)), natural(t[1], idx(tp, 1)), element_at(t[2], base, idx(tp, 2))});
  }
  return out;
}

Json terms_json(const std::vector<WitnessTerm>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back(Json::array({t.i, t.j, to_json(t.coeff)}));
  return out;
}

}  // namespace

Json to_json(const Ring& r) {
  switch (r.kind()) {
    case Ring::Kind::integers: return {{"ring", "Z"}};
    case Ring::Kind::rationals: return {{"ring", "Q"}};
    case Ring::Kind::modular: return {{"ring", "Zmod"}, {"m", big_to_json(r.modulus())}};
    case Ring::Kind::polynomial: return {{"ring", "Poly"}, {"base", to_json(r.base())}, {"var", r.var()}};
    case Ring::Kind::monic_quotient:
      return {{"ring", "QuotMonic"},
              {"base", to_json(r.base())},
              {"mod", elements_json(r.quotient_modulus())},
              {"var", r.var()}};
  }
  return {};
}

Json to_json(const Element& e) {
  const Ring& r = e.ring();
  switch (r.kind()) {
    case Ring::Kind::integers:
    case Ring::Kind::modular: return big_to_json(e.integer());
    case Ring::Kind::rationals: {
      const mpq_class& q = e.rational();
      if (q.get_den() == 1) return big_to_json(q.get_num());
      return Json::array({big_to_json(q.get_num()), big_to_json(q.get_den())});
    }
    default: return elements_json(e.coeffs());
  }
}

Json to_json(const Ideal& i) { return {{"ring", to_json(i.ring())}, {"gens", elements_json(i.generators())}}; }

Json to_json(const Semifiltration& s) {
  using Rule = Semifiltration::Rule;
  switch (s.rule()) {
    case Rule::powers: return {{"rule", "powers"}, {"ideal", to_json(s.ideal())}};
    case Rule::constant: return {{"rule", "const"}, {"ideal", to_json(s.ideal())}};
    case Rule::trivial: return {{"rule", "trivial"}, {"ring", to_json(s.ring())}};
    case Rule::product: return {{"rule", "product"}, {"left", to_json(s.left())}, {"right", to_json(s.right())}};
    case Rule::accelerated: return {{"rule", "accel"}, {"lambda", s.lambda()}, {"inner", to_json(s.inner())}};
    case Rule::extended: return {{"rule", "extend"}, {"target", to_json(s.ring())}, {"inner", to_json(s.inner())}};
    case Rule::explicit_prefix: {
      Json prefix = Json::array();
      for (const auto& i : s.prefix()) prefix.push_back(to_json(i));
      return {{"rule", "explicit"}, {"prefix", std::move(prefix)}, {"tail", to_json(s.tail())}};
    }
  }
  return {};
}

Json to_json(const Matrix& m) {
  Json data = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    data.push_back(std::move(row));
  }
  return {{"ring", to_json(m.ring())}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Json to_json(const RingCertificate& c) {
  Json j = {{"base", to_json(c.base)},
            {"algebra", to_json(c.algebra)},
            {"coeffs", elements_json(c.coeffs)},
            {"element", to_json(c.element)}};
  put_bindings(j, c.bindings, c.algebra);
  return j;
}

Json to_json(const SemifilCertificate& c) {
  Json j = to_json(c.cert);
  j["semifiltration"] = to_json(c.semifiltration);
  return j;
}

Json to_json(const ReesCertificate& c) {
  Json j = {{"certificate", to_json(c.cert)},
            {"handle", {{"semifiltration", to_json(c.handle.semifiltration)}, {"var", c.handle.var}}},
            {"u", to_json(c.u)},
            {"lambda", c.lambda}};
  if (c.inner) j["inner"] = to_json(*c.inner);
  return j;
}

Json to_json(const Relation& r) {
  Json j = {{"base", to_json(r.base)},
            {"algebra", to_json(r.algebra)},
            {"v", to_json(r.v)},
            {"coeffs", elements_json(r.coeffs)}};
  put_bindings(j, r.bindings, r.algebra);
  return j;
}

Json to_json(const TwoSidedData& d) {
  Json j = {{"base", to_json(d.base)}, {"algebra", to_json(d.algebra)}, {"v", to_json(d.v)},
            {"u", to_json(d.u)},       {"s", elements_json(d.s)},         {"t", elements_json(d.t)}};
  put_bindings(j, d.bindings, d.algebra);
  return j;
}

Json to_json(const InverseLikeData& d) {
  Json j = {{"base", to_json(d.base)}, {"algebra", to_json(d.algebra)}, {"v", to_json(d.v)}, {"b", elements_json(d.b)}};
  put_bindings(j, d.bindings, d.algebra);
  return j;
}

Json to_json(const ModulePresentation& mp) {
  Json j = {{"base", to_json(mp.base)},
            {"algebra", to_json(mp.algebra)},
            {"element", to_json(mp.element)},
            {"generators", elements_json(mp.generators)},
            {"action", to_json(mp.action)}};
  put_bindings(j, mp.bindings, mp.algebra);
  return j;
}

Json to_json(const MembershipWitness& w, const WitnessContext& ctx) {
  Json j = {{"base", to_json(w.base)},         {"algebra", to_json(ctx.algebra)}, {"u", to_json(ctx.u)},
            {"x", to_json(ctx.x)},             {"n", w.n},                        {"m", w.m},
            {"mu", w.mu},                      {"nu", w.nu},                      {"rel1", terms_json(w.rel1)},
            {"rel2", terms_json(w.rel2)}};
  put_bindings(j, ctx.bindings, ctx.algebra);
  return j;
}

Ring ring_from_json(const Json& j) { return ring_at(j, ""); }
Element element_from_json(const Json& j, const Ring& ring) { return element_at(j, ring, ""); }
Ideal ideal_from_json(const Json& j) { return ideal_at(j, ""); }
Semifiltration semifiltration_from_json(const Json& j) { return semifiltration_at(j, ""); }
Matrix matrix_from_json(const Json& j) { return guarded("", [&] { return matrix_at(j, ""); }); }
RingCertificate certificate_from_json(const Json& j) { return certificate_at(j, ""); }

SemifilCertificate semifil_certificate_from_json(const Json& j) {
  return {certificate_at(j, ""), semifiltration_at(field(j, "semifiltration", ""), "semifiltration")};
}

ReesCertificate rees_certificate_from_json(const Json& j) {
  ReesCertificate c;
  c.cert = certificate_at(field(j, "certificate", ""), "certificate");
  const Json& h = field(j, "handle", "");
  c.handle.semifiltration = semifiltration_at(field(h, "semifiltration", "handle"), "handle.semifiltration");
  c.handle.var = string(field(h, "var", "handle"), "handle.var");
  if (const Json* inner = optional_field(j, "inner", "")) c.inner = semifiltration_at(*inner, "inner");
  if (!c.cert.algebra.is_univariate()) fail("certificate.algebra", "expected B[" + c.handle.var + "]");
  c.u = element_at(field(j, "u", ""), c.cert.algebra.base(), "u");
  c.lambda = natural(field(j, "lambda", ""), "lambda");
  return c;
}

Relation relation_from_json(const Json& j) {
  Relation r;
  r.base = ring_at(field(j, "base", ""), "base");
  r.algebra = ring_at(field(j, "algebra", ""), "algebra");
  r.v = element_at(field(j, "v", ""), r.algebra, "v");
  r.coeffs = elements_at(field(j, "coeffs", ""), r.base, "coeffs");
  r.bindings = bindings_at(optional_field(j, "bind", ""), r.algebra, "bind");
  return r;
}

TwoSidedData two_sided_from_json(const Json& j) {
  TwoSidedData d;
  d.base = ring_at(field(j, "base", ""), "base");
  d.algebra = ring_at(field(j, "algebra", ""), "algebra");
  d.v = element_at(field(j, "v", ""), d.algebra, "v");
  d.u = element_at(field(j, "u", ""), d.algebra, "u");
  d.s = elements_at(field(j, "s", ""), d.base, "s");
  d.t = elements_at(field(j, "t", ""), d.base, "t");
  d.bindings = bindings_at(optional_field(j, "bind", ""), d.algebra, "bind");
  return d;
}

InverseLikeData inverse_like_from_json(const Json& j) {
  InverseLikeData d;
  d.base = ring_at(field(j, "base", ""), "base");
  d.algebra = ring_at(field(j, "algebra", ""), "algebra");
  d.v = element_at(field(j, "v", ""), d.algebra, "v");
  d.b = elements_at(field(j, "b", ""), d.base, "b");
  d.bindings = bindings_at(optional_field(j, "bind", ""), d.algebra, "bind");
  return d;
}

ModulePresentation module_from_json(const Json& j) {
  const Ring base = ring_at(field(j, "base", ""), "base");
  const Ring algebra = ring_at(field(j, "algebra", ""), "algebra");
  return ModulePresentation{base,
                            algebra,
                            element_at(field(j, "element", ""), algebra, "element"),
                            elements_at(field(j, "generators", ""), algebra, "generators"),
                            guarded("action", [&] { return matrix_at(field(j, "action", ""), "action"); }),
                            bindings_at(optional_field(j, "bind", ""), algebra, "bind")};
}

std::pair<MembershipWitness, WitnessContext> witness_from_json(const Json& j) {
  MembershipWitness w;
  WitnessContext ctx;
  w.base = ring_at(field(j, "base", ""), "base");
  ctx.algebra = ring_at(field(j, "algebra", ""), "algebra");
  ctx.u = element_at(field(j, "u", ""), ctx.algebra, "u");
  ctx.x = element_at(field(j, "x", ""), ctx.algebra, "x");
  w.n = natural(field(j, "n", ""), "n");
  w.m = natural(field(j, "m", ""), "m");
  w.mu = natural(field(j, "mu", ""), "mu");
  w.nu = natural(field(j, "nu", ""), "nu");
  w.rel1 = terms_at(field(j, "rel1", ""), w.base, "rel1");
  w.rel2 = terms_at(field(j, "rel2", ""), w.base, "rel2");
  ctx.bindings = bindings_at(optional_field(j, "bind", ""), ctx.algebra, "bind");
  return {std::move(w), std::move(ctx)};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string(source) + ": " + e.what());
  }
}

Json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::invalid_argument, path + ": cannot write file");
  out << dump(j);
}

}  // namespace integra
