#include "integra/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "integra/serialize.hpp"

namespace integra::cli {

namespace {

struct Args {
  std::vector<std::string> files;
  std::string output;
  bool no_paranoid = false;
  std::size_t degree = 0;
  std::size_t k = 0;
  std::size_t lambda = 1;
  std::size_t bound = 6;
  std::string xy;
};

class Runner {
 public:
  Runner(const Args& args, std::ostream& out) : args_(args), out_(out) {}

  const std::string& file(std::size_t i) const { return args_.files.at(i); }
  std::size_t file_count() const { return args_.files.size(); }
  const Args& args() const { return args_; }
  Options opts() const { return {!args_.no_paranoid}; }

  template <class F>
  auto read(std::size_t i, F&& parse) const {
    const Json j = load_json(file(i));
    try {
      return parse(j);
    } catch (const Error& e) {
      throw Error(e.code(), file(i) + ": " + e.message());
    }
  }

  RingCertificate ring_cert(std::size_t i) const { return read(i, certificate_from_json); }
  SemifilCertificate semifil_cert(std::size_t i) const { return read(i, semifil_certificate_from_json); }

  int emit(const Json& j) const {
    if (args_.output.empty()) out_ << dump(j);
    else save_json(args_.output, j);
    return 0;
  }

  int line(const std::string& s, int code) const {
    out_ << s << "\n";
    return code;
  }

 private:
  const Args& args_;
  std::ostream& out_;
};

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::parse_error, std::string("(document): missing field '") + key + "'");
  return j.at(key);
}

// Re-labels errors from a nested parse with the field they came from.
template <class F>
auto at_field(const char* key, F&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    std::string msg = e.message();
    if (msg.rfind("(document)", 0) == 0) msg = key + msg.substr(10);
    else msg = std::string(key) + "." + msg;
    throw Error(e.code(), msg);
  }
}

struct Verb {
  const char* name;
  const char* help;
  std::vector<const char*> inputs;
  std::size_t optional_inputs = 0;
  std::function<int(const Runner&)> fn;
};

int membership_code(Membership m) {
  switch (m) {
    case Membership::member: return 0;
    case Membership::not_member: return 1;
    case Membership::unknown: return 2;
  }
  return 3;
}

std::vector<Verb> verbs() {
  using R = const Runner&;
  return {
      {"verify", "verify a ring certificate", {"cert"}, 0,
       [](R r) {
         const Verdict v = verify_ring(r.ring_cert(0));
         return r.line(v.line(), v.exit_code());
       }},
      {"verify-sf", "verify a certificate over a semifiltration", {"cert"}, 0,
       [](R r) {
         const Verdict v = verify_semifil(r.semifil_cert(0));
         return r.line(v.line(), v.exit_code());
       }},
      {"pad", "raise the degree of a certificate (--degree)", {"cert"}, 0,
       [](R r) {
         const Json j = load_json(r.file(0));
         if (j.is_object() && j.contains("semifiltration")) {
           SemifilCertificate c = r.semifil_cert(0);
           c.cert = pad(c.cert, r.args().degree);
           return r.emit(to_json(c));
         }
         return r.emit(to_json(pad(r.ring_cert(0), r.args().degree)));
       }},
      {"nilpotent", "certificate X^n for a nilpotent u (--degree); input {ring, u}", {"element"}, 0,
       [](R r) {
         const auto c = r.read(0, [](const Json& j) {
           const Ring ring = at_field("ring", [&] { return ring_from_json(member(j, "ring")); });
           const Element u = at_field("u", [&] { return element_from_json(member(j, "u"), ring); });
           return std::pair{ring, u};
         });
         return r.emit(to_json(nilpotency_cert(c.first, c.second, r.args().degree)));
       }},
      {"from-module", "certificate from a module presentation", {"module"}, 0,
       [](R r) { return r.emit(to_json(module_to_cert(r.read(0, module_from_json)))); }},
      {"sum", "certificate for x + y", {"cx", "cy"}, 0,
       [](R r) { return r.emit(to_json(sum_cert(r.ring_cert(0), r.ring_cert(1), r.opts()))); }},
      {"prod", "certificate for x y", {"cx", "cy"}, 0,
       [](R r) { return r.emit(to_json(product_cert(r.ring_cert(0), r.ring_cert(1), r.opts()))); }},
      {"neg", "certificate for -x", {"cx"}, 0,
       [](R r) { return r.emit(to_json(negate_cert(r.ring_cert(0), r.opts()))); }},
      {"diff", "certificate for x - y", {"cx", "cy"}, 0,
       [](R r) { return r.emit(to_json(diff_cert(r.ring_cert(0), r.ring_cert(1), r.opts()))); }},
      {"trans", "certificate for u over A from v over A and u over A[v]", {"cv", "cu"}, 0,
       [](R r) { return r.emit(to_json(transitivity_cert(r.ring_cert(0), r.ring_cert(1), r.opts()))); }},
      {"trunc", "certificate for the k-th truncation of a relation (--k)", {"relation"}, 0,
       [](R r) { return r.emit(to_json(truncation_cert(r.read(0, relation_from_json), r.args().k, r.opts()))); }},
      {"two-sided", "certificate from two-sided expansion data", {"data"}, 0,
       [](R r) { return r.emit(to_json(two_sided_cert(r.read(0, two_sided_from_json), r.opts()))); }},
      {"inv-like", "certificate from u = sum b_i v^i and a certificate for v u", {"data", "cvu"}, 0,
       [](R r) {
         return r.emit(to_json(inverse_like_cert(r.read(0, inverse_like_from_json), r.ring_cert(1), r.opts())));
       }},
      {"sf-validate", "bounded check of the semifiltration axioms (--bound)", {"semifiltration"}, 0,
       [](R r) {
         const Validation v = validate(r.read(0, semifiltration_from_json), r.args().bound);
         return r.line(v.str(), v.kind == Validation::Kind::valid ? 0 : v.kind == Validation::Kind::invalid ? 1 : 2);
       }},
      {"rees-member", "membership in a Rees algebra; input {handle, p}", {"query"}, 0,
       [](R r) {
         const auto m = r.read(0, [](const Json& j) {
           const Json& hj = member(j, "handle");
           ReesHandle h{at_field("handle.semifiltration", [&] { return semifiltration_from_json(member(hj, "semifiltration")); }),
                        member(hj, "var").get<std::string>()};
           const Element p = at_field("p", [&] { return element_from_json(member(j, "p"), h.ambient()); });
           return rees_member(h, p);
         });
         return r.line(std::string(to_string(m)), membership_code(m));
       }},
      {"rees-lift", "lift to the Rees algebra", {"cert"}, 0,
       [](R r) { return r.emit(to_json(lift(r.semifil_cert(0), r.opts()))); }},
      {"rees-drop", "drop from the Rees algebra", {"rees", "semifiltration"}, 1,
       [](R r) {
         std::optional<Semifiltration> target;
         if (r.file_count() > 1) target = r.read(1, semifiltration_from_json);
         return r.emit(to_json(drop(r.read(0, rees_certificate_from_json), target, r.opts())));
       }},
      {"rees-lift2", "lift a certificate over a product semifiltration", {"cert"}, 0,
       [](R r) { return r.emit(to_json(lift_two(r.semifil_cert(0), r.opts()))); }},
      {"rees-accel", "lift a certificate over an accelerated semifiltration (--lambda)", {"cert"}, 0,
       [](R r) { return r.emit(to_json(lift_accel(r.semifil_cert(0), r.args().lambda, r.opts()))); }},
      {"sf-sum", "semifiltration certificate for x + y", {"cx", "cy"}, 0,
       [](R r) { return r.emit(to_json(semifil_sum(r.semifil_cert(0), r.semifil_cert(1), r.opts()))); }},
      {"sf-prod", "semifiltration certificate for x y over the product", {"cx", "cy"}, 0,
       [](R r) { return r.emit(to_json(semifil_product(r.semifil_cert(0), r.semifil_cert(1), r.opts()))); }},
      {"sf-mixed", "semifiltration certificate for x y, y integral over the ring", {"cx", "cy"}, 0,
       [](R r) {
         return r.emit(to_json(semifil_mixed_product(r.semifil_cert(0), r.ring_cert(1), r.opts())));
       }},
      {"sf-trans", "semifiltration transitivity", {"cv", "cu"}, 0,
       [](R r) {
         return r.emit(to_json(semifil_transitivity(r.ring_cert(0), r.semifil_cert(1), r.opts())));
       }},
      {"sf-trunc", "truncation over a semifiltration (--k)", {"relation", "semifiltration"}, 0,
       [](R r) {
         return r.emit(to_json(semifil_truncation(r.read(0, relation_from_json), r.read(1, semifiltration_from_json),
                                                  r.args().k, r.opts())));
       }},
      {"sf-deg1", "decide u 1_B in I_1 1_B; input {algebra, semifiltration, u}", {"query"}, 0,
       [](R r) {
         const DegreeOne d = r.read(0, [](const Json& j) {
           const Ring b = at_field("algebra", [&] { return ring_from_json(member(j, "algebra")); });
           const Semifiltration s =
               at_field("semifiltration", [&] { return semifiltration_from_json(member(j, "semifiltration")); });
           const Element u = at_field("u", [&] { return element_from_json(member(j, "u"), s.ring()); });
           return degree_one_test(b, s, u);
         });
         return r.line(std::string(to_string(d)), d == DegreeOne::integral ? 0 : d == DegreeOne::not_integral ? 1 : 2);
       }},
      {"lombardi", "certificate from a membership witness", {"witness"}, 0,
       [](R r) {
         const auto [w, ctx] = r.read(0, witness_from_json);
         return r.emit(to_json(lombardi_cert(w, ctx, r.opts())));
       }},
      {"joint", "certificate over A from certificates over A[x] and A[y] with x y = c (--xy)", {"cx", "cy"}, 0,
       [](R r) {
         const RingCertificate cx = r.ring_cert(0);
         if (!cx.base.is_univariate()) throw Error(ErrorCode::invalid_argument, "cx must live over A[x]");
         const Element c = at_field("--xy", [&] {
           return element_from_json(parse_json(r.args().xy, "--xy"), cx.base.base());
         });
         return r.emit(to_json(joint_cert(cx, r.ring_cert(1), c, r.opts())));
       }},
      {"joint-xy", "certificate over A[x y]", {"cx", "cy"}, 0,
       [](R r) { return r.emit(to_json(product_base_cert(r.ring_cert(0), r.ring_cert(1), r.opts()))); }},
      {"joint-relative", "semifiltration certificate over A[x y]", {"cx", "cy"}, 0,
       [](R r) { return r.emit(to_json(relative_joint_cert(r.semifil_cert(0), r.semifil_cert(1), r.opts()))); }},
  };
}

bool colored() {
  const char* v = std::getenv("INTEGRA_COLOR");
  return v && *v && std::string_view(v) != "0";
}

void diagnose(std::ostream& err, const std::string& msg) {
  if (colored()) err << "\033[1;31merror\033[0m: " << msg << "\n";
  else err << "error: " << msg << "\n";
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates of integrality over commutative rings", "integra"};
  app.require_subcommand(1);
  Args args;
  app.add_option("-o,--output", args.output, "write the derived certificate here");
  app.add_flag("--no-paranoid", args.no_paranoid, "skip re-verification of derived certificates");

  const auto table = verbs();
  std::map<const CLI::App*, const Verb*> dispatch;
  for (const auto& v : table) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->fallthrough();
    const std::size_t max = v.inputs.size();
    const std::size_t min = max - v.optional_inputs;
    sub->add_option("inputs", args.files, "input files")->required(min > 0)->expected(static_cast<int>(min),
                                                                                        static_cast<int>(max));
    const std::string name = v.name;
    if (name == "pad" || name == "nilpotent") sub->add_option("-n,--degree", args.degree, "target degree")->required();
    if (name == "trunc" || name == "sf-trunc") sub->add_option("-k,--k", args.k, "truncation index")->required();
    if (name == "rees-accel") sub->add_option("--lambda", args.lambda, "acceleration factor")->required();
    if (name == "sf-validate") sub->add_option("--bound", args.bound, "largest a + b checked")->capture_default_str();
    if (name == "joint") sub->add_option("--xy", args.xy, "x y as a JSON element of A")->required();
    dispatch[sub] = &v;
  }

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 3;
  }

  try {
    for (const auto& [sub, verb] : dispatch)
      if (sub->parsed()) return verb->fn(Runner(args, out));
  } catch (const Error& e) {
    diagnose(err, e.what());
    return 3;
  } catch (const std::exception& e) {
    diagnose(err, e.what());
    return 3;
  }
  return 3;
}

}  // namespace integra::cli
