#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "integra/cli.hpp"
#include "integra/serialize.hpp"
#include "support.hpp"

using namespace integra;
using support::ints;
using support::num;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const Json& j) {
  const auto path = std::filesystem::temp_directory_path() / ("integra_cli_" + name);
  save_json(path.string(), j);
  return path.string();
}

}  // namespace

TEST_CASE("verify and sum from files") {
  const Ring z;
  const Ring b1 = Ring::monic_quotient(z, ints(z, {-2, 0, 1}), "a");
  const Ring b = Ring::monic_quotient(b1, ints(b1, {-3, 0, 1}), "b");
  const std::string cx =
      temp_file("cx.json", to_json(RingCertificate{z, b, embed(Element::generator(b1), b), ints(z, {-2, 0, 1}), {}}));
  const std::string cy = temp_file("cy.json", to_json(RingCertificate{z, b, Element::generator(b), ints(z, {-3, 0, 1}), {}}));
  const Result v = run({"verify", cx});
  CHECK(v.code == 0);
  CHECK(v.out == "VERIFIED\n");
  const Result s = run({"sum", cx, cy});
  REQUIRE(s.code == 0);
  CHECK(certificate_from_json(parse_json(s.out)).coeffs == ints(z, {1, 0, -10, 0, 1}));
  const std::string out = (std::filesystem::temp_directory_path() / "integra_cli_out.json").string();
  CHECK(run({"prod", cx, cy, "-o", out}).code == 0);
  CHECK(certificate_from_json(load_json(out)).coeffs == ints(z, {36, 0, -12, 0, 1}));
}

TEST_CASE("exit codes and diagnostics") {
  const Ring z;
  const std::string bad = temp_file("bad.json", to_json(RingCertificate{z, z, num(z, 2), ints(z, {-3, 1}), {}}));
  const Result r = run({"verify", bad});
  CHECK(r.code == 1);
  CHECK(r.out == "REFUTED P(u) = -1\n");
  const Result missing = run({"verify", "/nonexistent/cert.json"});
  CHECK(missing.code == 3);
  CHECK(missing.err.find("cannot open") != std::string::npos);
  Json broken = to_json(RingCertificate{z, z, num(z, 2), ints(z, {-2, 1}), {}});
  broken["coeffs"][0] = "two";
  const std::string bf = temp_file("broken.json", broken);
  const Result pe = run({"verify", bf});
  CHECK(pe.code == 3);
  CHECK(pe.err.find(bf + ": coeffs[0]") != std::string::npos);
  CHECK(run({"frobnicate"}).code == 3);
  CHECK(run({"pad", bad}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("rees round trip through files") {
  const Ring z;
  const SemifilCertificate c{{z, z, num(z, 2), ints(z, {-2, 1}), {}}, Semifiltration::powers(Ideal(z, {num(z, 2)}))};
  const std::string cf = temp_file("c.json", to_json(c));
  const Result lifted = run({"rees-lift", cf});
  REQUIRE(lifted.code == 0);
  const std::string lf = temp_file("lifted.json", parse_json(lifted.out));
  const std::string sf = temp_file("sf.json", to_json(c.semifiltration));
  const Result dropped = run({"rees-drop", lf, sf});
  CHECK(dropped.code == 0);
  CHECK(dropped.out == dump(to_json(c)));
}
