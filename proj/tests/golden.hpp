#pragma once
// Runs the CLI golden manifest in-process and compares stdout byte for byte.
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "integra/cli.hpp"

namespace golden {

struct Outcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Arguments ending in .json are taken from inputs/; "@case" names the
/// committed output of an earlier case.
inline std::vector<Outcome> run_all(const std::filesystem::path& dir, bool update = false) {
  std::vector<Outcome> outcomes;
  std::ifstream manifest(dir / "cases.txt");
  std::string line;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Outcome o;
    int expected_code = 0;
    ls >> o.name >> expected_code;
    std::vector<std::string> args;
    for (std::string a; ls >> a;) {
      if (a[0] == '@') a = (dir / "expected" / (a.substr(1) + ".out")).string();
      else if (a.size() > 5 && a.ends_with(".json")) a = (dir / "inputs" / a).string();
      args.push_back(a);
    }
    std::ostringstream out, err;
    const int code = integra::cli::run(args, out, err);
    const auto expected_path = dir / "expected" / (o.name + ".out");
    if (update) std::ofstream(expected_path, std::ios::binary) << out.str();
    if (!std::filesystem::exists(expected_path)) {
      o.detail = "missing " + expected_path.string();
    } else if (code != expected_code) {
      o.detail = "exit " + std::to_string(code) + ", expected " + std::to_string(expected_code) + "; " + err.str();
    } else if (out.str() != slurp(expected_path)) {
      o.detail = "stdout differs from " + expected_path.string();
    } else {
      o.pass = true;
    }
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

}  // namespace golden
