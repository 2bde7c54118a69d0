#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "foliasep/report.hpp"

namespace {

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

// "a:b" with rational entries
std::optional<foliasep::ProjectivePair> parse_hint(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  try {
    foliasep::BigRational a(text.substr(0, colon)), b(text.substr(colon + 1));
    a.canonicalize();
    b.canonicalize();
    if (a == 0 && b == 0) return std::nullopt;
    return foliasep::ProjectivePair{a, b};
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"foliasep: separatrices of real plane foliations"};
  std::string command, input, dot_path, json_path, hint;
  int seed = 0;
  std::optional<int> trunc;
  int branches = 5;
  app.add_option("command", command, "invariants | reduce | separatrices | balanced | polar-check | certify | all")
      ->required();
  app.add_option("--input,-i", input, "input file (stdin if omitted)");
  app.add_option("--seed", seed, "sample seed index")->check(CLI::NonNegativeNumber);
  app.add_option("--trunc", trunc, "separatrix truncation order")->check(CLI::PositiveNumber);
  app.add_option("--dot", dot_path, "write the dual graph here");
  app.add_option("--json", json_path, "write the report here instead of stdout");
  app.add_option("--polar", hint, "polar direction a:b");
  app.add_option("--branches", branches, "random test branches for polar-check")->check(CLI::NonNegativeNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : foliasep::exit_code::kInput;
  }

  auto cmd = foliasep::parse_command(command);
  if (!cmd) {
    std::cerr << "unknown command: " << command << "\n";
    return foliasep::exit_code::kInput;
  }

  std::string text;
  if (input.empty()) {
    text = slurp(std::cin);
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "cannot read " << input << "\n";
      return foliasep::exit_code::kInput;
    }
    text = slurp(in);
  }

  foliasep::AnalyzeOptions opt;
  opt.seed = seed;
  opt.truncation = trunc;
  opt.branch_count = branches;
  if (!hint.empty()) {
    opt.polar_hint = parse_hint(hint);
    if (!opt.polar_hint) {
      std::cerr << "bad --polar value: " << hint << "\n";
      return foliasep::exit_code::kInput;
    }
  }

  foliasep::Analysis result = foliasep::analyze_text(text, *cmd, opt);
  std::string body = result.report.dump(2) + "\n";
  if (json_path.empty()) {
    std::cout << body;
  } else if (!write_file(json_path, body)) {
    std::cerr << "cannot write " << json_path << "\n";
    return foliasep::exit_code::kInput;
  }
  if (!dot_path.empty() && !result.dot.empty() && !write_file(dot_path, result.dot)) {
    std::cerr << "cannot write " << dot_path << "\n";
    return foliasep::exit_code::kInput;
  }
  for (const auto& e : result.report["errors"]) std::cerr << e["code"].get<std::string>() << ": " << e["message"].get<std::string>() << "\n";
  return result.exit_code;
}
