#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "foliasep/blowup.hpp"
#include "foliasep/parser.hpp"
#include "foliasep/report.hpp"

using namespace foliasep;
using nlohmann::ordered_json;

namespace {

const char* kExample = "P = y^2 + x^4; Q = -x*y + x^5 + x*y^2;";
const char* kCenter = "P = y; Q = -x;";
const char* kCusp = "P = 2*y; Q = 3*x^2;";
const char* kRadial = "P = x; Q = y;";

std::string random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-5, 5), den(1, 3), deg(0, 3);
  std::string out;
  for (int k = 0; k < 4; ++k) {
    int c = coef(rng);
    if (c == 0) continue;
    int a = deg(rng), b = deg(rng);
    if (a + b == 0) a = 1;
    out += (c < 0 ? " - " : " + ") + std::to_string(std::abs(c)) + "/" + std::to_string(den(rng)) + "*x^" +
           std::to_string(a) + "*y^" + std::to_string(b);
  }
  return out.empty() ? "x" : "0" + out;
}

int singularity_count(const ordered_json& rep, const std::string& cls) {
  int n = 0;
  for (const auto& s : rep["tree"]["singularities"])
    if (s["class"] == cls) ++n;
  return n;
}

}  // namespace

TEST_CASE("commands parse and print") {
  for (const char* name : {"invariants", "reduce", "separatrices", "balanced", "polar-check", "certify", "all"}) {
    auto c = parse_command(name);
    REQUIRE(c);
    CHECK(command_name(*c) == name);
  }
  CHECK_FALSE(parse_command("bogus"));
}

TEST_CASE("print and parse round-trip") {
  std::mt19937 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::string text = "P = " + random_poly(rng) + "; Q = " + random_poly(rng) + ";";
    InputSpec spec;
    try {
      spec = parse_input(text);
    } catch (const Error&) {
      continue;
    }
    InputSpec again = parse_input(print_input(spec));
    CHECK(again.P == spec.P);
    CHECK(again.Q == spec.Q);
    CHECK(again.field == spec.field);
    ++checked;
  }
  CHECK(checked > 30);
  InputSpec g = parse_input("P = y + i*x; Q = x;");
  CHECK(g.field == FieldTag::Gaussian);
  CHECK(parse_input(print_input(g)).P == g.P);
}

TEST_CASE("reports are deterministic") {
  for (const char* text : {kExample, kCusp, kCenter}) {
    Analysis a = analyze_text(text, Command::All, {});
    Analysis b = analyze_text(text, Command::All, {});
    CHECK(a.report.dump() == b.report.dump());
    CHECK(a.dot == b.dot);
  }
  AnalyzeOptions seeded;
  seeded.seed = 3;
  CHECK(analyze_text(kExample, Command::PolarCheck, seeded).report.dump() ==
        analyze_text(kExample, Command::PolarCheck, seeded).report.dump());
}

TEST_CASE("exit codes") {
  CHECK(analyze_text(kExample, Command::All, {}).exit_code == exit_code::kOk);
  CHECK(analyze_text("P = x*y; Q = x*y;", Command::Invariants, {}).exit_code == exit_code::kInput);
  Analysis bad = analyze_text("P = x +; Q = y;", Command::Invariants, {});
  CHECK(bad.exit_code == exit_code::kInput);
  REQUIRE(bad.report["errors"].size() == 1);
  CHECK(bad.report["errors"][0]["code"] == "cli-report/SyntaxError");
  Analysis complex = analyze_text("P = y + i*x; Q = x;", Command::Certify, {});
  CHECK(complex.exit_code == exit_code::kInput);
  CHECK(complex.report["errors"][0]["code"] == "real-structure/NotReal");
  Analysis skipped = analyze_text("P = y + i*x; Q = x;", Command::All, {});
  CHECK(skipped.exit_code == exit_code::kOk);
  CHECK(skipped.report["certificate"]["applicable"] == false);

  CHECK(exit_code_for(ErrorCode::TruncationExhausted) == exit_code::kResource);
  CHECK(exit_code_for(ErrorCode::GenericityExhausted) == exit_code::kResource);
  CHECK(exit_code_for(ErrorCode::InconsistentCertificate) == exit_code::kIdentity);
  CHECK(exit_code_for(ErrorCode::NotIsolated) == exit_code::kInput);
}

TEST_CASE("example field, full run") {
  Analysis a = analyze_text(kExample, Command::All, {});
  const auto& r = a.report;
  CHECK(r["invariants"]["nu0"]["value"] == 2);
  CHECK(r["invariants"]["mu0"]["value"] == 6);
  CHECK(r["invariants"]["tau0_complex"]["value"] == 0);
  CHECK(r["invariants"]["tau0_real"]["value"] == 0);
  CHECK(r["certificate"]["verdict"] == "separatrix-exists");
  CHECK(r["certificate"]["theorem"] == "A");
  CHECK(r["certificate"]["witness_convergence"] == "formal-only");
  CHECK(r["checks"]["witness_order"]["holds"] == true);
  CHECK(r["checks"]["multiplicity_formula"]["holds"] == true);
  CHECK(r["polar"]["certificate"]["squarefree"] == true);
  CHECK(r["checks"]["polar_formula"]["lhs"] == 8);
  CHECK(singularity_count(r, "SaddleNode") == 1);
  CHECK(singularity_count(r, "NonDegenerateSimple") == 2);
  for (const auto& s : r["tree"]["singularities"]) {
    if (s["class"] == "SaddleNode") {
      CHECK(s["real"] == true);
      CHECK(s["topological_type"] == "saddle");
    } else {
      CHECK(s["real"] == false);
    }
  }
}

TEST_CASE("every number carries a route") {
  Analysis a = analyze_text(kExample, Command::All, {});
  auto walk = [](const ordered_json& j, auto&& self) -> void {
    if (j.is_object()) {
      if (j.contains("value")) CHECK(j.contains("route"));
      if (j.contains("lhs")) CHECK(j.contains("route"));
      for (const auto& [k, v] : j.items()) self(v, self);
    } else if (j.is_array()) {
      for (const auto& v : j) self(v, self);
    }
  };
  walk(a.report, walk);
  CHECK(a.report["invariants"]["mu0"]["route"].get<std::string>().size() > 0);
}

TEST_CASE("center field certify") {
  Analysis a = analyze_text(kCenter, Command::Certify, {});
  CHECK(a.exit_code == exit_code::kOk);
  CHECK(a.report["certificate"]["verdict"] == "no-conclusion");
  CHECK(a.report["certificate"]["flags"]["center_focus"] == "yes");
  CHECK(a.report["checks"]["center_focus_parity"]["holds"] == true);
}

TEST_CASE("cusp polar check") {
  Analysis a = analyze_text(kCusp, Command::PolarCheck, {});
  CHECK(a.exit_code == exit_code::kOk);
  const auto& pf = a.report["checks"]["polar_formula"];
  CHECK(pf["lhs"] == 3);
  CHECK(pf["terms"]["mu0"] == 2);
  CHECK(pf["terms"]["nu0"] == 1);
  CHECK(pf["terms"]["tau_along"] == 0);
  CHECK(pf["holds"] == true);
  for (const auto& b : a.report["checks"]["branches"]) {
    CHECK(b["blowup_formula"]["holds"] == true);
    CHECK(b["intersection_formula"]["holds"] == true);
  }
}

TEST_CASE("radial field") {
  Analysis a = analyze_text(kRadial, Command::All, {});
  CHECK(a.exit_code == exit_code::kOk);
  CHECK(a.dot.find("D1 ρ=1 val=0 dicritical") != std::string::npos);
  CHECK(a.report["polar"]["applicable"] == false);
  CHECK(a.report["tree"]["components"].size() == 1);
}

TEST_CASE("dot export") {
  Analysis cusp = analyze_text(kCusp, Command::Reduce, {});
  CHECK(cusp.dot.rfind("graph reduction {", 0) == 0);
  CHECK(cusp.report["tree"]["components"].size() == 3);
  CHECK(cusp.dot.find("D1 ") < cusp.dot.find("D2 "));
  CHECK(cusp.dot.find("D2 ") < cusp.dot.find("D3 "));
  Analysis ex = analyze_text(kExample, Command::Reduce, {});
  CHECK(ex.dot.find("SaddleNode ι=3 real saddle") != std::string::npos);
  CHECK(ex.dot.find("conj q3") != std::string::npos);
}

TEST_CASE("truncation option") {
  AnalyzeOptions opt;
  opt.truncation = 10;
  Analysis a = analyze_text(kExample, Command::Separatrices, opt);
  CHECK(a.report["separatrix_order"] == 10);
  for (const auto& s : a.report["separatrices"]) CHECK(s["param"]["exact_through"].get<int>() >= 10);
}
