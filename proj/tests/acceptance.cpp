// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "foliasep/errors.hpp"
#include "foliasep/parser.hpp"
#include "foliasep/polar.hpp"
#include "foliasep/report.hpp"

using namespace foliasep;
using nlohmann::ordered_json;

namespace {

// Pinned tolerances: every comparison below is exact integer equality.
constexpr int kRandomFields = 60;
constexpr int kMinRandomFields = 50;
constexpr double kMaxExcludedFraction = 0.30;
constexpr int kBranchesPerField = 5;
constexpr unsigned kCorpusSeed = 20240611u;

struct Field {
  std::string name;
  std::string text;
  bool random = false;
};

struct Run {
  Field field;
  Analysis analysis;
  bool excluded = false;  // UnsupportedExtension
};

std::string monomial(int a, int b) {
  std::string s;
  if (a) s += "x^" + std::to_string(a);
  if (a && b) s += "*";
  if (b) s += "y^" + std::to_string(b);
  return s;
}

std::string random_component(std::mt19937& rng, int low) {
  std::uniform_int_distribution<int> coef(-3, 3), coin(0, 1);
  std::string out = "0";
  for (int d = low; d <= 3; ++d)
    for (int a = 0; a <= d; ++a) {
      if (!coin(rng)) continue;
      int c = coef(rng);
      if (c == 0) continue;
      out += (c < 0 ? " - " : " + ") + std::to_string(std::abs(c)) + "*" + monomial(a, d - a);
    }
  return out;
}

std::vector<Field> corpus() {
  std::vector<Field> out = {
      {"radial", "P = x; Q = y;"},
      {"linear saddle", "P = x; Q = -y;"},
      {"center", "P = y; Q = -x;"},
      {"cusp", "P = 2*y; Q = 3*x^2;"},
      {"saddle-node k=1", "P = x^2; Q = -y*(1 + x);"},
      {"saddle-node k=2", "P = x^3; Q = -y*(1 + x^2);"},
      {"saddle-node k=3", "P = x^4; Q = -y*(1 + x^3);"},
      {"example", "P = y^2 + x^4; Q = -x*y + x^5 + x*y^2;"},
      {"focus", "P = y + x*(x^2 + y^2); Q = -(x - y*(x^2 + y^2));"},
  };
  std::mt19937 rng(kCorpusSeed);
  std::uniform_int_distribution<int> low(1, 2);
  int made = 0;
  while (made < kRandomFields) {
    int l = low(rng);
    std::string text = "P = " + random_component(rng, l) + "; Q = " + random_component(rng, l) + ";";
    try {
      InputSpec spec = parse_input(text);
      if (spec.P.is_zero() || spec.Q.is_zero()) continue;
    } catch (const Error&) {
      continue;
    }
    out.push_back({"random " + std::to_string(made), text, true});
    ++made;
  }
  return out;
}

bool has_error(const Analysis& a, const std::string& code) {
  for (const auto& e : a.report["errors"])
    if (e["code"].get<std::string>().ends_with("/" + code)) return true;
  return false;
}

// Missing keys read as null.
const ordered_json& get(const ordered_json& j, std::initializer_list<const char*> path) {
  static const ordered_json null;
  const ordered_json* cur = &j;
  for (const char* k : path) {
    if (!cur->is_object() || !cur->contains(k)) return null;
    cur = &(*cur)[k];
  }
  return *cur;
}

bool holds(const ordered_json& j) { return j.is_object() && j.value("holds", false); }

int failures = 0;

void verdict(int n, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
  if (!ok) ++failures;
}

void note(const std::string& who, const std::string& what) { std::printf("  %s: %s\n", who.c_str(), what.c_str()); }

const Run& find(const std::vector<Run>& runs, const std::string& name) {
  for (const auto& r : runs)
    if (r.field.name == name) return r;
  std::abort();
}

}  // namespace

int main() {
  AnalyzeOptions opt;
  opt.branch_count = kBranchesPerField;
  std::vector<Run> runs;
  int random_total = 0, random_excluded = 0;
  for (const auto& f : corpus()) {
    Run r{f, analyze_text(f.text, Command::All, opt)};
    r.excluded = has_error(r.analysis, "UnsupportedExtension");
    if (f.random) {
      ++random_total;
      if (r.excluded) ++random_excluded;
    }
    runs.push_back(std::move(r));
  }

  {
    int nu2 = 0, dicritical = 0, saddle_nodes = 0, tangent = 0, deep = 0;
    for (const auto& r : runs) {
      const auto& rep = r.analysis.report;
      if (get(rep, {"invariants", "nu0", "value"}) == 2) ++nu2;
      bool d = false, sn = false, tg = false;
      for (const auto& c : get(rep, {"tree", "components"})) d = d || c.value("dicritical", false);
      for (const auto& q : get(rep, {"tree", "singularities"})) {
        sn = sn || q["class"] == "SaddleNode";
        tg = tg || q.value("tangent", false);
      }
      if (get(rep, {"tree", "max_depth"}).is_number() && get(rep, {"tree", "max_depth"}).get<int>() >= 2) ++deep;
      dicritical += d;
      saddle_nodes += sn;
      tangent += tg;
    }
    std::printf("corpus: %zu fields, nu0=2: %d, dicritical: %d, saddle-nodes: %d, tangent saddle-nodes: %d, depth>=2: %d\n",
                runs.size(), nu2, dicritical, saddle_nodes, tangent, deep);
  }

  // 8 is checked first: an inconsistent certificate aborts everything else.
  for (const auto& r : runs) {
    if (has_error(r.analysis, "InconsistentCertificate")) {
      verdict(8, false, "InconsistentCertificate fired on " + r.field.name + " (" + r.field.text + ")");
      return 1;
    }
  }

  {
    const auto& rep = find(runs, "example").analysis.report;
    bool ok = get(rep, {"errors"}).empty() && get(rep, {"invariants", "nu0", "value"}) == 2 && get(rep, {"invariants", "mu0", "value"}) == 6;
    ok = ok && get(rep, {"tree", "blowups"}).size() == 1;
    int real_points = 0;
    for (const auto& s : get(rep, {"tree", "singularities"})) {
      if (!s.value("real", false)) continue;
      ++real_points;
      ok = ok && s["class"] == "SaddleNode" && s["weak_index"] == 3 && s["tangent"] == false;
      std::string ty = s.value("topological_type", "");
      ok = ok && (ty == "saddle" || ty == "node");
    }
    ok = ok && real_points == 1;
    const auto& c = get(rep, {"certificate"});
    ok = ok && get(c, {"verdict"}) == "separatrix-exists" && get(c, {"theorem"}) == "A" && get(c, {"witness_convergence"}) == "formal-only";
    verdict(1, ok, "example field: nu0=2, mu0=6, one real saddle-node with weak index 3, certified by A");
  }

  int excluded_total = 0;
  {
    bool ok = random_total >= kMinRandomFields;
    int checked = 0;
    for (const auto& r : runs) {
      if (r.excluded) {
        ++excluded_total;
        continue;
      }
      bool good = get(r.analysis.report, {"errors"}).empty() && holds(get(r.analysis.report, {"checks", "multiplicity_formula"}));
      if (!good) note(r.field.name, r.field.text + " " + get(r.analysis.report, {"errors"}).dump());
      ok = ok && good;
      ++checked;
    }
    double fraction = random_total ? double(random_excluded) / random_total : 1.0;
    ok = ok && fraction < kMaxExcludedFraction;
    verdict(2, ok,
            "nu0(F) = nu0(B) - 1 + tau0(F) on " + std::to_string(checked) + " fields; excluded " +
                std::to_string(excluded_total) + " (random " + std::to_string(random_excluded) + "/" +
                std::to_string(random_total) + ")");
  }

  {
    bool ok = true;
    int checked = 0, skipped = 0;
    for (const auto& r : runs) {
      if (r.excluded) continue;
      const auto& rep = r.analysis.report;
      if (get(rep, {"polar"}).contains("applicable")) {
        ++skipped;
        continue;
      }
      const auto& pf = get(rep, {"checks", "polar_formula"});
      bool good = holds(pf) && pf.value("certified", false);
      if (!good) note(r.field.name, pf.dump());
      ok = ok && good;
      ++checked;
    }
    auto values = [&](const std::string& name, int lhs, int mu, int nu, int tau) {
      const auto& pf = get(find(runs, name).analysis.report, {"checks", "polar_formula"});
      return get(pf, {"lhs"}) == lhs && get(pf, {"terms", "mu0"}) == mu && get(pf, {"terms", "nu0"}) == nu && get(pf, {"terms", "tau_along"}) == tau;
    };
    ok = ok && values("cusp", 3, 2, 1, 0) && values("example", 8, 6, 2, 0);
    verdict(3, ok,
            "p0(F,B) = mu0 + nu0 - tau0(F,polar) on " + std::to_string(checked) + " fields (" +
                std::to_string(skipped) + " radial skipped); cusp 3 = 2+1-0, example 8 = 6+2-0");
  }

  {
    bool ok = true;
    int branches = 0;
    for (const auto& r : runs) {
      if (r.excluded) continue;
      const auto& br = get(r.analysis.report, {"checks", "branches"});
      ok = ok && br.size() == static_cast<size_t>(kBranchesPerField);
      for (const auto& b : br) {
        bool good = holds(get(b, {"blowup_formula"})) && holds(get(b, {"intersection_formula"}));
        if (!good) note(r.field.name, b.dump());
        ok = ok && good;
        ++branches;
      }
    }
    // Regular point: the leaf through 0 of dx against the transverse line y = x.
    FoliationGerm dx(parse_polynomial("0"), parse_polynomial("-1"));
    PuiseuxParam line{TruncSeries::variable(), TruncSeries::variable()};
    SeparatrixDivisor leaf;
    Separatrix s;
    s.param = regular_leaf(dx, 8);
    leaf.members.push_back(s);
    leaf.coefficients.push_back(1);
    bool base = tangency_order(dx, line) == 0 && intersection_number(leaf, parse_polynomial("y - x")) == 1;
    verdict(4, ok && base,
            "one blow-up tangency formula and (B,G) = tg0 + 1 - tau on " + std::to_string(branches) +
                " branches; regular base case tg = 0, (B,G) = 1");
  }

  {
    bool ok = true;
    int checked = 0;
    for (const auto& r : runs) {
      if (r.excluded) continue;
      const auto& p = get(r.analysis.report, {"checks", "parities"});
      bool good = holds(get(p, {"nu_B"})) && holds(get(p, {"tau"})) && holds(get(p, {"topologicalRGC_tau_even"}));
      if (p.contains("p0")) good = good && holds(get(p, {"p0"}));
      if (!good) note(r.field.name, p.dump());
      ok = ok && good;
      ++checked;
    }
    verdict(5, ok, "nu0(B), tau0 and p0 agree mod 2 over R and C on " + std::to_string(checked) + " fields");
  }

  {
    bool ok = true;
    int shear = 0;
    for (const auto& r : runs) {
      if (has_error(r.analysis, "ShearExhausted")) ++shear;
      const auto& m = get(r.analysis.report, {"checks", "milnor_oracle"});
      bool good = holds(m);
      if (!good) note(r.field.name, get(r.analysis.report, {"invariants"}).dump());
      ok = ok && good;
    }
    ok = ok && shear == 0;
    verdict(6, ok,
            "milnor number equals the oracle on " + std::to_string(runs.size()) + " fields; ShearExhausted " +
                std::to_string(shear));
  }

  {
    bool ok = true;
    for (const char* name : {"center", "focus"}) {
      const auto& rep = find(runs, name).analysis.report;
      const auto& c = get(rep, {"certificate"});
      bool good = get(c, {"flags", "center_focus"}) == "yes" && get(c, {"parity", "nu0"}) == 1 && get(c, {"parity", "mu0"}) == 1 &&
                  holds(get(rep, {"checks", "center_focus_parity"}));
      for (const auto& s : get(rep, {"separatrices"})) good = good && s["reality"] != "real";
      ok = ok && good;
    }
    verdict(7, ok, "center and focus: center-focus, nu0 and mu0 odd, no real separatrix");
  }

  {
    bool ok = true;
    int certified = 0;
    for (const auto& r : runs) {
      const auto& c = get(r.analysis.report, {"certificate"});
      if (!c.is_object() || c.value("verdict", "") != "separatrix-exists") continue;
      ++certified;
      bool good = holds(get(r.analysis.report, {"checks", "witness_order"}));
      if (!good) note(r.field.name, get(r.analysis.report, {"checks"}).dump());
      ok = ok && good;
    }
    verdict(8, ok,
            "witness residual order >= 2 mu0 + 4 on " + std::to_string(certified) +
                " certified fields; no inconsistent certificate");
  }

  return failures == 0 ? 0 : 1;
}
