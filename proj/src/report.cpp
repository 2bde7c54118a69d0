#include "foliasep/report.hpp"

#include <map>

#include "foliasep/real_structure.hpp"

namespace foliasep {

namespace {

using json = nlohmann::ordered_json;

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> table = {
      {"invariants", Command::Invariants}, {"reduce", Command::Reduce},   {"separatrices", Command::Separatrices},
      {"balanced", Command::Balanced},     {"polar-check", Command::PolarCheck}, {"certify", Command::Certify},
      {"all", Command::All}};
  return table;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  auto it = command_table().find(name);
  if (it == command_table().end()) return std::nullopt;
  return it->second;
}

std::string command_name(Command c) {
  for (const auto& [name, cmd] : command_table())
    if (cmd == c) return name;
  return "?";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedExtension:
    case ErrorCode::TruncationExhausted:
    case ErrorCode::ShearExhausted:
    case ErrorCode::BoundTooSmall:
    case ErrorCode::DepthExceeded:
    case ErrorCode::InsufficientTracePoints:
    case ErrorCode::GenericityExhausted:
    case ErrorCode::UndecidedReality:
      return exit_code::kResource;
    case ErrorCode::InconsistentCertificate:
      return exit_code::kIdentity;
    default:
      return exit_code::kInput;
  }
}

namespace {

struct Stages {
  bool tree = false, separatrices = false, balanced = false, polar = false, certify = false;
};

Stages stages_for(Command c) {
  Stages s;
  switch (c) {
    case Command::Invariants: break;
    case Command::Reduce: s.tree = true; break;
    case Command::Separatrices: s.tree = s.separatrices = true; break;
    case Command::Balanced: s.tree = s.separatrices = s.balanced = true; break;
    case Command::PolarCheck: s.tree = s.separatrices = s.balanced = s.polar = true; break;
    case Command::Certify: s.tree = s.separatrices = s.balanced = s.certify = true; break;
    case Command::All: s.tree = s.separatrices = s.balanced = s.polar = s.certify = true; break;
  }
  return s;
}

json value(long v, const std::string& route) { return {{"value", v}, {"route", route}}; }

json identity(long lhs, long rhs, const std::string& route) {
  return {{"lhs", lhs}, {"rhs", rhs}, {"holds", lhs == rhs}, {"route", route}};
}

std::string comp_name(int c) { return "D" + std::to_string(c + 1); }

json param_json(const PuiseuxParam& g) {
  json j = {{"x", g.x.to_string()}, {"y", g.y.to_string()}};
  if (g.precision() >= TruncSeries::kExactPrecision)
    j["exact_through"] = "all";
  else
    j["exact_through"] = g.precision();
  return j;
}

std::string point_type(const ReductionTree& tree, int id) {
  const TreePoint& p = tree.points[id];
  if (!tree.symmetric || !p.is_real() || !p.cls.is_simple()) return "";
  try {
    return topological_type_name(topological_type(p.germ));
  } catch (const Error&) {
    return "unknown";
  }
}

json tree_json(const ReductionTree& tree) {
  json t;
  json blowups = json::array();
  for (size_t b = 0; b < tree.blowups.size(); ++b) {
    const auto& r = tree.blowups[b];
    blowups.push_back({{"index", b},
                       {"center", r.center},
                       {"component", comp_name(r.component)},
                       {"nu", r.nu},
                       {"m", r.m},
                       {"dicritical", r.dicritical}});
  }
  t["blowups"] = blowups;
  json comps = json::array();
  json edges = json::array();
  for (const auto& c : tree.components) {
    json nb = json::array();
    for (int n : c.neighbors) {
      nb.push_back(comp_name(n));
      if (n > c.id) edges.push_back({comp_name(c.id), comp_name(n)});
    }
    json cj = {{"name", comp_name(c.id)},
               {"weight", value(c.weight, "sum of weights of the components through the center")},
               {"valence", static_cast<int>(c.neighbors.size())},
               {"dicritical", c.dicritical},
               {"neighbors", nb}};
    if (tree.symmetric) cj["conjugate"] = comp_name(c.conjugate);
    comps.push_back(cj);
  }
  t["components"] = comps;
  t["edges"] = edges;
  json sing = json::array();
  for (int id : tree.final_singularities()) {
    const TreePoint& p = tree.points[id];
    json comps_of = json::array();
    for (int c : p.components()) comps_of.push_back(comp_name(c));
    json s = {{"point", id},
              {"components", comps_of},
              {"chart", chart_name(p.chart)},
              {"coordinate", p.coord.to_string()},
              {"class", tag_name(p.cls.tag)}};
    if (p.cls.tag == SingularityTag::SaddleNode) {
      s["weak_index"] = p.cls.weak_index;
      s["tangent"] = tree.weak_component(id).has_value();
    }
    if (p.cls.rational_ratio) s["eigenvalue_ratio"] = rational_to_string(*p.cls.rational_ratio);
    if (tree.symmetric) {
      s["real"] = p.is_real();
      s["conjugate"] = p.conjugate;
      std::string ty = point_type(tree, id);
      if (!ty.empty()) s["topological_type"] = ty;
    }
    sing.push_back(s);
  }
  t["singularities"] = sing;
  t["max_depth"] = tree.max_depth();
  return t;
}

json separatrix_json(const Separatrix& s) {
  json j = {{"id", s.id},
            {"kind", kind_name(s.kind)},
            {"role", s.role},
            {"multiplicity", s.multiplicity()},
            {"convergence", convergence_name(s.convergence)},
            {"reality", reality_name(s.reality)},
            {"partner", s.partner},
            {"source_point", s.source_point}};
  if (s.kind == SeparatrixKind::Dicritical) {
    j["component"] = comp_name(s.component);
    j["attachment"] = {{"chart", chart_name(s.attachment_chart)}, {"coordinate", s.attachment.to_string()}};
  }
  j["param"] = param_json(s.param);
  return j;
}

json divisor_json(const SeparatrixDivisor& B) {
  json members = json::array();
  for (size_t k = 0; k < B.members.size(); ++k) {
    json m = separatrix_json(B.members[k]);
    m["coefficient"] = B.coefficients[k];
    members.push_back(m);
  }
  return {{"members", members},
          {"nu0_B", value(divisor_multiplicity(B), "sum of coefficient times multiplicity")},
          {"balanced", B.balanced},
          {"j_symmetric", B.j_symmetric}};
}

json polar_json(const PolarCurve& p) {
  json samples = json::array();
  for (const auto& s : p.samples) {
    json j = {{"a", rational_to_string(s.a)}, {"b", rational_to_string(s.b)}};
    if (s.rejection.empty())
      j["p0"] = *s.p0;
    else
      j["rejected"] = s.rejection;
    samples.push_back(j);
  }
  return {{"a", rational_to_string(p.a)},
          {"b", rational_to_string(p.b)},
          {"equation", p.equation.to_string()},
          {"certificate",
           {{"squarefree", p.certificate.squarefree},
            {"no_invariant_component", p.certificate.no_invariant_component},
            {"order_matches", p.certificate.order_matches},
            {"samples_consistent", p.certificate.samples_consistent}}},
          {"samples", samples},
          {"warnings", p.warnings}};
}

json branch_json(const BranchCheck& b) {
  json steps = json::array();
  for (int k : b.kappa_steps) steps.push_back(k);
  return {{"branch", param_json(b.branch.gamma)},
          {"equation", b.branch.equation.to_string()},
          {"blowup_formula", identity(b.tg0, static_cast<long>(b.m) * b.nu_gamma + b.tg_q,
                                      "tg0 by substitution; m nu + tg_q in the first chart")},
          {"intersection_formula", identity(b.B_gamma, b.tg0 + 1 - b.tau_along,
                                            "(B,G) with a divisor adapted to the branch; tg0 + 1 - tau along")},
          {"kappa0", b.kappa0},
          {"kappa_steps", steps},
          {"default_divisor_exit_defect", b.exit_defect}};
}

struct Pipeline {
  ReductionTree tree;
  int N = 0;
  std::vector<Separatrix> isolated;
  SeparatrixDivisor B;
};

void run(const FoliationGerm& F, Command cmd, const AnalyzeOptions& opt, int jet_cap, json& rep, std::string& dot,
         bool& identity_failed) {
  Stages st = stages_for(cmd);
  json inv;
  int nu = algebraic_multiplicity(F);
  int mu = milnor_number(F);
  int oracle = milnor_oracle(F, std::max(4, 2 * mu + 4));
  inv["nu0"] = value(nu, "lowest total degree of P and Q");
  inv["mu0"] = value(mu, "order of the resultant after a certified shear");
  inv["mu0_oracle"] = value(oracle, "colength by linear algebra on jets");
  json checks;
  checks["milnor_oracle"] = identity(mu, oracle, "resultant route versus jet colength");
  json base = {{"class", tag_name(classify_singularity(F).tag)}};
  inv["base_point"] = base;
  rep["invariants"] = inv;
  if (!st.tree) {
    rep["checks"] = checks;
    return;
  }

  // partial reports keep the checks that ran
  struct Flush {
    json& rep;
    json& checks;
    ~Flush() { rep["checks"] = checks; }
  } flush{rep, checks};

  Pipeline p;
  ReductionOptions ro;
  ro.jet_cap = jet_cap;
  p.tree = reduce_singularities(F, ro);
  rep["invariants"]["tau0_complex"] = value(tangency_excess(p.tree), "weighted tangent saddle-nodes");
  if (p.tree.symmetric)
    rep["invariants"]["tau0_real"] = value(tangency_excess(p.tree, 0, true), "real tangent saddle-nodes only");
  rep["tree"] = tree_json(p.tree);
  dot = export_dot(p.tree, [&](int id) { return point_type(p.tree, id); });

  if (st.separatrices) {
    p.N = opt.truncation.value_or(2 * mu + 4);
    p.isolated = enumerate_separatrices(p.tree, p.N);
    json seps = json::array();
    for (const auto& s : p.isolated) seps.push_back(separatrix_json(s));
    rep["separatrices"] = seps;
    rep["separatrix_order"] = p.N;
  }
  if (st.balanced) {
    p.B = balanced_divisor(p.tree, p.isolated, true, p.N);
    rep["balanced_divisor"] = divisor_json(p.B);
    MultiplicityReport m = check_multiplicity_formula(p.tree, p.B);
    checks["multiplicity_formula"] =
        identity(m.nu0, m.nu0_B - 1 + m.tau0, "nu0 of the field; nu0(B) - 1 + tau0 from the tree");
    checks["multiplicity_formula"]["second_type"] = m.second_type;
    checks["multiplicity_formula"]["inequality"] = m.inequality;
    checks["balanced"] = {{"holds", p.B.balanced}, {"route", "coefficients and dicritical sums"}};
  }
  if (st.polar) {
    PolarReport pr =
        check_polar_identities(p.tree, p.isolated, p.B, mu, p.N, opt.branch_count, opt.seed, opt.polar_hint);
    if (pr.polar_applicable) {
      rep["polar"] = polar_json(pr.polar);
      rep["polar"]["tau_along"] = value(pr.tau_along_polar, "excess summed over the polar's infinitely near points");
      checks["polar_formula"] = identity(pr.polar_identity.lhs, pr.polar_identity.rhs, pr.polar_identity.route);
      checks["polar_formula"]["terms"] = {{"mu0", pr.mu0}, {"nu0", pr.nu0}, {"tau_along", pr.tau_along_polar}};
      checks["polar_formula"]["certified"] = pr.polar.certificate.complete();
    } else {
      rep["polar"] = {{"applicable", false}, {"reason", "radial foliation"}};
    }
    json br = json::array();
    for (const auto& b : pr.branches) br.push_back(branch_json(b));
    checks["branches"] = br;
  }
  if (st.certify) {
    if (!p.tree.symmetric) {
      if (cmd == Command::Certify) throw Error(ErrorCode::NotReal, "certify needs a field with rational coefficients");
      rep["certificate"] = {{"applicable", false}, {"reason", "field is not real"}};
    } else {
      Certificate c = certify_separatrix(p.tree, p.B, mu, p.N);
      json flags = {{"generalized_curve", c.flags.generalized_curve},
                    {"second_type", c.flags.second_type},
                    {"RGC", c.flags.real_generalized_curve},
                    {"topologicalRGC", c.flags.topological_rgc},
                    {"ST", c.flags.real_second_type},
                    {"topologicalST", c.flags.topological_st},
                    {"center_focus", tristate_name(c.flags.center_focus)},
                    {"notes", c.flags.notes}};
      json cj = {{"flags", flags},
                 {"parity", {{"nu0", c.nu0 % 2}, {"mu0", c.mu0 % 2}, {"tau0_real", c.tau_real % 2}}},
                 {"verdict", verdict_name(c.verdict)},
                 {"theorem", cited_name(c.cited)},
                 {"log", c.log}};
      if (c.witness) {
        cj["witness"] = c.witness->id;
        cj["witness_kind"] = kind_name(c.witness->kind);
        cj["witness_convergence"] = convergence_name(c.witness->convergence);
        checks["witness_order"] = {{"lhs", c.witness_residual_order},
                                   {"rhs", 2 * mu + 4},
                                   {"holds", c.witness_valid && c.witness_residual_order >= 2 * mu + 4},
                                   {"route", "invariance residual vanishes to the guaranteed order"}};
      }
      rep["certificate"] = cj;
      if (c.flags.center_focus == TriState::Yes) {
        bool ok = c.nu0 % 2 == 1 && c.mu0 % 2 == 1 && !c.real_separatrix_exists;
        checks["center_focus_parity"] = {{"holds", ok}, {"route", "center-focus implies odd nu0, odd mu0, no real separatrix"}};
      }
      {
        ParityReport pr = check_parities(p.tree, p.B, mu, opt.seed);
        json pj = {{"nu_B", identity(pr.nu_B_real % 2, pr.nu_B_complex % 2, "real part of a J-symmetric divisor")},
                   {"tau", identity(pr.tau_real % 2, pr.tau_complex % 2, "real versus all tangent saddle-nodes")},
                   {"topologicalRGC_tau_even", {{"holds", pr.trgc_tau_even}}}};
        if (pr.p0_complex) {
          pj["p0"] = identity(*pr.p0_real_mod2, *pr.p0_complex % 2, "real members against the full polar, mod 2");
          pj["real_polar_formula"] = identity(*pr.p0_real_mod2, ((mu + nu - *pr.tau_along_real_polar_mod2) % 2 + 2) % 2,
                                              "mu0 + nu0 - real excess along the polar, mod 2");
        }
        checks["parities"] = pj;
      }
    }
  }
  auto scan = [&](const json& j, auto&& self) -> void {
    if (j.is_object()) {
      if (j.contains("holds") && j["holds"].is_boolean() && !j["holds"].get<bool>()) identity_failed = true;
      for (const auto& [k, v] : j.items()) self(v, self);
    } else if (j.is_array()) {
      for (const auto& v : j) self(v, self);
    }
  };
  scan(checks, scan);
}

}  // namespace

Analysis analyze(const InputSpec& spec, Command cmd, const AnalyzeOptions& opt) {
  Analysis out;
  json& rep = out.report;
  rep["command"] = command_name(cmd);
  rep["input"] = {{"P", spec.p_text},
                  {"Q", spec.q_text},
                  {"field", spec.field == FieldTag::Rational ? "rational" : "gaussian"},
                  {"seed", opt.seed}};
  if (opt.truncation) rep["input"]["truncation"] = *opt.truncation;
  rep["warnings"] = json::array();
  rep["errors"] = json::array();
  FoliationGerm F = spec.germ().at_origin();
  for (int cap : {64, 128, 256}) {
    json attempt = rep;
    std::string dot;
    bool failed = false;
    try {
      run(F, cmd, opt, cap, attempt, dot, failed);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::TruncationExhausted && cap < 256) {
        rep["warnings"].push_back("jet cap " + std::to_string(cap) + " exhausted; retrying with " +
                                  std::to_string(2 * cap));
        continue;
      }
      attempt["errors"].push_back({{"code", error_qualified_name(e.code())}, {"message", e.what()}});
      out.report = attempt;
      out.dot = dot;
      out.exit_code = exit_code_for(e.code());
      return out;
    }
    out.report = attempt;
    out.dot = dot;
    out.exit_code = failed ? exit_code::kIdentity : exit_code::kOk;
    return out;
  }
  return out;
}

Analysis analyze_text(const std::string& text, Command cmd, const AnalyzeOptions& opt) {
  try {
    return analyze(parse_input(text), cmd, opt);
  } catch (const Error& e) {
    Analysis out;
    out.report["command"] = command_name(cmd);
    out.report["errors"] = json::array({{{"code", error_qualified_name(e.code())}, {"message", e.what()}}});
    out.exit_code = exit_code_for(e.code());
    return out;
  }
}

}  // namespace foliasep
