#include "foliasep/real_structure.hpp"

#include "foliasep/errors.hpp"

namespace foliasep {

int conjugate_component(const ReductionTree& tree, int component) {
  if (!tree.symmetric) throw Error(ErrorCode::NotReal, "tree has no conjugation involution");
  return tree.components.at(component).conjugate;
}

std::string topological_type_name(TopologicalType t) {
  switch (t) {
    case TopologicalType::TopologicalSaddleNode: return "topological-saddle-node";
    case TopologicalType::Saddle: return "saddle";
    case TopologicalType::Node: return "node";
    case TopologicalType::SaddleOrNode: return "saddle-or-node";
    case TopologicalType::Focus: return "focus";
    case TopologicalType::Unknown: return "unknown";
  }
  return "?";
}

std::string tristate_name(TriState t) {
  return t == TriState::Yes ? "yes" : t == TriState::No ? "no" : "unknown";
}

std::string verdict_name(Verdict v) { return v == Verdict::SeparatrixExists ? "separatrix-exists" : "no-conclusion"; }

std::string cited_name(CitedResult c) {
  switch (c) {
    case CitedResult::TheoremA: return "A";
    case CitedResult::TheoremB: return "B";
    case CitedResult::ParityProposition: return "parity";
    case CitedResult::None: return "none";
  }
  return "?";
}

TopologicalType topological_type_saddle_node(const FoliationGerm& germ, bool refine) {
  if (!germ.is_real()) throw Error(ErrorCode::NotReal, "topological typing needs real data");
  SingularityClass cls = classify_singularity(germ);
  if (cls.tag != SingularityTag::SaddleNode) throw Error(ErrorCode::NotSaddleNode, "not a saddle-node");
  if (cls.weak_index % 2 == 0) return TopologicalType::TopologicalSaddleNode;
  if (!refine) return TopologicalType::SaddleOrNode;
  int s = cls.center_leading.sign() * cls.strong_eigenvalue.sign();
  return s < 0 ? TopologicalType::Saddle : TopologicalType::Node;
}

TopologicalType topological_type(const FoliationGerm& germ, bool refine) {
  SingularityClass cls = classify_singularity(germ);
  if (cls.tag == SingularityTag::SaddleNode) return topological_type_saddle_node(germ, refine);
  if (cls.tag != SingularityTag::NonDegenerateSimple) return TopologicalType::Unknown;
  if (!germ.is_real()) throw Error(ErrorCode::NotReal, "topological typing needs real data");
  const FieldElement& d = cls.determinant;
  if (d.sign() < 0) return TopologicalType::Saddle;
  FieldElement disc = cls.trace * cls.trace - FieldElement(4) * d;
  return disc.sign() < 0 ? TopologicalType::Focus : TopologicalType::Node;
}

ClassFlags foliation_class(const ReductionTree& tree, bool refine) {
  if (!tree.symmetric) throw Error(ErrorCode::NotReal, "class flags need a real foliation");
  ClassFlags f;
  f.generalized_curve = f.second_type = f.real_generalized_curve = true;
  f.topological_rgc = f.real_second_type = f.topological_st = true;
  bool cf_no = false, cf_unknown = false;
  for (const auto& D : tree.components)
    if (D.dicritical && D.conjugate == D.id) cf_no = true;
  for (int id : tree.final_singularities()) {
    const TreePoint& p = tree.points[id];
    bool sn = p.cls.tag == SingularityTag::SaddleNode;
    bool tangent = sn && tree.weak_component(id).has_value();
    if (sn) f.generalized_curve = false;
    if (tangent) f.second_type = false;
    if (!p.is_real()) continue;
    TopologicalType t = topological_type(p.germ, refine);
    // A simple base point is monodromic exactly when its eigenvalues are not real.
    if (tree.blowups.empty() && t != TopologicalType::Focus) cf_no = true;
    if (p.is_trace()) cf_no = true;
    if (sn) {
      f.real_generalized_curve = false;
      if (tangent) f.real_second_type = false;
      if (t == TopologicalType::TopologicalSaddleNode) {
        f.topological_rgc = false;
        if (tangent) f.topological_st = false;
      }
      if (refine && p.cls.weak_index % 2) f.notes.push_back("q" + std::to_string(id) + " typed by the sign rule");
    }
    if (p.is_corner()) {
      if (t == TopologicalType::Node || t == TopologicalType::TopologicalSaddleNode) cf_no = true;
      if (t == TopologicalType::SaddleOrNode || t == TopologicalType::Unknown) cf_unknown = true;
      if (t == TopologicalType::Focus) {
        f.notes.push_back("q" + std::to_string(id) + " is a real corner with non-real eigenvalues");
        cf_unknown = true;
      }
    }
  }
  f.center_focus = cf_no ? TriState::No : cf_unknown ? TriState::Unknown : TriState::Yes;
  return f;
}

Certificate certify_separatrix(const ReductionTree& tree, const SeparatrixDivisor& B, int mu0, int N, bool refine) {
  Certificate c;
  c.flags = foliation_class(tree, refine);
  c.nu0 = algebraic_multiplicity(tree.root_germ);
  c.mu0 = mu0;
  c.tau_real = tangency_excess(tree, 0, true);
  c.tau_complex = tangency_excess(tree);
  bool even_nu = c.nu0 % 2 == 0, even_mu = c.mu0 % 2 == 0;
  c.log.push_back("nu0=" + std::to_string(c.nu0) + " mu0=" + std::to_string(c.mu0) +
                  " tau_real=" + std::to_string(c.tau_real));
  if (c.flags.topological_rgc && even_nu) {
    c.cited = CitedResult::TheoremA;
  } else if (c.flags.topological_rgc && even_mu) {
    c.cited = CitedResult::TheoremB;
  } else if ((c.nu0 - c.tau_real) % 2 == 0) {
    c.cited = CitedResult::ParityProposition;
  }
  // Real witness: isolated first, then curvettes.
  const Separatrix* w = nullptr;
  for (const auto& s : B.members)
    if (s.reality == Reality::Real && s.kind == SeparatrixKind::Isolated) {
      w = &s;
      break;
    }
  if (!w)
    for (size_t k = 0; k < B.members.size(); ++k)
      if (B.members[k].reality == Reality::Real && B.coefficients[k] != 0) {
        w = &B.members[k];
        break;
      }
  c.real_separatrix_exists = w != nullptr;
  if (c.cited == CitedResult::None) {
    c.log.push_back("no hypothesis holds");
    return c;
  }
  c.log.push_back("hypotheses of " + cited_name(c.cited) + " hold");
  if (!w)
    throw Error(ErrorCode::InconsistentCertificate,
                "hypotheses of " + cited_name(c.cited) + " hold but the tree has no real separatrix");
  c.verdict = Verdict::SeparatrixExists;
  c.witness = *w;
  PuiseuxParam cj = w->param.conj();
  if (w->reality != Reality::Real || !agree(cj.x, w->param.x) || !agree(cj.y, w->param.y))
    throw Error(ErrorCode::InconsistentCertificate, "witness is not real");
  TruncSeries r = invariance_residual(tree.root_germ, w->param);
  c.witness_residual_order = r.vanishes_to_precision() ? r.precision() : r.valuation_bound() - 1;
  c.witness_valid = r.vanishes_to_precision() && w->precision() >= N;
  c.log.push_back("witness " + std::to_string(w->id) + " (" + w->role + ", " + convergence_name(w->convergence) + ")");
  return c;
}

Certificate certify_separatrix(const FoliationGerm& F0, bool refine) {
  FoliationGerm F = F0.at_origin();
  if (!F.is_real()) throw Error(ErrorCode::NotReal, "certifier needs a real field");
  ReductionTree tree = reduce_singularities(F);
  int mu = milnor_number(F);
  int N = 2 * mu + 4;
  SeparatrixDivisor B = balanced_divisor(tree, true, N);
  return certify_separatrix(tree, B, mu, N, refine);
}

ParityReport check_parities(const FoliationGerm& F0, int seed) {
  FoliationGerm F = F0.at_origin();
  if (!F.is_real()) throw Error(ErrorCode::NotReal, "parities need a real field");
  ReductionTree tree = reduce_singularities(F);
  int mu = milnor_number(F);
  return check_parities(tree, balanced_divisor(tree, true, 2 * mu + 4), mu, seed);
}

ParityReport check_parities(const ReductionTree& tree, const SeparatrixDivisor& B, int mu, int seed) {
  const FoliationGerm& F = tree.root_germ;
  if (!tree.symmetric) throw Error(ErrorCode::NotReal, "parities need a real field");
  ParityReport r;
  int nu = algebraic_multiplicity(F);
  SeparatrixDivisor BR = B.real_part();
  r.nu_B_complex = divisor_multiplicity(B);
  r.nu_B_real = divisor_multiplicity(BR);
  r.tau_complex = tangency_excess(tree);
  r.tau_real = tangency_excess(tree, 0, true);
  auto odd = [](int v) { return ((v % 2) + 2) % 2; };
  r.nu_congruence = odd(r.nu_B_real) == odd(r.nu_B_complex);
  r.tau_congruence = odd(r.tau_real) == odd(r.tau_complex);
  ClassFlags flags = foliation_class(tree);
  r.trgc_tau_even = !flags.topological_rgc || odd(r.tau_real) == 0;
  r.polar_congruence = r.real_polar_formula = true;
  if (!F.is_radial()) {
    PolarCurve polar = polar_curve(F, B, std::nullopt, seed);
    r.p0_complex = polar.p0;
    // Non-real polar branches pair up along each real member, so parity is read off the full polar.
    r.p0_real_mod2 = odd(intersection_number(BR, polar.equation));
    r.tau_along_real_polar_mod2 = odd(tangency_excess_along(tree, polar.equation, true));
    r.polar_congruence = *r.p0_real_mod2 == odd(*r.p0_complex);
    r.real_polar_formula = *r.p0_real_mod2 == odd(mu + nu - *r.tau_along_real_polar_mod2);
  }
  r.holds = r.nu_congruence && r.tau_congruence && r.polar_congruence && r.real_polar_formula && r.trgc_tau_even;
  return r;
}

}  // namespace foliasep
