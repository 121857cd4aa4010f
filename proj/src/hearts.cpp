#include "stabcov/hearts.hpp"

#include <algorithm>
#include <string>

#include "stabcov/error.hpp"

namespace stabcov {

namespace {

std::string curve_name(int i) { return "C" + std::to_string(i); }

HeartDescriptor base(const RootLattice& l, HeartKind kind) {
  HeartDescriptor h;
  h.kind = kind;
  h.frame = AffineMap::identity(l.rank());
  return h;
}

void add_other_curves(const RootLattice& l, HeartDescriptor& h, const std::vector<int>& excluded) {
  const auto n = l.rank();
  h.generators.push_back({"O_x", point_class(n), GeneratorRole::Rigid});
  for (int j = 1; j <= static_cast<int>(n); ++j) {
    if (std::find(excluded.begin(), excluded.end(), j) != excluded.end()) continue;
    h.generators.push_back({"O_" + curve_name(j) + "(-1)", line_bundle_class(n, j, -1), GeneratorRole::CurveFamily});
  }
}

}  // namespace

HeartDescriptor coh_heart(const RootLattice& l) {
  auto h = base(l, HeartKind::CohC);
  add_other_curves(l, h, {});
  return h;
}

HeartDescriptor tilted_heart(const RootLattice& l, int i, std::int64_t k) {
  const auto n = l.rank();
  auto h = base(l, HeartKind::Tilted);
  h.tilt_curve = i;
  h.tilt_strip = k;
  add_other_curves(l, h, {i});
  h.generators.push_back({"O_" + curve_name(i) + "(" + std::to_string(k - 2) + ")[1]",
                          -line_bundle_class(n, i, k - 2), GeneratorRole::Rigid});
  h.generators.push_back({"O_" + curve_name(i) + "(" + std::to_string(k - 1) + ")",
                          line_bundle_class(n, i, k - 1), GeneratorRole::Rigid});
  return h;
}

std::vector<KClass> perverse_simples(const RootLattice& l, int p) {
  if (p != 0 && p != -1) throw Error(ErrorCode::IndexOutOfRange, "perversity must be 0 or -1");
  const auto n = l.rank();
  std::vector<KClass> out;
  const KClass fiber = fiber_class(l);
  // [omega_C[1]] = -[omega_C] = -(chi(omega_C), [C]) = (1, -[C]).
  out.push_back(p == 0 ? KClass{1, (-fiber).curve_mult} : fiber);
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    KClass s = line_bundle_class(n, i, -1);
    out.push_back(p == 0 ? s : -s);
  }
  return out;
}

HeartDescriptor perverse_heart(const RootLattice& l, int p) {
  auto h = base(l, p == 0 ? HeartKind::Perverse0 : HeartKind::PerverseMinus1);
  const auto simples = perverse_simples(l, p);
  h.generators.push_back({p == 0 ? "S_0 = omega_C[1]" : "S_0' = O_C", simples[0], GeneratorRole::Simple});
  for (std::size_t i = 1; i < simples.size(); ++i) {
    const std::string s = "O_" + curve_name(static_cast<int>(i)) + "(-1)";
    h.generators.push_back({p == 0 ? s : s + "[1]", simples[i], GeneratorRole::Simple});
  }
  return h;
}

HeartDescriptor partial_perverse_heart(const RootLattice& l, const std::vector<int>& curves) {
  const auto n = l.rank();
  auto h = base(l, HeartKind::PartialPerverse);
  h.partial_curves = curves;
  add_other_curves(l, h, curves);
  for (const auto& comp : l.components(curves)) {
    const Root theta = l.highest_root(comp);
    KClass s0{1, theta.coords};
    for (auto& x : s0.curve_mult) x = -x;
    std::string name = "omega_{";
    for (std::size_t j = 0; j < comp.size(); ++j) name += (j ? "+" : "") + curve_name(comp[j]);
    h.generators.push_back({name + "}[1]", s0, GeneratorRole::Rigid});
    for (int j : comp)
      h.generators.push_back({"O_" + curve_name(j) + "(-1)", line_bundle_class(n, j, -1), GeneratorRole::Rigid});
  }
  return h;
}

HeartDescriptor transported(HeartDescriptor h, const AffineMap& frame) {
  for (auto& g : h.generators) g.cls = frame.act(g.cls);
  h.frame = frame * h.frame;
  return h;
}

HeartDescriptor heart_for_stratum(const RootLattice& l, const StratumLabel& s) {
  const auto weyl_frame = [&](const WeylElement& w) { return AffineMap{w.dual_mat(), IntVec(l.rank(), 0)}; };
  if (const auto* a = std::get_if<AmpleChamber>(&s)) return transported(coh_heart(l), weyl_frame(a->chamber));
  if (const auto* w = std::get_if<WallStrip>(&s))
    return transported(tilted_heart(l, w->curve, w->strip), weyl_frame(w->frame));
  if (const auto* d = std::get_if<DeepStratum>(&s)) {
    auto h = transported(partial_perverse_heart(l, d->curves), weyl_frame(d->frame) * d->alcove);
    h.strips = d->strips;
    return h;
  }
  const auto& f = std::get<Forbidden>(s);
  std::string root;
  for (auto c : f.root.coords) root += (root.empty() ? "" : ",") + std::to_string(c);
  throw Error(ErrorCode::ForbiddenStratum, "point lies on H_v for v = (" + root + "), k = " + std::to_string(f.k));
}

std::vector<KClass> generators(const HeartDescriptor& h) {
  std::vector<KClass> out;
  out.reserve(h.generators.size());
  for (const auto& g : h.generators) out.push_back(g.cls);
  return out;
}

StabilityReport stability_check(const HeartDescriptor& h, const ComplexDivisor& p) {
  StabilityReport report;
  for (const auto& g : h.generators) {
    GeneratorVerdict v{g.label, g.cls, g.role, central_charge(p, g.cls), false};
    switch (g.role) {
      case GeneratorRole::CurveFamily: v.ok = v.z.im > 0; break;
      case GeneratorRole::Rigid: v.ok = v.z.im == 0 && v.z.re < 0; break;
      case GeneratorRole::Simple: v.ok = in_sector(v.z); break;
    }
    report.pass = report.pass && v.ok;
    report.entries.push_back(std::move(v));
  }
  return report;
}

std::string_view heart_kind_name(HeartKind k) {
  switch (k) {
    case HeartKind::CohC: return "CohC";
    case HeartKind::Perverse0: return "Perverse0";
    case HeartKind::PerverseMinus1: return "PerverseMinus1";
    case HeartKind::Tilted: return "Tilted";
    case HeartKind::PartialPerverse: return "PartialPerverse";
  }
  return "?";
}

std::string_view role_name(GeneratorRole r) {
  switch (r) {
    case GeneratorRole::CurveFamily: return "curve_family";
    case GeneratorRole::Rigid: return "rigid";
    case GeneratorRole::Simple: return "simple";
  }
  return "?";
}

}  // namespace stabcov
