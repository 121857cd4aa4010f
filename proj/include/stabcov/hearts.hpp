#pragma once

#include <map>
#include <string>
#include <vector>

#include "stabcov/charge.hpp"
#include "stabcov/fm_words.hpp"
#include "stabcov/strata.hpp"

namespace stabcov {

enum class HeartKind { CohC, Perverse0, PerverseMinus1, Tilted, PartialPerverse };

enum class GeneratorRole {
  CurveFamily,  // one-dimensional sheaves on a curve with positive omega: Im Z > 0
  Rigid,        // must land on the negative real axis
  Simple,       // simple object of a finite-length heart: Z in the sector
};

struct HeartGenerator {
  std::string label;
  KClass cls;
  GeneratorRole role;
};

// A heart known through the K-classes of objects generating it under
// extensions. `frame` is the theta-image of the equivalence carrying the
// untwisted model heart to this one; `generators` already include its action.
struct HeartDescriptor {
  HeartKind kind = HeartKind::CohC;
  int tilt_curve = 0;
  std::int64_t tilt_strip = 0;
  std::vector<int> partial_curves;
  std::map<int, std::int64_t> strips;
  AffineMap frame;
  std::vector<HeartGenerator> generators;
};

HeartDescriptor coh_heart(const RootLattice& l);
// A_(i,k): Coh on the other curves, O_{C_i}(k-2)[1] and O_{C_i}(k-1).
HeartDescriptor tilted_heart(const RootLattice& l, int i, std::int64_t k);
// 0Per (p = 0) or -1Per (p = -1) of D_{X/Y}, through its simple objects.
HeartDescriptor perverse_heart(const RootLattice& l, int p);
// 0Per(X/Y') for the partial contraction of `curves`, untwisted.
HeartDescriptor partial_perverse_heart(const RootLattice& l, const std::vector<int>& curves);

// Transports a descriptor by an equivalence with the given theta-image.
HeartDescriptor transported(HeartDescriptor h, const AffineMap& frame);

HeartDescriptor heart_for_stratum(const RootLattice& l, const StratumLabel& s);

std::vector<KClass> generators(const HeartDescriptor& h);

std::vector<KClass> perverse_simples(const RootLattice& l, int p);

struct GeneratorVerdict {
  std::string label;
  KClass cls;
  GeneratorRole role;
  ExactComplex z;
  bool ok = false;
};

struct StabilityReport {
  bool pass = true;
  std::vector<GeneratorVerdict> entries;
};

StabilityReport stability_check(const HeartDescriptor& h, const ComplexDivisor& p);

std::string_view heart_kind_name(HeartKind k);
std::string_view role_name(GeneratorRole r);

}  // namespace stabcov
