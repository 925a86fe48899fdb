#pragma once

#include <optional>

#include "qex/rep.hpp"

namespace qex {

struct ResolutionTooShort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Minimal projective resolution data: terms[k] covers the k-th syzygy,
/// differentials[k] maps terms[k+1] into terms[k].
struct ProjResolution {
  Rep module;
  std::vector<ProjStd> terms;
  std::vector<ModuleMap> differentials;  // d_{k+1}: P_{k+1} -> P_k
  ModuleMap augmentation;                // P_0 -> M
  bool minimal = true;
  bool complete = false;  // terminated with a zero syzygy
  int length_computed = 0;

  /// Largest k with a nonzero term (resolution length when complete).
  int length() const;
};

ProjResolution minimal_resolution(const Rep& m, int max_deg);

/// Ext^i(M, Gamma) as a left module over the same algebra, computed as the
/// cohomology of Hom(P_*, Gamma).
Rep ext_against_algebra(const ProjResolution& res, int i);
Rep ext_against_algebra(const Rep& m, int i, int max_deg = 20);

struct DegResult {
  bool exact;  // false: value is only a lower bound ("> max_deg")
  int value;
  bool operator==(const DegResult&) const = default;
};

DegResult projective_dimension(const Rep& m, int max_deg = 20);
DegResult global_dimension(std::shared_ptr<const AlgebraBasis> ab, int max_deg = 20);

enum class Verdict { yes, no, undetermined };

/// Is the self-injective dimension of the algebra on the given side <= n?
/// "no" is exact (some Ext^{n+1}(S, A) != 0); "yes" needs the Ext window
/// (n, n+check_span] to vanish and either completed resolutions or the
/// corroborating window on the opposite side.
Verdict injective_dimension_leq(const AlgebraBasis& ab, Side side, int n,
                                int check_span);

/// dim Ext^i(M, N) for right modules over the same algebra.
int ext_dim(const Rep& m, const Rep& n, int i, int max_deg = 20);

}  // namespace qex
