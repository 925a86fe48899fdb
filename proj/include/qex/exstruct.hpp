#pragma once

#include <optional>
#include <string>

#include "qex/resolve.hpp"

namespace qex {

/// Outcome of the 2-regular test for one simple module: pd S = 2,
/// Hom(S, Gamma) = Ext^1(S, Gamma) = 0 and Ext^2(S, Gamma) simple.
struct TwoRegularReport {
  int vertex = -1;
  bool pd_is_2 = false;
  bool ext0_vanishes = false;
  bool ext1_vanishes = false;
  int ext2_dim = 0;
  int ext2_support_vertex = -1;  // set when is_two_regular
  bool is_two_regular = false;
  std::optional<ProjResolution> c2_resolution;  // kept when pd = 2
  std::string reason;
};

TwoRegularReport check_two_regular(std::shared_ptr<const AlgebraBasis> ab,
                                   int vertex, int max_deg = 20);

struct DottedArrow {
  int source, target;  // P_source has tau P_source = P_target
};

/// The quiver of proj Gamma: solid arrows with multiplicities from J/J^2,
/// dotted arrows P -> tau P for the 2-regular simples, and the orbit
/// partition of the dotted-arrow graph.
struct TranslationQuiver {
  std::shared_ptr<const AlgebraBasis> ab;
  std::vector<std::vector<int>> solid;  // [i][j] multiplicity
  std::vector<DottedArrow> dotted;      // sorted by source vertex
  std::vector<TwoRegularReport> reports;
  std::vector<std::vector<int>> orbits;  // connected components, each sorted
  std::vector<bool> orbit_stable;
  std::vector<std::string> orbit_names;  // "A", "B", ... by smallest vertex

  int orbit_of(int vertex) const;
  int dotted_index(int source) const;  // -1 when the vertex has none
};

TranslationQuiver translation_quiver(std::shared_ptr<const AlgebraBasis> ab,
                                     int max_deg = 20);

/// An exact structure, identified with its subset of dotted arrows.
struct ExactStructureSpec {
  std::shared_ptr<const TranslationQuiver> tq;
  std::vector<int> chosen;  // dotted-arrow indices, ascending
  std::vector<bool> allowed;  // per vertex: sources of chosen arrows
  std::vector<int> projective_vertices, injective_vertices;
  bool frobenius = false;
};

ExactStructureSpec make_spec(std::shared_ptr<const TranslationQuiver> tq,
                             std::vector<int> chosen);

struct EnumerationResult {
  mpz_class count;
  std::vector<ExactStructureSpec> specs;  // empty in count-only mode
  bool materialized;
};

/// All subsets of dotted arrows in little-endian bitmask order. Refuses to
/// materialize more than 2^20 subsets unless count_only.
EnumerationResult enumerate_exact_structures(
    std::shared_ptr<const TranslationQuiver> tq, bool count_only = false);

/// One spec per subset of the stable orbits.
std::vector<ExactStructureSpec> frobenius_structures(
    std::shared_ptr<const TranslationQuiver> tq);

struct ConflationCertificate {
  ModuleMap f, g;  // f = ker g (computed), g the candidate deflation
  Rep cokernel_module;
  std::vector<int> factors;  // per-vertex counts
  bool verdict = false;
  std::string reason;
};

/// Certifies g as a deflation of the spec: the cokernel's composition
/// factors must lie among the allowed simples. When the verdict holds, the
/// kernel is confirmed projective against its own cover.
ConflationCertificate is_deflation(const ExactStructureSpec& spec,
                                   const ModuleMap& g);

struct ArConflation {
  int dotted_index;
  ProjStd x, y, z;   // X ~ P_{tau}, from the minimal resolution of S_source
  ModuleMap f, g;    // X -> Y -> Z
};

ArConflation ar_conflation(const ExactStructureSpec& spec, int dotted_index);

struct PullbackResult {
  Rep e;            // kernel of [g, -h] on Y (+) W; projective
  ModuleMap k;      // E -> W, a deflation
  ModuleMap to_y;   // E -> Y
  ConflationCertificate cert;
};

PullbackResult pullback_deflation(const ExactStructureSpec& spec,
                                  const ModuleMap& g, const ModuleMap& h);

ConflationCertificate compose_deflations(const ExactStructureSpec& spec,
                                         const ModuleMap& g, const ModuleMap& k);

}  // namespace qex
