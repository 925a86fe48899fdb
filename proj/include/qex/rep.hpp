#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qex/algebra.hpp"

namespace qex {

enum class Side { right, left };

/// A finite-dimensional module as a quiver representation: one vector space
/// per vertex, one matrix per arrow. For right modules an arrow i -> j acts
/// from the component at i to the component at j; for left modules the other
/// way around.
struct Rep {
  Side side = Side::right;
  std::shared_ptr<const AlgebraBasis> ab;
  std::vector<int> dims;
  std::vector<Matrix> act;  // per arrow: component at from_vertex -> at to_vertex

  int from_vertex(int a) const {
    const ArrowDecl& ar = ab->pres.arrows[a];
    return side == Side::right ? ar.src : ar.tgt;
  }
  int to_vertex(int a) const {
    const ArrowDecl& ar = ab->pres.arrows[a];
    return side == Side::right ? ar.tgt : ar.src;
  }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  /// Action of a path word as a single matrix (component at the word's
  /// acting-source to its acting-target).
  Matrix eval_word(const Word& w) const;

  /// Asserts every algebra relation acts as zero; throws otherwise.
  void validate() const;
};

Rep zero_rep(std::shared_ptr<const AlgebraBasis> ab, Side side);
Rep simple_module(std::shared_ptr<const AlgebraBasis> ab, int vertex, Side side);
Rep projective_module(std::shared_ptr<const AlgebraBasis> ab, int vertex, Side side);

/// A map of representations: one block per vertex, commuting with all arrows.
struct ModuleMap {
  Rep source, target;
  std::vector<Matrix> blocks;  // per vertex: source comp -> target comp

  void validate() const;  // naturality squares hold exactly
  bool is_zero() const;
};

ModuleMap identity_map(const Rep& m);
ModuleMap zero_map(const Rep& source, const Rep& target);
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);  // f after g
ModuleMap map_add(const ModuleMap& f, const ModuleMap& g);
ModuleMap map_scale(const ModuleMap& f, const Scalar& c);

/// Basis of Hom(M, N), found by solving all naturality constraints.
std::vector<ModuleMap> hom_space(const Rep& m, const Rep& n);

struct SubQuot {
  Rep rep;
  ModuleMap map;  // inclusion (sub) or projection (quotient)
};

SubQuot kernel(const ModuleMap& f);
SubQuot image(const ModuleMap& f);     // included in f.target
SubQuot cokernel(const ModuleMap& f);  // projection from f.target
SubQuot radical(const Rep& m);         // M rad, with inclusion
SubQuot top(const Rep& m);             // M / M rad, with projection

/// Composition factor multiset, as counts per vertex. Every simple is
/// one-dimensional, so this equals the per-vertex dimension vector.
std::vector<int> composition_factors(const Rep& m);

Rep direct_sum(const Rep& a, const Rep& b);
ModuleMap direct_sum_map(const ModuleMap& f, const ModuleMap& g);

/// A finite direct sum of indecomposable projectives in standard form, with
/// the multiplicity vector and generator positions kept explicit.
struct ProjStd {
  std::vector<int> mult;  // per vertex
  Rep rep;
  std::vector<int> summand_vertex;          // flattened summand list
  std::vector<std::vector<int>> offset;     // [summand][vertex] column offset
  int total_mult() const;
  // Position of the s-th summand's generator inside its component.
  int gen_position(int s) const;
};

ProjStd projective_sum(std::shared_ptr<const AlgebraBasis> ab,
                       const std::vector<int>& mult, Side side);

struct Cover {
  ProjStd p;
  ModuleMap epi;  // p.rep -> M, kernel inside rad p
};

Cover projective_cover(const Rep& m);

/// A module of the given composition length with all factors in `allowed`,
/// built by iterated seeded random extensions.
Rep random_filt_module(std::shared_ptr<const AlgebraBasis> ab,
                       const std::vector<int>& allowed, int length,
                       uint64_t seed);

/// Reinterprets a left module as a right module over the opposite algebra.
Rep to_opposite(const Rep& left_rep, std::shared_ptr<const AlgebraBasis> op_ab);

}  // namespace qex
