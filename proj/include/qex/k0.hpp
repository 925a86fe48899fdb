#pragma once

#include "qex/exstruct.hpp"
#include "qex/intmatrix.hpp"

namespace qex {

/// K0 of an exact structure, presented by the AR-relation lattice: columns
/// of ar_matrix are the vectors [X] - [Y] + [Z] of the AR conflations of the
/// chosen dotted arrows, over the indecomposable-projective basis.
struct GrothendieckReport {
  ExactStructureSpec spec;
  IntMatrix ar_matrix;
  int free_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1

  GrothendieckReport() : ar_matrix(0, 0) {}
};

std::vector<mpz_class> ar_relation_vector(const ExactStructureSpec& spec,
                                          int dotted_index);

IntMatrix ar_matrix(const ExactStructureSpec& spec);

GrothendieckReport k0_group(const ExactStructureSpec& spec);

struct ExArReport {
  int samples = 0;
  int passes = 0;
  bool all_pass() const { return samples == passes; }
};

/// Samples random Filt-modules, reshapes their minimal resolutions into
/// conflation relation vectors and tests membership in the AR lattice.
ExArReport verify_ex_equals_ar(const ExactStructureSpec& spec, int samples,
                               uint64_t seed);

}  // namespace qex
