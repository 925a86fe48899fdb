#pragma once

#include <map>
#include <memory>
#include <vector>

#include "qex/matrix.hpp"
#include "qex/presentation.hpp"

namespace qex {

/// Raised when a degree cap is hit before a computation can certify its
/// result ("possibly infinite-dimensional or cap too low").
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A path in the free path algebra: composable arrow indices, left to right.
// The empty word at vertex v is the lazy path e_v.
struct Word {
  int source = 0, target = 0;
  std::vector<int> arrows;

  size_t length() const { return arrows.size(); }
  static Word lazy(int v) { return Word{v, v, {}}; }
  static Word arrow(const QuiverPresentation& p, int a) {
    return Word{p.arrows[a].src, p.arrows[a].tgt, {a}};
  }
};

// Length-lexicographic order (arrow order = declaration order).
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    if (a.source != b.source) return a.source < b.source;
    return a.target < b.target;
  }
};

using Poly = std::map<Word, Scalar, WordLess>;

/// Element of the algebra in normal-word coordinates.
using AlgElem = std::vector<Scalar>;

/// Finite basis of Gamma = kQ/I with full multiplication data, obtained from
/// a reduced length-lex Groebner basis of the relation ideal.
class AlgebraBasis {
 public:
  QuiverPresentation pres;
  std::vector<Poly> groebner;      // reduced, monic
  std::vector<Word> normal_words;  // sorted by WordLess
  int total_dim = 0;
  int loewy_length = 1;  // least N with rad^N = 0

  // Lookup structure over normal_words.
  std::map<Word, int, WordLess> word_index;
  std::vector<std::vector<std::vector<int>>> words_between;  // [src][tgt] -> global ids
  std::vector<int> lazy;                                     // per vertex
  std::vector<int> loc_in_pair;                              // position within its (src,tgt) list

  // mult[w][a]: normal form of (word w) * (arrow a) as sparse coordinates;
  // empty when not composable.
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> mult;

  size_t num_vertices() const { return pres.num_vertices(); }
  size_t num_arrows() const { return pres.num_arrows(); }
  const Field& field() const { return pres.field; }

  AlgElem zero_elem() const { return AlgElem(total_dim, field().zero()); }
  AlgElem unit_elem(int word_id) const;
  AlgElem idempotent(int vertex) const { return unit_elem(lazy[vertex]); }

  /// Per-(source, target, length) dimension table of the normal-word basis.
  std::map<std::tuple<int, int, int>, int> dims_table() const;

  int dim_between(int i, int j) const {
    return static_cast<int>(words_between[i][j].size());
  }
};

AlgebraBasis groebner_basis(const QuiverPresentation& p, int degree_cap = 30);

/// Normal form of the product x * y.
AlgElem multiply(const AlgebraBasis& ab, const AlgElem& x, const AlgElem& y);

/// Normal form of (arrow a) * x.
AlgElem left_mult_arrow(const AlgebraBasis& ab, int a, const AlgElem& x);

/// Normal form of x * (arrow a).
AlgElem right_mult_arrow(const AlgebraBasis& ab, const AlgElem& x, int a);

/// Normal form of a path given by arrows, as an element.
AlgElem word_elem(const AlgebraBasis& ab, const Word& w);

bool elem_is_zero(const AlgebraBasis& ab, const AlgElem& x);

/// All arrows reversed, relation words reversed.
QuiverPresentation opposite_presentation(const QuiverPresentation& p);

AlgebraBasis opposite_algebra(const AlgebraBasis& ab, int degree_cap = 30);

}  // namespace qex
