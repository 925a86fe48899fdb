#pragma once

#include <string>
#include <vector>

#include "qex/field.hpp"

namespace qex {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line, col;
};

struct ArrowDecl {
  std::string name;
  int src, tgt;
};

// One summand of a relation: coeff * (arrow word, read left to right).
struct RelTerm {
  Scalar coeff;
  std::vector<int> arrows;
};

struct Relation {
  std::vector<RelTerm> terms;
  int src, tgt;  // common endpoints of all terms
  int line = 0;
};

/// A quiver with relations, as read from the input DSL.
struct QuiverPresentation {
  Field field = Field::rationals();
  std::vector<std::string> vertices;
  std::vector<ArrowDecl> arrows;
  std::vector<Relation> relations;

  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;
  size_t num_vertices() const { return vertices.size(); }
  size_t num_arrows() const { return arrows.size(); }
};

QuiverPresentation parse_presentation(const std::string& text);

/// Emits the same DSL the parser consumes (round-trip parseable).
std::string emit_presentation(const QuiverPresentation& p);

}  // namespace qex
