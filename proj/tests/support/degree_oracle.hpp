#pragma once

// Independent degree-by-degree dimension oracle: spans of quiver paths
// modulo explicit ideal products u.r.v, computed by plain row reduction.
// Deliberately avoids the Groebner engine; only the exact matrix substrate
// is shared.

#include <map>
#include <tuple>
#include <vector>

#include "qex/algebra.hpp"

namespace qex::test {

using DimTable = std::map<std::tuple<int, int, int>, int>;

namespace oracle_detail {

struct PathSet {
  // paths[s] = all paths starting at s, each as an arrow list
  std::vector<std::vector<std::vector<int>>> paths;
};

inline PathSet all_paths(const QuiverPresentation& p, int max_len) {
  PathSet ps;
  size_t nv = p.vertices.size();
  std::vector<std::vector<int>> out(nv);
  for (size_t a = 0; a < p.arrows.size(); ++a) out[p.arrows[a].src].push_back(a);
  ps.paths.resize(nv);
  for (size_t s = 0; s < nv; ++s) {
    std::vector<std::vector<int>> frontier{{}};
    ps.paths[s].push_back({});
    for (int len = 1; len <= max_len; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& path : frontier) {
        int end = path.empty() ? static_cast<int>(s) : p.arrows[path.back()].tgt;
        for (int a : out[end]) {
          std::vector<int> q = path;
          q.push_back(a);
          ps.paths[s].push_back(q);
          next.push_back(std::move(q));
        }
      }
      frontier = std::move(next);
    }
  }
  return ps;
}

inline int path_target(const QuiverPresentation& p, int s, const std::vector<int>& path) {
  return path.empty() ? s : p.arrows[path.back()].tgt;
}

inline DimTable table_at_bound(const QuiverPresentation& p, int bound) {
  const Field& f = p.field;
  size_t nv = p.vertices.size();
  PathSet ps = all_paths(p, bound);
  int max_rel_len = 0;
  for (const Relation& r : p.relations)
    for (const RelTerm& t : r.terms)
      max_rel_len = std::max(max_rel_len, static_cast<int>(t.arrows.size()));

  DimTable table;
  for (size_t s = 0; s < nv; ++s)
    for (size_t t = 0; t < nv; ++t) {
      // Paths s -> t, sorted longest-first so row-reduction pivots land on
      // length-lex leading words.
      std::vector<const std::vector<int>*> cols;
      for (const auto& path : ps.paths[s])
        if (path_target(p, static_cast<int>(s), path) == static_cast<int>(t))
          cols.push_back(&path);
      std::sort(cols.begin(), cols.end(),
                [](const std::vector<int>* a, const std::vector<int>* b) {
                  if (a->size() != b->size()) return a->size() > b->size();
                  return *a > *b;
                });
      if (cols.empty()) continue;
      std::map<std::vector<int>, int> col_of;
      for (size_t c = 0; c < cols.size(); ++c) col_of[*cols[c]] = static_cast<int>(c);

      // Spanning set of the ideal inside this block: u . r . v with all
      // resulting words inside the bound.
      std::vector<std::vector<Scalar>> rows;
      for (const Relation& r : p.relations) {
        int rel_max = 0;
        for (const RelTerm& term : r.terms)
          rel_max = std::max(rel_max, static_cast<int>(term.arrows.size()));
        for (const auto& u : ps.paths[s]) {
          if (path_target(p, static_cast<int>(s), u) != r.src) continue;
          for (const auto& v : ps.paths[r.tgt]) {
            if (path_target(p, r.tgt, v) != static_cast<int>(t)) continue;
            if (static_cast<int>(u.size()) + rel_max + static_cast<int>(v.size()) > bound)
              continue;
            std::vector<Scalar> row(cols.size(), f.zero());
            for (const RelTerm& term : r.terms) {
              std::vector<int> word = u;
              word.insert(word.end(), term.arrows.begin(), term.arrows.end());
              word.insert(word.end(), v.begin(), v.end());
              int c = col_of.at(word);
              row[c] = f.add(row[c], term.coeff);
            }
            rows.push_back(std::move(row));
          }
        }
      }
      Matrix m(f, rows.size(), cols.size());
      for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c) m.at(r, c) = rows[r][c];
      RrefResult rr = rref(m);
      std::vector<bool> is_pivot(cols.size(), false);
      for (size_t piv : rr.pivots) is_pivot[piv] = true;
      for (size_t c = 0; c < cols.size(); ++c)
        if (!is_pivot[c])
          table[{static_cast<int>(s), static_cast<int>(t),
                 static_cast<int>(cols[c]->size())}] += 1;
    }
  return table;
}

}  // namespace oracle_detail

/// Dimension of every (source, target, path length) graded piece, iterated
/// over growing bounds until the table stabilizes with a zero tail.
inline DimTable degree_dims_oracle(const QuiverPresentation& p, int cap = 30) {
  int max_rel_len = 2;
  for (const Relation& r : p.relations)
    for (const RelTerm& t : r.terms)
      max_rel_len = std::max(max_rel_len, static_cast<int>(t.arrows.size()));

  DimTable prev;
  bool have_prev = false;
  for (int bound = 4; bound <= cap; ++bound) {
    DimTable cur = oracle_detail::table_at_bound(p, bound);
    int top_len = 0;
    for (const auto& [key, dim] : cur)
      if (dim > 0) top_len = std::max(top_len, std::get<2>(key));
    bool zero_tail = top_len <= bound - max_rel_len - 1;
    if (have_prev && zero_tail && cur == prev) return cur;
    prev = std::move(cur);
    have_prev = true;
  }
  throw CapError("degree oracle did not stabilize below the cap");
}

}  // namespace qex::test
