#include "qex/rep.hpp"

#include <algorithm>
#include <stdexcept>

#include "qex/rng.hpp"

namespace qex {

int Rep::total_dim() const {
  int d = 0;
  for (int v : dims) d += v;
  return d;
}

Matrix Rep::eval_word(const Word& w) const {
  const Field& f = ab->field();
  if (side == Side::right) {
    // m . (a1 a2 ... ak) applies a1 first.
    Matrix r = Matrix::identity(f, dims[w.source]);
    for (int a : w.arrows) r = act[a] * r;
    return r;
  }
  // (a1 a2 ... ak) . n applies ak first.
  Matrix r = Matrix::identity(f, dims[w.target]);
  for (auto it = w.arrows.rbegin(); it != w.arrows.rend(); ++it) r = act[*it] * r;
  return r;
}

void Rep::validate() const {
  for (size_t a = 0; a < ab->num_arrows(); ++a) {
    if (act[a].rows() != static_cast<size_t>(dims[to_vertex(static_cast<int>(a))]) ||
        act[a].cols() != static_cast<size_t>(dims[from_vertex(static_cast<int>(a))]))
      throw std::logic_error("representation matrix shape mismatch");
  }
  for (const Relation& r : ab->pres.relations) {
    int s = side == Side::right ? r.src : r.tgt;
    int t = side == Side::right ? r.tgt : r.src;
    Matrix sum(ab->field(), dims[t], dims[s]);
    for (const RelTerm& term : r.terms) {
      Word w;
      w.arrows = term.arrows;
      w.source = r.src;
      w.target = r.tgt;
      sum = sum + eval_word(w).scaled(term.coeff);
    }
    if (!sum.is_zero())
      throw std::logic_error("representation violates a relation");
  }
}

Rep zero_rep(std::shared_ptr<const AlgebraBasis> ab, Side side) {
  Rep m;
  m.side = side;
  m.ab = ab;
  m.dims.assign(ab->num_vertices(), 0);
  for (size_t a = 0; a < ab->num_arrows(); ++a)
    m.act.push_back(Matrix(ab->field(), 0, 0));
  return m;
}

Rep simple_module(std::shared_ptr<const AlgebraBasis> ab, int vertex, Side side) {
  Rep m = zero_rep(ab, side);
  m.dims[vertex] = 1;
  for (size_t a = 0; a < ab->num_arrows(); ++a)
    m.act[a] = Matrix(ab->field(), m.dims[m.to_vertex(static_cast<int>(a))],
                      m.dims[m.from_vertex(static_cast<int>(a))]);
  return m;
}

namespace {

// Basis of the component of P_v (right: e_v Gamma) or Gamma e_v (left) at a
// given vertex, as global normal-word ids.
const std::vector<int>& proj_basis(const AlgebraBasis& ab, Side side, int v, int at) {
  return side == Side::right ? ab.words_between[v][at] : ab.words_between[at][v];
}

}  // namespace

Rep projective_module(std::shared_ptr<const AlgebraBasis> ab, int vertex, Side side) {
  ProjStd p = projective_sum(ab, [&] {
    std::vector<int> m(ab->num_vertices(), 0);
    m[vertex] = 1;
    return m;
  }(), side);
  return p.rep;
}

int ProjStd::total_mult() const {
  int s = 0;
  for (int v : mult) s += v;
  return s;
}

int ProjStd::gen_position(int s) const {
  int v = summand_vertex[s];
  return offset[s][v] + rep.ab->loc_in_pair[rep.ab->lazy[v]];
}

ProjStd projective_sum(std::shared_ptr<const AlgebraBasis> ab,
                       const std::vector<int>& mult, Side side) {
  const Field& f = ab->field();
  size_t nv = ab->num_vertices();
  ProjStd p;
  p.mult = mult;
  for (size_t v = 0; v < nv; ++v)
    for (int c = 0; c < mult[v]; ++c) p.summand_vertex.push_back(static_cast<int>(v));

  std::vector<int> dims(nv, 0);
  p.offset.assign(p.summand_vertex.size(), std::vector<int>(nv, 0));
  for (size_t s = 0; s < p.summand_vertex.size(); ++s)
    for (size_t t = 0; t < nv; ++t) {
      p.offset[s][t] = dims[t];
      dims[t] += static_cast<int>(proj_basis(*ab, side, p.summand_vertex[s],
                                             static_cast<int>(t)).size());
    }

  Rep m;
  m.side = side;
  m.ab = ab;
  m.dims = dims;
  for (size_t a = 0; a < ab->num_arrows(); ++a) {
    int fr = m.from_vertex(static_cast<int>(a));
    int to = m.to_vertex(static_cast<int>(a));
    Matrix mat(f, dims[to], dims[fr]);
    for (size_t s = 0; s < p.summand_vertex.size(); ++s) {
      int v = p.summand_vertex[s];
      const std::vector<int>& dom = proj_basis(*ab, side, v, fr);
      for (size_t k = 0; k < dom.size(); ++k) {
        AlgElem img = side == Side::right
                          ? right_mult_arrow(*ab, ab->unit_elem(dom[k]), static_cast<int>(a))
                          : left_mult_arrow(*ab, static_cast<int>(a), ab->unit_elem(dom[k]));
        for (int g = 0; g < ab->total_dim; ++g) {
          if (f.is_zero(img[g])) continue;
          mat.at(p.offset[s][to] + ab->loc_in_pair[g],
                 p.offset[s][fr] + static_cast<int>(k)) = img[g];
        }
      }
    }
    m.act.push_back(std::move(mat));
  }
  p.rep = std::move(m);
  return p;
}

void ModuleMap::validate() const {
  if (source.side != target.side || source.ab != target.ab)
    throw std::logic_error("module map across different categories");
  for (size_t a = 0; a < source.ab->num_arrows(); ++a) {
    int fr = source.from_vertex(static_cast<int>(a));
    int to = source.to_vertex(static_cast<int>(a));
    Matrix lhs = blocks[to] * source.act[a];
    Matrix rhs = target.act[a] * blocks[fr];
    if (!(lhs == rhs)) throw std::logic_error("module map does not commute with action");
  }
}

bool ModuleMap::is_zero() const {
  for (const Matrix& b : blocks)
    if (!b.is_zero()) return false;
  return true;
}

ModuleMap identity_map(const Rep& m) {
  ModuleMap f;
  f.source = m;
  f.target = m;
  for (size_t v = 0; v < m.dims.size(); ++v)
    f.blocks.push_back(Matrix::identity(m.ab->field(), m.dims[v]));
  return f;
}

ModuleMap zero_map(const Rep& source, const Rep& target) {
  ModuleMap f;
  f.source = source;
  f.target = target;
  for (size_t v = 0; v < source.dims.size(); ++v)
    f.blocks.push_back(Matrix(source.ab->field(), target.dims[v], source.dims[v]));
  return f;
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap r;
  r.source = g.source;
  r.target = f.target;
  for (size_t v = 0; v < g.source.dims.size(); ++v)
    r.blocks.push_back(f.blocks[v] * g.blocks[v]);
  return r;
}

ModuleMap map_add(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap r = f;
  for (size_t v = 0; v < r.blocks.size(); ++v)
    r.blocks[v] = r.blocks[v] + g.blocks[v];
  return r;
}

ModuleMap map_scale(const ModuleMap& f, const Scalar& c) {
  ModuleMap r = f;
  for (auto& b : r.blocks) b = b.scaled(c);
  return r;
}

std::vector<ModuleMap> hom_space(const Rep& m, const Rep& n) {
  if (m.side != n.side || m.ab != n.ab)
    throw std::invalid_argument("hom_space across different categories");
  const Field& f = m.ab->field();
  size_t nv = m.dims.size();

  std::vector<size_t> base(nv + 1, 0);
  for (size_t v = 0; v < nv; ++v)
    base[v + 1] = base[v] + static_cast<size_t>(n.dims[v]) * m.dims[v];
  size_t unknowns = base[nv];
  auto pos = [&](size_t v, size_t r, size_t c) { return base[v] + c * n.dims[v] + r; };

  size_t rows = 0;
  for (size_t a = 0; a < m.ab->num_arrows(); ++a) {
    int fr = m.from_vertex(static_cast<int>(a));
    int to = m.to_vertex(static_cast<int>(a));
    rows += static_cast<size_t>(n.dims[to]) * m.dims[fr];
  }
  Matrix c(f, rows, unknowns);
  size_t row = 0;
  for (size_t a = 0; a < m.ab->num_arrows(); ++a) {
    int fr = m.from_vertex(static_cast<int>(a));
    int to = m.to_vertex(static_cast<int>(a));
    // F_to . M_a - N_a . F_fr = 0
    for (int r = 0; r < n.dims[to]; ++r)
      for (int col = 0; col < m.dims[fr]; ++col) {
        for (int k = 0; k < m.dims[to]; ++k)
          if (!f.is_zero(m.act[a].at(k, col)))
            c.at(row, pos(to, r, k)) =
                f.add(c.at(row, pos(to, r, k)), m.act[a].at(k, col));
        for (int k = 0; k < n.dims[fr]; ++k)
          if (!f.is_zero(n.act[a].at(r, k)))
            c.at(row, pos(fr, k, col)) =
                f.sub(c.at(row, pos(fr, k, col)), n.act[a].at(r, k));
        ++row;
      }
  }
  Matrix k = kernel_basis(c);
  std::vector<ModuleMap> out;
  for (size_t j = 0; j < k.cols(); ++j) {
    ModuleMap h;
    h.source = m;
    h.target = n;
    for (size_t v = 0; v < nv; ++v) {
      Matrix b(f, n.dims[v], m.dims[v]);
      for (int cc = 0; cc < m.dims[v]; ++cc)
        for (int rr = 0; rr < n.dims[v]; ++rr) b.at(rr, cc) = k.at(pos(v, rr, cc), j);
      h.blocks.push_back(std::move(b));
    }
    out.push_back(std::move(h));
  }
  return out;
}

namespace {

// Sub-representation spanned per vertex by the given columns (must be
// invariant under the action; asserted by the coordinate solves).
SubQuot subrep_from_spans(const Rep& m, const std::vector<Matrix>& spans) {
  size_t nv = m.dims.size();
  std::vector<Matrix> incl;
  Rep s;
  s.side = m.side;
  s.ab = m.ab;
  s.dims.resize(nv);
  for (size_t v = 0; v < nv; ++v) {
    incl.push_back(column_space_basis(spans[v]));
    s.dims[v] = static_cast<int>(incl[v].cols());
  }
  for (size_t a = 0; a < m.ab->num_arrows(); ++a) {
    int fr = m.from_vertex(static_cast<int>(a));
    int to = m.to_vertex(static_cast<int>(a));
    auto x = solve(incl[to], m.act[a] * incl[fr]);
    if (!x) throw std::logic_error("span is not invariant under the action");
    s.act.push_back(std::move(*x));
  }
  ModuleMap inc;
  inc.source = s;
  inc.target = m;
  inc.blocks = incl;
  return SubQuot{std::move(s), std::move(inc)};
}

}  // namespace

SubQuot kernel(const ModuleMap& f) {
  std::vector<Matrix> spans;
  for (size_t v = 0; v < f.source.dims.size(); ++v)
    spans.push_back(kernel_basis(f.blocks[v]));
  return subrep_from_spans(f.source, spans);
}

SubQuot image(const ModuleMap& f) {
  std::vector<Matrix> spans(f.blocks.begin(), f.blocks.end());
  return subrep_from_spans(f.target, spans);
}

SubQuot cokernel(const ModuleMap& f) {
  const Field& fl = f.target.ab->field();
  const Rep& n = f.target;
  size_t nv = n.dims.size();
  std::vector<Matrix> proj, sect;
  Rep q;
  q.side = n.side;
  q.ab = n.ab;
  q.dims.resize(nv);
  for (size_t v = 0; v < nv; ++v) {
    Matrix b = column_space_basis(f.blocks[v]);
    // Complete the image basis with unit vectors at the non-pivot rows.
    RrefResult rr = rref(b.transpose());
    std::vector<bool> pivot_row(n.dims[v], false);
    for (size_t p : rr.pivots) pivot_row[p] = true;
    size_t c = n.dims[v] - b.cols();
    Matrix sigma(fl, n.dims[v], c);
    size_t idx = 0;
    for (int r = 0; r < n.dims[v]; ++r)
      if (!pivot_row[r]) sigma.at(r, idx++) = fl.one();
    Matrix a = Matrix::hstack(b, sigma);
    Matrix ainv = inverse(a);
    Matrix pi(fl, c, n.dims[v]);
    for (size_t r = 0; r < c; ++r)
      for (int cc = 0; cc < n.dims[v]; ++cc) pi.at(r, cc) = ainv.at(b.cols() + r, cc);
    proj.push_back(std::move(pi));
    sect.push_back(std::move(sigma));
    q.dims[v] = static_cast<int>(c);
  }
  for (size_t a = 0; a < n.ab->num_arrows(); ++a) {
    int fr = n.from_vertex(static_cast<int>(a));
    int to = n.to_vertex(static_cast<int>(a));
    q.act.push_back(proj[to] * n.act[a] * sect[fr]);
  }
  ModuleMap p;
  p.source = n;
  p.target = q;
  p.blocks = proj;
  return SubQuot{std::move(q), std::move(p)};
}

SubQuot radical(const Rep& m) {
  const Field& f = m.ab->field();
  size_t nv = m.dims.size();
  std::vector<Matrix> spans;
  for (size_t v = 0; v < nv; ++v) spans.push_back(Matrix(f, m.dims[v], 0));
  for (size_t a = 0; a < m.ab->num_arrows(); ++a) {
    int to = m.to_vertex(static_cast<int>(a));
    spans[to] = Matrix::hstack(spans[to], m.act[a]);
  }
  return subrep_from_spans(m, spans);
}

SubQuot top(const Rep& m) { return cokernel(radical(m).map); }

std::vector<int> composition_factors(const Rep& m) { return m.dims; }

Rep direct_sum(const Rep& a, const Rep& b) {
  if (a.side != b.side || a.ab != b.ab)
    throw std::invalid_argument("direct sum across different categories");
  const Field& f = a.ab->field();
  Rep s;
  s.side = a.side;
  s.ab = a.ab;
  for (size_t v = 0; v < a.dims.size(); ++v) s.dims.push_back(a.dims[v] + b.dims[v]);
  for (size_t ar = 0; ar < a.ab->num_arrows(); ++ar) {
    int fr = a.from_vertex(static_cast<int>(ar));
    int to = a.to_vertex(static_cast<int>(ar));
    Matrix m(f, s.dims[to], s.dims[fr]);
    for (size_t i = 0; i < a.act[ar].rows(); ++i)
      for (size_t j = 0; j < a.act[ar].cols(); ++j) m.at(i, j) = a.act[ar].at(i, j);
    for (size_t i = 0; i < b.act[ar].rows(); ++i)
      for (size_t j = 0; j < b.act[ar].cols(); ++j)
        m.at(a.dims[to] + i, a.dims[fr] + j) = b.act[ar].at(i, j);
    s.act.push_back(std::move(m));
  }
  return s;
}

ModuleMap direct_sum_map(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap r;
  r.source = direct_sum(f.source, g.source);
  r.target = direct_sum(f.target, g.target);
  const Field& fl = f.source.ab->field();
  for (size_t v = 0; v < f.source.dims.size(); ++v) {
    Matrix m(fl, r.target.dims[v], r.source.dims[v]);
    for (size_t i = 0; i < f.blocks[v].rows(); ++i)
      for (size_t j = 0; j < f.blocks[v].cols(); ++j) m.at(i, j) = f.blocks[v].at(i, j);
    for (size_t i = 0; i < g.blocks[v].rows(); ++i)
      for (size_t j = 0; j < g.blocks[v].cols(); ++j)
        m.at(f.target.dims[v] + i, f.source.dims[v] + j) = g.blocks[v].at(i, j);
    r.blocks.push_back(std::move(m));
  }
  return r;
}

Cover projective_cover(const Rep& m) {
  const Field& f = m.ab->field();
  SubQuot t = top(m);
  Cover c;
  c.p = projective_sum(m.ab, t.rep.dims, m.side);
  // Lift each top basis vector to a generator of M, then extend along words.
  std::vector<std::vector<Scalar>> gens;  // per summand: a vector in M_{v_s}
  {
    std::vector<int> used(m.dims.size(), 0);
    for (int v : c.p.summand_vertex) {
      Matrix e(f, t.rep.dims[v], 1);
      e.at(used[v]++, 0) = f.one();
      auto x = solve(t.map.blocks[v], e);
      if (!x) throw std::logic_error("projective cover: top lift failed");
      gens.push_back(x->column_vec(0));
    }
  }
  ModuleMap epi;
  epi.source = c.p.rep;
  epi.target = m;
  for (size_t at = 0; at < m.dims.size(); ++at) {
    Matrix block(f, m.dims[at], c.p.rep.dims[at]);
    for (size_t s = 0; s < c.p.summand_vertex.size(); ++s) {
      int v = c.p.summand_vertex[s];
      const std::vector<int>& words =
          m.side == Side::right ? m.ab->words_between[v][at] : m.ab->words_between[at][v];
      for (size_t k = 0; k < words.size(); ++k) {
        const Word& w = m.ab->normal_words[words[k]];
        Matrix ew = m.eval_word(w);
        Matrix g(f, gens[s].size(), 1);
        for (size_t r = 0; r < gens[s].size(); ++r) g.at(r, 0) = gens[s][r];
        Matrix img = ew * g;
        for (int r = 0; r < m.dims[at]; ++r)
          block.at(r, c.p.offset[s][at] + static_cast<int>(k)) = img.at(r, 0);
      }
    }
    epi.blocks.push_back(std::move(block));
  }
  // Surjectivity and kernel-inside-radical checks.
  for (size_t v = 0; v < m.dims.size(); ++v)
    if (rank(epi.blocks[v]) != static_cast<size_t>(m.dims[v]))
      throw std::logic_error("projective cover: epi not surjective");
  for (size_t v = 0; v < m.dims.size(); ++v) {
    Matrix k = kernel_basis(epi.blocks[v]);
    for (size_t s = 0; s < c.p.summand_vertex.size(); ++s) {
      if (c.p.summand_vertex[s] != static_cast<int>(v)) continue;
      int gp = c.p.gen_position(static_cast<int>(s));
      for (size_t j = 0; j < k.cols(); ++j)
        if (!f.is_zero(k.at(gp, j)))
          throw std::logic_error("projective cover: kernel not inside radical");
    }
  }
  epi.validate();
  c.epi = std::move(epi);
  return c;
}

Rep random_filt_module(std::shared_ptr<const AlgebraBasis> ab,
                       const std::vector<int>& allowed, int length,
                       uint64_t seed) {
  if (allowed.empty() || length < 1)
    throw std::invalid_argument("random_filt_module: empty simple set or length < 1");
  const Field& f = ab->field();
  SplitMix64 rng(seed);
  Rep m = simple_module(ab, allowed[rng.below(allowed.size())], Side::right);
  for (int step = 1; step < length; ++step) {
    int v = allowed[rng.below(allowed.size())];
    // Extension 0 -> M -> E -> S_v -> 0: choose a cocycle gamma, one column
    // gamma_a in M_{tgt(a)} per arrow a out of v, compatible with relations.
    std::vector<int> arrows_out;
    std::vector<size_t> gbase;
    size_t unknowns = 0;
    for (size_t a = 0; a < ab->num_arrows(); ++a)
      if (ab->pres.arrows[a].src == v) {
        arrows_out.push_back(static_cast<int>(a));
        gbase.push_back(unknowns);
        unknowns += m.dims[ab->pres.arrows[a].tgt];
      }
    size_t rows = 0;
    for (const Relation& r : ab->pres.relations)
      if (r.src == v) rows += m.dims[r.tgt];
    Matrix cons(f, rows, unknowns);
    size_t row = 0;
    for (const Relation& r : ab->pres.relations) {
      if (r.src != v) continue;
      for (const RelTerm& t : r.terms) {
        int a1 = t.arrows.front();
        Word suffix;
        suffix.arrows.assign(t.arrows.begin() + 1, t.arrows.end());
        suffix.source = ab->pres.arrows[a1].tgt;
        suffix.target = r.tgt;
        Matrix sm = m.eval_word(suffix);  // M_{tgt a1} -> M_{tgt r}
        size_t k = std::find(arrows_out.begin(), arrows_out.end(), a1) - arrows_out.begin();
        for (size_t rr = 0; rr < sm.rows(); ++rr)
          for (size_t cc = 0; cc < sm.cols(); ++cc)
            cons.at(row + rr, gbase[k] + cc) =
                f.add(cons.at(row + rr, gbase[k] + cc), f.mul(t.coeff, sm.at(rr, cc)));
      }
      row += m.dims[r.tgt];
    }
    Matrix sol = kernel_basis(cons);
    std::vector<Scalar> gamma(unknowns, f.zero());
    for (size_t j = 0; j < sol.cols(); ++j) {
      Scalar c = random_scalar(f, rng);
      for (size_t i = 0; i < unknowns; ++i)
        gamma[i] = f.add(gamma[i], f.mul(c, sol.at(i, j)));
    }
    Rep e;
    e.side = Side::right;
    e.ab = ab;
    e.dims = m.dims;
    e.dims[v] += 1;
    for (size_t a = 0; a < ab->num_arrows(); ++a) {
      int fr = ab->pres.arrows[a].src;
      int to = ab->pres.arrows[a].tgt;
      Matrix mat(f, e.dims[to], e.dims[fr]);
      for (size_t i = 0; i < m.act[a].rows(); ++i)
        for (size_t j = 0; j < m.act[a].cols(); ++j) mat.at(i, j) = m.act[a].at(i, j);
      if (fr == v) {
        auto it = std::find(arrows_out.begin(), arrows_out.end(), static_cast<int>(a));
        size_t k = it - arrows_out.begin();
        for (int i = 0; i < m.dims[to]; ++i)
          mat.at(i, e.dims[fr] - 1) = gamma[gbase[k] + i];
      }
      e.act.push_back(std::move(mat));
    }
    m = std::move(e);
  }
  m.validate();
  return m;
}

Rep to_opposite(const Rep& left_rep, std::shared_ptr<const AlgebraBasis> op_ab) {
  if (left_rep.side != Side::left)
    throw std::invalid_argument("to_opposite expects a left module");
  Rep r;
  r.side = Side::right;
  r.ab = op_ab;
  r.dims = left_rep.dims;
  r.act = left_rep.act;
  r.validate();
  return r;
}

}  // namespace qex
