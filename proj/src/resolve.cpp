#include "qex/resolve.hpp"

#include <algorithm>

namespace qex {

int ProjResolution::length() const {
  int l = 0;
  for (size_t k = 0; k < terms.size(); ++k)
    if (terms[k].total_mult() > 0) l = static_cast<int>(k);
  return l;
}

ProjResolution minimal_resolution(const Rep& m, int max_deg) {
  ProjResolution res;
  res.module = m;

  Cover c0 = projective_cover(m);
  res.terms.push_back(c0.p);
  res.augmentation = c0.epi;
  SubQuot syz = kernel(c0.epi);

  while (!syz.rep.is_zero() && static_cast<int>(res.terms.size()) <= max_deg) {
    Cover c = projective_cover(syz.rep);
    res.differentials.push_back(compose(syz.map, c.epi));
    res.terms.push_back(c.p);
    syz = kernel(res.differentials.back());
  }
  res.complete = syz.rep.is_zero();
  res.length_computed = static_cast<int>(res.terms.size()) - 1;

  // d . d = 0, exactness by vertexwise rank bookkeeping, minimality.
  for (size_t k = 0; k < res.differentials.size(); ++k) {
    const ModuleMap& d = res.differentials[k];
    const ModuleMap& prev = k == 0 ? res.augmentation : res.differentials[k - 1];
    if (!compose(prev, d).is_zero())
      throw std::logic_error("resolution differentials do not compose to zero");
    for (size_t v = 0; v < m.dims.size(); ++v) {
      size_t exact_dim = d.target.dims[v] - rank(prev.blocks[v]);
      if (rank(d.blocks[v]) != exact_dim)
        throw std::logic_error("resolution not exact");
    }
    const ProjStd& tgt = res.terms[k];
    for (size_t s = 0; s < tgt.summand_vertex.size(); ++s) {
      int v = tgt.summand_vertex[s];
      int gp = tgt.gen_position(static_cast<int>(s));
      for (size_t c = 0; c < d.blocks[v].cols(); ++c)
        if (!m.ab->field().is_zero(d.blocks[v].at(gp, c)))
          throw std::logic_error("resolution not minimal");
    }
  }
  return res;
}

namespace {

// Differential P_k -> P_{k-1} between standard projectives, as a matrix of
// algebra elements y[s][t] in e_{u_s} Gamma e_{v_t} (left multiplication).
std::vector<std::vector<AlgElem>> word_matrix(const AlgebraBasis& ab,
                                              const ProjStd& from,
                                              const ProjStd& to,
                                              const ModuleMap& d) {
  size_t ns = to.summand_vertex.size(), nt = from.summand_vertex.size();
  std::vector<std::vector<AlgElem>> y(ns, std::vector<AlgElem>(nt, ab.zero_elem()));
  for (size_t t = 0; t < nt; ++t) {
    int vt = from.summand_vertex[t];
    int gp = from.gen_position(static_cast<int>(t));
    for (size_t s = 0; s < ns; ++s) {
      int us = to.summand_vertex[s];
      const std::vector<int>& words = ab.words_between[us][vt];
      for (size_t k = 0; k < words.size(); ++k)
        y[s][t][words[k]] = d.blocks[vt].at(to.offset[s][vt] + k, gp);
    }
  }
  return y;
}

// Dual differential Hom(P_{k-1}, Gamma) -> Hom(P_k, Gamma): right
// multiplication by the word matrix, on sums of left projectives.
ModuleMap dual_differential(std::shared_ptr<const AlgebraBasis> ab,
                            const ProjStd& from, const ProjStd& to,
                            const ModuleMap& d, const ProjStd& dual_from,
                            const ProjStd& dual_to) {
  const Field& f = ab->field();
  auto y = word_matrix(*ab, from, to, d);
  ModuleMap delta;
  delta.source = dual_to.rep;    // sum of Gamma e_{u_s}
  delta.target = dual_from.rep;  // sum of Gamma e_{v_t}
  for (size_t i = 0; i < ab->num_vertices(); ++i) {
    Matrix block(f, delta.target.dims[i], delta.source.dims[i]);
    for (size_t s = 0; s < to.summand_vertex.size(); ++s) {
      int us = to.summand_vertex[s];
      const std::vector<int>& dom = ab->words_between[i][us];
      for (size_t k = 0; k < dom.size(); ++k) {
        for (size_t t = 0; t < from.summand_vertex.size(); ++t) {
          if (elem_is_zero(*ab, y[s][t])) continue;
          AlgElem img = multiply(*ab, ab->unit_elem(dom[k]), y[s][t]);
          int vt = from.summand_vertex[t];
          for (int g : ab->words_between[i][vt])
            if (!f.is_zero(img[g]))
              block.at(dual_from.offset[t][i] + ab->loc_in_pair[g],
                       dual_to.offset[s][i] + k) = img[g];
        }
      }
    }
    delta.blocks.push_back(std::move(block));
  }
  return delta;
}

Rep subquotient(const SubQuot& ker, const SubQuot& im) {
  // im must lie inside ker; express the inclusion through ker coordinates.
  ModuleMap j;
  j.source = im.rep;
  j.target = ker.rep;
  for (size_t v = 0; v < ker.rep.dims.size(); ++v) {
    auto x = solve(ker.map.blocks[v], im.map.blocks[v]);
    if (!x) throw std::logic_error("image does not lie inside kernel");
    j.blocks.push_back(std::move(*x));
  }
  return cokernel(j).rep;
}

}  // namespace

Rep ext_against_algebra(const ProjResolution& res, int i) {
  std::shared_ptr<const AlgebraBasis> ab = res.module.ab;
  if (i < 0) throw std::invalid_argument("ext degree must be nonnegative");
  if (res.complete && i > res.length_computed) return zero_rep(ab, Side::left);
  if (!res.complete && i + 1 > res.length_computed)
    throw ResolutionTooShort("resolution too short for Ext^" + std::to_string(i));

  std::vector<ProjStd> duals;
  int top_term = std::min(i + 1, res.length_computed);
  for (int k = 0; k <= top_term; ++k)
    duals.push_back(projective_sum(ab, res.terms[k].mult, Side::left));

  auto delta = [&](int k) {  // Hom(P_{k-1},Gamma) -> Hom(P_k,Gamma)
    ModuleMap d = dual_differential(ab, res.terms[k], res.terms[k - 1],
                                    res.differentials[k - 1], duals[k], duals[k - 1]);
    d.validate();
    return d;
  };

  SubQuot ker_part = i + 1 <= res.length_computed
                         ? kernel(delta(i + 1))
                         : SubQuot{duals[i].rep, identity_map(duals[i].rep)};
  if (i == 0) return ker_part.rep;
  ModuleMap di = delta(i);
  if (i + 1 <= res.length_computed && !compose(delta(i + 1), di).is_zero())
    throw std::logic_error("dual complex differentials do not compose to zero");
  SubQuot im_part = image(di);
  return subquotient(ker_part, im_part);
}

Rep ext_against_algebra(const Rep& m, int i, int max_deg) {
  ProjResolution res = minimal_resolution(m, std::max(max_deg, i + 1));
  return ext_against_algebra(res, i);
}

DegResult projective_dimension(const Rep& m, int max_deg) {
  ProjResolution res = minimal_resolution(m, max_deg);
  if (res.complete) return {true, res.length()};
  return {false, max_deg};
}

DegResult global_dimension(std::shared_ptr<const AlgebraBasis> ab, int max_deg) {
  int best = 0;
  for (size_t v = 0; v < ab->num_vertices(); ++v) {
    DegResult d = projective_dimension(
        simple_module(ab, static_cast<int>(v), Side::right), max_deg);
    if (!d.exact) return {false, max_deg};
    best = std::max(best, d.value);
  }
  return {true, best};
}

namespace {

struct WindowResult {
  bool hard_no = false;     // some Ext^{n+1}(S, A) != 0
  bool window_clean = true; // Ext^j = 0 for all simples, n < j <= n+span
  bool all_complete = true;
};

WindowResult ext_window(std::shared_ptr<const AlgebraBasis> ab, int n, int span) {
  WindowResult w;
  for (size_t v = 0; v < ab->num_vertices() && !w.hard_no; ++v) {
    Rep s = simple_module(ab, static_cast<int>(v), Side::right);
    ProjResolution res = minimal_resolution(s, n + span + 1);
    if (!res.complete) w.all_complete = false;
    for (int j = n + 1; j <= n + span; ++j) {
      if (!res.complete && j + 1 > res.length_computed) break;
      Rep e = ext_against_algebra(res, j);
      if (!e.is_zero()) {
        w.window_clean = false;
        if (j == n + 1) w.hard_no = true;
        break;
      }
    }
  }
  return w;
}

}  // namespace

Verdict injective_dimension_leq(const AlgebraBasis& ab, Side side, int n,
                                int check_span) {
  auto working = std::make_shared<AlgebraBasis>(
      side == Side::right ? ab : opposite_algebra(ab));
  WindowResult w = ext_window(working, n, check_span);
  if (w.hard_no) return Verdict::no;
  if (!w.window_clean) return Verdict::undetermined;
  if (w.all_complete) return Verdict::yes;
  // Corroborate on the opposite side.
  auto other = std::make_shared<AlgebraBasis>(
      side == Side::right ? opposite_algebra(ab) : ab);
  WindowResult o = ext_window(other, n, check_span);
  if (!o.hard_no && o.window_clean) return Verdict::yes;
  return Verdict::undetermined;
}

int ext_dim(const Rep& m, const Rep& n, int i, int max_deg) {
  if (m.side != Side::right || n.side != Side::right || m.ab != n.ab)
    throw std::invalid_argument("ext_dim expects right modules over one algebra");
  std::shared_ptr<const AlgebraBasis> ab = m.ab;
  const Field& f = ab->field();
  ProjResolution res = minimal_resolution(m, std::max(max_deg, i + 1));
  if (res.complete && i > res.length_computed) return 0;
  if (!res.complete && i + 1 > res.length_computed)
    throw ResolutionTooShort("resolution too short for ext_dim");

  // Hom(P_k, N) = sum of N components at the summand vertices.
  auto hom_dim = [&](const ProjStd& p) {
    size_t d = 0;
    for (int v : p.summand_vertex) d += n.dims[v];
    return d;
  };
  // Matrix of phi |-> phi . d_k in those coordinates.
  auto delta = [&](int k) {
    const ProjStd& from = res.terms[k];
    const ProjStd& to = res.terms[k - 1];
    auto y = word_matrix(*ab, from, to, res.differentials[k - 1]);
    Matrix d(f, hom_dim(from), hom_dim(to));
    size_t col_base = 0;
    for (size_t s = 0; s < to.summand_vertex.size(); ++s) {
      size_t row_base = 0;
      for (size_t t = 0; t < from.summand_vertex.size(); ++t) {
        // N_{u_s} -> N_{v_t}: right action of y[s][t].
        Matrix m_act(f, n.dims[from.summand_vertex[t]],
                     n.dims[to.summand_vertex[s]]);
        for (int g = 0; g < ab->total_dim; ++g) {
          if (f.is_zero(y[s][t][g])) continue;
          m_act = m_act + n.eval_word(ab->normal_words[g]).scaled(y[s][t][g]);
        }
        for (size_t r = 0; r < m_act.rows(); ++r)
          for (size_t c = 0; c < m_act.cols(); ++c)
            d.at(row_base + r, col_base + c) = m_act.at(r, c);
        row_base += n.dims[from.summand_vertex[t]];
      }
      col_base += n.dims[to.summand_vertex[s]];
    }
    return d;
  };

  size_t ker_dim = i + 1 <= res.length_computed
                       ? hom_dim(res.terms[i]) - rank(delta(i + 1))
                       : hom_dim(res.terms[i]);
  size_t im_dim = i == 0 ? 0 : rank(delta(i));
  return static_cast<int>(ker_dim - im_dim);
}

}  // namespace qex
