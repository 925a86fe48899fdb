#include "qex/reconstruct.hpp"

#include <algorithm>
#include <map>

namespace qex {

namespace {

std::string arrow_name(size_t n) {
  std::string name;
  do {
    name.insert(name.begin(), static_cast<char>('a' + n % 26));
    n /= 26;
  } while (n > 0);
  return name;
}

// Columns of a span, reduced to a rank profile usable for membership tests.
struct SpanTracker {
  Matrix m;
  size_t current_rank;
  explicit SpanTracker(Field f, size_t dim) : m(f, dim, 0), current_rank(0) {}
  bool contains(const std::vector<Scalar>& v) {
    Matrix probe = Matrix::hstack(m, Matrix::from_columns(m.field(), m.rows(), {v}));
    return rank(probe) == current_rank;
  }
  void add(const std::vector<Scalar>& v) {
    m = Matrix::hstack(m, Matrix::from_columns(m.field(), m.rows(), {v}));
    current_rank = rank(m);
  }
};

}  // namespace

ModuleMap AlgebraPresentation::arrow_map(int arrow) const {
  const Field& f = gamma->field();
  int src = kept[quiver.arrows[arrow].src];
  int tgt = kept[quiver.arrows[arrow].tgt];
  Rep psrc = projective_module(gamma, src, Side::right);
  Rep ptgt = projective_module(gamma, tgt, Side::right);
  ModuleMap h;
  h.source = ptgt;
  h.target = psrc;
  for (size_t t = 0; t < gamma->num_vertices(); ++t) {
    const std::vector<int>& dom = gamma->words_between[tgt][t];
    const std::vector<int>& cod = gamma->words_between[src][t];
    Matrix block(f, cod.size(), dom.size());
    for (size_t k = 0; k < dom.size(); ++k) {
      AlgElem img = multiply(*gamma, generator_elems[arrow], gamma->unit_elem(dom[k]));
      for (size_t r = 0; r < cod.size(); ++r) block.at(r, k) = img[cod[r]];
    }
    h.blocks.push_back(std::move(block));
  }
  return h;
}

ModuleMap AlgebraPresentation::word_map(const std::vector<int>& arrows) const {
  ModuleMap m = arrow_map(arrows.front());
  for (size_t k = 1; k < arrows.size(); ++k) m = compose(m, arrow_map(arrows[k]));
  return m;
}

bool AlgebraPresentation::relation_holds(const Relation& r) const {
  ModuleMap sum = map_scale(word_map(r.terms[0].arrows), r.terms[0].coeff);
  for (size_t t = 1; t < r.terms.size(); ++t)
    sum = map_add(sum, map_scale(word_map(r.terms[t].arrows), r.terms[t].coeff));
  return sum.is_zero();
}

AlgebraPresentation endomorphism_presentation(
    std::shared_ptr<const AlgebraBasis> ab, std::vector<int> kept,
    int max_rel_deg) {
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty())
    throw EmptyKeptError("no kept vertices: the structure has no nonzero projectives");
  const Field& f = ab->field();
  size_t nk = kept.size();

  AlgebraPresentation pres;
  pres.gamma = ab;
  pres.kept = kept;
  pres.quiver.field = f;
  for (int v : kept) pres.quiver.vertices.push_back(ab->pres.vertices[v]);

  for (size_t i = 0; i < nk; ++i)
    for (size_t j = 0; j < nk; ++j)
      pres.dim_total += ab->dim_between(kept[i], kept[j]);

  // Arrows: a basis of rad/rad^2 per kept pair, chosen greedily among normal
  // words in length-lex order so every generator is a single path of Gamma.
  std::vector<Word> arrow_words;
  for (size_t i = 0; i < nk; ++i)
    for (size_t j = 0; j < nk; ++j) {
      const std::vector<int>& words = ab->words_between[kept[i]][kept[j]];
      SpanTracker span(f, words.size());
      // rad^2 component: products through kept vertices.
      for (size_t m = 0; m < nk; ++m)
        for (int w1 : ab->words_between[kept[i]][kept[m]]) {
          if (ab->normal_words[w1].length() == 0) continue;
          for (int w2 : ab->words_between[kept[m]][kept[j]]) {
            if (ab->normal_words[w2].length() == 0) continue;
            AlgElem prod = multiply(*ab, ab->unit_elem(w1), ab->unit_elem(w2));
            std::vector<Scalar> local;
            for (int g : words) local.push_back(prod[g]);
            if (!span.contains(local)) span.add(local);
          }
        }
      for (size_t k = 0; k < words.size(); ++k) {
        if (ab->normal_words[words[k]].length() == 0) continue;
        std::vector<Scalar> unit(words.size(), f.zero());
        unit[k] = f.one();
        if (span.contains(unit)) continue;
        span.add(unit);
        arrow_words.push_back(ab->normal_words[words[k]]);
        pres.quiver.arrows.push_back(
            {arrow_name(arrow_words.size() - 1), static_cast<int>(i), static_cast<int>(j)});
      }
    }
  for (const Word& w : arrow_words) pres.generator_elems.push_back(word_elem(*ab, w));

  // Loewy lengthofLambda: powers of rad(e Gamma e).
  std::vector<AlgElem> rad_gens;
  for (size_t i = 0; i < nk; ++i)
    for (size_t j = 0; j < nk; ++j)
      for (int w : ab->words_between[kept[i]][kept[j]])
        if (ab->normal_words[w].length() >= 1) rad_gens.push_back(ab->unit_elem(w));
  {
    std::vector<AlgElem> power = rad_gens;
    int k = 1;
    while (!power.empty()) {
      Matrix m(f, ab->total_dim, power.size());
      for (size_t c = 0; c < power.size(); ++c) m.set_column(c, power[c]);
      Matrix basis = column_space_basis(m);
      if (basis.cols() == 0) break;
      std::vector<AlgElem> next;
      for (size_t c = 0; c < basis.cols(); ++c)
        for (const AlgElem& g : rad_gens) {
          AlgElem prod = multiply(*ab, basis.column_vec(c), g);
          if (!elem_is_zero(*ab, prod)) next.push_back(std::move(prod));
        }
      power = std::move(next);
      ++k;
      if (k > max_rel_deg)
        throw CapError("max_rel_deg exceeded while computing the radical series");
    }
    pres.loewy_length = k;
  }

  // Relations: minimal generators of the kernel of kQ ->> Lambda, found
  // degree by degree up to the Loewy length.
  int max_deg = std::min(pres.loewy_length, max_rel_deg);
  struct Path {
    std::vector<int> arrows;  // output arrow ids
    int src, tgt;             // output vertex ids
    AlgElem value;
  };
  std::vector<std::vector<Path>> paths_by_deg(max_deg + 1);
  for (size_t i = 0; i < nk; ++i) {
    Path lazy;
    lazy.src = lazy.tgt = static_cast<int>(i);
    lazy.value = ab->idempotent(kept[i]);
    paths_by_deg[0].push_back(std::move(lazy));
  }
  for (int d = 1; d <= max_deg; ++d)
    for (const Path& p : paths_by_deg[d - 1])
      for (size_t a = 0; a < pres.quiver.arrows.size(); ++a) {
        if (pres.quiver.arrows[a].src != p.tgt) continue;
        Path q;
        q.arrows = p.arrows;
        q.arrows.push_back(static_cast<int>(a));
        q.src = p.src;
        q.tgt = pres.quiver.arrows[a].tgt;
        q.value = multiply(*ab, p.value, pres.generator_elems[a]);
        paths_by_deg[d].push_back(std::move(q));
      }

  // Per-pair path coordinates, ordered by degree then discovery (which is
  // length-lex in the output arrow order).
  struct PairPaths {
    std::vector<const Path*> paths;  // degree >= 2, ascending
    std::vector<int> deg;
    std::map<std::vector<int>, int> id;
  };
  std::vector<std::vector<PairPaths>> pp(nk, std::vector<PairPaths>(nk));
  for (int d = 2; d <= max_deg; ++d)
    for (const Path& p : paths_by_deg[d]) {
      PairPaths& pair = pp[p.src][p.tgt];
      pair.id[p.arrows] = static_cast<int>(pair.paths.size());
      pair.paths.push_back(&p);
      pair.deg.push_back(d);
    }

  // Minimal generators of ker(kQ ->> Lambda), degree by degree: at each
  // degree the kernel of path evaluation is reduced modulo all consequences
  // u.r.v of relations already found (at every pair).
  std::vector<Relation> found;
  for (int d = 2; d <= max_deg; ++d)
    for (size_t i = 0; i < nk; ++i)
      for (size_t j = 0; j < nk; ++j) {
        const PairPaths& pair = pp[i][j];
        size_t npaths = 0;
        while (npaths < pair.paths.size() && pair.deg[npaths] <= d) ++npaths;
        if (npaths == 0) continue;
        const std::vector<int>& gwords = ab->words_between[kept[i]][kept[j]];
        Matrix eval(f, gwords.size(), npaths);
        for (size_t c = 0; c < npaths; ++c)
          for (size_t r = 0; r < gwords.size(); ++r)
            eval.at(r, c) = pair.paths[c]->value[gwords[r]];
        Matrix ker = kernel_basis(eval);
        if (ker.cols() == 0) continue;

        SpanTracker ideal(f, pair.paths.size());
        for (const Relation& rel : found) {
          int maxdeg_rel = 0;
          for (const RelTerm& t : rel.terms)
            maxdeg_rel = std::max(maxdeg_rel, static_cast<int>(t.arrows.size()));
          for (int du = 0; du + maxdeg_rel <= d; ++du)
            for (const Path& u : paths_by_deg[du]) {
              if (u.src != static_cast<int>(i) || u.tgt != rel.src) continue;
              for (int dv = 0; du + maxdeg_rel + dv <= d; ++dv)
                for (const Path& vp : paths_by_deg[dv]) {
                  if (vp.src != rel.tgt || vp.tgt != static_cast<int>(j)) continue;
                  std::vector<Scalar> vec(pair.paths.size(), f.zero());
                  for (const RelTerm& t : rel.terms) {
                    std::vector<int> word = u.arrows;
                    word.insert(word.end(), t.arrows.begin(), t.arrows.end());
                    word.insert(word.end(), vp.arrows.begin(), vp.arrows.end());
                    int pid = pair.id.at(word);
                    vec[pid] = f.add(vec[pid], t.coeff);
                  }
                  if (!ideal.contains(vec)) ideal.add(vec);
                }
            }
        }
        for (size_t c = 0; c < ker.cols(); ++c) {
          std::vector<Scalar> v(pair.paths.size(), f.zero());
          for (size_t r = 0; r < npaths; ++r) v[r] = ker.at(r, c);
          if (ideal.contains(v)) continue;
          ideal.add(v);
          Relation rel;
          rel.src = static_cast<int>(i);
          rel.tgt = static_cast<int>(j);
          for (size_t r = 0; r < npaths; ++r)
            if (!f.is_zero(ker.at(r, c)))
              rel.terms.push_back({ker.at(r, c), pair.paths[r]->arrows});
          found.push_back(std::move(rel));
        }
      }
  pres.quiver.relations = found;

  // Normalize relation coefficients: integral, leading coefficient positive.
  for (Relation& r : pres.quiver.relations) {
    if (f.is_rational()) {
      mpz_class lcm_den = 1, gcd_num = 0;
      for (const RelTerm& t : r.terms) {
        mpz_class den = t.coeff.get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
      }
      for (RelTerm& t : r.terms) t.coeff = t.coeff * Scalar(lcm_den);
      for (const RelTerm& t : r.terms) {
        mpz_class num = abs(t.coeff.get_num());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), num.get_mpz_t());
      }
      if (gcd_num > 1)
        for (RelTerm& t : r.terms) t.coeff = t.coeff / Scalar(gcd_num);
    }
    if (sgn(r.terms.back().coeff) < 0)
      for (RelTerm& t : r.terms) t.coeff = f.neg(t.coeff);
  }

  // Self-check through the Groebner engine: the presented algebra has the
  // same dimension, which certifies the relation set is complete.
  pres.basis = std::make_shared<AlgebraBasis>(groebner_basis(pres.quiver));
  if (pres.basis->total_dim != pres.dim_total)
    throw std::logic_error(
        "endomorphism presentation self-check failed: dim " +
        std::to_string(pres.basis->total_dim) + " vs expected " +
        std::to_string(pres.dim_total));
  if (pres.basis->loewy_length != pres.loewy_length)
    throw std::logic_error("endomorphism presentation: Loewy length mismatch");
  // Soundness: every emitted relation evaluates to the zero homomorphism.
  for (const Relation& r : pres.quiver.relations)
    if (!pres.relation_holds(r))
      throw std::logic_error("emitted relation does not hold through generator maps");
  return pres;
}

AlgebraPresentation reconstruct_algebra(const ExactStructureSpec& spec,
                                        int max_rel_deg) {
  return endomorphism_presentation(spec.tq->ab, spec.projective_vertices,
                                   max_rel_deg);
}

namespace {

// Right Lambda-module with component basis given by Gamma-words per output
// vertex; arrows act by right multiplication with their generator words.
Rep lambda_module_from_words(const AlgebraPresentation& pres,
                             const std::vector<std::vector<int>>& basis_words) {
  const AlgebraBasis& g = *pres.gamma;
  const Field& f = g.field();
  Rep m;
  m.side = Side::right;
  m.ab = pres.basis;
  for (const auto& ws : basis_words) m.dims.push_back(static_cast<int>(ws.size()));
  std::vector<std::map<int, int>> pos(basis_words.size());
  for (size_t v = 0; v < basis_words.size(); ++v)
    for (size_t k = 0; k < basis_words[v].size(); ++k)
      pos[v][basis_words[v][k]] = static_cast<int>(k);
  for (size_t a = 0; a < pres.quiver.arrows.size(); ++a) {
    int fr = pres.quiver.arrows[a].src;
    int to = pres.quiver.arrows[a].tgt;
    Matrix block(f, m.dims[to], m.dims[fr]);
    for (int k = 0; k < m.dims[fr]; ++k) {
      AlgElem img = multiply(g, g.unit_elem(basis_words[fr][k]),
                             pres.generator_elems[a]);
      for (int gw = 0; gw < g.total_dim; ++gw) {
        if (f.is_zero(img[gw])) continue;
        auto it = pos[to].find(gw);
        if (it == pos[to].end())
          throw std::logic_error("lambda module: image leaves the component basis");
        block.at(it->second, k) = img[gw];
      }
    }
    m.act.push_back(std::move(block));
  }
  m.validate();
  return m;
}

}  // namespace

CotiltingResult cotilting_module(const ExactStructureSpec& spec,
                                 const AlgebraPresentation& pres,
                                 int check_span) {
  // U = Hom(e Gamma, f Gamma) = f Gamma e: at output vertex oi the component
  // collects the words j -> kept[oi] over all injective vertices j.
  std::vector<std::vector<int>> basis_words(pres.kept.size());
  for (size_t oi = 0; oi < pres.kept.size(); ++oi)
    for (int j : spec.injective_vertices)
      for (int w : pres.gamma->words_between[j][pres.kept[oi]])
        basis_words[oi].push_back(w);
  CotiltingResult r{lambda_module_from_words(pres, basis_words), {}, true};
  for (int j = 1; j <= check_span; ++j) {
    int d = ext_dim(r.u, r.u, j, check_span + 2);
    r.ext_dims.push_back(d);
    if (d != 0) r.ext_vanishes = false;
  }
  return r;
}

IGReport verify_iwanaga_gorenstein(const AlgebraPresentation& pres, int n,
                                   int check_span) {
  IGReport rep;
  rep.bound = n;
  rep.check_span = check_span;
  auto scan = [&](Side side) {
    IdVerdict out;
    bool all_no = true;
    for (int k = 0; k <= n; ++k) {
      Verdict v = injective_dimension_leq(*pres.basis, side, k, check_span);
      if (v == Verdict::yes) return IdVerdict{Verdict::yes, k};
      if (v != Verdict::no) all_no = false;
    }
    out.v = all_no ? Verdict::no : Verdict::undetermined;
    return out;
  };
  rep.right_id = scan(Side::right);
  rep.left_id = scan(Side::left);
  return rep;
}

std::vector<GpVertexReport> gp_orthogonality_check(const ExactStructureSpec& spec,
                                                   const AlgebraPresentation& pres,
                                                   int check_span) {
  if (!spec.frobenius)
    throw std::invalid_argument("gp_orthogonality_check expects a Frobenius structure");
  std::vector<GpVertexReport> out;
  for (size_t v = 0; v < pres.gamma->num_vertices(); ++v) {
    std::vector<std::vector<int>> basis_words(pres.kept.size());
    for (size_t oi = 0; oi < pres.kept.size(); ++oi)
      for (int w : pres.gamma->words_between[v][pres.kept[oi]])
        basis_words[oi].push_back(w);
    Rep img = lambda_module_from_words(pres, basis_words);
    GpVertexReport r;
    r.vertex = static_cast<int>(v);
    r.ok = true;
    ProjResolution res = minimal_resolution(img, check_span + 1);
    for (int j = 1; j <= check_span; ++j) {
      Rep e = ext_against_algebra(res, j);
      r.ext_dims.push_back(e.total_dim());
      if (!e.is_zero()) r.ok = false;
    }
    out.push_back(std::move(r));
  }
  return out;
}

TwoSidedCheck two_sided_isomorphism_check(const AlgebraPresentation& pres,
                                          const QuiverPresentation& stated,
                                          int degree_cap) {
  TwoSidedCheck c;
  // Match stated arrows to output arrows by name, endpoints must agree.
  std::vector<int> arrow_of(stated.arrows.size(), -1);
  for (size_t a = 0; a < stated.arrows.size(); ++a) {
    int idx = pres.quiver.arrow_index(stated.arrows[a].name);
    if (idx < 0) return c;
    const ArrowDecl& mine = pres.quiver.arrows[idx];
    if (stated.vertices[stated.arrows[a].src] != pres.quiver.vertices[mine.src] ||
        stated.vertices[stated.arrows[a].tgt] != pres.quiver.vertices[mine.tgt])
      return c;
    arrow_of[a] = idx;
  }
  c.relations_hold = true;
  for (const Relation& r : stated.relations) {
    Relation mapped = r;
    for (RelTerm& t : mapped.terms)
      for (int& a : t.arrows) a = arrow_of[a];
    if (!pres.relation_holds(mapped)) c.relations_hold = false;
  }
  AlgebraBasis stated_basis = groebner_basis(stated, degree_cap);
  c.stated_dim = stated_basis.total_dim;
  c.dims_match = stated_basis.total_dim == pres.dim_total;
  return c;
}

}  // namespace qex
