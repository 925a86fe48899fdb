#include "qex/exstruct.hpp"

#include <algorithm>

namespace qex {

TwoRegularReport check_two_regular(std::shared_ptr<const AlgebraBasis> ab,
                                   int vertex, int max_deg) {
  TwoRegularReport r;
  r.vertex = vertex;
  Rep s = simple_module(ab, vertex, Side::right);
  ProjResolution res = minimal_resolution(s, max_deg);
  if (!res.complete) {
    r.reason = "projective dimension undetermined at max_deg " + std::to_string(max_deg);
    return r;
  }
  r.pd_is_2 = res.length() == 2;
  Rep e0 = ext_against_algebra(res, 0);
  Rep e1 = ext_against_algebra(res, 1);
  Rep e2 = ext_against_algebra(res, 2);
  r.ext0_vanishes = e0.is_zero();
  r.ext1_vanishes = e1.is_zero();
  r.ext2_dim = e2.total_dim();
  r.is_two_regular = r.pd_is_2 && r.ext0_vanishes && r.ext1_vanishes && r.ext2_dim == 1;
  if (r.is_two_regular) {
    for (size_t v = 0; v < ab->num_vertices(); ++v)
      if (e2.dims[v] == 1) r.ext2_support_vertex = static_cast<int>(v);
  } else if (!r.pd_is_2) {
    r.reason = "pd = " + std::to_string(res.length());
  } else {
    r.reason = "Ext conditions fail";
  }
  if (r.pd_is_2) r.c2_resolution = std::move(res);
  return r;
}

int TranslationQuiver::orbit_of(int vertex) const {
  for (size_t i = 0; i < orbits.size(); ++i)
    if (std::find(orbits[i].begin(), orbits[i].end(), vertex) != orbits[i].end())
      return static_cast<int>(i);
  return -1;
}

int TranslationQuiver::dotted_index(int source) const {
  for (size_t i = 0; i < dotted.size(); ++i)
    if (dotted[i].source == source) return static_cast<int>(i);
  return -1;
}

TranslationQuiver translation_quiver(std::shared_ptr<const AlgebraBasis> ab,
                                     int max_deg) {
  TranslationQuiver tq;
  tq.ab = ab;
  size_t nv = ab->num_vertices();
  const Field& f = ab->field();

  // Solid arrows: dim of (e_i J e_j) / (e_i J^2 e_j).
  tq.solid.assign(nv, std::vector<int>(nv, 0));
  for (size_t i = 0; i < nv; ++i)
    for (size_t j = 0; j < nv; ++j) {
      const std::vector<int>& words = ab->words_between[i][j];
      std::vector<std::vector<Scalar>> rad2;
      for (size_t m = 0; m < nv; ++m)
        for (int w1 : ab->words_between[i][m]) {
          if (ab->normal_words[w1].length() == 0) continue;
          for (int w2 : ab->words_between[m][j]) {
            if (ab->normal_words[w2].length() == 0) continue;
            AlgElem prod = multiply(*ab, ab->unit_elem(w1), ab->unit_elem(w2));
            std::vector<Scalar> local;
            for (int g : words) local.push_back(prod[g]);
            rad2.push_back(std::move(local));
          }
        }
      int rad_dim = 0;
      for (int g : words)
        if (ab->normal_words[g].length() >= 1) ++rad_dim;
      Matrix m2 = Matrix::from_columns(f, words.size(), rad2);
      tq.solid[i][j] = rad_dim - static_cast<int>(rank(m2));
    }

  for (size_t v = 0; v < nv; ++v)
    tq.reports.push_back(check_two_regular(ab, static_cast<int>(v), max_deg));
  for (size_t v = 0; v < nv; ++v)
    if (tq.reports[v].is_two_regular)
      tq.dotted.push_back({static_cast<int>(v), tq.reports[v].ext2_support_vertex});
  std::sort(tq.dotted.begin(), tq.dotted.end(),
            [](const DottedArrow& a, const DottedArrow& b) { return a.source < b.source; });

  // Orbits: connected components of the undirected dotted graph.
  std::vector<int> comp(nv, -1);
  int nc = 0;
  for (size_t v = 0; v < nv; ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> stack{static_cast<int>(v)};
    comp[v] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const DottedArrow& d : tq.dotted) {
        int other = -1;
        if (d.source == u) other = d.target;
        if (d.target == u) other = d.source;
        if (d.source == u && d.target == u) continue;
        if (other >= 0 && comp[other] < 0) {
          comp[other] = nc;
          stack.push_back(other);
        }
      }
    }
    ++nc;
  }
  tq.orbits.assign(nc, {});
  for (size_t v = 0; v < nv; ++v) tq.orbits[comp[v]].push_back(static_cast<int>(v));
  std::sort(tq.orbits.begin(), tq.orbits.end());
  for (const auto& orbit : tq.orbits) {
    bool stable = true;
    for (int v : orbit) {
      bool is_src = false, is_tgt = false;
      for (const DottedArrow& d : tq.dotted) {
        if (d.source == v) is_src = true;
        if (d.target == v) is_tgt = true;
      }
      if (!is_src || !is_tgt) stable = false;
    }
    tq.orbit_stable.push_back(stable);
  }
  // Letter names for the orbits that carry dotted arrows.
  size_t next_name = 0;
  for (size_t i = 0; i < tq.orbits.size(); ++i) {
    bool has_dotted = false;
    for (const DottedArrow& d : tq.dotted)
      for (int v : tq.orbits[i])
        if (d.source == v) has_dotted = true;
    if (!has_dotted) {
      tq.orbit_names.push_back("");
      continue;
    }
    std::string name;
    size_t n = next_name++;
    do {
      name.insert(name.begin(), static_cast<char>('A' + n % 26));
      n /= 26;
    } while (n > 0);
    tq.orbit_names.push_back(name);
  }
  return tq;
}

ExactStructureSpec make_spec(std::shared_ptr<const TranslationQuiver> tq,
                             std::vector<int> chosen) {
  ExactStructureSpec s;
  s.tq = tq;
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  for (int c : chosen)
    if (c < 0 || c >= static_cast<int>(tq->dotted.size()))
      throw std::out_of_range("dotted arrow index out of range");
  s.chosen = std::move(chosen);
  size_t nv = tq->ab->num_vertices();
  s.allowed.assign(nv, false);
  std::vector<bool> is_target(nv, false);
  for (int c : s.chosen) {
    s.allowed[tq->dotted[c].source] = true;
    is_target[tq->dotted[c].target] = true;
  }
  for (size_t v = 0; v < nv; ++v) {
    if (!s.allowed[v]) s.projective_vertices.push_back(static_cast<int>(v));
    if (!is_target[v]) s.injective_vertices.push_back(static_cast<int>(v));
  }
  s.frobenius = s.projective_vertices == s.injective_vertices;
  return s;
}

EnumerationResult enumerate_exact_structures(
    std::shared_ptr<const TranslationQuiver> tq, bool count_only) {
  EnumerationResult r;
  size_t n = tq->dotted.size();
  mpz_class one = 1;
  r.count = one << n;
  if (count_only) {
    r.materialized = false;
    return r;
  }
  if (n > 20)
    throw CapError("refusing to materialize more than 2^20 exact structures; use count-only mode");
  for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
    std::vector<int> chosen;
    for (size_t b = 0; b < n; ++b)
      if (mask & (uint64_t(1) << b)) chosen.push_back(static_cast<int>(b));
    r.specs.push_back(make_spec(tq, std::move(chosen)));
  }
  r.materialized = true;
  return r;
}

std::vector<ExactStructureSpec> frobenius_structures(
    std::shared_ptr<const TranslationQuiver> tq) {
  std::vector<int> stable_orbits;
  for (size_t i = 0; i < tq->orbits.size(); ++i)
    if (tq->orbit_stable[i]) stable_orbits.push_back(static_cast<int>(i));
  std::vector<ExactStructureSpec> out;
  for (uint64_t mask = 0; mask < (uint64_t(1) << stable_orbits.size()); ++mask) {
    std::vector<int> chosen;
    for (size_t b = 0; b < stable_orbits.size(); ++b) {
      if (!(mask & (uint64_t(1) << b))) continue;
      for (size_t d = 0; d < tq->dotted.size(); ++d)
        if (tq->orbit_of(tq->dotted[d].source) == stable_orbits[b])
          chosen.push_back(static_cast<int>(d));
    }
    out.push_back(make_spec(tq, std::move(chosen)));
  }
  return out;
}

ConflationCertificate is_deflation(const ExactStructureSpec& spec,
                                   const ModuleMap& g) {
  ConflationCertificate c;
  c.g = g;
  SubQuot ker = kernel(g);
  c.f = ker.map;
  SubQuot coker = cokernel(g);
  c.cokernel_module = coker.rep;
  c.factors = composition_factors(coker.rep);
  c.verdict = true;
  for (size_t v = 0; v < c.factors.size(); ++v)
    if (c.factors[v] > 0 && !spec.allowed[v]) {
      c.verdict = false;
      c.reason = "cokernel has a factor at a non-allowed vertex " +
                 spec.tq->ab->pres.vertices[v];
    }
  if (c.verdict) {
    // Kernel must be projective: its cover is an isomorphism iff dims agree.
    Cover cover = projective_cover(ker.rep);
    if (cover.p.rep.total_dim() != ker.rep.total_dim())
      throw std::logic_error("deflation kernel is not projective");
    // Exactness of 0 -> X -> Y -> Z -> M -> 0 per vertex.
    for (size_t v = 0; v < c.factors.size(); ++v) {
      int x = ker.rep.dims[v], y = g.source.dims[v], z = g.target.dims[v];
      int m = coker.rep.dims[v];
      if (x - y + z - m != 0)
        throw std::logic_error("deflation certificate: dimension bookkeeping failed");
    }
    c.reason = "cokernel factors lie in the allowed simple set";
  }
  return c;
}

ArConflation ar_conflation(const ExactStructureSpec& spec, int dotted_index) {
  if (std::find(spec.chosen.begin(), spec.chosen.end(), dotted_index) ==
      spec.chosen.end())
    throw std::invalid_argument("dotted arrow not chosen in this exact structure");
  const DottedArrow& d = spec.tq->dotted[dotted_index];
  const TwoRegularReport& rep = spec.tq->reports[d.source];
  if (!rep.c2_resolution || rep.c2_resolution->length() != 2)
    throw std::logic_error("missing pd-2 resolution for a dotted arrow");
  const ProjResolution& res = *rep.c2_resolution;
  ArConflation ar;
  ar.dotted_index = dotted_index;
  ar.x = res.terms[2];
  ar.y = res.terms[1];
  ar.z = res.terms[0];
  ar.f = res.differentials[1];
  ar.g = res.differentials[0];
  // X is the translate: one copy of P_{tau}.
  std::vector<int> expect(spec.tq->ab->num_vertices(), 0);
  expect[d.target] = 1;
  if (ar.x.mult != expect)
    throw std::logic_error("AR conflation does not start at the tau-translate");
  return ar;
}

PullbackResult pullback_deflation(const ExactStructureSpec& spec,
                                  const ModuleMap& g, const ModuleMap& h) {
  // E = ker([g, -h] : Y (+) W -> Z), with k and to_y the two projections.
  ConflationCertificate pre = is_deflation(spec, g);
  if (!pre.verdict)
    throw std::invalid_argument("pullback requires a deflation");
  const Rep& y = g.source;
  const Rep& w = h.source;
  Rep yw = direct_sum(y, w);
  ModuleMap diff;
  diff.source = yw;
  diff.target = g.target;
  for (size_t v = 0; v < yw.dims.size(); ++v)
    diff.blocks.push_back(Matrix::hstack(g.blocks[v], h.blocks[v].scaled(Scalar(-1))));
  SubQuot e = kernel(diff);
  PullbackResult r;
  r.e = e.rep;
  ModuleMap proj_y, proj_w;
  proj_y.source = e.rep;
  proj_y.target = y;
  proj_w.source = e.rep;
  proj_w.target = w;
  const Field& f = y.ab->field();
  for (size_t v = 0; v < yw.dims.size(); ++v) {
    Matrix py(f, y.dims[v], e.rep.dims[v]);
    Matrix pw(f, w.dims[v], e.rep.dims[v]);
    for (int c = 0; c < e.rep.dims[v]; ++c) {
      for (int rr = 0; rr < y.dims[v]; ++rr) py.at(rr, c) = e.map.blocks[v].at(rr, c);
      for (int rr = 0; rr < w.dims[v]; ++rr)
        pw.at(rr, c) = e.map.blocks[v].at(y.dims[v] + rr, c);
    }
    proj_y.blocks.push_back(std::move(py));
    proj_w.blocks.push_back(std::move(pw));
  }
  r.k = std::move(proj_w);
  r.to_y = std::move(proj_y);
  // E is projective.
  Cover cover = projective_cover(r.e);
  if (cover.p.rep.total_dim() != r.e.total_dim())
    throw std::logic_error("pullback object is not projective");
  r.cert = is_deflation(spec, r.k);
  return r;
}

ConflationCertificate compose_deflations(const ExactStructureSpec& spec,
                                         const ModuleMap& g, const ModuleMap& k) {
  ConflationCertificate cg = is_deflation(spec, g);
  ConflationCertificate ck = is_deflation(spec, k);
  if (!cg.verdict || !ck.verdict)
    throw std::invalid_argument("compose_deflations requires two deflations");
  ConflationCertificate c = is_deflation(spec, compose(k, g));
  // Cokernel factors add up.
  for (size_t v = 0; v < c.factors.size(); ++v)
    if (c.factors[v] != cg.factors[v] + ck.factors[v])
      throw std::logic_error("composed deflation: factor multisets do not add");
  return c;
}

}  // namespace qex
