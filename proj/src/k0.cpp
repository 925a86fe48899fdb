#include "qex/k0.hpp"

#include "qex/rng.hpp"

namespace qex {

std::vector<mpz_class> ar_relation_vector(const ExactStructureSpec& spec,
                                          int dotted_index) {
  ArConflation ar = ar_conflation(spec, dotted_index);
  size_t nv = spec.tq->ab->num_vertices();
  std::vector<mpz_class> v(nv, 0);
  for (size_t i = 0; i < nv; ++i)
    v[i] = ar.x.mult[i] - ar.y.mult[i] + ar.z.mult[i];
  return v;
}

IntMatrix ar_matrix(const ExactStructureSpec& spec) {
  size_t nv = spec.tq->ab->num_vertices();
  IntMatrix m(nv, spec.chosen.size());
  for (size_t c = 0; c < spec.chosen.size(); ++c) {
    std::vector<mpz_class> v = ar_relation_vector(spec, spec.chosen[c]);
    for (size_t r = 0; r < nv; ++r) m.at(r, c) = v[r];
  }
  return m;
}

GrothendieckReport k0_group(const ExactStructureSpec& spec) {
  GrothendieckReport rep;
  rep.spec = spec;
  rep.ar_matrix = ar_matrix(spec);
  SnfResult snf = smith_normal_form(rep.ar_matrix);
  rep.free_rank = static_cast<int>(spec.tq->ab->num_vertices() - snf.factors.size());
  for (const mpz_class& d : snf.factors)
    if (d > 1) rep.torsion.push_back(d);
  return rep;
}

ExArReport verify_ex_equals_ar(const ExactStructureSpec& spec, int samples,
                               uint64_t seed) {
  ExArReport rep;
  std::vector<int> allowed;
  for (size_t v = 0; v < spec.allowed.size(); ++v)
    if (spec.allowed[v]) allowed.push_back(static_cast<int>(v));
  if (allowed.empty()) return rep;  // split structure: nothing to sample

  IntMatrix lattice = ar_matrix(spec);
  size_t nv = spec.tq->ab->num_vertices();
  for (int i = 0; i < samples; ++i) {
    SplitMix64 rng(derive_seed(seed, i));
    int length = 1 + static_cast<int>(rng.below(4));
    Rep m = random_filt_module(spec.tq->ab, allowed, length, rng.next());
    ProjResolution res = minimal_resolution(m, 4);
    if (!res.complete || res.length() > 2)
      throw std::logic_error("Filt-module resolution is not of length <= 2");
    std::vector<mpz_class> vec(nv, 0);
    for (size_t v = 0; v < nv; ++v) {
      auto mult = [&](size_t k) {
        return k < res.terms.size() ? res.terms[k].mult[v] : 0;
      };
      vec[v] = mpz_class(mult(2)) - mult(1) + mult(0);
    }
    // On odd samples pad X and Y with the same split projective summand and
    // recompute; the relation vector must not move (Schanuel invariance).
    if (i % 2 == 1) {
      size_t pad = rng.below(nv);
      std::vector<mpz_class> padded(nv, 0);
      for (size_t v = 0; v < nv; ++v) {
        auto mult = [&](size_t k) {
          return k < res.terms.size() ? res.terms[k].mult[v] : 0;
        };
        mpz_class x = mult(2) + (v == pad ? 1 : 0);
        mpz_class y = mult(1) + (v == pad ? 1 : 0);
        padded[v] = x - y + mult(0);
      }
      if (padded != vec) throw std::logic_error("split padding changed the vector");
    }
    ++rep.samples;
    if (lattice_membership(lattice, vec)) ++rep.passes;
  }
  return rep;
}

}  // namespace qex
