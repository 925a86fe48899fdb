#include "qex/algebra.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace qex {

namespace {

Word compose(const Word& a, const Word& b) {
  Word w;
  w.source = a.source;
  w.target = b.target;
  w.arrows = a.arrows;
  w.arrows.insert(w.arrows.end(), b.arrows.begin(), b.arrows.end());
  return w;
}

void poly_add(const Field& f, Poly& p, const Word& w, const Scalar& c) {
  auto it = p.find(w);
  if (it == p.end()) {
    Scalar r = f.reduce(c);
    if (!f.is_zero(r)) p.emplace(w, r);
    return;
  }
  it->second = f.add(it->second, c);
  if (f.is_zero(it->second)) p.erase(it);
}

// p += c * (u . q . v); u and v may be lazy.
void poly_add_product(const Field& f, Poly& p, const Scalar& c, const Word& u,
                      const Poly& q, const Word& v) {
  for (const auto& [w, cw] : q)
    poly_add(f, p, compose(compose(u, w), v), f.mul(c, cw));
}

// First position where `sub` occurs inside `w` as a contiguous factor, or -1.
int find_subword(const Word& w, const Word& sub) {
  if (sub.length() > w.length()) return -1;
  if (sub.length() == 0) return w.source == sub.source ? 0 : -1;
  for (size_t pos = 0; pos + sub.length() <= w.length(); ++pos) {
    bool ok = true;
    for (size_t k = 0; k < sub.length(); ++k)
      if (w.arrows[pos + k] != sub.arrows[k]) {
        ok = false;
        break;
      }
    if (ok) return static_cast<int>(pos);
  }
  return -1;
}

bool ends_with(const Word& w, const Word& suffix) {
  if (suffix.length() > w.length() || suffix.length() == 0) return false;
  size_t off = w.length() - suffix.length();
  for (size_t k = 0; k < suffix.length(); ++k)
    if (w.arrows[off + k] != suffix.arrows[k]) return false;
  return true;
}

Word prefix_of(const QuiverPresentation& p, const Word& w, size_t len) {
  Word u;
  u.arrows.assign(w.arrows.begin(), w.arrows.begin() + len);
  u.source = w.source;
  u.target = len == 0 ? w.source : p.arrows[u.arrows.back()].tgt;
  return u;
}

Word suffix_of(const QuiverPresentation& p, const Word& w, size_t start) {
  Word v;
  v.arrows.assign(w.arrows.begin() + start, w.arrows.end());
  v.target = w.target;
  v.source = start == w.length() ? w.target : p.arrows[v.arrows.front()].src;
  return v;
}

const Word& lead(const Poly& p) { return p.rbegin()->first; }
const Scalar& lead_coeff(const Poly& p) { return p.rbegin()->second; }

struct GbContext {
  const QuiverPresentation& pres;
  const Field& f;
  int degree_cap;
};

// Full normal form against the current basis (tails included).
Poly normal_form(const GbContext& ctx, Poly p, const std::vector<Poly>& basis) {
  for (;;) {
    bool reduced = false;
    for (auto it = p.rbegin(); it != p.rend() && !reduced; ++it) {
      const Word& w = it->first;
      for (const Poly& g : basis) {
        int pos = find_subword(w, lead(g));
        if (pos < 0) continue;
        Word u = prefix_of(ctx.pres, w, pos);
        Word v = suffix_of(ctx.pres, w, pos + lead(g).length());
        Scalar c = ctx.f.div(it->second, lead_coeff(g));
        poly_add_product(ctx.f, p, ctx.f.neg(c), u, g, v);
        reduced = true;
        break;
      }
    }
    if (!reduced) return p;
  }
}

void monicize(const Field& f, Poly& p) {
  Scalar inv = f.inv(lead_coeff(p));
  for (auto& [w, c] : p) c = f.mul(c, inv);
}

// Overlap S-polynomials of g1 against g2: lead(g1) = x s, lead(g2) = s y.
// Containments are handled separately by re-queueing the larger element.
void push_overlaps(const GbContext& ctx, const Poly& g1, const Poly& g2,
                   std::deque<Poly>& queue) {
  const Word& w1 = lead(g1);
  const Word& w2 = lead(g2);
  size_t l1 = w1.length(), l2 = w2.length();
  for (size_t o = 1; o < l1 && o < l2; ++o) {
    bool match = true;
    for (size_t k = 0; k < o; ++k)
      if (w1.arrows[l1 - o + k] != w2.arrows[k]) {
        match = false;
        break;
      }
    if (!match) continue;
    Word x = prefix_of(ctx.pres, w1, l1 - o);
    Word y = suffix_of(ctx.pres, w2, o);
    Poly s;
    poly_add_product(ctx.f, s, ctx.f.one(), Word::lazy(w1.source), g1, y);
    poly_add_product(ctx.f, s, ctx.f.neg(ctx.f.one()), x, g2, Word::lazy(w2.target));
    if (!s.empty()) queue.push_back(std::move(s));
  }
}

}  // namespace

AlgElem AlgebraBasis::unit_elem(int word_id) const {
  AlgElem e = zero_elem();
  e[word_id] = field().one();
  return e;
}

std::map<std::tuple<int, int, int>, int> AlgebraBasis::dims_table() const {
  std::map<std::tuple<int, int, int>, int> t;
  for (const Word& w : normal_words)
    t[{w.source, w.target, static_cast<int>(w.length())}] += 1;
  return t;
}

AlgebraBasis groebner_basis(const QuiverPresentation& pres, int degree_cap) {
  AlgebraBasis ab;
  ab.pres = pres;
  const Field& f = pres.field;
  GbContext ctx{pres, f, degree_cap};

  // Buchberger completion.
  std::deque<Poly> queue;
  for (const Relation& r : pres.relations) {
    Poly p;
    for (const RelTerm& t : r.terms) {
      Word w;
      w.arrows = t.arrows;
      w.source = pres.arrows[t.arrows.front()].src;
      w.target = pres.arrows[t.arrows.back()].tgt;
      poly_add(f, p, w, t.coeff);
    }
    if (!p.empty()) queue.push_back(std::move(p));
  }

  std::vector<Poly> basis;
  while (!queue.empty()) {
    Poly p = std::move(queue.front());
    queue.pop_front();
    p = normal_form(ctx, std::move(p), basis);
    if (p.empty()) continue;
    if (static_cast<int>(lead(p).length()) > 2 * degree_cap)
      throw CapError("Groebner completion exceeded degree cap: possibly infinite-dimensional or cap too low");
    monicize(f, p);
    // Keep the basis tip-reduced: demote elements whose lead contains the new lead.
    std::vector<Poly> kept;
    for (Poly& g : basis) {
      if (find_subword(lead(g), lead(p)) >= 0)
        queue.push_back(std::move(g));
      else
        kept.push_back(std::move(g));
    }
    basis = std::move(kept);
    for (const Poly& g : basis) {
      push_overlaps(ctx, p, g, queue);
      push_overlaps(ctx, g, p, queue);
    }
    push_overlaps(ctx, p, p, queue);
    basis.push_back(std::move(p));
  }

  // Inter-reduce tails for the reduced basis.
  for (size_t i = 0; i < basis.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < basis.size(); ++j)
      if (j != i) others.push_back(basis[j]);
    basis[i] = normal_form(ctx, basis[i], others);
    monicize(f, basis[i]);
  }
  std::sort(basis.begin(), basis.end(),
            [](const Poly& a, const Poly& b) { return WordLess()(lead(a), lead(b)); });
  ab.groebner = basis;

  // Every input relation must reduce to zero against the completed basis.
  for (const Relation& r : pres.relations) {
    Poly p;
    for (const RelTerm& t : r.terms) {
      Word w;
      w.arrows = t.arrows;
      w.source = pres.arrows[t.arrows.front()].src;
      w.target = pres.arrows[t.arrows.back()].tgt;
      poly_add(f, p, w, t.coeff);
    }
    if (!normal_form(ctx, p, ab.groebner).empty())
      throw std::logic_error("relation does not reduce to zero against Groebner basis");
  }

  // Normal words: paths avoiding every leading word, by breadth-first growth.
  std::vector<std::vector<int>> out_arrows(pres.num_vertices());
  for (size_t a = 0; a < pres.num_arrows(); ++a)
    out_arrows[pres.arrows[a].src].push_back(static_cast<int>(a));

  std::deque<Word> bfs;
  std::vector<Word> words;
  for (size_t v = 0; v < pres.num_vertices(); ++v) {
    bfs.push_back(Word::lazy(static_cast<int>(v)));
    words.push_back(bfs.back());
  }
  while (!bfs.empty()) {
    Word w = std::move(bfs.front());
    bfs.pop_front();
    for (int a : out_arrows[w.target]) {
      Word c = compose(w, Word::arrow(pres, a));
      bool normal = true;
      for (const Poly& g : ab.groebner)
        if (ends_with(c, lead(g))) {
          normal = false;
          break;
        }
      if (!normal) continue;
      if (static_cast<int>(c.length()) >= degree_cap)
        throw CapError("normal words reach the degree cap: possibly infinite-dimensional or cap too low");
      words.push_back(c);
      bfs.push_back(std::move(c));
    }
  }
  std::sort(words.begin(), words.end(), WordLess());
  ab.normal_words = std::move(words);
  ab.total_dim = static_cast<int>(ab.normal_words.size());

  ab.words_between.assign(pres.num_vertices(),
                          std::vector<std::vector<int>>(pres.num_vertices()));
  ab.lazy.assign(pres.num_vertices(), -1);
  ab.loc_in_pair.assign(ab.total_dim, 0);
  for (int i = 0; i < ab.total_dim; ++i) {
    const Word& w = ab.normal_words[i];
    ab.word_index.emplace(w, i);
    ab.loc_in_pair[i] = static_cast<int>(ab.words_between[w.source][w.target].size());
    ab.words_between[w.source][w.target].push_back(i);
    if (w.length() == 0) ab.lazy[w.source] = i;
  }

  // Multiplication table: normal word times arrow.
  ab.mult.assign(ab.total_dim, std::vector<std::vector<std::pair<int, Scalar>>>(
                                   pres.num_arrows()));
  for (int i = 0; i < ab.total_dim; ++i) {
    const Word& w = ab.normal_words[i];
    for (int a : out_arrows[w.target]) {
      Poly p;
      poly_add(f, p, compose(w, Word::arrow(pres, a)), f.one());
      p = normal_form(ctx, std::move(p), ab.groebner);
      std::vector<std::pair<int, Scalar>> row;
      for (const auto& [nw, c] : p) {
        auto it = ab.word_index.find(nw);
        if (it == ab.word_index.end())
          throw std::logic_error("multiplication table not closed over normal words");
        row.emplace_back(it->second, c);
      }
      ab.mult[i][a] = std::move(row);
    }
  }

  // Loewy length: iterate rad^k until it vanishes.
  {
    std::vector<AlgElem> span;
    for (int i = 0; i < ab.total_dim; ++i)
      if (ab.normal_words[i].length() >= 1) span.push_back(ab.unit_elem(i));
    int k = 1;
    while (!span.empty()) {
      // Reduce the span to a basis.
      Matrix m(f, static_cast<size_t>(ab.total_dim), span.size());
      for (size_t c = 0; c < span.size(); ++c) m.set_column(c, span[c]);
      Matrix b = column_space_basis(m);
      if (b.cols() == 0) break;
      std::vector<AlgElem> next;
      for (size_t a = 0; a < pres.num_arrows(); ++a)
        for (size_t c = 0; c < b.cols(); ++c) {
          AlgElem x = b.column_vec(c);
          AlgElem y = left_mult_arrow(ab, static_cast<int>(a), x);
          if (!elem_is_zero(ab, y)) next.push_back(std::move(y));
        }
      span = std::move(next);
      ++k;
      if (k > ab.total_dim + 2)
        throw std::logic_error("radical series fails to terminate");
    }
    ab.loewy_length = k;
  }
  return ab;
}

AlgElem right_mult_arrow(const AlgebraBasis& ab, const AlgElem& x, int a) {
  const Field& f = ab.field();
  AlgElem r = ab.zero_elem();
  for (int i = 0; i < ab.total_dim; ++i) {
    if (f.is_zero(x[i])) continue;
    for (const auto& [j, c] : ab.mult[i][a]) r[j] = f.add(r[j], f.mul(x[i], c));
  }
  return r;
}

AlgElem left_mult_arrow(const AlgebraBasis& ab, int a, const AlgElem& x) {
  const Field& f = ab.field();
  const QuiverPresentation& pres = ab.pres;
  // a . w: prepend the arrow and take the normal form.
  GbContext ctx{pres, f, 0};
  Poly p;
  for (int i = 0; i < ab.total_dim; ++i) {
    if (f.is_zero(x[i])) continue;
    const Word& w = ab.normal_words[i];
    if (w.source != pres.arrows[a].tgt) continue;
    poly_add(f, p, compose(Word::arrow(pres, a), w), x[i]);
  }
  p = normal_form(ctx, std::move(p), ab.groebner);
  AlgElem r = ab.zero_elem();
  for (const auto& [w, c] : p) r[ab.word_index.at(w)] = c;
  return r;
}

AlgElem multiply(const AlgebraBasis& ab, const AlgElem& x, const AlgElem& y) {
  const Field& f = ab.field();
  AlgElem r = ab.zero_elem();
  for (int j = 0; j < ab.total_dim; ++j) {
    if (f.is_zero(y[j])) continue;
    const Word& v = ab.normal_words[j];
    // x * v = ((x e_src) a1) a2 ... ak
    AlgElem cur = ab.zero_elem();
    for (int i = 0; i < ab.total_dim; ++i)
      if (!f.is_zero(x[i]) && ab.normal_words[i].target == v.source) cur[i] = x[i];
    for (int a : v.arrows) cur = right_mult_arrow(ab, cur, a);
    for (int i = 0; i < ab.total_dim; ++i)
      if (!f.is_zero(cur[i])) r[i] = f.add(r[i], f.mul(cur[i], y[j]));
  }
  return r;
}

AlgElem word_elem(const AlgebraBasis& ab, const Word& w) {
  AlgElem cur = ab.idempotent(w.source);
  for (int a : w.arrows) cur = right_mult_arrow(ab, cur, a);
  return cur;
}

bool elem_is_zero(const AlgebraBasis& ab, const AlgElem& x) {
  const Field& f = ab.field();
  for (const auto& v : x)
    if (!f.is_zero(v)) return false;
  return true;
}

QuiverPresentation opposite_presentation(const QuiverPresentation& p) {
  QuiverPresentation q;
  q.field = p.field;
  q.vertices = p.vertices;
  for (const ArrowDecl& a : p.arrows) q.arrows.push_back({a.name, a.tgt, a.src});
  for (const Relation& r : p.relations) {
    Relation s;
    s.line = r.line;
    s.src = r.tgt;
    s.tgt = r.src;
    for (const RelTerm& t : r.terms) {
      RelTerm u;
      u.coeff = t.coeff;
      u.arrows.assign(t.arrows.rbegin(), t.arrows.rend());
      s.terms.push_back(std::move(u));
    }
    q.relations.push_back(std::move(s));
  }
  return q;
}

AlgebraBasis opposite_algebra(const AlgebraBasis& ab, int degree_cap) {
  return groebner_basis(opposite_presentation(ab.pres), degree_cap);
}

}  // namespace qex
