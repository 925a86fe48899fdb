#include "qex/report.hpp"

#include <sstream>

namespace qex {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "undetermined";
  }
}

Json field_json(const Field& f) {
  return Json{{"kind", f.is_rational() ? "rationals" : "prime-field"},
              {"characteristic", f.characteristic()}};
}

namespace {

Json orbit_json(const TranslationQuiver& tq) {
  Json orbits = Json::array();
  for (size_t i = 0; i < tq.orbits.size(); ++i) {
    Json vs = Json::array();
    for (int v : tq.orbits[i]) vs.push_back(tq.ab->pres.vertices[v]);
    int arrows = 0;
    for (const DottedArrow& d : tq.dotted)
      if (tq.orbit_of(d.source) == static_cast<int>(i)) ++arrows;
    orbits.push_back(Json{{"name", tq.orbit_names[i]},
                          {"vertices", vs},
                          {"stable", tq.orbit_stable[i]},
                          {"dotted_arrows", arrows}});
  }
  return orbits;
}

Json gldim_json(const DegResult& d) {
  return Json{{"exact", d.exact}, {"value", d.value}};
}

}  // namespace

Json analyze_json(const std::string& file, const TranslationQuiver& tq,
                  const mpz_class& structure_count, size_t frobenius_count,
                  const DegResult& gldim) {
  const AlgebraBasis& ab = *tq.ab;
  Json two_regular = Json::array();
  for (const TwoRegularReport& r : tq.reports) {
    Json item{{"vertex", ab.pres.vertices[r.vertex]},
              {"pd_is_2", r.pd_is_2},
              {"ext0_vanishes", r.ext0_vanishes},
              {"ext1_vanishes", r.ext1_vanishes},
              {"ext2_dim", r.ext2_dim},
              {"is_two_regular", r.is_two_regular}};
    if (r.is_two_regular) item["tau"] = ab.pres.vertices[r.ext2_support_vertex];
    two_regular.push_back(std::move(item));
  }
  Json dotted = Json::array();
  for (size_t i = 0; i < tq.dotted.size(); ++i)
    dotted.push_back(Json{{"index", i},
                          {"source", ab.pres.vertices[tq.dotted[i].source]},
                          {"target", ab.pres.vertices[tq.dotted[i].target]}});
  Json solid = Json::array();
  for (size_t i = 0; i < ab.num_vertices(); ++i)
    for (size_t j = 0; j < ab.num_vertices(); ++j)
      if (tq.solid[i][j] > 0)
        solid.push_back(Json{{"source", ab.pres.vertices[i]},
                             {"target", ab.pres.vertices[j]},
                             {"multiplicity", tq.solid[i][j]}});
  return Json{{"command", "analyze"},
              {"file", file},
              {"field", field_json(ab.field())},
              {"algebra",
               Json{{"vertices", ab.num_vertices()},
                    {"arrows", ab.num_arrows()},
                    {"total_dim", ab.total_dim},
                    {"loewy_length", ab.loewy_length},
                    {"global_dimension", gldim_json(gldim)}}},
              {"two_regular", two_regular},
              {"dotted_arrows", dotted},
              {"solid_arrows", solid},
              {"orbits", orbit_json(tq)},
              {"exact_structures", structure_count.get_str()},
              {"frobenius_count", frobenius_count}};
}

std::string analyze_text(const TranslationQuiver& tq,
                         const mpz_class& structure_count,
                         size_t frobenius_count, const DegResult& gldim) {
  const AlgebraBasis& ab = *tq.ab;
  std::ostringstream out;
  out << "algebra: " << ab.num_vertices() << " vertices, " << ab.num_arrows()
      << " arrows, dim " << ab.total_dim << ", Loewy length " << ab.loewy_length
      << ", global dimension " << (gldim.exact ? "" : "> ") << gldim.value << "\n";
  out << "2-regular simples:";
  int n2 = 0;
  for (const TwoRegularReport& r : tq.reports)
    if (r.is_two_regular) {
      out << " " << ab.pres.vertices[r.vertex];
      ++n2;
    }
  out << " (" << n2 << " total)\n";
  out << "dotted arrows (" << tq.dotted.size() << "):\n";
  for (size_t i = 0; i < tq.dotted.size(); ++i)
    out << "  [" << i << "] " << ab.pres.vertices[tq.dotted[i].source] << " -> "
        << ab.pres.vertices[tq.dotted[i].target] << "\n";
  out << "orbits:\n";
  for (size_t i = 0; i < tq.orbits.size(); ++i) {
    out << "  " << (tq.orbit_names[i].empty() ? "-" : tq.orbit_names[i]) << ": {";
    for (size_t k = 0; k < tq.orbits[i].size(); ++k)
      out << (k ? ", " : "") << ab.pres.vertices[tq.orbits[i][k]];
    out << "}" << (tq.orbit_stable[i] ? " stable" : "") << "\n";
  }
  out << "exact structures: " << structure_count.get_str() << "\n";
  out << "Frobenius structures: " << frobenius_count << "\n";
  return out.str();
}

namespace {

Json spec_json(const ExactStructureSpec& spec) {
  const AlgebraBasis& ab = *spec.tq->ab;
  Json chosen = Json::array();
  for (int c : spec.chosen)
    chosen.push_back(Json{{"index", c},
                          {"source", ab.pres.vertices[spec.tq->dotted[c].source]},
                          {"target", ab.pres.vertices[spec.tq->dotted[c].target]}});
  Json proj = Json::array(), inj = Json::array();
  for (int v : spec.projective_vertices) proj.push_back(ab.pres.vertices[v]);
  for (int v : spec.injective_vertices) inj.push_back(ab.pres.vertices[v]);
  return Json{{"chosen", chosen},
              {"projective_vertices", proj},
              {"injective_vertices", inj},
              {"frobenius", spec.frobenius}};
}

Json ig_json(const IGReport& ig) {
  auto side = [](const IdVerdict& v) {
    Json j{{"verdict", verdict_str(v.v)}};
    if (v.v == Verdict::yes) j["n"] = v.n;
    return j;
  };
  return Json{{"right", side(ig.right_id)},
              {"left", side(ig.left_id)},
              {"bound", ig.bound},
              {"check_span", ig.check_span}};
}

}  // namespace

Json rep_json(const Rep& m) {
  const Field& f = m.ab->field();
  Json dims = Json::array();
  for (int d : m.dims) dims.push_back(d);
  Json action = Json::array();
  for (size_t a = 0; a < m.act.size(); ++a) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.act[a].rows(); ++r) {
      Json row = Json::array();
      for (size_t c = 0; c < m.act[a].cols(); ++c)
        row.push_back(f.str(m.act[a].at(r, c)));
      rows.push_back(std::move(row));
    }
    action.push_back(Json{{"arrow", m.ab->pres.arrows[a].name}, {"matrix", rows}});
  }
  return Json{{"side", m.side == Side::right ? "right" : "left"},
              {"dims", dims},
              {"action", action}};
}

Json reconstruct_json(const std::string& file, const ExactStructureSpec& spec,
                      const AlgebraPresentation& pres, const IGReport* ig,
                      const CotiltingResult* cotilting) {
  Json j{{"command", "reconstruct"},
         {"file", file},
         {"field", field_json(pres.gamma->field())},
         {"structure", spec_json(spec)},
         {"dim_total", pres.dim_total},
         {"loewy_length", pres.loewy_length},
         {"vertices", pres.quiver.vertices},
         {"arrow_count", pres.quiver.arrows.size()},
         {"relation_count", pres.quiver.relations.size()},
         {"presentation", emit_presentation(pres.quiver)}};
  if (ig) j["iwanaga_gorenstein"] = ig_json(*ig);
  if (cotilting) {
    Json ext = Json::array();
    for (int d : cotilting->ext_dims) ext.push_back(d);
    j["cotilting"] = Json{{"module", rep_json(cotilting->u)},
                          {"ext_dims", ext},
                          {"ext_vanishes", cotilting->ext_vanishes}};
  }
  return j;
}

std::string reconstruct_text(const ExactStructureSpec& spec,
                             const AlgebraPresentation& pres, const IGReport* ig,
                             const CotiltingResult* cotilting) {
  std::ostringstream out;
  out << "# endomorphism algebra of the projective vertices {";
  for (size_t k = 0; k < spec.projective_vertices.size(); ++k)
    out << (k ? ", " : "")
        << spec.tq->ab->pres.vertices[spec.projective_vertices[k]];
  out << "}\n";
  out << "# dim " << pres.dim_total << ", Loewy length " << pres.loewy_length
      << ", " << pres.quiver.arrows.size() << " arrows, "
      << pres.quiver.relations.size() << " relations\n";
  out << emit_presentation(pres.quiver);
  if (ig) {
    auto one = [](const IdVerdict& v) {
      return v.v == Verdict::yes ? "yes(" + std::to_string(v.n) + ")"
                                 : verdict_str(v.v);
    };
    out << "# Iwanaga-Gorenstein: right " << one(ig->right_id) << ", left "
        << one(ig->left_id) << " (bound " << ig->bound << ", span "
        << ig->check_span << ")\n";
  }
  if (cotilting) {
    out << "# cotilting module U: dim " << cotilting->u.total_dim()
        << ", Ext^(1.." << cotilting->ext_dims.size() << ")(U,U) "
        << (cotilting->ext_vanishes ? "= 0" : "NONZERO") << "\n";
  }
  return out.str();
}

Json k0_json(const std::string& file, const ExactStructureSpec& spec,
             const GrothendieckReport& rep, const ExArReport& samples) {
  Json torsion = Json::array();
  for (const mpz_class& t : rep.torsion) torsion.push_back(t.get_str());
  Json matrix = Json::array();
  for (size_t r = 0; r < rep.ar_matrix.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < rep.ar_matrix.cols(); ++c)
      row.push_back(rep.ar_matrix.at(r, c).get_str());
    matrix.push_back(std::move(row));
  }
  return Json{{"command", "k0"},
              {"file", file},
              {"field", field_json(spec.tq->ab->field())},
              {"structure", spec_json(spec)},
              {"free_rank", rep.free_rank},
              {"torsion", torsion},
              {"ar_matrix", matrix},
              {"ex_ar", Json{{"samples", samples.samples}, {"passes", samples.passes}}}};
}

std::string k0_text(const ExactStructureSpec& spec, const GrothendieckReport& rep,
                    const ExArReport& samples) {
  std::ostringstream out;
  out << "K0 = Z^" << rep.free_rank;
  for (const mpz_class& t : rep.torsion) out << " + Z/" << t.get_str();
  out << "  (" << spec.chosen.size() << " AR relations on "
      << spec.tq->ab->num_vertices() << " projectives)\n";
  if (samples.samples > 0)
    out << "Ex=AR sampling: " << samples.passes << "/" << samples.samples
        << " conflation vectors in the AR lattice\n";
  else
    out << "Ex=AR sampling: no allowed simples (split structure), nothing to sample\n";
  return out.str();
}

std::string dot_output(const TranslationQuiver& tq, const ExactStructureSpec& spec) {
  const AlgebraBasis& ab = *tq.ab;
  std::vector<bool> proj(ab.num_vertices(), false), inj(ab.num_vertices(), false);
  for (int v : spec.projective_vertices) proj[v] = true;
  for (int v : spec.injective_vertices) inj[v] = true;
  std::ostringstream out;
  out << "digraph Q {\n  rankdir=LR;\n";
  for (size_t v = 0; v < ab.num_vertices(); ++v) {
    out << "  \"" << ab.pres.vertices[v] << "\" [shape="
        << (proj[v] ? "doublecircle" : "circle");
    if (inj[v]) out << ", style=filled";
    out << "];\n";
  }
  for (size_t i = 0; i < ab.num_vertices(); ++i)
    for (size_t j = 0; j < ab.num_vertices(); ++j) {
      if (tq.solid[i][j] == 0) continue;
      out << "  \"" << ab.pres.vertices[i] << "\" -> \"" << ab.pres.vertices[j]
          << "\" [style=solid";
      if (tq.solid[i][j] > 1) out << ", label=\"" << tq.solid[i][j] << "\"";
      out << "];\n";
    }
  for (int c : spec.chosen)
    out << "  \"" << ab.pres.vertices[tq.dotted[c].source] << "\" -> \""
        << ab.pres.vertices[tq.dotted[c].target] << "\" [style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace qex
