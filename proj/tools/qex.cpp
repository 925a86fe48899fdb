// Command-line front end: analyze a quiver algebra presentation, classify the
// exact structures on its projectives, reconstruct endomorphism algebras and
// compute Grothendieck groups.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qex/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;

struct CommonOpts {
  std::string file;
  std::string field_override;
  int max_deg = 20;
  int degree_cap = 30;
  int check_span = 10;
  bool json = false;
  bool allow_undetermined = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("file", o.file, "input presentation file")->required();
  cmd->add_option("--field", o.field_override,
                  "override the field directive (Q or F<p>)");
  cmd->add_option("--max-deg", o.max_deg, "resolution depth bound")
      ->capture_default_str();
  cmd->add_option("--degree-cap", o.degree_cap, "Groebner degree cap")
      ->capture_default_str();
  cmd->add_option("--check-span", o.check_span, "Ext vanishing window")
      ->capture_default_str();
  cmd->add_flag("--json", o.json, "emit a JSON report");
  cmd->add_flag("--allow-undetermined", o.allow_undetermined,
                "exit 0 when verifications end undetermined");
}

qex::QuiverPresentation load(const CommonOpts& o) {
  std::ifstream in(o.file);
  if (!in) throw qex::ParseError("cannot open file '" + o.file + "'", 0, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  qex::QuiverPresentation p = qex::parse_presentation(buf.str());
  if (!o.field_override.empty()) {
    if (o.field_override == "Q") {
      p.field = qex::Field::rationals();
    } else if (o.field_override.size() > 1 && o.field_override[0] == 'F') {
      p.field = qex::Field::prime(std::stoul(o.field_override.substr(1)));
    } else {
      throw qex::ParseError("bad --field value '" + o.field_override + "'", 0, 0);
    }
    for (qex::Relation& r : p.relations)
      for (qex::RelTerm& t : r.terms) t.coeff = p.field.reduce(t.coeff);
  }
  return p;
}

std::vector<int> parse_dotted(const std::string& s, const qex::TranslationQuiver& tq) {
  std::vector<int> chosen;
  if (s.empty()) return chosen;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
      tok.erase(tok.begin());
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
      tok.pop_back();
    if (tok.empty()) continue;
    if (tok == "all") {
      for (size_t i = 0; i < tq.dotted.size(); ++i) chosen.push_back(static_cast<int>(i));
      continue;
    }
    bool numeric = !tok.empty() && std::isdigit(static_cast<unsigned char>(tok[0]));
    if (numeric) {
      int idx = std::stoi(tok);
      if (idx < 0 || idx >= static_cast<int>(tq.dotted.size()))
        throw CLI::ValidationError("--dotted", "arrow index out of range: " + tok);
      chosen.push_back(idx);
      continue;
    }
    bool matched = false;
    for (size_t i = 0; i < tq.orbits.size(); ++i) {
      if (tq.orbit_names[i] != tok) continue;
      matched = true;
      for (size_t d = 0; d < tq.dotted.size(); ++d)
        if (tq.orbit_of(tq.dotted[d].source) == static_cast<int>(i))
          chosen.push_back(static_cast<int>(d));
    }
    if (!matched)
      throw CLI::ValidationError("--dotted", "unknown orbit name: " + tok);
  }
  return chosen;
}

void emit(const qex::Json& j, bool json, const std::string& text) {
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structures on the projectives of a quiver algebra"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string dotted_spec;
  int samples = 50;
  uint64_t seed = 1;
  bool count_only = false;
  bool verify_ig = false;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "2-regular table, translation quiver, structure counts");
  add_common(analyze, o);
  analyze->add_flag("--count-only", count_only,
                    "report the structure count without materializing");

  CLI::App* reconstruct = app.add_subcommand(
      "reconstruct", "endomorphism algebra of an exact structure");
  add_common(reconstruct, o);
  bool with_cotilting = false;
  reconstruct->add_option("--dotted", dotted_spec,
                          "chosen dotted arrows (indices or orbit names, e.g. A,B or 0,2)");
  reconstruct->add_flag("--verify-ig", verify_ig,
                        "verify the Iwanaga-Gorenstein property");
  reconstruct->add_flag("--cotilting", with_cotilting,
                        "compute the cotilting module and its Ext window");

  CLI::App* k0 = app.add_subcommand("k0", "Grothendieck group of an exact structure");
  add_common(k0, o);
  k0->add_option("--dotted", dotted_spec, "chosen dotted arrows");
  k0->add_option("--samples", samples, "Ex=AR sampling count")->capture_default_str();
  k0->add_option("--seed", seed, "sampling seed")->capture_default_str();

  CLI::App* dot = app.add_subcommand("dot", "DOT rendering of the translation quiver");
  add_common(dot, o);
  dot->add_option("--dotted", dotted_spec, "chosen dotted arrows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto t0 = std::chrono::steady_clock::now();
  try {
    qex::QuiverPresentation p = load(o);
    auto ab = std::make_shared<qex::AlgebraBasis>(qex::groebner_basis(p, o.degree_cap));
    auto tq = std::make_shared<qex::TranslationQuiver>(
        qex::translation_quiver(ab, o.max_deg));

    if (analyze->parsed()) {
      qex::EnumerationResult en = qex::enumerate_exact_structures(tq, count_only);
      size_t frob = qex::frobenius_structures(tq).size();
      qex::DegResult gldim = qex::global_dimension(ab, o.max_deg);
      qex::Json j = qex::analyze_json(o.file, *tq, en.count, frob, gldim);
      j["timing_ms"] = ms_since(t0);
      emit(j, o.json, qex::analyze_text(*tq, en.count, frob, gldim));
      return kExitOk;
    }

    qex::ExactStructureSpec spec = qex::make_spec(tq, parse_dotted(dotted_spec, *tq));

    if (dot->parsed()) {
      std::cout << qex::dot_output(*tq, spec);
      return kExitOk;
    }
    if (reconstruct->parsed()) {
      qex::AlgebraPresentation pres = qex::reconstruct_algebra(spec, o.degree_cap);
      int rc = kExitOk;
      qex::IGReport ig;
      const qex::IGReport* igp = nullptr;
      if (verify_ig) {
        qex::DegResult gldim = qex::global_dimension(ab, o.max_deg);
        ig = qex::verify_iwanaga_gorenstein(pres, gldim.value, o.check_span);
        igp = &ig;
        auto bad = [&](qex::Verdict v) {
          return v == qex::Verdict::no ||
                 (v == qex::Verdict::undetermined && !o.allow_undetermined);
        };
        if (bad(ig.right_id.v) || bad(ig.left_id.v)) rc = kExitUsage;
      }
      qex::CotiltingResult cot;
      const qex::CotiltingResult* cotp = nullptr;
      if (with_cotilting) {
        cot = qex::cotilting_module(spec, pres, o.check_span);
        cotp = &cot;
        if (!cot.ext_vanishes) rc = kExitUsage;
      }
      qex::Json j = qex::reconstruct_json(o.file, spec, pres, igp, cotp);
      j["timing_ms"] = ms_since(t0);
      emit(j, o.json, qex::reconstruct_text(spec, pres, igp, cotp));
      return rc;
    }
    if (k0->parsed()) {
      qex::GrothendieckReport rep = qex::k0_group(spec);
      qex::ExArReport ex = qex::verify_ex_equals_ar(spec, samples, seed);
      qex::Json j = qex::k0_json(o.file, spec, rep, ex);
      j["timing_ms"] = ms_since(t0);
      emit(j, o.json, qex::k0_text(spec, rep, ex));
      return ex.all_pass() ? kExitOk : kExitUsage;
    }
  } catch (const qex::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qex::CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
