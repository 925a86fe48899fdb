#pragma once

#include <json.hpp>

#include "qex/k0.hpp"
#include "qex/reconstruct.hpp"

namespace qex {

using Json = nlohmann::json;

Json field_json(const Field& f);

Json analyze_json(const std::string& file, const TranslationQuiver& tq,
                  const mpz_class& structure_count, size_t frobenius_count,
                  const DegResult& gldim);
std::string analyze_text(const TranslationQuiver& tq,
                         const mpz_class& structure_count,
                         size_t frobenius_count, const DegResult& gldim);

Json reconstruct_json(const std::string& file, const ExactStructureSpec& spec,
                      const AlgebraPresentation& pres, const IGReport* ig,
                      const CotiltingResult* cotilting);
std::string reconstruct_text(const ExactStructureSpec& spec,
                             const AlgebraPresentation& pres, const IGReport* ig,
                             const CotiltingResult* cotilting);

/// Dims and action matrices of a representation.
Json rep_json(const Rep& m);

Json k0_json(const std::string& file, const ExactStructureSpec& spec,
             const GrothendieckReport& rep, const ExArReport& samples);
std::string k0_text(const ExactStructureSpec& spec, const GrothendieckReport& rep,
                    const ExArReport& samples);

/// DOT rendering of the translation quiver; byte-identical across runs.
std::string dot_output(const TranslationQuiver& tq, const ExactStructureSpec& spec);

std::string verdict_str(Verdict v);

}  // namespace qex
