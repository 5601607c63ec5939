#pragma once

#include <string>

#include "chainsel/analysis.hpp"
#include "chainsel/kb.hpp"
#include "chainsel/mcdm.hpp"
#include "json.hpp"

namespace chainsel {

/// Eight decimals.
std::string format_score(double score);

nlohmann::ordered_json to_json(const RankingResult& result, const KnowledgeBase& kb);
nlohmann::ordered_json to_json(const StabilityInterval& interval);
nlohmann::ordered_json to_json(const EntropyWeights& weights);

/// Criterion specs plus their grouping by quality category.
nlohmann::ordered_json criteria_document(const KnowledgeBase& kb);
/// Profiles with an explicit provenance on every numeric cell.
nlohmann::ordered_json alternatives_document(const KnowledgeBase& kb);

/// Machine-readable body shared by the CLI and the HTTP service.
std::string render_json(const nlohmann::ordered_json& document);

std::string render_table(const RankingResult& result, const KnowledgeBase& kb);
std::string render_table(const StabilityInterval& interval, const KnowledgeBase& kb);
std::string render_kb_summary(const KnowledgeBase& kb);

}  // namespace chainsel
