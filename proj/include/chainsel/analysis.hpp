#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chainsel/elicitation.hpp"
#include "chainsel/kb.hpp"
#include "chainsel/mcdm.hpp"

namespace chainsel {

struct EntropyWeights {
    std::vector<std::string> criteria;
    std::vector<double> weights;    // sums to 1
    std::vector<double> entropies;  // each in [0, 1]
};

/// Shannon-entropy objective weights over the columns of a decision matrix.
/// Constant columns carry no information and get weight 0.
EntropyWeights entropy_weights(const DecisionMatrix& matrix);
EntropyWeights entropy_weights(const DenseMatrix& values, std::vector<std::string> criteria);

/// Multiplicative combination, renormalised: w'_j = u_j e_j / sum(u_k e_k).
WeightVector combine_weights(const WeightVector& user, const EntropyWeights& entropy);

/// Range of one raw preference value (0..4, continuous) over which the
/// top-ranked alternative stays the same.
struct StabilityInterval {
    std::string criterion_id;
    double p_low = 0.0;
    double p_high = 0.0;
    double current = 0.0;
    std::string winner;
    double resolution = 0.0;
};

constexpr double kPreferenceScaleMax = 4.0;

/// Walks the grid current +/- k * resolution (clipped to [0, 4]) outwards
/// from the current preference and stops at the first probe whose winner
/// differs. Winner regions need not be contiguous; only the block around
/// the current value is reported.
StabilityInterval weight_stability_interval(const KnowledgeBase& kb,
                                            const UserRequirements& requirements,
                                            std::string_view criterion_id,
                                            double resolution = 0.05);

/// Unique winner for an explicit raw preference vector, if any.
std::optional<std::string> winner_for_preferences(const KnowledgeBase& kb,
                                                  const UserRequirements& requirements,
                                                  std::span<const double> raw_preferences);

struct SetPreference {
    std::string criterion_id;
    Likert level = Likert::Indifferent;
};
struct SetConstraint {
    Constraint constraint;
};
struct RemoveConstraint {
    std::string criterion_id;
};
struct SetTolerance {
    double tolerance_pct = 0.5;
};
using RequirementEdit = std::variant<SetPreference, SetConstraint, RemoveConstraint, SetTolerance>;

/// Textual edits used on the command line:
///   pref:<criterion>=<likert>     require:<criterion>
///   require:<criterion>>=<x>      require:<criterion><=<x>
///   avoid:<criterion>             drop:<criterion>
///   tolerance=<percentage points>
RequirementEdit parse_edit(std::string_view text);
RequirementEdit edit_from_json(const nlohmann::json& node);

UserRequirements apply_edits(const KnowledgeBase& kb, UserRequirements requirements,
                             std::span<const RequirementEdit> edits);

/// Re-ranks an edited copy of the requirements. A "no active criteria"
/// outcome is returned as a structured result instead of an error.
RankingResult what_if(const KnowledgeBase& kb, const UserRequirements& requirements,
                      std::span<const RequirementEdit> edits, RankOptions options = {});

}  // namespace chainsel
