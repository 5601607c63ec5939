#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chainsel/kb.hpp"
#include "json.hpp"

namespace chainsel {

/// Five-level desirability scale, valued 4 down to 0.
enum class Likert {
    ExtremelyDesirable = 4,
    QuiteDesirable = 3,
    Desirable = 2,
    WeaklyDesirable = 1,
    Indifferent = 0,
};

inline int preference_value(Likert level) { return static_cast<int>(level); }
std::string_view to_string(Likert level);
std::string_view display_label(Likert level);
Likert parse_likert(std::string_view label);

enum class ConstraintMode { Required, Undesirable };
enum class ThresholdRelation { AtLeast, AtMost };

std::string_view to_string(ConstraintMode mode);
std::string_view to_string(ThresholdRelation relation);

/// A number for numeric criteria or a level label for ordinal ones.
struct Threshold {
    std::variant<double, std::string> bound;
    ThresholdRelation relation = ThresholdRelation::AtLeast;

    bool operator==(const Threshold&) const = default;
};

struct Constraint {
    std::string criterion_id;
    ConstraintMode mode = ConstraintMode::Required;
    std::optional<Threshold> threshold;

    bool operator==(const Constraint&) const = default;
};

struct UserRequirements {
    /// One entry per knowledge-base criterion, in knowledge-base order.
    std::vector<std::pair<std::string, Likert>> preferences;
    std::vector<Constraint> constraints;
    /// Slack on percent-criterion thresholds, in percentage points.
    double tolerance_pct = 0.5;

    Likert preference(std::string_view criterion_id) const;
    const Constraint* constraint_for(std::string_view criterion_id) const;

    bool operator==(const UserRequirements&) const = default;
};

struct WeightVector {
    std::vector<std::string> criteria;
    std::vector<double> weights;

    double weight(std::string_view criterion_id) const;

    bool operator==(const WeightVector&) const = default;
};

/// Defaults unmentioned criteria to indifferent and validates everything
/// against the knowledge base.
UserRequirements make_requirements(const KnowledgeBase& kb,
                                   const std::map<std::string, Likert>& preferences,
                                   std::vector<Constraint> constraints,
                                   double tolerance_pct = 0.5);

void validate_requirements(const UserRequirements& requirements, const KnowledgeBase& kb);

/// w_n = p_n / sum(p).
WeightVector derive_weights(const UserRequirements& requirements);

/// Same rule over arbitrary non-negative preference values.
WeightVector normalize_preferences(std::vector<std::string> criteria, std::span<const double> raw);

UserRequirements requirements_from_json(const nlohmann::json& document, const KnowledgeBase& kb);
UserRequirements parse_requirements(std::string_view document, const KnowledgeBase& kb);
nlohmann::ordered_json to_json(const UserRequirements& requirements);
nlohmann::ordered_json to_json(const Constraint& constraint);
nlohmann::ordered_json to_json(const WeightVector& weights);
Constraint constraint_from_json(const nlohmann::json& node);

/// Preferences and constraints of the Big-Box supply-chain case study.
UserRequirements bigbox_requirements(const KnowledgeBase& kb);
std::string bigbox_requirements_document();

}  // namespace chainsel
