#pragma once

#include <string>
#include <vector>

#include "chainsel/elicitation.hpp"
#include "chainsel/kb.hpp"

namespace chainsel {

struct Violation {
    std::string criterion_id;
    Constraint constraint;
    /// Encoded value that failed the constraint.
    double actual = 0.0;

    bool operator==(const Violation&) const = default;
};

struct DisqualificationReport {
    std::string alternative_id;
    std::vector<Violation> violations;  // never empty

    bool operator==(const DisqualificationReport&) const = default;
};

struct ScreeningResult {
    std::vector<AlternativeProfile> qualified;  // knowledge-base order
    std::vector<DisqualificationReport> reports;

    bool operator==(const ScreeningResult&) const = default;
};

/// Tests a single encoded value. `tolerance_pct` only widens thresholds on
/// criteria whose unit is "%".
bool satisfies(const Constraint& constraint, const CriterionSpec& criterion, double encoded,
               double tolerance_pct);

/// Hard-constraint filter. Every violated constraint is reported, not only
/// the first one; an empty qualified list is a valid outcome.
ScreeningResult screen(const KnowledgeBase& kb, const UserRequirements& requirements);

nlohmann::ordered_json to_json(const DisqualificationReport& report, const KnowledgeBase& kb);

}  // namespace chainsel
