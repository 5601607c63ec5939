#include "chainsel/screening.hpp"

namespace chainsel {

bool satisfies(const Constraint& constraint, const CriterionSpec& criterion, double encoded,
               double tolerance_pct) {
    if (constraint.mode == ConstraintMode::Undesirable) return encoded == 0.0;
    if (!constraint.threshold) return encoded == 1.0;

    const auto& threshold = *constraint.threshold;
    double bound = 0.0;
    double slack = 0.0;
    if (const auto* value = std::get_if<double>(&threshold.bound)) {
        bound = *value;
        if (criterion.is_percent()) slack = tolerance_pct / 100.0;
    } else {
        bound = *criterion.ordinal_scale->code_of(std::get<std::string>(threshold.bound));
    }
    return threshold.relation == ThresholdRelation::AtLeast ? encoded >= bound - slack
                                                            : encoded <= bound + slack;
}

ScreeningResult screen(const KnowledgeBase& kb, const UserRequirements& requirements) {
    ScreeningResult result;
    for (const auto& alternative : kb.alternatives()) {
        DisqualificationReport report{alternative.id, {}};
        for (const auto& constraint : requirements.constraints) {
            const auto& criterion = kb.criterion(constraint.criterion_id);
            const double actual = kb.encoded(alternative, criterion);
            if (!satisfies(constraint, criterion, actual, requirements.tolerance_pct)) {
                report.violations.push_back({criterion.id, constraint, actual});
            }
        }
        if (report.violations.empty()) {
            result.qualified.push_back(alternative);
        } else {
            result.reports.push_back(std::move(report));
        }
    }
    return result;
}

namespace {

std::string describe(const Violation& v, const KnowledgeBase& kb) {
    const auto& criterion = kb.criterion(v.criterion_id);
    const auto& c = v.constraint;
    if (c.mode == ConstraintMode::Undesirable) return criterion.label + " is undesirable but present";
    if (!c.threshold) return criterion.label + " is required but absent";
    const char* op = c.threshold->relation == ThresholdRelation::AtLeast ? ">=" : "<=";
    std::string bound;
    if (const auto* value = std::get_if<double>(&c.threshold->bound)) {
        bound = nlohmann::json(*value).dump();
    } else {
        bound = std::get<std::string>(c.threshold->bound);
    }
    return criterion.label + " " + nlohmann::json(v.actual).dump() + " fails " + op + " " + bound;
}

}  // namespace

nlohmann::ordered_json to_json(const DisqualificationReport& report, const KnowledgeBase& kb) {
    nlohmann::ordered_json out;
    out["alternative"] = report.alternative_id;
    out["label"] = kb.alternative(report.alternative_id).label;
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"criterion", v.criterion_id},
                              {"constraint", to_json(v.constraint)},
                              {"actual", v.actual},
                              {"reason", describe(v, kb)}});
    }
    out["violations"] = std::move(violations);
    return out;
}

}  // namespace chainsel
