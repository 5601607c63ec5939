#include "chainsel/elicitation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>

#include "chainsel/error.hpp"

namespace chainsel {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) {
    throw Error(ErrorCode::Validation, message);
}

constexpr std::array kLikertLevels{Likert::ExtremelyDesirable, Likert::QuiteDesirable,
                                   Likert::Desirable, Likert::WeaklyDesirable,
                                   Likert::Indifferent};

void validate_constraint(const Constraint& c, const CriterionSpec& criterion) {
    const std::string where = "constraint on '" + c.criterion_id + "'";
    if (c.mode == ConstraintMode::Undesirable) {
        if (c.threshold) fail(where + ": undesirable constraints take no threshold");
        if (criterion.kind == CriterionKind::Numeric) {
            fail(where + ": undesirable applies to boolean or ordinal criteria only");
        }
        return;
    }
    switch (criterion.kind) {
        case CriterionKind::Boolean:
            if (c.threshold) fail(where + ": a required boolean criterion takes no threshold");
            return;
        case CriterionKind::Numeric: {
            if (!c.threshold) fail(where + ": a required numeric criterion needs a threshold");
            const auto* value = std::get_if<double>(&c.threshold->bound);
            if (!value) fail(where + ": numeric threshold must be a number");
            if (!std::isfinite(*value)) fail(where + ": threshold must be finite");
            return;
        }
        case CriterionKind::Ordinal: {
            if (!c.threshold) fail(where + ": a required ordinal criterion needs a minimum level");
            const auto* level = std::get_if<std::string>(&c.threshold->bound);
            if (!level) fail(where + ": ordinal threshold must be a level label");
            if (!criterion.ordinal_scale->contains(*level)) {
                fail(where + ": unknown level '" + *level + "'");
            }
            return;
        }
    }
}

}  // namespace

std::string_view to_string(Likert level) {
    switch (level) {
        case Likert::ExtremelyDesirable: return "extremely_desirable";
        case Likert::QuiteDesirable: return "quite_desirable";
        case Likert::Desirable: return "desirable";
        case Likert::WeaklyDesirable: return "weakly_desirable";
        case Likert::Indifferent: return "indifferent";
    }
    return "";
}

std::string_view display_label(Likert level) {
    switch (level) {
        case Likert::ExtremelyDesirable: return "Extrêmement désirable";
        case Likert::QuiteDesirable: return "Tout à fait désirable";
        case Likert::Desirable: return "Désirable";
        case Likert::WeaklyDesirable: return "Faiblement désirable";
        case Likert::Indifferent: return "Indifférent";
    }
    return "";
}

Likert parse_likert(std::string_view label) {
    for (auto level : kLikertLevels) {
        if (to_string(level) == label || display_label(level) == label) return level;
    }
    fail("unknown preference label '" + std::string(label) + "'");
}

std::string_view to_string(ConstraintMode mode) {
    return mode == ConstraintMode::Required ? "required" : "undesirable";
}

std::string_view to_string(ThresholdRelation relation) {
    return relation == ThresholdRelation::AtLeast ? "at_least" : "at_most";
}

Likert UserRequirements::preference(std::string_view criterion_id) const {
    for (const auto& [id, level] : preferences) {
        if (id == criterion_id) return level;
    }
    return Likert::Indifferent;
}

const Constraint* UserRequirements::constraint_for(std::string_view criterion_id) const {
    for (const auto& c : constraints) {
        if (c.criterion_id == criterion_id) return &c;
    }
    return nullptr;
}

double WeightVector::weight(std::string_view criterion_id) const {
    for (std::size_t j = 0; j < criteria.size(); ++j) {
        if (criteria[j] == criterion_id) return weights[j];
    }
    throw Error(ErrorCode::NotFound, "unknown criterion '" + std::string(criterion_id) + "'");
}

void validate_requirements(const UserRequirements& requirements, const KnowledgeBase& kb) {
    if (requirements.preferences.size() != kb.criteria().size()) {
        fail("preferences must cover every knowledge-base criterion");
    }
    for (std::size_t j = 0; j < kb.criteria().size(); ++j) {
        if (requirements.preferences[j].first != kb.criteria()[j].id) {
            fail("preferences must follow knowledge-base criterion order");
        }
    }
    if (!(requirements.tolerance_pct >= 0.0) || !std::isfinite(requirements.tolerance_pct)) {
        fail("tolerance_pct must be a finite non-negative number");
    }
    std::set<std::string> constrained;
    for (const auto& c : requirements.constraints) {
        const auto* criterion = kb.find_criterion(c.criterion_id);
        if (!criterion) fail("unknown criterion '" + c.criterion_id + "'");
        if (!constrained.insert(c.criterion_id).second) {
            fail("duplicate constraint on '" + c.criterion_id + "'");
        }
        validate_constraint(c, *criterion);
    }
}

UserRequirements make_requirements(const KnowledgeBase& kb,
                                   const std::map<std::string, Likert>& preferences,
                                   std::vector<Constraint> constraints,
                                   double tolerance_pct) {
    for (const auto& [id, level] : preferences) {
        if (!kb.find_criterion(id)) fail("unknown criterion '" + id + "'");
    }
    UserRequirements out;
    for (const auto& c : kb.criteria()) {
        auto it = preferences.find(c.id);
        out.preferences.emplace_back(c.id, it == preferences.end() ? Likert::Indifferent : it->second);
    }
    out.constraints = std::move(constraints);
    out.tolerance_pct = tolerance_pct;
    validate_requirements(out, kb);
    return out;
}

WeightVector normalize_preferences(std::vector<std::string> criteria, std::span<const double> raw) {
    if (criteria.size() != raw.size()) fail("preference vector length mismatch");
    for (double p : raw) {
        if (!(p >= 0.0) || !std::isfinite(p)) fail("preference values must be finite and non-negative");
    }
    const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
    if (!(total > 0.0)) {
        throw Error(ErrorCode::NoActiveCriteria, "no active criteria: every preference is indifferent");
    }
    WeightVector out{std::move(criteria), {}};
    out.weights.reserve(raw.size());
    for (double p : raw) out.weights.push_back(p / total);
    return out;
}

WeightVector derive_weights(const UserRequirements& requirements) {
    std::vector<std::string> ids;
    std::vector<double> raw;
    for (const auto& [id, level] : requirements.preferences) {
        ids.push_back(id);
        raw.push_back(preference_value(level));
    }
    return normalize_preferences(std::move(ids), raw);
}

Constraint constraint_from_json(const json& node) {
    if (!node.is_object()) fail("constraint must be an object");
    if (!node.contains("criterion") || !node.at("criterion").is_string()) {
        fail("constraint: missing field 'criterion'");
    }
    Constraint c;
    c.criterion_id = node.at("criterion").get<std::string>();
    const std::string where = "constraint on '" + c.criterion_id + "'";
    if (!node.contains("mode") || !node.at("mode").is_string()) fail(where + ": missing field 'mode'");
    const auto mode = node.at("mode").get<std::string>();
    if (mode == "required") {
        c.mode = ConstraintMode::Required;
    } else if (mode == "undesirable") {
        c.mode = ConstraintMode::Undesirable;
    } else {
        fail(where + ": unknown mode '" + mode + "'");
    }
    if (node.contains("threshold") && !node.at("threshold").is_null()) {
        const auto& t = node.at("threshold");
        if (!t.is_object()) fail(where + ": threshold must be an object");
        Threshold threshold;
        if (t.contains("value") && t.contains("level")) {
            fail(where + ": threshold takes either 'value' or 'level'");
        } else if (t.contains("value")) {
            if (!t.at("value").is_number()) fail(where + ": threshold value must be a number");
            threshold.bound = t.at("value").get<double>();
        } else if (t.contains("level")) {
            if (!t.at("level").is_string()) fail(where + ": threshold level must be a string");
            threshold.bound = t.at("level").get<std::string>();
        } else {
            fail(where + ": threshold needs 'value' or 'level'");
        }
        const auto relation = t.value("relation", std::string("at_least"));
        if (relation == "at_least") {
            threshold.relation = ThresholdRelation::AtLeast;
        } else if (relation == "at_most") {
            threshold.relation = ThresholdRelation::AtMost;
        } else {
            fail(where + ": unknown relation '" + relation + "'");
        }
        c.threshold = std::move(threshold);
    }
    return c;
}

UserRequirements requirements_from_json(const json& document, const KnowledgeBase& kb) {
    if (document.is_null()) return make_requirements(kb, {}, {});
    if (!document.is_object()) fail("requirements document must be an object");

    std::map<std::string, Likert> preferences;
    if (document.contains("preferences")) {
        const auto& prefs = document.at("preferences");
        if (!prefs.is_object()) fail("'preferences' must be an object");
        for (const auto& [id, label] : prefs.items()) {
            if (!kb.find_criterion(id)) fail("unknown criterion '" + id + "'");
            if (!label.is_string()) fail("preference for '" + id + "' must be a label");
            preferences[id] = parse_likert(label.get<std::string>());
        }
    }

    std::vector<Constraint> constraints;
    if (document.contains("constraints")) {
        const auto& list = document.at("constraints");
        if (!list.is_array()) fail("'constraints' must be a list");
        for (const auto& node : list) constraints.push_back(constraint_from_json(node));
    }

    double tolerance = 0.5;
    if (document.contains("tolerance_pct")) {
        if (!document.at("tolerance_pct").is_number()) fail("'tolerance_pct' must be a number");
        tolerance = document.at("tolerance_pct").get<double>();
    }
    return make_requirements(kb, preferences, std::move(constraints), tolerance);
}

UserRequirements parse_requirements(std::string_view document, const KnowledgeBase& kb) {
    json parsed;
    try {
        parsed = json::parse(document.empty() ? std::string_view("{}") : document);
    } catch (const json::parse_error& e) {
        fail(std::string("requirements are not a valid document: ") + e.what());
    }
    return requirements_from_json(parsed, kb);
}

ordered_json to_json(const Constraint& c) {
    ordered_json out;
    out["criterion"] = c.criterion_id;
    out["mode"] = to_string(c.mode);
    if (c.threshold) {
        ordered_json t;
        if (const auto* value = std::get_if<double>(&c.threshold->bound)) {
            t["value"] = *value;
        } else {
            t["level"] = std::get<std::string>(c.threshold->bound);
        }
        t["relation"] = to_string(c.threshold->relation);
        out["threshold"] = std::move(t);
    }
    return out;
}

ordered_json to_json(const UserRequirements& requirements) {
    ordered_json out;
    ordered_json prefs = ordered_json::object();
    for (const auto& [id, level] : requirements.preferences) prefs[id] = to_string(level);
    out["preferences"] = std::move(prefs);
    ordered_json constraints = ordered_json::array();
    for (const auto& c : requirements.constraints) constraints.push_back(to_json(c));
    out["constraints"] = std::move(constraints);
    out["tolerance_pct"] = requirements.tolerance_pct;
    return out;
}

ordered_json to_json(const WeightVector& weights) {
    ordered_json out = ordered_json::object();
    for (std::size_t j = 0; j < weights.criteria.size(); ++j) out[weights.criteria[j]] = weights.weights[j];
    return out;
}

std::string bigbox_requirements_document() {
    return R"({
  "preferences": {
    "latency": "weakly_desirable",
    "energy_efficient": "quite_desirable",
    "bft_tolerance": "desirable",
    "learning_curve": "desirable"
  },
  "constraints": [
    {"criterion": "bft_tolerance", "mode": "required", "threshold": {"value": 0.3333, "relation": "at_least"}},
    {"criterion": "smart_contracts", "mode": "required"},
    {"criterion": "storage_element", "mode": "required", "threshold": {"level": "Avancé", "relation": "at_least"}}
  ],
  "tolerance_pct": 0.5
}
)";
}

UserRequirements bigbox_requirements(const KnowledgeBase& kb) {
    return parse_requirements(bigbox_requirements_document(), kb);
}

}  // namespace chainsel
