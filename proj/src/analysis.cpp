#include "chainsel/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chainsel/error.hpp"

namespace chainsel {

namespace {

// Scores closer than this are treated as a tie for first place.
constexpr double kTieTolerance = 1e-12;

bool has_unique_winner(const RankingResult& result) {
    if (result.ordering.empty()) return false;
    if (result.ordering.size() == 1) return true;
    return result.ordering[0].score - result.ordering[1].score > kTieTolerance;
}

}  // namespace

EntropyWeights entropy_weights(const DenseMatrix& values, std::vector<std::string> criteria) {
    const std::size_t m = values.rows();
    const std::size_t n = values.cols();
    if (criteria.size() != n) throw Error(ErrorCode::Validation, "one criterion id per column is required");
    if (m < 2) throw Error(ErrorCode::Validation, "entropy weights need at least two alternatives");

    EntropyWeights out{std::move(criteria), std::vector<double>(n, 0.0), std::vector<double>(n, 1.0)};
    const double k = 1.0 / std::log(static_cast<double>(m));
    std::vector<double> divergence(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        bool constant = true;
        for (std::size_t i = 0; i < m; ++i) {
            const double x = values(i, j);
            if (!(x >= 0.0) || !std::isfinite(x)) {
                throw Error(ErrorCode::Validation,
                            "entropy weights need non-negative values (column '" + out.criteria[j] + "')");
            }
            sum += x;
            constant = constant && x == values(0, j);
        }
        if (!(sum > 0.0)) {
            throw Error(ErrorCode::Validation, "column '" + out.criteria[j] + "' sums to zero");
        }
        if (constant) continue;  // e_j = 1
        double h = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double p = values(i, j) / sum;
            if (p > 0.0) h -= p * std::log(p);
        }
        const double e = std::clamp(k * h, 0.0, 1.0);
        out.entropies[j] = e;
        divergence[j] = 1.0 - e;
    }
    const double total = std::accumulate(divergence.begin(), divergence.end(), 0.0);
    if (!(total > 0.0)) throw Error(ErrorCode::Degenerate, "entropy weights undefined: every column is constant");
    for (std::size_t j = 0; j < n; ++j) out.weights[j] = divergence[j] / total;
    return out;
}

EntropyWeights entropy_weights(const DecisionMatrix& matrix) {
    std::vector<std::string> ids;
    for (const auto& c : matrix.criteria()) ids.push_back(c.id);
    return entropy_weights(matrix.values(), std::move(ids));
}

WeightVector combine_weights(const WeightVector& user, const EntropyWeights& entropy) {
    if (user.criteria.size() != entropy.criteria.size()) {
        throw Error(ErrorCode::Validation, "user and entropy weights cover different criteria");
    }
    WeightVector out{user.criteria, std::vector<double>(user.criteria.size(), 0.0)};
    double total = 0.0;
    for (std::size_t j = 0; j < user.criteria.size(); ++j) {
        auto it = std::find(entropy.criteria.begin(), entropy.criteria.end(), user.criteria[j]);
        if (it == entropy.criteria.end()) {
            throw Error(ErrorCode::Validation, "no entropy weight for '" + user.criteria[j] + "'");
        }
        out.weights[j] = user.weights[j] * entropy.weights[it - entropy.criteria.begin()];
        total += out.weights[j];
    }
    if (!(total > 0.0)) throw Error(ErrorCode::Degenerate, "combined weights degenerate");
    for (double& w : out.weights) w /= total;
    return out;
}

std::optional<std::string> winner_for_preferences(const KnowledgeBase& kb,
                                                  const UserRequirements& requirements,
                                                  std::span<const double> raw_preferences) {
    std::vector<std::string> ids;
    for (const auto& [id, level] : requirements.preferences) ids.push_back(id);
    try {
        auto weights = normalize_preferences(std::move(ids), raw_preferences);
        auto result = rank_with_weights(kb, requirements, weights);
        if (!has_unique_winner(result)) return std::nullopt;
        return *result.winner();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NoActiveCriteria) return std::nullopt;
        throw;
    }
}

StabilityInterval weight_stability_interval(const KnowledgeBase& kb,
                                            const UserRequirements& requirements,
                                            std::string_view criterion_id,
                                            double resolution) {
    if (!(resolution > 0.0) || !std::isfinite(resolution)) {
        throw Error(ErrorCode::Validation, "resolution must be a positive number");
    }
    validate_requirements(requirements, kb);
    const auto& criterion = kb.criterion(criterion_id);

    const auto baseline = rank_alternatives(kb, requirements);
    if (baseline.status != RankingStatus::Ranked) {
        throw Error(ErrorCode::Validation, "sensitivity needs at least two qualified alternatives");
    }
    if (!has_unique_winner(baseline)) {
        throw Error(ErrorCode::BaselineAmbiguous, "baseline ambiguous: several alternatives tie for first place");
    }

    std::vector<double> raw;
    std::size_t target = 0;
    for (std::size_t j = 0; j < requirements.preferences.size(); ++j) {
        raw.push_back(preference_value(requirements.preferences[j].second));
        if (requirements.preferences[j].first == criterion.id) target = j;
    }

    StabilityInterval out;
    out.criterion_id = criterion.id;
    out.current = raw[target];
    out.winner = *baseline.winner();
    out.resolution = resolution;

    // current +/- k * resolution, rounded so grid points print cleanly
    auto grid = [&](long k) { return std::round((out.current + k * resolution) * 1e12) / 1e12; };
    auto same_winner = [&](double p) {
        auto probe = raw;
        probe[target] = p;
        auto w = winner_for_preferences(kb, requirements, probe);
        return w && *w == out.winner;
    };

    out.p_high = out.current;
    for (long k = 1; out.p_high < kPreferenceScaleMax; ++k) {
        const double p = std::min(grid(k), kPreferenceScaleMax);
        if (!same_winner(p)) break;
        out.p_high = p;
    }
    out.p_low = out.current;
    for (long k = 1; out.p_low > 0.0; ++k) {
        const double p = std::max(grid(-k), 0.0);
        if (!same_winner(p)) break;
        out.p_low = p;
    }
    return out;
}

// ---------------------------------------------------------------------------
// What-if

namespace {

[[noreturn]] void bad_edit(std::string_view text, const std::string& why) {
    throw Error(ErrorCode::Validation, "invalid edit '" + std::string(text) + "': " + why);
}

Threshold parse_threshold_bound(std::string_view raw, ThresholdRelation relation) {
    Threshold t;
    t.relation = relation;
    std::string text(raw);
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used == text.size()) {
            t.bound = value;
            return t;
        }
    } catch (const std::exception&) {
    }
    t.bound = text;
    return t;
}

}  // namespace

RequirementEdit parse_edit(std::string_view text) {
    if (text.starts_with("tolerance=")) {
        try {
            return SetTolerance{std::stod(std::string(text.substr(10)))};
        } catch (const std::exception&) {
            bad_edit(text, "tolerance must be a number");
        }
    }
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) bad_edit(text, "expected <action>:<criterion>");
    const auto action = text.substr(0, colon);
    const auto rest = text.substr(colon + 1);
    if (rest.empty()) bad_edit(text, "missing criterion");

    if (action == "pref") {
        const auto eq = rest.find('=');
        if (eq == std::string_view::npos) bad_edit(text, "expected pref:<criterion>=<level>");
        return SetPreference{std::string(rest.substr(0, eq)), parse_likert(rest.substr(eq + 1))};
    }
    if (action == "drop") return RemoveConstraint{std::string(rest)};
    if (action == "avoid") return SetConstraint{{std::string(rest), ConstraintMode::Undesirable, std::nullopt}};
    if (action == "require") {
        for (auto [op, relation] : {std::pair{">=", ThresholdRelation::AtLeast},
                                    std::pair{"<=", ThresholdRelation::AtMost}}) {
            const auto pos = rest.find(op);
            if (pos == std::string_view::npos) continue;
            if (pos + 2 >= rest.size()) bad_edit(text, "missing threshold");
            return SetConstraint{{std::string(rest.substr(0, pos)), ConstraintMode::Required,
                                  parse_threshold_bound(rest.substr(pos + 2), relation)}};
        }
        return SetConstraint{{std::string(rest), ConstraintMode::Required, std::nullopt}};
    }
    bad_edit(text, "unknown action '" + std::string(action) + "'");
}

RequirementEdit edit_from_json(const nlohmann::json& node) {
    if (node.is_string()) return parse_edit(node.get<std::string>());
    if (!node.is_object() || !node.contains("op") || !node.at("op").is_string()) {
        throw Error(ErrorCode::Validation, "edit must be an object with an 'op' field");
    }
    const auto op = node.at("op").get<std::string>();
    auto criterion = [&]() {
        if (!node.contains("criterion") || !node.at("criterion").is_string()) {
            throw Error(ErrorCode::Validation, "edit '" + op + "' needs a 'criterion'");
        }
        return node.at("criterion").get<std::string>();
    };
    if (op == "set_preference") {
        if (!node.contains("preference") || !node.at("preference").is_string()) {
            throw Error(ErrorCode::Validation, "edit 'set_preference' needs a 'preference'");
        }
        return SetPreference{criterion(), parse_likert(node.at("preference").get<std::string>())};
    }
    if (op == "set_constraint") {
        if (!node.contains("constraint")) throw Error(ErrorCode::Validation, "edit 'set_constraint' needs a 'constraint'");
        return SetConstraint{constraint_from_json(node.at("constraint"))};
    }
    if (op == "remove_constraint") return RemoveConstraint{criterion()};
    if (op == "set_tolerance") {
        if (!node.contains("tolerance_pct") || !node.at("tolerance_pct").is_number()) {
            throw Error(ErrorCode::Validation, "edit 'set_tolerance' needs a numeric 'tolerance_pct'");
        }
        return SetTolerance{node.at("tolerance_pct").get<double>()};
    }
    throw Error(ErrorCode::Validation, "unknown edit op '" + op + "'");
}

UserRequirements apply_edits(const KnowledgeBase& kb, UserRequirements requirements,
                             std::span<const RequirementEdit> edits) {
    auto known = [&](const std::string& id) {
        if (!kb.find_criterion(id)) throw Error(ErrorCode::Validation, "unknown criterion '" + id + "'");
    };
    auto erase_constraint = [&](const std::string& id) {
        std::erase_if(requirements.constraints, [&](const Constraint& c) { return c.criterion_id == id; });
    };
    for (const auto& edit : edits) {
        if (const auto* e = std::get_if<SetPreference>(&edit)) {
            known(e->criterion_id);
            for (auto& [id, level] : requirements.preferences) {
                if (id == e->criterion_id) level = e->level;
            }
        } else if (const auto* e = std::get_if<SetConstraint>(&edit)) {
            known(e->constraint.criterion_id);
            erase_constraint(e->constraint.criterion_id);
            requirements.constraints.push_back(e->constraint);
        } else if (const auto* e = std::get_if<RemoveConstraint>(&edit)) {
            known(e->criterion_id);
            erase_constraint(e->criterion_id);
        } else if (const auto* e = std::get_if<SetTolerance>(&edit)) {
            requirements.tolerance_pct = e->tolerance_pct;
        }
    }
    validate_requirements(requirements, kb);
    return requirements;
}

RankingResult what_if(const KnowledgeBase& kb, const UserRequirements& requirements,
                      std::span<const RequirementEdit> edits, RankOptions options) {
    const auto edited = apply_edits(kb, requirements, edits);
    try {
        return rank_alternatives(kb, edited, options);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NoActiveCriteria) throw;
        RankingResult result;
        result.status = RankingStatus::NoActiveCriteria;
        result.kb_version = kb.version();
        result.kb_updated_at = kb.updated_at();
        result.disqualified = screen(kb, edited).reports;
        result.message = e.what();
        return result;
    }
}

}  // namespace chainsel
