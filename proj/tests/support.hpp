#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "chainsel/elicitation.hpp"
#include "chainsel/mcdm.hpp"

namespace testing_support {

struct RandomInstance {
    std::vector<std::vector<double>> x;
    std::vector<double> weights;
    std::vector<bool> is_cost;

    chainsel::DecisionMatrix matrix() const {
        const std::size_t m = x.size();
        const std::size_t n = weights.size();
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < m; ++i) rows.push_back("a" + std::to_string(i));
        std::vector<chainsel::CriterionColumn> cols;
        for (std::size_t j = 0; j < n; ++j) {
            cols.push_back({"c" + std::to_string(j),
                            is_cost[j] ? chainsel::Direction::Cost : chainsel::Direction::Benefit,
                            weights[j]});
        }
        chainsel::DenseMatrix values(m, n);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) values(i, j) = x[i][j];
        }
        return chainsel::DecisionMatrix(std::move(rows), std::move(cols), std::move(values));
    }
};

/// m, n in [min_dim, 8]; values in [0, 1000]; mixed directions; positive weights.
inline RandomInstance random_instance(std::mt19937_64& rng, std::size_t min_dim = 1) {
    std::uniform_int_distribution<std::size_t> dim(min_dim, 8);
    std::uniform_real_distribution<double> value(0.0, 1000.0);
    std::uniform_real_distribution<double> weight(0.01, 1.0);
    std::bernoulli_distribution coin(0.5);
    RandomInstance inst;
    const std::size_t m = dim(rng);
    const std::size_t n = dim(rng);
    inst.x.assign(m, std::vector<double>(n));
    for (auto& row : inst.x) {
        for (auto& cell : row) cell = value(rng);
    }
    for (std::size_t j = 0; j < n; ++j) {
        inst.weights.push_back(weight(rng));
        inst.is_cost.push_back(coin(rng));
    }
    return inst;
}

/// Wraps an instance as a numeric-only knowledge base plus weight vector.
/// A non-empty `zero_weight_column` is appended as an extra criterion with
/// weight 0.
inline std::pair<chainsel::KnowledgeBase, chainsel::WeightVector> knowledge_base_from(
    const RandomInstance& inst, const std::vector<double>& zero_weight_column = {}) {
    using namespace chainsel;
    std::vector<CriterionSpec> criteria;
    WeightVector weights;
    const std::size_t n = inst.weights.size();
    for (std::size_t j = 0; j <= n; ++j) {
        if (j == n && zero_weight_column.empty()) break;
        const std::string id = "c" + std::to_string(j);
        const bool cost = j < n && inst.is_cost[j];
        criteria.push_back({id, id, CriterionKind::Numeric, cost ? Direction::Cost : Direction::Benefit,
                            std::nullopt, std::nullopt, IsoCategory::Efficiency});
        weights.criteria.push_back(id);
        weights.weights.push_back(j < n ? inst.weights[j] : 0.0);
    }
    std::vector<AlternativeProfile> alternatives;
    for (std::size_t i = 0; i < inst.x.size(); ++i) {
        AlternativeProfile a{"a" + std::to_string(i), "A" + std::to_string(i), "", {}};
        for (std::size_t j = 0; j < criteria.size(); ++j) {
            const double x = j < n ? inst.x[i][j] : zero_weight_column.at(i);
            a.values.emplace(criteria[j].id, ExactValue{x});
        }
        alternatives.push_back(std::move(a));
    }
    return {KnowledgeBase(std::move(criteria), std::move(alternatives), "synthetic", ""), std::move(weights)};
}

/// One random, valid constraint on a random criterion of `kb`.
inline chainsel::Constraint random_constraint(const chainsel::KnowledgeBase& kb, std::mt19937_64& rng) {
    using namespace chainsel;
    std::uniform_int_distribution<std::size_t> pick(0, kb.criteria().size() - 1);
    std::bernoulli_distribution coin(0.5);
    const auto& c = kb.criteria()[pick(rng)];
    const auto relation = coin(rng) ? ThresholdRelation::AtLeast : ThresholdRelation::AtMost;
    switch (c.kind) {
        case CriterionKind::Boolean:
            return {c.id, coin(rng) ? ConstraintMode::Required : ConstraintMode::Undesirable, std::nullopt};
        case CriterionKind::Ordinal: {
            if (coin(rng)) return {c.id, ConstraintMode::Undesirable, std::nullopt};
            const auto& levels = c.ordinal_scale->levels();
            std::uniform_int_distribution<std::size_t> lv(0, levels.size() - 1);
            return {c.id, ConstraintMode::Required, Threshold{levels[lv(rng)].label, relation}};
        }
        case CriterionKind::Numeric: {
            // thresholds drawn around the catalog values
            std::vector<double> seen;
            for (const auto& a : kb.alternatives()) seen.push_back(kb.encoded(a, c));
            std::uniform_int_distribution<std::size_t> at(0, seen.size() - 1);
            std::uniform_real_distribution<double> jitter(0.5, 1.5);
            return {c.id, ConstraintMode::Required, Threshold{seen[at(rng)] * jitter(rng), relation}};
        }
    }
    return {};
}

/// Up to `max_constraints` constraints on distinct criteria.
inline std::vector<chainsel::Constraint> random_constraints(const chainsel::KnowledgeBase& kb,
                                                            std::mt19937_64& rng,
                                                            std::size_t max_constraints = 4) {
    std::uniform_int_distribution<std::size_t> count(0, max_constraints);
    std::vector<chainsel::Constraint> out;
    const std::size_t target = count(rng);
    for (int guard = 0; out.size() < target && guard < 100; ++guard) {
        auto c = random_constraint(kb, rng);
        bool clash = false;
        for (const auto& existing : out) clash = clash || existing.criterion_id == c.criterion_id;
        if (!clash) out.push_back(std::move(c));
    }
    return out;
}

inline std::map<std::string, chainsel::Likert> random_preferences(const chainsel::KnowledgeBase& kb,
                                                                  std::mt19937_64& rng) {
    std::uniform_int_distribution<int> level(0, 4);
    std::map<std::string, chainsel::Likert> out;
    for (const auto& c : kb.criteria()) out[c.id] = static_cast<chainsel::Likert>(level(rng));
    return out;
}

}  // namespace testing_support
