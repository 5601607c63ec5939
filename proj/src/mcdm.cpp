#include "chainsel/mcdm.hpp"

#include <algorithm>
#include <cmath>

#include "chainsel/error.hpp"

namespace chainsel {

DecisionMatrix::DecisionMatrix(std::vector<std::string> alternatives,
                               std::vector<CriterionColumn> criteria,
                               DenseMatrix values)
    : alternatives_(std::move(alternatives)),
      criteria_(std::move(criteria)),
      values_(std::move(values)) {
    if (alternatives_.empty()) throw Error(ErrorCode::Validation, "decision matrix needs at least one alternative");
    if (criteria_.empty()) throw Error(ErrorCode::NoActiveCriteria, "no active criteria");
    if (values_.rows() != alternatives_.size() || values_.cols() != criteria_.size()) {
        throw Error(ErrorCode::Validation, "decision matrix dimensions do not match its labels");
    }
    for (const auto& c : criteria_) {
        if (!(c.weight > 0.0) || !std::isfinite(c.weight)) {
            throw Error(ErrorCode::Validation, "criterion '" + c.id + "' must carry a positive weight");
        }
    }
}

std::vector<double> DecisionMatrix::weights() const {
    std::vector<double> out;
    for (const auto& c : criteria_) out.push_back(c.weight);
    return out;
}

std::vector<Direction> DecisionMatrix::directions() const {
    std::vector<Direction> out;
    for (const auto& c : criteria_) out.push_back(c.direction);
    return out;
}

DecisionMatrix build_matrix(const KnowledgeBase& kb,
                            std::span<const AlternativeProfile> qualified,
                            const WeightVector& weights) {
    if (qualified.empty()) throw Error(ErrorCode::Validation, "no qualified alternative to rank");

    std::vector<CriterionColumn> columns;
    std::vector<const CriterionSpec*> specs;
    for (const auto& criterion : kb.criteria()) {
        const double w = weights.weight(criterion.id);
        if (w > 0.0) {
            columns.push_back({criterion.id, criterion.direction, w});
            specs.push_back(&criterion);
        }
    }
    if (columns.empty()) throw Error(ErrorCode::NoActiveCriteria, "no active criteria");

    std::vector<std::string> rows;
    DenseMatrix values(qualified.size(), columns.size());
    for (std::size_t i = 0; i < qualified.size(); ++i) {
        rows.push_back(qualified[i].id);
        for (std::size_t j = 0; j < specs.size(); ++j) {
            values(i, j) = numeric_encode(qualified[i].value_of(specs[j]->id), *specs[j]);
        }
    }
    return DecisionMatrix(std::move(rows), std::move(columns), std::move(values));
}

DenseMatrix normalize(const DecisionMatrix& matrix) {
    const auto& x = matrix.values();
    DenseMatrix r(x.rows(), x.cols());
    for (std::size_t j = 0; j < x.cols(); ++j) {
        double sum_sq = 0.0;
        for (std::size_t i = 0; i < x.rows(); ++i) sum_sq += x(i, j) * x(i, j);
        const double norm = std::sqrt(sum_sq);
        if (norm == 0.0) continue;
        for (std::size_t i = 0; i < x.rows(); ++i) r(i, j) = x(i, j) / norm;
    }
    return r;
}

DenseMatrix normalize_and_weight(const DecisionMatrix& matrix) {
    DenseMatrix v = normalize(matrix);
    const auto& criteria = matrix.criteria();
    for (std::size_t i = 0; i < v.rows(); ++i) {
        for (std::size_t j = 0; j < v.cols(); ++j) v(i, j) *= criteria[j].weight;
    }
    return v;
}

IdealSolutions ideal_solutions(const DenseMatrix& weighted, std::span<const Direction> directions) {
    if (directions.size() != weighted.cols()) {
        throw Error(ErrorCode::Validation, "one direction per column is required");
    }
    IdealSolutions ideal{std::vector<double>(weighted.cols()), std::vector<double>(weighted.cols())};
    if (weighted.rows() == 0) return ideal;
    for (std::size_t j = 0; j < weighted.cols(); ++j) {
        double lo = weighted(0, j);
        double hi = weighted(0, j);
        for (std::size_t i = 1; i < weighted.rows(); ++i) {
            lo = std::min(lo, weighted(i, j));
            hi = std::max(hi, weighted(i, j));
        }
        const bool benefit = directions[j] == Direction::Benefit;
        ideal.positive[j] = benefit ? hi : lo;
        ideal.negative[j] = benefit ? lo : hi;
    }
    return ideal;
}

Separations separation_measures(const DenseMatrix& weighted, const IdealSolutions& ideal) {
    if (ideal.positive.size() != weighted.cols() || ideal.negative.size() != weighted.cols()) {
        throw Error(ErrorCode::Validation, "ideal solutions do not match the matrix width");
    }
    Separations s;
    for (std::size_t i = 0; i < weighted.rows(); ++i) {
        double plus = 0.0;
        double minus = 0.0;
        for (std::size_t j = 0; j < weighted.cols(); ++j) {
            const double dp = weighted(i, j) - ideal.positive[j];
            const double dm = weighted(i, j) - ideal.negative[j];
            plus += dp * dp;
            minus += dm * dm;
        }
        s.to_positive.push_back(std::sqrt(plus));
        s.to_negative.push_back(std::sqrt(minus));
    }
    return s;
}

std::vector<double> closeness_scores(const Separations& separations) {
    if (separations.to_positive.size() != separations.to_negative.size()) {
        throw Error(ErrorCode::Validation, "separation vectors are not aligned");
    }
    std::vector<double> scores;
    for (std::size_t i = 0; i < separations.to_positive.size(); ++i) {
        const double plus = separations.to_positive[i];
        const double minus = separations.to_negative[i];
        const double total = plus + minus;
        scores.push_back(total == 0.0 ? 1.0 : minus / total);
    }
    return scores;
}

TopsisTrace topsis(const DecisionMatrix& matrix) {
    TopsisTrace t;
    t.normalized = normalize(matrix);
    t.weighted = t.normalized;
    const auto& criteria = matrix.criteria();
    for (std::size_t i = 0; i < t.weighted.rows(); ++i) {
        for (std::size_t j = 0; j < t.weighted.cols(); ++j) t.weighted(i, j) *= criteria[j].weight;
    }
    const auto directions = matrix.directions();
    t.ideal = ideal_solutions(t.weighted, directions);
    t.separations = separation_measures(t.weighted, t.ideal);
    t.scores = closeness_scores(t.separations);
    return t;
}

std::string_view to_string(RankingStatus status) {
    switch (status) {
        case RankingStatus::Ranked: return "ranked";
        case RankingStatus::Uncontested: return "uncontested";
        case RankingStatus::NoViableAlternative: return "no_viable_alternative";
        case RankingStatus::NoActiveCriteria: return "no_active_criteria";
    }
    return "";
}

std::optional<double> RankingResult::score_of(std::string_view alternative_id) const {
    for (const auto& r : ordering) {
        if (r.alternative_id == alternative_id) return r.score;
    }
    return std::nullopt;
}

const std::string* RankingResult::winner() const {
    return ordering.empty() ? nullptr : &ordering.front().alternative_id;
}

RankingResult rank_with_weights(const KnowledgeBase& kb, const UserRequirements& requirements,
                                const WeightVector& weights, RankOptions options) {
    auto screened = screen(kb, requirements);

    RankingResult result;
    result.kb_version = kb.version();
    result.kb_updated_at = kb.updated_at();
    result.disqualified = std::move(screened.reports);
    result.weights = weights;

    if (screened.qualified.empty()) {
        result.status = RankingStatus::NoViableAlternative;
        result.message = "no viable alternative: every alternative violates a hard constraint";
        return result;
    }

    // Fails with "no active criteria" even when a single alternative survives.
    auto matrix = build_matrix(kb, screened.qualified, weights);

    if (screened.qualified.size() == 1) {
        result.status = RankingStatus::Uncontested;
        result.ordering.push_back({screened.qualified.front().id, 1.0});
        result.matrix = std::move(matrix);
        return result;
    }

    auto trace = topsis(matrix);
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        result.ordering.push_back({matrix.alternatives()[i], trace.scores[i]});
    }
    std::stable_sort(result.ordering.begin(), result.ordering.end(),
                     [](const RankedAlternative& a, const RankedAlternative& b) { return a.score > b.score; });
    result.status = RankingStatus::Ranked;
    result.matrix = std::move(matrix);
    if (options.trace) result.trace = std::move(trace);
    return result;
}

RankingResult rank_alternatives(const KnowledgeBase& kb, const UserRequirements& requirements,
                                RankOptions options) {
    validate_requirements(requirements, kb);
    return rank_with_weights(kb, requirements, derive_weights(requirements), options);
}

}  // namespace chainsel
