#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chainsel/elicitation.hpp"
#include "chainsel/kb.hpp"
#include "chainsel/screening.hpp"

namespace chainsel {

/// Row-major dense matrix of doubles.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
    std::span<const double> row(std::size_t i) const { return {cells_.data() + i * cols_, cols_}; }

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> cells_;
};

struct CriterionColumn {
    std::string id;
    Direction direction = Direction::Benefit;
    double weight = 0.0;

    bool operator==(const CriterionColumn&) const = default;
};

/// Alternatives as rows, positively weighted criteria as columns.
class DecisionMatrix {
public:
    DecisionMatrix(std::vector<std::string> alternatives,
                   std::vector<CriterionColumn> criteria,
                   DenseMatrix values);

    const std::vector<std::string>& alternatives() const { return alternatives_; }
    const std::vector<CriterionColumn>& criteria() const { return criteria_; }
    const DenseMatrix& values() const { return values_; }
    std::size_t rows() const { return values_.rows(); }
    std::size_t cols() const { return values_.cols(); }

    std::vector<double> weights() const;
    std::vector<Direction> directions() const;

    bool operator==(const DecisionMatrix&) const = default;

private:
    std::vector<std::string> alternatives_;
    std::vector<CriterionColumn> criteria_;
    DenseMatrix values_;
};

struct IdealSolutions {
    std::vector<double> positive;
    std::vector<double> negative;
};

struct Separations {
    std::vector<double> to_positive;
    std::vector<double> to_negative;
};

struct TopsisTrace {
    DenseMatrix normalized;  // r
    DenseMatrix weighted;    // v
    IdealSolutions ideal;
    Separations separations;
    std::vector<double> scores;
};

/// Columns with zero weight are dropped; cells are encoded knowledge-base
/// values. Weights are carried as given.
DecisionMatrix build_matrix(const KnowledgeBase& kb,
                            std::span<const AlternativeProfile> qualified,
                            const WeightVector& weights);

/// Vector normalisation per column; an all-zero column stays zero.
DenseMatrix normalize(const DecisionMatrix& matrix);
DenseMatrix normalize_and_weight(const DecisionMatrix& matrix);

/// Benefit columns take their best at the maximum, cost columns at the minimum.
IdealSolutions ideal_solutions(const DenseMatrix& weighted, std::span<const Direction> directions);

Separations separation_measures(const DenseMatrix& weighted, const IdealSolutions& ideal);

/// C = S- / (S+ + S-), with C = 1 when both distances vanish.
std::vector<double> closeness_scores(const Separations& separations);

TopsisTrace topsis(const DecisionMatrix& matrix);

enum class RankingStatus { Ranked, Uncontested, NoViableAlternative, NoActiveCriteria };
std::string_view to_string(RankingStatus status);

struct RankedAlternative {
    std::string alternative_id;
    double score = 0.0;

    bool operator==(const RankedAlternative&) const = default;
};

struct RankingResult {
    RankingStatus status = RankingStatus::Ranked;
    std::string kb_version;
    std::string kb_updated_at;
    std::vector<RankedAlternative> ordering;  // descending score, ties in knowledge-base order
    std::vector<DisqualificationReport> disqualified;
    std::optional<WeightVector> weights;
    std::optional<DecisionMatrix> matrix;
    std::optional<TopsisTrace> trace;
    std::string message;

    std::optional<double> score_of(std::string_view alternative_id) const;
    const std::string* winner() const;
};

struct RankOptions {
    bool trace = false;
};

/// screen, derive weights, build the matrix, run TOPSIS, order.
RankingResult rank_alternatives(const KnowledgeBase& kb, const UserRequirements& requirements,
                                RankOptions options = {});

/// Same pipeline with an explicit weight vector in place of derived weights.
RankingResult rank_with_weights(const KnowledgeBase& kb, const UserRequirements& requirements,
                                const WeightVector& weights, RankOptions options = {});

}  // namespace chainsel
