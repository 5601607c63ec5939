#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace chainsel {

enum class CriterionKind { Boolean, Numeric, Ordinal };
enum class Direction { Benefit, Cost };
enum class IsoCategory { Security, Efficiency, Reliability, Functionality, Usability };
enum class Provenance { Catalog, BenchmarkOverride };
enum class BoundRelation { Below, Above };

std::string_view to_string(CriterionKind kind);
std::string_view to_string(Direction direction);
std::string_view to_string(IsoCategory category);
std::string_view to_string(Provenance provenance);
std::string_view to_string(BoundRelation relation);

struct OrdinalLevel {
    std::string label;
    double code = 0.0;

    bool operator==(const OrdinalLevel&) const = default;
};

/// Ordered levels with strictly increasing codes in [0, 1].
class OrdinalScale {
public:
    OrdinalScale() = default;
    explicit OrdinalScale(std::vector<OrdinalLevel> levels);

    const std::vector<OrdinalLevel>& levels() const { return levels_; }
    std::optional<double> code_of(std::string_view label) const;
    bool contains(std::string_view label) const { return code_of(label).has_value(); }

    bool operator==(const OrdinalScale&) const = default;

private:
    std::vector<OrdinalLevel> levels_;
};

struct CriterionSpec {
    std::string id;
    std::string label;
    CriterionKind kind = CriterionKind::Numeric;
    Direction direction = Direction::Benefit;
    std::optional<std::string> unit;
    std::optional<OrdinalScale> ordinal_scale;
    IsoCategory iso_category = IsoCategory::Functionality;

    bool is_percent() const { return unit && *unit == "%"; }

    bool operator==(const CriterionSpec&) const = default;
};

struct BooleanValue {
    bool value = false;
    bool operator==(const BooleanValue&) const = default;
};

struct ExactValue {
    double value = 0.0;
    Provenance provenance = Provenance::Catalog;
    bool operator==(const ExactValue&) const = default;
};

/// Catalog entries printed with a "±" marker: they depend on deployment and
/// may later be pinned by a measurement.
struct ApproximateValue {
    double value = 0.0;
    Provenance provenance = Provenance::Catalog;
    bool operator==(const ApproximateValue&) const = default;
};

/// Entries such as "<1".
struct BoundedValue {
    double limit = 0.0;
    BoundRelation relation = BoundRelation::Below;
    Provenance provenance = Provenance::Catalog;
    bool operator==(const BoundedValue&) const = default;
};

struct OrdinalValue {
    std::string label;
    bool operator==(const OrdinalValue&) const = default;
};

using AttributeValue =
    std::variant<BooleanValue, ExactValue, ApproximateValue, BoundedValue, OrdinalValue>;

struct AlternativeProfile {
    std::string id;
    std::string label;
    std::string consensus;
    std::map<std::string, AttributeValue> values;

    const AttributeValue& value_of(const std::string& criterion_id) const;

    bool operator==(const AlternativeProfile&) const = default;
};

/// Immutable catalog of criteria and alternatives. Construction validates
/// every invariant; there is no way to obtain an invalid instance.
class KnowledgeBase {
public:
    KnowledgeBase(std::vector<CriterionSpec> criteria,
                  std::vector<AlternativeProfile> alternatives,
                  std::string version,
                  std::string updated_at);

    const std::vector<CriterionSpec>& criteria() const { return criteria_; }
    const std::vector<AlternativeProfile>& alternatives() const { return alternatives_; }
    const std::string& version() const { return version_; }
    const std::string& updated_at() const { return updated_at_; }

    const CriterionSpec* find_criterion(std::string_view id) const;
    const AlternativeProfile* find_alternative(std::string_view id) const;
    const CriterionSpec& criterion(std::string_view id) const;
    const AlternativeProfile& alternative(std::string_view id) const;

    /// Encoded value of one cell.
    double encoded(const AlternativeProfile& alternative, const CriterionSpec& criterion) const;

    bool operator==(const KnowledgeBase&) const = default;

private:
    std::vector<CriterionSpec> criteria_;
    std::vector<AlternativeProfile> alternatives_;
    std::string version_;
    std::string updated_at_;
};

/// The five platforms and fourteen scored criteria of the reference catalog.
KnowledgeBase builtin_knowledge_base();

/// Booleans map to 0/1, numeric variants to their number (a bound to its
/// limit), ordinal labels to their scale code. Percentages are fractions.
double numeric_encode(const AttributeValue& value, const CriterionSpec& criterion);

/// Replaces an approximate or bounded cell by a measured exact value.
/// The input is left untouched; the result carries a new version.
KnowledgeBase apply_override(const KnowledgeBase& kb,
                             std::string_view alternative_id,
                             std::string_view criterion_id,
                             ExactValue measured,
                             std::optional<std::string> timestamp = std::nullopt);

std::string next_version(std::string_view version);
std::string utc_timestamp_now();

nlohmann::ordered_json to_json(const KnowledgeBase& kb);
nlohmann::ordered_json to_json(const CriterionSpec& criterion);
nlohmann::ordered_json to_json(const AttributeValue& value);
nlohmann::ordered_json to_json(const AlternativeProfile& alternative);

KnowledgeBase knowledge_base_from_json(const nlohmann::json& document);
KnowledgeBase load_knowledge_base(std::string_view document);
std::string serialize_knowledge_base(const KnowledgeBase& kb);

KnowledgeBase read_knowledge_base_file(const std::string& path);
void write_knowledge_base_file(const KnowledgeBase& kb, const std::string& path);

}  // namespace chainsel
