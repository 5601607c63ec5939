#include "chainsel/kb.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

#include "chainsel/error.hpp"

namespace chainsel {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

[[noreturn]] void fail(const std::string& message) {
    throw Error(ErrorCode::Validation, message);
}

std::string cell_name(std::string_view alternative, std::string_view criterion) {
    return "(" + std::string(alternative) + ", " + std::string(criterion) + ")";
}

bool kind_accepts(CriterionKind kind, const AttributeValue& value) {
    switch (kind) {
        case CriterionKind::Boolean:
            return std::holds_alternative<BooleanValue>(value);
        case CriterionKind::Ordinal:
            return std::holds_alternative<OrdinalValue>(value);
        case CriterionKind::Numeric:
            return std::holds_alternative<ExactValue>(value) ||
                   std::holds_alternative<ApproximateValue>(value) ||
                   std::holds_alternative<BoundedValue>(value);
    }
    return false;
}

double raw_number(const AttributeValue& value) {
    return std::visit(Overloaded{
                          [](const ExactValue& v) { return v.value; },
                          [](const ApproximateValue& v) { return v.value; },
                          [](const BoundedValue& v) { return v.limit; },
                          [](const auto&) { return 0.0; },
                      },
                      value);
}

void validate_criterion(const CriterionSpec& c) {
    if (c.id.empty()) fail("criterion with empty id");
    const bool ordinal = c.kind == CriterionKind::Ordinal;
    if (ordinal != c.ordinal_scale.has_value()) {
        fail("criterion '" + c.id + "': ordinal_scale must be present iff kind is ordinal");
    }
}

void validate_cell(const AlternativeProfile& a, const CriterionSpec& c, const AttributeValue& v) {
    if (!kind_accepts(c.kind, v)) {
        fail("cell " + cell_name(a.id, c.id) + ": value is not compatible with kind '" +
             std::string(to_string(c.kind)) + "'");
    }
    if (const auto* ord = std::get_if<OrdinalValue>(&v)) {
        if (!c.ordinal_scale->contains(ord->label)) {
            fail("cell " + cell_name(a.id, c.id) + ": unknown ordinal label '" + ord->label + "'");
        }
        return;
    }
    if (c.kind != CriterionKind::Numeric) return;
    const double x = raw_number(v);
    if (!std::isfinite(x) || x < 0.0) {
        fail("cell " + cell_name(a.id, c.id) + ": numeric value must be finite and non-negative");
    }
    if (c.is_percent() && x > 1.0) {
        fail("cell " + cell_name(a.id, c.id) + ": percent values are stored as fractions in [0,1]");
    }
}

}  // namespace

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::Validation: return "validation";
        case ErrorCode::NotFound: return "not_found";
        case ErrorCode::Conflict: return "conflict";
        case ErrorCode::NoActiveCriteria: return "no_active_criteria";
        case ErrorCode::BaselineAmbiguous: return "baseline_ambiguous";
        case ErrorCode::Degenerate: return "degenerate";
        case ErrorCode::Io: return "io";
    }
    return "unknown";
}

std::string_view to_string(CriterionKind kind) {
    switch (kind) {
        case CriterionKind::Boolean: return "boolean";
        case CriterionKind::Numeric: return "numeric";
        case CriterionKind::Ordinal: return "ordinal";
    }
    return "";
}

std::string_view to_string(Direction direction) {
    return direction == Direction::Benefit ? "benefit" : "cost";
}

std::string_view to_string(IsoCategory category) {
    switch (category) {
        case IsoCategory::Security: return "security";
        case IsoCategory::Efficiency: return "efficiency";
        case IsoCategory::Reliability: return "reliability";
        case IsoCategory::Functionality: return "functionality";
        case IsoCategory::Usability: return "usability";
    }
    return "";
}

std::string_view to_string(Provenance provenance) {
    return provenance == Provenance::Catalog ? "catalog" : "benchmark_override";
}

std::string_view to_string(BoundRelation relation) {
    return relation == BoundRelation::Below ? "below" : "above";
}

OrdinalScale::OrdinalScale(std::vector<OrdinalLevel> levels) : levels_(std::move(levels)) {
    if (levels_.size() < 2) fail("ordinal scale needs at least 2 levels");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const auto& level = levels_[i];
        if (!(level.code >= 0.0 && level.code <= 1.0)) {
            fail("ordinal level '" + level.label + "': code must lie in [0,1]");
        }
        if (i > 0 && !(level.code > levels_[i - 1].code)) {
            fail("ordinal level '" + level.label + "': codes must be strictly increasing");
        }
        if (!seen.insert(level.label).second) fail("duplicate ordinal label '" + level.label + "'");
    }
}

std::optional<double> OrdinalScale::code_of(std::string_view label) const {
    for (const auto& level : levels_) {
        if (level.label == label) return level.code;
    }
    return std::nullopt;
}

const AttributeValue& AlternativeProfile::value_of(const std::string& criterion_id) const {
    auto it = values.find(criterion_id);
    if (it == values.end()) {
        throw Error(ErrorCode::NotFound, "no value for " + cell_name(id, criterion_id));
    }
    return it->second;
}

KnowledgeBase::KnowledgeBase(std::vector<CriterionSpec> criteria,
                             std::vector<AlternativeProfile> alternatives,
                             std::string version,
                             std::string updated_at)
    : criteria_(std::move(criteria)),
      alternatives_(std::move(alternatives)),
      version_(std::move(version)),
      updated_at_(std::move(updated_at)) {
    if (version_.empty()) fail("knowledge base version must not be empty");
    std::set<std::string> criterion_ids;
    for (const auto& c : criteria_) {
        validate_criterion(c);
        if (!criterion_ids.insert(c.id).second) fail("duplicate criterion id '" + c.id + "'");
    }
    std::set<std::string> alternative_ids;
    std::vector<std::string> missing;
    for (const auto& a : alternatives_) {
        if (a.id.empty()) fail("alternative with empty id");
        if (!alternative_ids.insert(a.id).second) fail("duplicate alternative id '" + a.id + "'");
        for (const auto& [cid, value] : a.values) {
            if (!criterion_ids.count(cid)) {
                fail("cell " + cell_name(a.id, cid) + ": unknown criterion");
            }
        }
        for (const auto& c : criteria_) {
            auto it = a.values.find(c.id);
            if (it == a.values.end()) {
                missing.push_back(cell_name(a.id, c.id));
                continue;
            }
            validate_cell(a, c, it->second);
        }
    }
    if (!missing.empty()) {
        std::string list;
        for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
        fail("missing values for " + list);
    }
}

const CriterionSpec* KnowledgeBase::find_criterion(std::string_view id) const {
    auto it = std::find_if(criteria_.begin(), criteria_.end(),
                           [&](const CriterionSpec& c) { return c.id == id; });
    return it == criteria_.end() ? nullptr : &*it;
}

const AlternativeProfile* KnowledgeBase::find_alternative(std::string_view id) const {
    auto it = std::find_if(alternatives_.begin(), alternatives_.end(),
                           [&](const AlternativeProfile& a) { return a.id == id; });
    return it == alternatives_.end() ? nullptr : &*it;
}

const CriterionSpec& KnowledgeBase::criterion(std::string_view id) const {
    if (const auto* c = find_criterion(id)) return *c;
    throw Error(ErrorCode::NotFound, "unknown criterion '" + std::string(id) + "'");
}

const AlternativeProfile& KnowledgeBase::alternative(std::string_view id) const {
    if (const auto* a = find_alternative(id)) return *a;
    throw Error(ErrorCode::NotFound, "unknown alternative '" + std::string(id) + "'");
}

double KnowledgeBase::encoded(const AlternativeProfile& alternative,
                              const CriterionSpec& criterion) const {
    return numeric_encode(alternative.value_of(criterion.id), criterion);
}

double numeric_encode(const AttributeValue& value, const CriterionSpec& criterion) {
    if (!kind_accepts(criterion.kind, value)) {
        fail("criterion '" + criterion.id + "': value kind does not match '" +
             std::string(to_string(criterion.kind)) + "'");
    }
    return std::visit(Overloaded{
                          [](const BooleanValue& v) { return v.value ? 1.0 : 0.0; },
                          [](const ExactValue& v) { return v.value; },
                          [](const ApproximateValue& v) { return v.value; },
                          [](const BoundedValue& v) { return v.limit; },
                          [&](const OrdinalValue& v) {
                              auto code = criterion.ordinal_scale->code_of(v.label);
                              if (!code) {
                                  fail("criterion '" + criterion.id + "': unknown ordinal label '" +
                                       v.label + "'");
                              }
                              return *code;
                          },
                      },
                      value);
}

std::string next_version(std::string_view version) {
    const std::string marker = "-r";
    auto pos = version.rfind(marker);
    if (pos != std::string_view::npos && pos + marker.size() < version.size()) {
        auto digits = version.substr(pos + marker.size());
        if (std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
            unsigned long n = std::stoul(std::string(digits));
            return std::string(version.substr(0, pos)) + marker + std::to_string(n + 1);
        }
    }
    return std::string(version) + marker + "1";
}

std::string utc_timestamp_now() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

KnowledgeBase apply_override(const KnowledgeBase& kb,
                             std::string_view alternative_id,
                             std::string_view criterion_id,
                             ExactValue measured,
                             std::optional<std::string> timestamp) {
    const auto& criterion = kb.criterion(criterion_id);
    const auto& target = kb.alternative(alternative_id);
    const auto& current = target.value_of(criterion.id);

    const bool tunable =
        std::holds_alternative<ApproximateValue>(current) ||
        std::holds_alternative<BoundedValue>(current) ||
        (std::holds_alternative<ExactValue>(current) &&
         std::get<ExactValue>(current).provenance == Provenance::BenchmarkOverride);
    if (!tunable) {
        throw Error(ErrorCode::Conflict,
                    "cell " + cell_name(alternative_id, criterion_id) +
                        " is a catalog fact, only approximate or bounded values can be overridden");
    }

    measured.provenance = Provenance::BenchmarkOverride;
    auto alternatives = kb.alternatives();
    for (auto& a : alternatives) {
        if (a.id == alternative_id) a.values[criterion.id] = measured;
    }
    return KnowledgeBase(kb.criteria(), std::move(alternatives), next_version(kb.version()),
                         timestamp ? *timestamp : utc_timestamp_now());
}

// ---------------------------------------------------------------------------
// Built-in catalog

namespace {

OrdinalScale feature_scale() {
    return OrdinalScale({{"Non", 0.0}, {"Basique", 0.5}, {"Avancé", 1.0}});
}

// 0.4 and 0.8 are the catalog codes; the other two levels sit on the same
// 0.2 grid.
OrdinalScale learning_curve_scale() {
    return OrdinalScale({{"Faible", 0.2}, {"Moyenne", 0.4}, {"Élevé", 0.6}, {"Très élevé", 0.8}});
}

CriterionSpec boolean_criterion(std::string id, std::string label, IsoCategory category) {
    return {std::move(id), std::move(label), CriterionKind::Boolean, Direction::Benefit,
            std::nullopt, std::nullopt, category};
}

CriterionSpec numeric_criterion(std::string id, std::string label, Direction direction,
                                std::string unit, IsoCategory category) {
    return {std::move(id), std::move(label), CriterionKind::Numeric, direction,
            std::move(unit), std::nullopt, category};
}

CriterionSpec ordinal_criterion(std::string id, std::string label, Direction direction,
                                OrdinalScale scale, IsoCategory category) {
    return {std::move(id), std::move(label), CriterionKind::Ordinal, direction,
            std::nullopt, std::move(scale), category};
}

AttributeValue yes() { return BooleanValue{true}; }
AttributeValue no() { return BooleanValue{false}; }
AttributeValue exact(double x) { return ExactValue{x}; }
AttributeValue approx(double x) { return ApproximateValue{x}; }
AttributeValue below(double x) { return BoundedValue{x, BoundRelation::Below}; }
AttributeValue level(std::string label) { return OrdinalValue{std::move(label)}; }

}  // namespace

KnowledgeBase builtin_knowledge_base() {
    using enum IsoCategory;
    std::vector<CriterionSpec> criteria{
        boolean_criterion("publicly_open", "Ouvert publiquement", Security),
        boolean_criterion("permissioned", "Permissions", Security),
        boolean_criterion("native_encryption", "Encryption native", Security),
        numeric_criterion("throughput", "Débit", Direction::Benefit, "tx/s", Efficiency),
        numeric_criterion("latency", "Latence", Direction::Cost, "s", Efficiency),
        boolean_criterion("energy_efficient", "Efficient en énergie", Efficiency),
        numeric_criterion("bft_tolerance", "Tolérant aux fautes byzantines", Direction::Benefit,
                          "%", Reliability),
        boolean_criterion("smart_contracts", "Contrats intelligents", Functionality),
        boolean_criterion("cryptocurrency", "Cryptomonnaies", Functionality),
        ordinal_criterion("storage_element", "Élément de stockage", Direction::Benefit,
                          feature_scale(), Functionality),
        ordinal_criterion("compute_element", "Élément de calcul", Direction::Benefit,
                          feature_scale(), Functionality),
        ordinal_criterion("asset_manager", "Élément gestionnaire de biens", Direction::Benefit,
                          feature_scale(), Functionality),
        ordinal_criterion("connector", "Connecteur logiciel", Direction::Benefit,
                          feature_scale(), Functionality),
        ordinal_criterion("learning_curve", "Courbe d'apprentissage", Direction::Cost,
                          learning_curve_scale(), Usability),
    };

    // Rows follow the catalog column order: public, permissions, encryption,
    // throughput, latency, energy, BFT, smart contracts, crypto, storage,
    // compute, asset manager, connector, learning curve.
    auto profile = [&](std::string id, std::string label, std::string consensus,
                       std::vector<AttributeValue> cells) {
        AlternativeProfile p{std::move(id), std::move(label), std::move(consensus), {}};
        for (std::size_t j = 0; j < criteria.size(); ++j) p.values.emplace(criteria[j].id, cells.at(j));
        return p;
    };

    std::vector<AlternativeProfile> alternatives{
        profile("bitcoin", "Bitcoin, PoW", "PoW",
                {yes(), no(), no(), exact(3.8), exact(3600), no(), exact(0.5), no(), yes(),
                 level("Basique"), level("Non"), level("Basique"), level("Non"), level("Faible")}),
        profile("ethereum_pow", "Ethereum, PoW", "PoW",
                {yes(), no(), no(), exact(15), exact(180), no(), exact(0.5), yes(), yes(),
                 level("Avancé"), level("Avancé"), level("Avancé"), level("Avancé"), level("Moyenne")}),
        profile("ethereum_poa", "Ethereum, PoA", "PoA",
                {no(), no(), no(), approx(100), approx(10), yes(), exact(0.33), yes(), yes(),
                 level("Avancé"), level("Avancé"), level("Avancé"), level("Avancé"), level("Moyenne")}),
        profile("hyperledger_fabric", "Hyperledger Fabric, Raft", "Raft",
                {no(), yes(), yes(), approx(1000), below(1), yes(), exact(0.0), yes(), no(),
                 level("Avancé"), level("Avancé"), level("Avancé"), level("Avancé"), level("Très élevé")}),
        profile("corda", "Corda, PBFT", "PBFT",
                {no(), yes(), yes(), approx(1000), below(1), yes(), exact(0.33), yes(), no(),
                 level("Avancé"), level("Avancé"), level("Avancé"), level("Avancé"), level("Très élevé")}),
    };

    return KnowledgeBase(std::move(criteria), std::move(alternatives), "1.0.0",
                         "2021-01-01T00:00:00Z");
}

// ---------------------------------------------------------------------------
// Document format

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

template <class Enum, std::size_t N>
Enum parse_enum(const json& node, const std::string& where, const std::array<Enum, N>& options) {
    if (!node.is_string()) fail(where + ": expected a string");
    const auto text = node.get<std::string>();
    for (auto option : options) {
        if (to_string(option) == text) return option;
    }
    fail(where + ": unrecognised value '" + text + "'");
}

const json& require(const json& node, const char* key, const std::string& where) {
    if (!node.is_object() || !node.contains(key)) fail(where + ": missing field '" + key + "'");
    return node.at(key);
}

std::string require_string(const json& node, const char* key, const std::string& where) {
    const auto& v = require(node, key, where);
    if (!v.is_string()) fail(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

double require_number(const json& node, const char* key, const std::string& where) {
    const auto& v = require(node, key, where);
    if (!v.is_number()) fail(where + ": field '" + key + "' must be a number");
    return v.get<double>();
}

Provenance parse_provenance(const json& cell, const std::string& where) {
    if (!cell.contains("provenance")) return Provenance::Catalog;
    return parse_enum(cell.at("provenance"), where + ".provenance",
                      std::array{Provenance::Catalog, Provenance::BenchmarkOverride});
}

AttributeValue parse_value(const json& cell, const std::string& where) {
    if (!cell.is_object()) fail(where + ": expected an object");
    if (cell.contains("bool")) {
        if (!cell.at("bool").is_boolean()) fail(where + ": 'bool' must be true or false");
        return BooleanValue{cell.at("bool").get<bool>()};
    }
    if (cell.contains("exact")) {
        return ExactValue{require_number(cell, "exact", where), parse_provenance(cell, where)};
    }
    if (cell.contains("approx")) {
        return ApproximateValue{require_number(cell, "approx", where), parse_provenance(cell, where)};
    }
    if (cell.contains("bounded")) {
        const auto& b = cell.at("bounded");
        return BoundedValue{require_number(b, "limit", where + ".bounded"),
                            parse_enum(require(b, "relation", where + ".bounded"),
                                       where + ".bounded.relation",
                                       std::array{BoundRelation::Below, BoundRelation::Above}),
                            parse_provenance(cell, where)};
    }
    if (cell.contains("ordinal")) {
        return OrdinalValue{require_string(cell, "ordinal", where)};
    }
    fail(where + ": expected one of bool, exact, approx, bounded, ordinal");
}

CriterionSpec parse_criterion(const json& node, std::size_t index) {
    std::string where = "criteria[" + std::to_string(index) + "]";
    CriterionSpec c;
    c.id = require_string(node, "id", where);
    where = "criterion '" + c.id + "'";
    c.label = node.contains("label") ? require_string(node, "label", where) : c.id;
    c.kind = parse_enum(require(node, "kind", where), where + ".kind",
                        std::array{CriterionKind::Boolean, CriterionKind::Numeric,
                                   CriterionKind::Ordinal});
    c.direction = parse_enum(require(node, "direction", where), where + ".direction",
                             std::array{Direction::Benefit, Direction::Cost});
    if (node.contains("unit") && !node.at("unit").is_null()) c.unit = require_string(node, "unit", where);
    c.iso_category = parse_enum(require(node, "iso_category", where), where + ".iso_category",
                                std::array{IsoCategory::Security, IsoCategory::Efficiency,
                                           IsoCategory::Reliability, IsoCategory::Functionality,
                                           IsoCategory::Usability});
    if (node.contains("ordinal_scale") && !node.at("ordinal_scale").is_null()) {
        const auto& levels = node.at("ordinal_scale");
        if (!levels.is_array()) fail(where + ".ordinal_scale: expected a list");
        std::vector<OrdinalLevel> parsed;
        for (const auto& level : levels) {
            parsed.push_back({require_string(level, "label", where + ".ordinal_scale"),
                              require_number(level, "code", where + ".ordinal_scale")});
        }
        try {
            c.ordinal_scale = OrdinalScale(std::move(parsed));
        } catch (const Error& e) {
            fail(where + ": " + e.what());
        }
    }
    return c;
}

}  // namespace

ordered_json to_json(const CriterionSpec& c) {
    ordered_json out;
    out["id"] = c.id;
    out["label"] = c.label;
    out["kind"] = to_string(c.kind);
    out["direction"] = to_string(c.direction);
    if (c.unit) out["unit"] = *c.unit;
    out["iso_category"] = to_string(c.iso_category);
    if (c.ordinal_scale) {
        ordered_json levels = ordered_json::array();
        for (const auto& level : c.ordinal_scale->levels()) {
            levels.push_back({{"label", level.label}, {"code", level.code}});
        }
        out["ordinal_scale"] = std::move(levels);
    }
    return out;
}

ordered_json to_json(const AttributeValue& value) {
    auto with_provenance = [](ordered_json cell, Provenance p) {
        if (p != Provenance::Catalog) cell["provenance"] = to_string(p);
        return cell;
    };
    return std::visit(
        Overloaded{
            [](const BooleanValue& v) { return ordered_json{{"bool", v.value}}; },
            [&](const ExactValue& v) {
                return with_provenance(ordered_json{{"exact", v.value}}, v.provenance);
            },
            [&](const ApproximateValue& v) {
                return with_provenance(ordered_json{{"approx", v.value}}, v.provenance);
            },
            [&](const BoundedValue& v) {
                ordered_json bounded{{"limit", v.limit}, {"relation", to_string(v.relation)}};
                return with_provenance(ordered_json{{"bounded", bounded}}, v.provenance);
            },
            [](const OrdinalValue& v) { return ordered_json{{"ordinal", v.label}}; },
        },
        value);
}

ordered_json to_json(const AlternativeProfile& a) {
    ordered_json out;
    out["id"] = a.id;
    out["label"] = a.label;
    out["consensus"] = a.consensus;
    ordered_json values = ordered_json::object();
    for (const auto& [cid, value] : a.values) values[cid] = to_json(value);
    out["values"] = std::move(values);
    return out;
}

ordered_json to_json(const KnowledgeBase& kb) {
    ordered_json out;
    out["version"] = kb.version();
    out["updated_at"] = kb.updated_at();
    ordered_json criteria = ordered_json::array();
    for (const auto& c : kb.criteria()) criteria.push_back(to_json(c));
    out["criteria"] = std::move(criteria);
    ordered_json alternatives = ordered_json::array();
    for (const auto& a : kb.alternatives()) alternatives.push_back(to_json(a));
    out["alternatives"] = std::move(alternatives);
    return out;
}

KnowledgeBase knowledge_base_from_json(const json& document) {
    if (!document.is_object()) fail("knowledge base document must be an object");
    const std::string version = require_string(document, "version", "knowledge base");
    const std::string updated_at =
        document.contains("updated_at") ? require_string(document, "updated_at", "knowledge base") : "";

    const auto& criteria_node = require(document, "criteria", "knowledge base");
    if (!criteria_node.is_array()) fail("knowledge base: 'criteria' must be a list");
    std::vector<CriterionSpec> criteria;
    for (std::size_t i = 0; i < criteria_node.size(); ++i) {
        criteria.push_back(parse_criterion(criteria_node[i], i));
    }

    const auto& alternatives_node = require(document, "alternatives", "knowledge base");
    if (!alternatives_node.is_array()) fail("knowledge base: 'alternatives' must be a list");
    std::vector<AlternativeProfile> alternatives;
    for (std::size_t i = 0; i < alternatives_node.size(); ++i) {
        const auto& node = alternatives_node[i];
        std::string where = "alternatives[" + std::to_string(i) + "]";
        AlternativeProfile a;
        a.id = require_string(node, "id", where);
        where = "alternative '" + a.id + "'";
        a.label = node.contains("label") ? require_string(node, "label", where) : a.id;
        a.consensus = node.contains("consensus") ? require_string(node, "consensus", where) : "";
        const auto& values = require(node, "values", where);
        if (!values.is_object()) fail(where + ": 'values' must be an object");
        for (const auto& [cid, cell] : values.items()) {
            a.values.emplace(cid, parse_value(cell, "cell " + cell_name(a.id, cid)));
        }
        alternatives.push_back(std::move(a));
    }
    return KnowledgeBase(std::move(criteria), std::move(alternatives), version, updated_at);
}

KnowledgeBase load_knowledge_base(std::string_view document) {
    json parsed;
    try {
        parsed = json::parse(document);
    } catch (const json::parse_error& e) {
        fail(std::string("knowledge base is not a valid document: ") + e.what());
    }
    return knowledge_base_from_json(parsed);
}

std::string serialize_knowledge_base(const KnowledgeBase& kb) {
    return to_json(kb).dump(2) + "\n";
}

KnowledgeBase read_knowledge_base_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot read knowledge base file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_knowledge_base(buffer.str());
}

void write_knowledge_base_file(const KnowledgeBase& kb, const std::string& path) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error(ErrorCode::Io, "cannot write knowledge base file '" + path + "'");
        out << serialize_knowledge_base(kb);
        if (!out) throw Error(ErrorCode::Io, "cannot write knowledge base file '" + path + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw Error(ErrorCode::Io, "cannot replace knowledge base file '" + path + "'");
    }
}

}  // namespace chainsel
