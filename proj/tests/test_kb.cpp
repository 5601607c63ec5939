#include <cmath>
#include <string>

#include "chainsel/error.hpp"
#include "chainsel/kb.hpp"
#include "doctest.h"

using namespace chainsel;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Io;
}

std::string message_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    FAIL("expected an error");
    return {};
}

const std::string kTinyKb = R"({
  "version": "t1",
  "criteria": [
    {"id": "speed", "label": "Speed", "kind": "numeric", "direction": "benefit", "iso_category": "efficiency"},
    {"id": "grade", "label": "Grade", "kind": "ordinal", "direction": "benefit", "iso_category": "usability",
     "ordinal_scale": [{"label": "Low", "code": 0.0}, {"label": "High", "code": 1.0}]}
  ],
  "alternatives": [
    {"id": "a", "label": "A", "consensus": "x", "values": {"speed": {"exact": 3}, "grade": {"ordinal": "Low"}}}
  ]
})";

}  // namespace

TEST_CASE("builtin catalog matches the reference table") {
    const auto kb = builtin_knowledge_base();
    CHECK(kb.alternatives().size() == 5);
    CHECK(kb.criteria().size() == 14);

    const auto& bitcoin = kb.alternative("bitcoin");
    CHECK(bitcoin.value_of("smart_contracts") == AttributeValue{BooleanValue{false}});
    CHECK(bitcoin.value_of("throughput") == AttributeValue{ExactValue{3.8}});

    const auto& corda = kb.alternative("corda");
    CHECK(corda.value_of("latency") == AttributeValue{BoundedValue{1.0, BoundRelation::Below}});
    CHECK(corda.value_of("bft_tolerance") == AttributeValue{ExactValue{0.33}});
    CHECK(kb.alternative("hyperledger_fabric").value_of("bft_tolerance") == AttributeValue{ExactValue{0.0}});
    CHECK(kb.alternative("ethereum_poa").value_of("throughput") == AttributeValue{ApproximateValue{100.0}});

    for (const auto& c : kb.criteria()) {
        const bool cost = c.id == "latency" || c.id == "learning_curve";
        CHECK_MESSAGE((c.direction == Direction::Cost) == cost, c.id);
    }
}

TEST_CASE("every builtin cell encodes to a finite non-negative number") {
    const auto kb = builtin_knowledge_base();
    for (const auto& a : kb.alternatives()) {
        for (const auto& c : kb.criteria()) {
            const double x = kb.encoded(a, c);
            CHECK(std::isfinite(x));
            CHECK(x >= 0.0);
            if (c.is_percent() || c.kind == CriterionKind::Ordinal) CHECK(x <= 1.0);
        }
    }
}

TEST_CASE("numeric_encode") {
    const auto kb = builtin_knowledge_base();
    CHECK(numeric_encode(BooleanValue{false}, kb.criterion("energy_efficient")) == 0.0);
    CHECK(numeric_encode(BooleanValue{true}, kb.criterion("energy_efficient")) == 1.0);
    CHECK(numeric_encode(BoundedValue{1.0, BoundRelation::Below}, kb.criterion("latency")) == 1.0);
    CHECK(numeric_encode(ApproximateValue{10.0}, kb.criterion("latency")) == 10.0);
    CHECK(numeric_encode(OrdinalValue{"Très élevé"}, kb.criterion("learning_curve")) == 0.8);
    CHECK(numeric_encode(OrdinalValue{"Moyenne"}, kb.criterion("learning_curve")) == 0.4);
    CHECK(numeric_encode(OrdinalValue{"Avancé"}, kb.criterion("storage_element")) == 1.0);

    CHECK(code_of([&] { numeric_encode(ExactValue{1.0}, kb.criterion("smart_contracts")); }) ==
          ErrorCode::Validation);
    CHECK(code_of([&] { numeric_encode(OrdinalValue{"Huge"}, kb.criterion("learning_curve")); }) ==
          ErrorCode::Validation);
}

TEST_CASE("ordinal scale invariants") {
    CHECK_THROWS_AS(OrdinalScale({{"only", 0.5}}), Error);
    CHECK_THROWS_AS(OrdinalScale({{"a", 0.5}, {"b", 0.5}}), Error);
    CHECK_THROWS_AS(OrdinalScale({{"a", 0.0}, {"b", 1.5}}), Error);
    CHECK_NOTHROW(OrdinalScale({{"a", 0.0}, {"b", 1.0}}));
}

TEST_CASE("serialization round-trips the builtin catalog") {
    const auto kb = builtin_knowledge_base();
    const auto text = serialize_knowledge_base(kb);
    CHECK(load_knowledge_base(text) == kb);
    CHECK(serialize_knowledge_base(load_knowledge_base(text)) == text);
}

TEST_CASE("loading rejects malformed catalogs") {
    CHECK_NOTHROW(load_knowledge_base(kTinyKb));

    SUBCASE("missing cell is named") {
        auto doc = nlohmann::json::parse(kTinyKb);
        doc["alternatives"][0]["values"].erase("grade");
        const auto msg = message_of([&] { knowledge_base_from_json(doc); });
        CHECK(msg.find("(a, grade)") != std::string::npos);
    }
    SUBCASE("unknown ordinal label") {
        auto doc = nlohmann::json::parse(kTinyKb);
        doc["alternatives"][0]["values"]["grade"] = {{"ordinal", "Medium"}};
        const auto msg = message_of([&] { knowledge_base_from_json(doc); });
        CHECK(msg.find("unknown ordinal label 'Medium'") != std::string::npos);
    }
    SUBCASE("duplicate ids") {
        auto doc = nlohmann::json::parse(kTinyKb);
        doc["alternatives"].push_back(doc["alternatives"][0]);
        CHECK(message_of([&] { knowledge_base_from_json(doc); }).find("duplicate alternative") != std::string::npos);
        doc = nlohmann::json::parse(kTinyKb);
        doc["criteria"].push_back(doc["criteria"][0]);
        CHECK(message_of([&] { knowledge_base_from_json(doc); }).find("duplicate criterion") != std::string::npos);
    }
    SUBCASE("kind mismatch") {
        auto doc = nlohmann::json::parse(kTinyKb);
        doc["alternatives"][0]["values"]["speed"] = {{"bool", true}};
        CHECK(message_of([&] { knowledge_base_from_json(doc); }).find("(a, speed)") != std::string::npos);
    }
    SUBCASE("ordinal kind without scale") {
        auto doc = nlohmann::json::parse(kTinyKb);
        doc["criteria"][1].erase("ordinal_scale");
        CHECK_THROWS_AS(knowledge_base_from_json(doc), Error);
    }
    SUBCASE("unknown direction") {
        auto doc = nlohmann::json::parse(kTinyKb);
        doc["criteria"][0]["direction"] = "sideways";
        CHECK_THROWS_AS(knowledge_base_from_json(doc), Error);
    }
    SUBCASE("not a document") {
        CHECK(code_of([] { load_knowledge_base("{nope"); }) == ErrorCode::Validation);
    }
}

TEST_CASE("apply_override") {
    const auto kb = builtin_knowledge_base();
    const auto updated = apply_override(kb, "hyperledger_fabric", "throughput", ExactValue{380.0}, "2021-06-01T00:00:00Z");

    CHECK(updated.alternative("hyperledger_fabric").value_of("throughput") ==
          AttributeValue{ExactValue{380.0, Provenance::BenchmarkOverride}});
    CHECK(updated.version() != kb.version());
    CHECK(updated.updated_at() == "2021-06-01T00:00:00Z");
    // input untouched
    CHECK(kb == builtin_knowledge_base());

    // every other cell unchanged
    for (const auto& a : kb.alternatives()) {
        for (const auto& c : kb.criteria()) {
            if (a.id == "hyperledger_fabric" && c.id == "throughput") continue;
            CHECK(updated.alternative(a.id).value_of(c.id) == a.value_of(c.id));
        }
    }

    SUBCASE("bounded cells are tunable") {
        auto k = apply_override(kb, "corda", "latency", ExactValue{0.4});
        CHECK(k.encoded(k.alternative("corda"), k.criterion("latency")) == 0.4);
    }
    SUBCASE("re-measurement of an override is allowed and bumps again") {
        auto again = apply_override(updated, "hyperledger_fabric", "throughput", ExactValue{400.0});
        CHECK(again.version() != updated.version());
    }
    SUBCASE("catalog facts refuse overrides") {
        CHECK(code_of([&] { apply_override(kb, "bitcoin", "smart_contracts", ExactValue{1.0}); }) ==
              ErrorCode::Conflict);
        CHECK(code_of([&] { apply_override(kb, "bitcoin", "throughput", ExactValue{7.0}); }) ==
              ErrorCode::Conflict);
    }
    SUBCASE("unknown ids") {
        CHECK(code_of([&] { apply_override(kb, "dogecoin", "throughput", ExactValue{1.0}); }) == ErrorCode::NotFound);
        CHECK(code_of([&] { apply_override(kb, "corda", "tps", ExactValue{1.0}); }) == ErrorCode::NotFound);
    }
    SUBCASE("override survives serialization") {
        CHECK(load_knowledge_base(serialize_knowledge_base(updated)) == updated);
    }
}

TEST_CASE("next_version is monotone") {
    CHECK(next_version("1.0.0") == "1.0.0-r1");
    CHECK(next_version("1.0.0-r1") == "1.0.0-r2");
    CHECK(next_version("1.0.0-r9") == "1.0.0-r10");
    CHECK(next_version("beta-rc") == "beta-rc-r1");
}
