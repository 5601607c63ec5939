#include <numeric>
#include <random>

#include "chainsel/elicitation.hpp"
#include "chainsel/error.hpp"
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

}  // namespace

TEST_CASE("likert scale values") {
    CHECK(preference_value(parse_likert("extremely_desirable")) == 4);
    CHECK(preference_value(parse_likert("quite_desirable")) == 3);
    CHECK(preference_value(parse_likert("desirable")) == 2);
    CHECK(preference_value(parse_likert("weakly_desirable")) == 1);
    CHECK(preference_value(parse_likert("indifferent")) == 0);
    CHECK(parse_likert("Tout à fait désirable") == Likert::QuiteDesirable);
    CHECK_THROWS_AS(parse_likert("very_nice"), Error);
}

TEST_CASE("case-study weights") {
    const auto kb = builtin_knowledge_base();
    const auto w = derive_weights(bigbox_requirements(kb));
    CHECK(w.weight("latency") == 0.125);
    CHECK(w.weight("energy_efficient") == 0.375);
    CHECK(w.weight("bft_tolerance") == 0.25);
    CHECK(w.weight("learning_curve") == 0.25);
    for (const auto& id : {"publicly_open", "throughput", "smart_contracts", "storage_element"}) {
        CHECK(w.weight(id) == 0.0);
    }
}

TEST_CASE("derive_weights small cases") {
    const auto kb = builtin_knowledge_base();
    auto single = make_requirements(kb, {{"throughput", Likert::QuiteDesirable}}, {});
    CHECK(derive_weights(single).weight("throughput") == 1.0);

    auto pair = make_requirements(kb, {{"latency", Likert::Desirable}, {"throughput", Likert::Desirable}}, {});
    CHECK(derive_weights(pair).weight("latency") == 0.5);
    CHECK(derive_weights(pair).weight("throughput") == 0.5);

    auto none = make_requirements(kb, {}, {});
    CHECK(code_of([&] { derive_weights(none); }) == ErrorCode::NoActiveCriteria);
}

TEST_CASE("weight properties on random preference profiles") {
    const auto kb = builtin_knowledge_base();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> level(0, 4);
    std::vector<std::string> ids;
    for (const auto& c : kb.criteria()) ids.push_back(c.id);

    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> raw;
        for (std::size_t j = 0; j < ids.size(); ++j) raw.push_back(level(rng));
        if (std::accumulate(raw.begin(), raw.end(), 0.0) == 0.0) continue;
        const auto w = normalize_preferences(ids, raw);

        CHECK(std::abs(std::accumulate(w.weights.begin(), w.weights.end(), 0.0) - 1.0) <= 1e-12);
        for (std::size_t a = 0; a < raw.size(); ++a) {
            for (std::size_t b = 0; b < raw.size(); ++b) {
                if (raw[a] > raw[b]) CHECK(w.weights[a] > w.weights[b]);
            }
        }
        for (int k : {2, 3, 7, 100}) {
            std::vector<double> inflated;
            for (double p : raw) inflated.push_back(p * k);
            CHECK(normalize_preferences(ids, inflated) == w);
        }
    }
}

TEST_CASE("parse case-study requirements") {
    const auto kb = builtin_knowledge_base();
    const auto req = bigbox_requirements(kb);
    REQUIRE(req.constraints.size() == 3);

    const auto* bft = req.constraint_for("bft_tolerance");
    REQUIRE(bft);
    CHECK(bft->mode == ConstraintMode::Required);
    CHECK(std::get<double>(bft->threshold->bound) == 0.3333);
    CHECK(bft->threshold->relation == ThresholdRelation::AtLeast);

    const auto* sc = req.constraint_for("smart_contracts");
    REQUIRE(sc);
    CHECK_FALSE(sc->threshold.has_value());

    const auto* storage = req.constraint_for("storage_element");
    REQUIRE(storage);
    CHECK(std::get<std::string>(storage->threshold->bound) == "Avancé");

    // smart contracts are required yet weighted zero
    CHECK(req.preference("smart_contracts") == Likert::Indifferent);
    CHECK(req.tolerance_pct == 0.5);
}

TEST_CASE("empty document defaults to indifference") {
    const auto kb = builtin_knowledge_base();
    for (const auto* doc : {"", "{}"}) {
        const auto req = parse_requirements(doc, kb);
        CHECK(req.preferences.size() == kb.criteria().size());
        CHECK(req.constraints.empty());
        for (const auto& [id, level] : req.preferences) CHECK(level == Likert::Indifferent);
    }
}

TEST_CASE("requirements validation errors") {
    const auto kb = builtin_knowledge_base();
    auto rejects = [&](const char* doc) { return code_of([&] { parse_requirements(doc, kb); }); };

    CHECK(rejects(R"({"preferences": {"warp_speed": "desirable"}})") == ErrorCode::Validation);
    CHECK(rejects(R"({"preferences": {"latency": "meh"}})") == ErrorCode::Validation);
    CHECK(rejects(R"({"constraints": [{"criterion": "warp", "mode": "required"}]})") == ErrorCode::Validation);
    CHECK(rejects(R"({"constraints": [{"criterion": "smart_contracts", "mode": "undesirable",
                      "threshold": {"value": 1}}]})") == ErrorCode::Validation);
    CHECK(rejects(R"({"constraints": [{"criterion": "smart_contracts", "mode": "required",
                      "threshold": {"value": 1}}]})") == ErrorCode::Validation);
    CHECK(rejects(R"({"constraints": [{"criterion": "throughput", "mode": "required"}]})") == ErrorCode::Validation);
    CHECK(rejects(R"({"constraints": [{"criterion": "throughput", "mode": "undesirable"}]})") == ErrorCode::Validation);
    CHECK(rejects(R"({"constraints": [{"criterion": "storage_element", "mode": "required",
                      "threshold": {"level": "Legendary"}}]})") == ErrorCode::Validation);
    CHECK(rejects(R"({"constraints": [{"criterion": "smart_contracts", "mode": "required"},
                                      {"criterion": "smart_contracts", "mode": "required"}]})") ==
          ErrorCode::Validation);
    CHECK(rejects(R"({"tolerance_pct": -1})") == ErrorCode::Validation);
    CHECK(rejects("[1, 2") == ErrorCode::Validation);
}

TEST_CASE("requirements document round trip") {
    const auto kb = builtin_knowledge_base();
    const auto req = bigbox_requirements(kb);
    CHECK(requirements_from_json(nlohmann::json::parse(to_json(req).dump()), kb) == req);
}
