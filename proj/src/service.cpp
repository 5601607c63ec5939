#include "chainsel/service.hpp"

#include "chainsel/analysis.hpp"
#include "chainsel/error.hpp"
#include "chainsel/report.hpp"
#include "httplib.h"

namespace chainsel {

namespace {

using nlohmann::json;

int http_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotFound: return 404;
        case ErrorCode::Conflict: return 409;
        case ErrorCode::Io: return 500;
        default: return 400;
    }
}

HttpResponse error_response(int status, std::string_view code, const std::string& message) {
    nlohmann::ordered_json body;
    body["error"] = {{"code", code}, {"message", message}};
    return {status, render_json(body)};
}

template <class Fn>
HttpResponse guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        return error_response(http_status(e.code()), to_string(e.code()), e.what());
    } catch (const json::exception& e) {
        return error_response(400, "validation", std::string("malformed request body: ") + e.what());
    }
}

json parse_body(const std::string& body) {
    try {
        return json::parse(body.empty() ? std::string("{}") : body);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Validation, std::string("request body is not a valid document: ") + e.what());
    }
}

// Accepts {"requirements": {...}, ...} or a bare requirements document.
UserRequirements requirements_of(const json& body, const KnowledgeBase& kb) {
    if (body.is_object() && body.contains("requirements")) return requirements_from_json(body.at("requirements"), kb);
    return requirements_from_json(body, kb);
}

}  // namespace

Service::Service(KnowledgeBase kb, ServiceConfig config)
    : kb_(std::make_shared<const KnowledgeBase>(std::move(kb))), config_(std::move(config)) {}

std::shared_ptr<const KnowledgeBase> Service::snapshot() const {
    std::lock_guard lock(snapshot_mutex_);
    return kb_;
}

HttpResponse Service::get_criteria() const {
    return guarded([&] { return HttpResponse{200, render_json(criteria_document(*snapshot()))}; });
}

HttpResponse Service::get_alternatives() const {
    return guarded([&] { return HttpResponse{200, render_json(alternatives_document(*snapshot()))}; });
}

HttpResponse Service::post_rank(const std::string& body, bool trace) const {
    return guarded([&] {
        const auto kb = snapshot();
        const auto requirements = requirements_of(parse_body(body), *kb);
        const auto result = rank_alternatives(*kb, requirements, {.trace = trace});
        return HttpResponse{200, render_json(to_json(result, *kb))};
    });
}

HttpResponse Service::post_sensitivity(const std::string& body) const {
    return guarded([&] {
        const auto kb = snapshot();
        const auto doc = parse_body(body);
        const auto requirements = requirements_of(doc, *kb);
        if (!doc.contains("criterion") || !doc.at("criterion").is_string()) {
            throw Error(ErrorCode::Validation, "missing field 'criterion'");
        }
        const double resolution = doc.value("resolution", 0.05);
        const auto interval =
            weight_stability_interval(*kb, requirements, doc.at("criterion").get<std::string>(), resolution);
        return HttpResponse{200, render_json(to_json(interval))};
    });
}

HttpResponse Service::post_whatif(const std::string& body, bool trace) const {
    return guarded([&] {
        const auto kb = snapshot();
        const auto doc = parse_body(body);
        const auto requirements = requirements_of(doc, *kb);
        std::vector<RequirementEdit> edits;
        if (doc.contains("edits")) {
            if (!doc.at("edits").is_array()) throw Error(ErrorCode::Validation, "'edits' must be a list");
            for (const auto& node : doc.at("edits")) edits.push_back(edit_from_json(node));
        }
        const auto result = what_if(*kb, requirements, edits, {.trace = trace});
        return HttpResponse{200, render_json(to_json(result, *kb))};
    });
}

HttpResponse Service::put_override(const std::string& body) {
    return guarded([&] {
        const auto doc = parse_body(body);
        for (const char* key : {"alternative", "criterion"}) {
            if (!doc.contains(key) || !doc.at(key).is_string()) {
                throw Error(ErrorCode::Validation, std::string("missing field '") + key + "'");
            }
        }
        if (!doc.contains("value") || !doc.at("value").is_number()) {
            throw Error(ErrorCode::Validation, "missing numeric field 'value'");
        }

        std::lock_guard writer(override_mutex_);
        const auto current = snapshot();
        auto next = std::make_shared<const KnowledgeBase>(
            apply_override(*current, doc.at("alternative").get<std::string>(),
                           doc.at("criterion").get<std::string>(), ExactValue{doc.at("value").get<double>()}));
        if (config_.kb_write_path) write_knowledge_base_file(*next, *config_.kb_write_path);
        {
            std::lock_guard lock(snapshot_mutex_);
            kb_ = next;
        }
        nlohmann::ordered_json out;
        out["version"] = next->version();
        out["updated_at"] = next->updated_at();
        out["persisted"] = config_.kb_write_path.has_value();
        return HttpResponse{200, render_json(out)};
    });
}

void Service::mount(httplib::Server& server) {
    constexpr const char* kJson = "application/json";
    auto reply = [kJson](httplib::Response& res, const HttpResponse& r) {
        res.status = r.status;
        res.set_content(r.body, kJson);
    };
    auto wants_trace = [](const httplib::Request& req) {
        return req.has_param("trace") && req.get_param_value("trace") == "1";
    };

    server.Get("/api/criteria", [this, reply](const httplib::Request&, httplib::Response& res) {
        reply(res, get_criteria());
    });
    server.Get("/api/alternatives", [this, reply](const httplib::Request&, httplib::Response& res) {
        reply(res, get_alternatives());
    });
    server.Post("/api/rank", [this, reply, wants_trace](const httplib::Request& req, httplib::Response& res) {
        reply(res, post_rank(req.body, wants_trace(req)));
    });
    server.Post("/api/sensitivity", [this, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, post_sensitivity(req.body));
    });
    server.Post("/api/whatif", [this, reply, wants_trace](const httplib::Request& req, httplib::Response& res) {
        reply(res, post_whatif(req.body, wants_trace(req)));
    });
    server.Put("/api/kb/overrides", [this, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, put_override(req.body));
    });
}

void http_serve(Service& service) {
    httplib::Server server;
    service.mount(server);
    if (!server.listen(service.config().host, service.config().port)) {
        throw Error(ErrorCode::Io, "cannot listen on " + service.config().host + ":" +
                                       std::to_string(service.config().port));
    }
}

}  // namespace chainsel
