#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "chainsel/kb.hpp"

namespace httplib {
class Server;
}

namespace chainsel {

struct ServiceConfig {
    std::string host = "0.0.0.0";
    int port = 8080;
    /// When set, accepted overrides are also written to this file.
    std::optional<std::string> kb_write_path;
};

struct HttpResponse {
    int status = 200;
    std::string body;
};

/// Request handling for the /api endpoints. The knowledge base is an
/// immutable snapshot; an override builds a new one and swaps it in, so a
/// request sees exactly one version from start to finish.
class Service {
public:
    Service(KnowledgeBase kb, ServiceConfig config = {});

    std::shared_ptr<const KnowledgeBase> snapshot() const;

    HttpResponse get_criteria() const;
    HttpResponse get_alternatives() const;
    HttpResponse post_rank(const std::string& body, bool trace = false) const;
    HttpResponse post_sensitivity(const std::string& body) const;
    HttpResponse post_whatif(const std::string& body, bool trace = false) const;
    HttpResponse put_override(const std::string& body);

    /// Registers every endpoint on `server`.
    void mount(httplib::Server& server);

    const ServiceConfig& config() const { return config_; }

private:
    mutable std::mutex snapshot_mutex_;
    std::mutex override_mutex_;
    std::shared_ptr<const KnowledgeBase> kb_;
    ServiceConfig config_;
};

/// Blocks serving HTTP until the server is stopped.
void http_serve(Service& service);

}  // namespace chainsel
