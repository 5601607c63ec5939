#include "chainsel/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "chainsel/analysis.hpp"
#include "chainsel/error.hpp"
#include "chainsel/report.hpp"
#include "chainsel/service.hpp"

namespace chainsel {

namespace {

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  1  internal error\n"
    "  2  usage error (unknown flag, missing argument)\n"
    "  3  unreadable or unwritable file\n"
    "  4  validation failure\n"
    "  5  no active criteria (every preference indifferent)\n"
    "  6  unknown alternative or criterion\n"
    "  7  override of a catalog fact\n"
    "  8  sensitivity baseline ambiguous (tie for first place)\n"
    "  9  degenerate weights\n"
    "\n"
    "Environment:\n"
    "  CHAINSEL_KB  knowledge base used when --kb is not given (default: builtin)\n";

int exit_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::Validation: return exit_code::kValidation;
        case ErrorCode::NotFound: return exit_code::kNotFound;
        case ErrorCode::Conflict: return exit_code::kConflict;
        case ErrorCode::NoActiveCriteria: return exit_code::kNoActiveCriteria;
        case ErrorCode::BaselineAmbiguous: return exit_code::kBaselineAmbiguous;
        case ErrorCode::Degenerate: return exit_code::kDegenerate;
        case ErrorCode::Io: return exit_code::kIo;
    }
    return exit_code::kInternal;
}

std::string read_file(const std::string& path, std::string_view what) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + std::string(what) + " file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

KnowledgeBase resolve_kb(const std::string& source) {
    if (source.empty() || source == "builtin") return builtin_knowledge_base();
    return read_knowledge_base_file(source);
}

UserRequirements resolve_requirements(const std::string& source, const KnowledgeBase& kb) {
    if (source == "bigbox") return bigbox_requirements(kb);
    return parse_requirements(read_file(source, "requirements"), kb);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chainsel: rank blockchain platforms against quality requirements", "chainsel"};
    app.footer(kExitCodes);
    app.require_subcommand(1);

    std::string kb_source;
    if (const char* env = std::getenv("CHAINSEL_KB")) kb_source = env;
    std::string format = "table";
    app.add_option("--kb", kb_source, "Knowledge base file, or 'builtin'");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
    app.fallthrough();

    std::string requirements_source;
    bool trace = false;
    auto* rank = app.add_subcommand("rank", "Screen and rank alternatives");
    rank->add_option("--requirements", requirements_source, "Requirements file, or 'bigbox'")->required();
    rank->add_flag("--trace", trace, "Include intermediate TOPSIS quantities");

    auto* kb_cmd = app.add_subcommand("kb", "Inspect the knowledge base");
    kb_cmd->require_subcommand(1);
    auto* kb_validate = kb_cmd->add_subcommand("validate", "Validate and summarise");
    auto* kb_show = kb_cmd->add_subcommand("show", "Print the knowledge base document");

    std::string criterion;
    double resolution = 0.05;
    auto* sensitivity = app.add_subcommand("sensitivity", "Stability interval of one preference");
    sensitivity->add_option("--requirements", requirements_source, "Requirements file, or 'bigbox'")->required();
    sensitivity->add_option("--criterion", criterion, "Criterion id")->required();
    sensitivity->add_option("--resolution", resolution, "Grid step on the 0-4 preference scale");

    std::vector<std::string> edit_texts;
    auto* whatif = app.add_subcommand("whatif", "Re-rank after editing the requirements");
    whatif->add_option("--requirements", requirements_source, "Requirements file, or 'bigbox'")->required();
    whatif->add_option("--edit", edit_texts,
                       "pref:<id>=<likert> | require:<id>[>=|<=<x>] | avoid:<id> | drop:<id> | tolerance=<pct>");
    whatif->add_flag("--trace", trace, "Include intermediate TOPSIS quantities");

    std::string measurements;
    bool kb_write = false;
    auto* ingest = app.add_subcommand("ingest-bench", "Apply measured values to approximate cells");
    ingest->add_option("--measurements", measurements, "Measurement file")->required();
    ingest->add_flag("--kb-write", kb_write, "Persist the result to the --kb file");

    ServiceConfig service_config;
    auto* serve = app.add_subcommand("serve", "Start the HTTP service");
    serve->add_option("--host", service_config.host, "Bind address");
    serve->add_option("--port", service_config.port, "Port")->check(CLI::Range(0, 65535));
    serve->add_flag("--kb-write", kb_write, "Persist overrides to the --kb file");

    std::vector<std::string> argv_storage{"chainsel"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kUsage;
    }

    const bool json_output = format == "json";
    try {
        const auto kb = resolve_kb(kb_source);

        if (*rank) {
            const auto requirements = resolve_requirements(requirements_source, kb);
            const auto result = rank_alternatives(kb, requirements, {.trace = trace});
            out << (json_output ? render_json(to_json(result, kb)) : render_table(result, kb));
        } else if (*kb_validate) {
            out << render_kb_summary(kb);
        } else if (*kb_show) {
            out << serialize_knowledge_base(kb);
        } else if (*sensitivity) {
            const auto requirements = resolve_requirements(requirements_source, kb);
            const auto interval = weight_stability_interval(kb, requirements, criterion, resolution);
            out << (json_output ? render_json(to_json(interval)) : render_table(interval, kb));
        } else if (*whatif) {
            const auto requirements = resolve_requirements(requirements_source, kb);
            std::vector<RequirementEdit> edits;
            for (const auto& text : edit_texts) edits.push_back(parse_edit(text));
            const auto result = what_if(kb, requirements, edits, {.trace = trace});
            out << (json_output ? render_json(to_json(result, kb)) : render_table(result, kb));
            if (result.status == RankingStatus::NoActiveCriteria) return exit_code::kNoActiveCriteria;
        } else if (*ingest) {
            if (kb_write && (kb_source.empty() || kb_source == "builtin")) {
                throw Error(ErrorCode::Validation, "--kb-write needs --kb <file>");
            }
            const auto doc = nlohmann::json::parse(read_file(measurements, "measurement"), nullptr, false);
            if (doc.is_discarded() || !doc.contains("measurements") || !doc.at("measurements").is_array()) {
                throw Error(ErrorCode::Validation, "measurement file needs a 'measurements' list");
            }
            auto updated = kb;
            for (const auto& m : doc.at("measurements")) {
                if (!m.is_object() || !m.contains("alternative") || !m.contains("criterion") ||
                    !m.contains("value") || !m.at("value").is_number()) {
                    throw Error(ErrorCode::Validation,
                                "each measurement needs 'alternative', 'criterion' and numeric 'value'");
                }
                updated = apply_override(updated, m.at("alternative").get<std::string>(),
                                         m.at("criterion").get<std::string>(),
                                         ExactValue{m.at("value").get<double>()});
            }
            if (kb_write) write_knowledge_base_file(updated, kb_source);
            if (json_output) {
                out << serialize_knowledge_base(updated);
            } else {
                out << "applied " << doc.at("measurements").size() << " measurement(s); "
                    << render_kb_summary(updated);
                if (kb_write) out << "written to " << kb_source << "\n";
            }
        } else if (*serve) {
            if (kb_write) {
                if (kb_source.empty() || kb_source == "builtin") {
                    throw Error(ErrorCode::Validation, "--kb-write needs --kb <file>");
                }
                service_config.kb_write_path = kb_source;
            }
            Service service(kb, service_config);
            err << "serving on " << service_config.host << ":" << service_config.port << "\n";
            http_serve(service);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_status(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kInternal;
    }
    return exit_code::kOk;
}

}  // namespace chainsel
