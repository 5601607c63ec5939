#include "chainsel/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace chainsel {

namespace {

using nlohmann::ordered_json;

// Column alignment counts code points, not bytes, so accented labels line up.
std::size_t display_width(std::string_view text) {
    std::size_t width = 0;
    for (unsigned char ch : text) {
        if ((ch & 0xC0) != 0x80) ++width;
    }
    return width;
}

std::string pad(std::string_view text, std::size_t width) {
    std::string out(text);
    for (auto w = display_width(text); w < width; ++w) out += ' ';
    return out;
}

ordered_json matrix_json(const DenseMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (double x : m.row(i)) row.push_back(x);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string number_text(double x) {
    return nlohmann::json(x).dump();
}

}  // namespace

std::string format_score(double score) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8f", score);
    return buf;
}

ordered_json to_json(const RankingResult& result, const KnowledgeBase& kb) {
    ordered_json out;
    out["kb_version"] = result.kb_version;
    out["kb_updated_at"] = result.kb_updated_at;
    out["status"] = to_string(result.status);
    if (!result.message.empty()) out["message"] = result.message;

    ordered_json ranking = ordered_json::array();
    for (std::size_t k = 0; k < result.ordering.size(); ++k) {
        const auto& r = result.ordering[k];
        ranking.push_back({{"rank", k + 1},
                           {"alternative", r.alternative_id},
                           {"label", kb.alternative(r.alternative_id).label},
                           {"score", r.score},
                           {"score_text", format_score(r.score)}});
    }
    out["ranking"] = std::move(ranking);

    ordered_json disqualified = ordered_json::array();
    for (const auto& report : result.disqualified) disqualified.push_back(to_json(report, kb));
    out["disqualified"] = std::move(disqualified);

    if (result.weights) out["weights"] = to_json(*result.weights);

    if (result.trace && result.matrix) {
        const auto& t = *result.trace;
        ordered_json trace;
        ordered_json criteria = ordered_json::array();
        for (const auto& c : result.matrix->criteria()) {
            criteria.push_back({{"id", c.id}, {"direction", to_string(c.direction)}, {"weight", c.weight}});
        }
        trace["criteria"] = std::move(criteria);
        trace["alternatives"] = result.matrix->alternatives();
        trace["matrix"] = matrix_json(result.matrix->values());
        trace["normalized"] = matrix_json(t.normalized);
        trace["weighted"] = matrix_json(t.weighted);
        trace["ideal_positive"] = t.ideal.positive;
        trace["ideal_negative"] = t.ideal.negative;
        trace["separation_positive"] = t.separations.to_positive;
        trace["separation_negative"] = t.separations.to_negative;
        out["trace"] = std::move(trace);
    }
    return out;
}

ordered_json to_json(const StabilityInterval& interval) {
    return {{"criterion", interval.criterion_id},
            {"p_low", interval.p_low},
            {"p_high", interval.p_high},
            {"current", interval.current},
            {"winner", interval.winner},
            {"resolution", interval.resolution}};
}

ordered_json to_json(const EntropyWeights& weights) {
    ordered_json out = ordered_json::array();
    for (std::size_t j = 0; j < weights.criteria.size(); ++j) {
        out.push_back({{"criterion", weights.criteria[j]},
                       {"entropy", weights.entropies[j]},
                       {"weight", weights.weights[j]}});
    }
    return out;
}

ordered_json criteria_document(const KnowledgeBase& kb) {
    ordered_json out;
    out["kb_version"] = kb.version();
    ordered_json criteria = ordered_json::array();
    ordered_json groups = ordered_json::object();
    for (auto category : {IsoCategory::Security, IsoCategory::Efficiency, IsoCategory::Reliability,
                          IsoCategory::Functionality, IsoCategory::Usability}) {
        groups[std::string(to_string(category))] = ordered_json::array();
    }
    for (const auto& c : kb.criteria()) {
        criteria.push_back(to_json(c));
        groups[std::string(to_string(c.iso_category))].push_back(c.id);
    }
    out["criteria"] = std::move(criteria);
    out["groups"] = std::move(groups);
    return out;
}

ordered_json alternatives_document(const KnowledgeBase& kb) {
    ordered_json out;
    out["kb_version"] = kb.version();
    out["kb_updated_at"] = kb.updated_at();
    ordered_json alternatives = ordered_json::array();
    for (const auto& a : kb.alternatives()) {
        auto node = to_json(a);
        for (auto& [cid, cell] : node["values"].items()) {
            const bool numeric = cell.contains("exact") || cell.contains("approx") || cell.contains("bounded");
            if (numeric && !cell.contains("provenance")) cell["provenance"] = to_string(Provenance::Catalog);
        }
        alternatives.push_back(std::move(node));
    }
    out["alternatives"] = std::move(alternatives);
    return out;
}

std::string render_json(const ordered_json& document) {
    return document.dump(2) + "\n";
}

std::string render_table(const RankingResult& result, const KnowledgeBase& kb) {
    std::ostringstream out;
    out << "Knowledge base " << result.kb_version << " (updated " << result.kb_updated_at << ")\n";
    if (!result.message.empty()) out << result.message << "\n";
    out << "\n";

    std::size_t width = display_width("Alternative");
    for (const auto& a : kb.alternatives()) width = std::max(width, display_width(a.label));
    width += 4;

    out << pad("Alternative", width) << "Score\n";
    for (const auto& r : result.ordering) {
        out << pad(kb.alternative(r.alternative_id).label, width) << format_score(r.score);
        if (result.status == RankingStatus::Uncontested) out << "  (uncontested)";
        out << "\n";
    }
    for (const auto& report : result.disqualified) {
        out << pad(kb.alternative(report.alternative_id).label, width) << "Disqualifiée\n";
    }

    if (!result.disqualified.empty()) {
        out << "\nDisqualifications:\n";
        for (const auto& report : result.disqualified) {
            const auto doc = to_json(report, kb);
            for (const auto& v : doc["violations"]) {
                out << "  " << doc["label"].get<std::string>() << ": " << v["reason"].get<std::string>() << "\n";
            }
        }
    }

    if (result.weights) {
        out << "\nWeights:\n";
        for (std::size_t j = 0; j < result.weights->criteria.size(); ++j) {
            if (result.weights->weights[j] == 0.0) continue;
            out << "  " << pad(result.weights->criteria[j], 20) << number_text(result.weights->weights[j]) << "\n";
        }
    }

    if (result.trace && result.matrix) {
        const auto& t = *result.trace;
        const auto& m = *result.matrix;
        out << "\nTrace (rows: alternatives, columns:";
        for (const auto& c : m.criteria()) out << " " << c.id;
        out << ")\n";
        for (std::size_t i = 0; i < m.rows(); ++i) {
            out << "  " << pad(m.alternatives()[i], 20) << "v =";
            for (double x : t.weighted.row(i)) out << " " << format_score(x);
            out << "  S+ = " << format_score(t.separations.to_positive[i])
                << "  S- = " << format_score(t.separations.to_negative[i]) << "\n";
        }
        out << "  A+ =";
        for (double x : t.ideal.positive) out << " " << format_score(x);
        out << "\n  A- =";
        for (double x : t.ideal.negative) out << " " << format_score(x);
        out << "\n";
    }
    return out.str();
}

std::string render_table(const StabilityInterval& interval, const KnowledgeBase& kb) {
    std::ostringstream out;
    out << "Criterion " << interval.criterion_id << ": preference " << number_text(interval.current)
        << " may range over [" << number_text(interval.p_low) << ", " << number_text(interval.p_high)
        << "] (step " << number_text(interval.resolution) << ") with winner "
        << kb.alternative(interval.winner).label << "\n";
    return out.str();
}

std::string render_kb_summary(const KnowledgeBase& kb) {
    std::ostringstream out;
    out << kb.alternatives().size() << " alternatives, " << kb.criteria().size() << " criteria"
        << " (version " << kb.version() << ", updated " << kb.updated_at() << ")\n";
    return out.str();
}

}  // namespace chainsel
