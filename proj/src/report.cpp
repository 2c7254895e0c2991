#include "matho/report.hpp"

#include <cstdio>
#include <sstream>

namespace matho {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::accept: return "accept";
        case Verdict::reject: return "reject";
        case Verdict::skip: return "skip";
        case Verdict::info: return "info";
    }
    return "?";
}

void Report::add(std::string name, double residual, double threshold, bool accept, std::string note) {
    records.push_back(
        CheckRecord{std::move(name), residual, threshold, accept ? Verdict::accept : Verdict::reject, std::move(note)});
}

bool Report::accepted() const {
    for (const auto& r : records) {
        if (r.verdict == Verdict::reject) return false;
    }
    return true;
}

json to_json(const Report& r, bool include_wall_time) {
    json records = json::array();
    for (const auto& c : r.records) {
        json rec{{"name", c.name}, {"residual", c.residual}, {"threshold", c.threshold}, {"verdict", to_string(c.verdict)}};
        if (!c.note.empty()) rec["note"] = c.note;
        records.push_back(std::move(rec));
    }
    json out{{"version", kToolVersion},
             {"command", r.command},
             {"scenario", r.scenario},
             {"seed", r.seed},
             {"trunc_order", r.trunc_order},
             {"tolerance", r.tolerance},
             {"records", records},
             {"results", r.results},
             {"overall", r.accepted() ? "accept" : "reject"}};
    if (include_wall_time) out["wall_time_s"] = r.wall_time_s;
    return out;
}

std::string to_text(const Report& r) {
    std::ostringstream os;
    os << "matho-lab " << kToolVersion << "  command=" << r.command << "  M=" << r.trunc_order
       << "  tol=" << r.tolerance << "  seed=" << r.seed << "\n";
    std::size_t width = 5;
    for (const auto& c : r.records) width = std::max(width, c.name.size());
    char buf[64];
    for (const auto& c : r.records) {
        os << c.name << std::string(width + 2 - c.name.size(), ' ');
        std::snprintf(buf, sizeof buf, "residual=%.3e  threshold=%.3e  ", c.residual, c.threshold);
        os << buf << to_string(c.verdict);
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << "\n";
    }
    os << "overall: " << (r.accepted() ? "accept" : "reject") << "\n";
    return os.str();
}

int exit_code(const Report& r) { return r.accepted() ? kExitAccept : kExitReject; }

json error_json(int code, const std::string& message, const std::string& field) {
    json err{{"message", message}};
    if (!field.empty()) err["field"] = field;
    return json{{"version", kToolVersion}, {"overall", code == kExitInvalid ? "invalid" : "internal"}, {"error", err}};
}

}  // namespace matho
