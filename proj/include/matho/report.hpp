#pragma once

// Run reports: per-check records, an overall verdict and the exit-code
// contract (0 accept, 1 reject, 2 invalid input, 3 internal error).

#include <cstdint>
#include <string>
#include <vector>

#include "matho/json_io.hpp"

namespace matho {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Verdict {
    accept,
    reject,
    /// A hypothesis of the check does not hold for these inputs.
    skip,
    /// Reported for information; no verdict is drawn.
    info,
};

std::string to_string(Verdict v);

enum ExitCode : int { kExitAccept = 0, kExitReject = 1, kExitInvalid = 2, kExitInternal = 3 };

struct CheckRecord {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    Verdict verdict = Verdict::accept;
    std::string note;
};

struct Report {
    std::string command;
    std::string scenario;  // path, when run from a file
    std::uint64_t seed = 0;
    int trunc_order = 0;
    double tolerance = 0.0;
    std::vector<CheckRecord> records;
    json results = json::object();
    double wall_time_s = 0.0;

    void add(std::string name, double residual, double threshold, bool accept, std::string note = {});
    /// No record rejects (skip and info records do not count).
    bool accepted() const;
};

/// Keys: version, command, scenario, seed, trunc_order, tolerance, records,
/// results, overall, wall_time_s. wall_time_s is the only
/// non-deterministic field and can be left out.
json to_json(const Report& r, bool include_wall_time = true);
/// One line per record with residuals in scientific notation.
std::string to_text(const Report& r);
int exit_code(const Report& r);

/// {"overall": "invalid"|"internal", "error": {"message", "field"}}
json error_json(int code, const std::string& message, const std::string& field = {});

}  // namespace matho
