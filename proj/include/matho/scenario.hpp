#pragma once

// Declarative scenario files driving the command-line runner.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matho/json_io.hpp"
#include "matho/operators.hpp"

namespace matho {

enum class Command { space, build, check, recover, kernel, verify };

Command parse_command(const std::string& s);
std::string to_string(Command c);

inline constexpr int kSchemaVersion = 1;
inline constexpr int kMinTruncOrder = 8;
inline constexpr double kMinTolerance = 1e-14;
inline constexpr double kMaxTolerance = 1e-2;

/// Random instances appended to a `verify` run.
struct FuzzSpec {
    int instances = 0;
    int dim = 2;
    int max_factors = 2;
    int max_dim_k = 6;
    double max_pole = 0.5;
    int symbol_degree = 2;
    double max_w_norm = 0.25;
};

struct Scenario {
    int schema_version = kSchemaVersion;
    std::optional<Command> command;
    int trunc_order = 64;
    double tolerance = 1e-8;
    std::uint64_t seed = 0;

    std::optional<BlaschkePotapovProduct> theta1;
    std::optional<BlaschkePotapovProduct> theta2;
    std::optional<Conjugation> j1;
    std::optional<Conjugation> j2;
    std::optional<CrofootData> w1;
    std::optional<CrofootData> w2;
    std::optional<MatrixLaurent> symbol;
    std::optional<Mat> matrix;
    std::optional<Family> family;
    std::optional<Modifiers> modifiers;

    /// check: displacement kinds, "shift-a".."shift-d", or "all".
    std::vector<std::string> kinds;
    /// verify: registry entry or "all".
    std::string transform = "all";
    /// space: "theta1" or "theta2".
    std::string space = "theta1";
    /// recover: subtract the kernel-class component.
    bool reduce = false;
    std::optional<FuzzSpec> fuzz;
};

struct Overrides {
    std::optional<Command> command;
    std::optional<double> tolerance;
    std::optional<int> trunc_order;
    std::optional<std::uint64_t> seed;
};

/// Parses and validates; throws ValidationError with a field path. Overrides
/// are applied before validation. A command given in both places must agree.
Scenario parse_scenario(const json& j, const Overrides& overrides = {});
/// Reads the file; unreadable files and malformed JSON throw ValidationError.
Scenario load_scenario(const std::string& path, const Overrides& overrides = {});

}  // namespace matho
