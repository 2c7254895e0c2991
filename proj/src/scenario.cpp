#include "matho/scenario.hpp"

#include <fstream>
#include <set>

#include "matho/transforms.hpp"

namespace matho {

Command parse_command(const std::string& s) {
    if (s == "space") return Command::space;
    if (s == "build") return Command::build;
    if (s == "check") return Command::check;
    if (s == "recover") return Command::recover;
    if (s == "kernel") return Command::kernel;
    if (s == "verify") return Command::verify;
    throw ValidationError("unknown command '" + s + "'", "command");
}

std::string to_string(Command c) {
    switch (c) {
        case Command::space: return "space";
        case Command::build: return "build";
        case Command::check: return "check";
        case Command::recover: return "recover";
        case Command::kernel: return "kernel";
        case Command::verify: return "verify";
    }
    return "?";
}

namespace {

const std::set<std::string> kKnownKeys = {
    "schema_version", "command", "trunc_order", "tolerance", "seed",  "theta1",  "theta2",    "J1",   "J2",
    "W1",             "W2",      "symbol",      "matrix",    "family", "modifiers", "kind",  "kinds", "name",
    "space",          "reduce",  "fuzz",        "description"};

int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ValidationError("expected an integer", path);
    return j.get<int>();
}

double get_double(const json& j, const std::string& path) {
    if (!j.is_number()) throw ValidationError("expected a number", path);
    return j.get<double>();
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) throw ValidationError("expected a string", path);
    return j.get<std::string>();
}

int dim_of(const Scenario& s) {
    if (s.theta1) return s.theta1->dim();
    if (s.theta2) return s.theta2->dim();
    if (s.symbol) return s.symbol->dim();
    return -1;
}

void check_kind_name(const std::string& k, const std::string& path) {
    if (k == "all" || k == "shift-a" || k == "shift-b" || k == "shift-c" || k == "shift-d") return;
    try {
        parse_displacement_kind(k);
    } catch (const ValidationError&) {
        throw ValidationError("unknown kind '" + k + "'", path);
    }
}

FuzzSpec parse_fuzz(const json& j) {
    if (!j.is_object()) throw ValidationError("expected an object", "fuzz");
    FuzzSpec f;
    if (j.contains("instances")) f.instances = get_int(j["instances"], "fuzz.instances");
    if (j.contains("dim")) f.dim = get_int(j["dim"], "fuzz.dim");
    if (j.contains("max_factors")) f.max_factors = get_int(j["max_factors"], "fuzz.max_factors");
    if (j.contains("max_dim_k")) f.max_dim_k = get_int(j["max_dim_k"], "fuzz.max_dim_k");
    if (j.contains("max_pole")) f.max_pole = get_double(j["max_pole"], "fuzz.max_pole");
    if (j.contains("symbol_degree")) f.symbol_degree = get_int(j["symbol_degree"], "fuzz.symbol_degree");
    if (j.contains("max_w_norm")) f.max_w_norm = get_double(j["max_w_norm"], "fuzz.max_w_norm");
    if (f.instances < 0 || f.instances > 1000) throw ValidationError("must be in [0, 1000]", "fuzz.instances");
    if (f.dim < 1 || f.dim > 4) throw ValidationError("must be in [1, 4]", "fuzz.dim");
    if (f.max_factors < 1) throw ValidationError("must be positive", "fuzz.max_factors");
    if (f.max_dim_k < f.dim) throw ValidationError("must be at least fuzz.dim", "fuzz.max_dim_k");
    if (f.max_pole < 0.0 || f.max_pole > kMaxPoleModulus) throw ValidationError("must be in [0, 0.9]", "fuzz.max_pole");
    if (f.symbol_degree < 0) throw ValidationError("must be nonnegative", "fuzz.symbol_degree");
    if (f.max_w_norm < 0.0 || f.max_w_norm > kMaxCrofootNorm) throw ValidationError("must be in [0, 0.9]", "fuzz.max_w_norm");
    return f;
}

void require_for(bool present, const std::string& field, Command c) {
    if (!present) throw ValidationError("required by the '" + to_string(c) + "' command", field);
}

}  // namespace

Scenario parse_scenario(const json& j, const Overrides& overrides) {
    if (!j.is_object()) throw ValidationError("scenario must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!kKnownKeys.count(key)) throw ValidationError("unknown field", key);
    }
    Scenario s;
    if (!j.contains("schema_version")) throw ValidationError("missing field", "schema_version");
    s.schema_version = get_int(j["schema_version"], "schema_version");
    if (s.schema_version != kSchemaVersion) {
        throw ValidationError("unsupported schema version " + std::to_string(s.schema_version), "schema_version");
    }
    if (j.contains("command")) s.command = parse_command(get_string(j["command"], "command"));
    if (overrides.command) {
        if (s.command && *s.command != *overrides.command) {
            throw ValidationError("scenario is for '" + to_string(*s.command) + "', not '" +
                                      to_string(*overrides.command) + "'",
                                  "command");
        }
        s.command = overrides.command;
    }
    if (!s.command) throw ValidationError("missing field", "command");

    if (j.contains("trunc_order")) s.trunc_order = get_int(j["trunc_order"], "trunc_order");
    if (overrides.trunc_order) s.trunc_order = *overrides.trunc_order;
    if (s.trunc_order < kMinTruncOrder) throw ValidationError("must be >= 8", "trunc_order");
    if (s.trunc_order > 4096) throw ValidationError("must be <= 4096", "trunc_order");

    if (j.contains("tolerance")) s.tolerance = get_double(j["tolerance"], "tolerance");
    if (overrides.tolerance) s.tolerance = *overrides.tolerance;
    if (!(s.tolerance >= kMinTolerance && s.tolerance <= kMaxTolerance)) {
        throw ValidationError("must be in [1e-14, 1e-2]", "tolerance");
    }

    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw ValidationError("expected a nonnegative integer", "seed");
        s.seed = j["seed"].get<std::uint64_t>();
    }
    if (overrides.seed) s.seed = *overrides.seed;

    for (const char* key : {"theta1", "theta2"}) {
        if (!j.contains(key)) continue;
        BlaschkePotapovProduct p = product_from_json(j[key], key);
        try {
            require_pure_inner(p);
        } catch (const ValidationError& e) {
            throw ValidationError(e.message(), key);
        }
        (std::string(key) == "theta1" ? s.theta1 : s.theta2) = std::move(p);
    }
    if (s.theta1 && s.theta2 && s.theta1->dim() != s.theta2->dim()) {
        throw DimensionError("theta1 and theta2 must share the coefficient dimension", "theta2.dim");
    }
    if (j.contains("symbol")) {
        s.symbol = matrix_laurent_from_json(j["symbol"], "symbol", s.trunc_order);
        if (s.symbol->order() > s.trunc_order) throw ValidationError("trunc_order exceeds the scenario's", "symbol.trunc_order");
    }
    const int d = dim_of(s);
    if (s.symbol && d != s.symbol->dim()) throw DimensionError("symbol dimension differs from theta", "symbol.dim");

    auto conj = [&](const char* key, std::optional<Conjugation>& out) {
        if (!j.contains(key)) return;
        if (d < 0) throw ValidationError("needs theta1 or theta2 to fix the dimension", key);
        out = conjugation_from_json(j[key], key, d);
    };
    conj("J1", s.j1);
    conj("J2", s.j2);
    auto crofoot = [&](const char* key, std::optional<CrofootData>& out) {
        if (!j.contains(key)) return;
        if (d < 0) throw ValidationError("needs theta1 or theta2 to fix the dimension", key);
        out = crofoot_from_json(j[key], key, d);
    };
    crofoot("W1", s.w1);
    crofoot("W2", s.w2);

    if (j.contains("matrix")) s.matrix = matrix_from_json(j["matrix"], "matrix");
    if (j.contains("family")) {
        try {
            s.family = parse_family(get_string(j["family"], "family"));
        } catch (const ValidationError& e) {
            throw ValidationError(e.message(), "family");
        }
    }
    if (j.contains("modifiers")) {
        const json& m = j["modifiers"];
        if (!m.is_object() || !m.contains("X1") || !m.contains("X2")) {
            throw ValidationError("expected {\"X1\": ..., \"X2\": ...}", "modifiers");
        }
        s.modifiers = Modifiers{matrix_from_json(m["X1"], "modifiers.X1"), matrix_from_json(m["X2"], "modifiers.X2")};
    }
    if (j.contains("kind") && j.contains("kinds")) throw ValidationError("give either kind or kinds", "kinds");
    if (j.contains("kind")) {
        s.kinds.push_back(get_string(j["kind"], "kind"));
        check_kind_name(s.kinds.back(), "kind");
    }
    if (j.contains("kinds")) {
        if (!j["kinds"].is_array() || j["kinds"].empty()) throw ValidationError("expected a non-empty list", "kinds");
        for (std::size_t i = 0; i < j["kinds"].size(); ++i) {
            const std::string path = "kinds[" + std::to_string(i) + "]";
            s.kinds.push_back(get_string(j["kinds"][i], path));
            check_kind_name(s.kinds.back(), path);
        }
    }
    if (j.contains("name")) {
        s.transform = get_string(j["name"], "name");
        bool known = s.transform == "all";
        for (const auto& n : transform_names()) known = known || n == s.transform;
        if (!known) throw ValidationError("unknown transform '" + s.transform + "'", "name");
    }
    if (j.contains("space")) {
        s.space = get_string(j["space"], "space");
        if (s.space != "theta1" && s.space != "theta2") throw ValidationError("expected theta1 or theta2", "space");
    }
    if (j.contains("reduce")) {
        if (!j["reduce"].is_boolean()) throw ValidationError("expected a boolean", "reduce");
        s.reduce = j["reduce"].get<bool>();
    }
    if (j.contains("fuzz")) s.fuzz = parse_fuzz(j["fuzz"]);

    // presence of the inputs each command reads
    const Command c = *s.command;
    if (c == Command::space) {
        require_for(s.space == "theta1" ? s.theta1.has_value() : s.theta2.has_value(), s.space, c);
        return s;
    }
    if (c == Command::verify) {
        const bool has_inputs = s.theta1 && s.theta2 && s.symbol;
        if (!has_inputs && !(s.fuzz && s.fuzz->instances > 0)) {
            require_for(s.theta1.has_value(), "theta1", c);
            require_for(s.theta2.has_value(), "theta2", c);
            require_for(s.symbol.has_value(), "symbol", c);
        }
        if (has_inputs) {
            require_for(s.j1.has_value(), "J1", c);
            require_for(s.j2.has_value(), "J2", c);
        }
        return s;
    }
    require_for(s.theta1.has_value(), "theta1", c);
    require_for(s.theta2.has_value(), "theta2", c);
    if (c == Command::check) {
        require_for(!s.kinds.empty(), "kind", c);
    }
    const bool needs_family = c == Command::build || c == Command::kernel || c == Command::recover ||
                              (c == Command::check && !s.matrix);
    if (needs_family && !s.family) {
        // a displacement kind names its family
        if (c == Command::check && s.kinds.size() == 1 && s.kinds[0] != "all" && s.kinds[0].rfind("shift-", 0) != 0) {
            s.family = is_toeplitz_kind(parse_displacement_kind(s.kinds[0])) ? Family::toeplitz : Family::hankel;
        } else {
            require_for(false, "family", c);
        }
    }
    if (c == Command::check && !s.family) {
        for (const auto& k : s.kinds) {
            if (k == "all" || k.rfind("shift-", 0) == 0) require_for(false, "family", c);
        }
    }
    if (c == Command::build || c == Command::kernel) require_for(s.symbol.has_value(), "symbol", c);
    if (c == Command::check || c == Command::recover) {
        if (!s.symbol && !s.matrix) require_for(false, "symbol", c);
    }
    if ((c == Command::kernel || c == Command::recover) && s.family == Family::hankel) {
        require_for(s.j1.has_value(), "J1", c);
        require_for(s.j2.has_value(), "J2", c);
    }
    return s;
}

Scenario load_scenario(const std::string& path, const Overrides& overrides) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scenario file '" + path + "'", "scenario");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what(), "scenario");
    }
    return parse_scenario(j, overrides);
}

}  // namespace matho
