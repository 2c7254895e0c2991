#include <gtest/gtest.h>

#include "matho/random.hpp"
#include "matho/runner.hpp"
#include "matho/transforms.hpp"

using namespace matho;

namespace {

std::string scenario_path(const std::string& name) { return std::string(MATHO_SCENARIO_DIR) + "/" + name; }

json z2_json() { return json::parse(R"({"dim": 1, "factors": [{"a": 0}, {"a": 0}]})"); }

json minimal_check() {
    return json{{"schema_version", 1},
                {"command", "check"},
                {"trunc_order", 16},
                {"theta1", z2_json()},
                {"theta2", z2_json()},
                {"symbol", json::parse(R"({"dim": 1, "coeffs": {"-1": [[1]]}})")},
                {"family", "hankel"},
                {"kind", "H1"}};
}

std::string error_field(const json& j, const Overrides& ov = {}) {
    try {
        parse_scenario(j, ov);
    } catch (const ValidationError& e) {
        return e.field();
    }
    return "<no error>";
}

}  // namespace

TEST(Json, ComplexAndMatrices) {
    EXPECT_EQ(complex_from_json(json(2.5), "x"), cplx(2.5, 0));
    EXPECT_EQ(complex_from_json(json::parse("[1, -2]"), "x"), cplx(1, -2));
    EXPECT_THROW(complex_from_json(json("1"), "x"), ValidationError);
    Rng rng(1);
    const Mat m = rng.gaussian(3, 2);
    EXPECT_EQ(matrix_from_json(matrix_to_json(m), "m"), m);
    const Vec v = rng.gaussian(4, 1);
    EXPECT_EQ(vector_from_json(vector_to_json(v), "v"), v);
    try {
        matrix_from_json(matrix_to_json(m), "theta1.left_unitary", 2, 2);
        FAIL();
    } catch (const DimensionError& e) {
        EXPECT_EQ(e.field(), "theta1.left_unitary");
    }
    EXPECT_THROW(matrix_from_json(json::parse("[[1, 2], [3]]"), "m"), ValidationError);
}

TEST(Json, LaurentRoundTrip) {
    Rng rng(2);
    MatrixLaurent f = random_symbol(rng, 2, 3, 8);
    f.set_tail_bound(1e-3);
    const json j = to_json(f);
    EXPECT_EQ(j["dim"], 2);
    EXPECT_EQ(j["trunc_order"], 8);
    EXPECT_FALSE(j["coeffs"].contains("5"));
    const MatrixLaurent g = matrix_laurent_from_json(j, "symbol", 64);
    EXPECT_EQ(g.order(), 8);
    EXPECT_EQ(coeff_distance(f, g), 0.0);
    EXPECT_EQ(g.tail_bound(), 1e-3);

    VectorLaurent v = VectorLaurent::monomial(rng.gaussian(3, 1), -2, 4);
    EXPECT_EQ(coeff_distance(vector_laurent_from_json(to_json(v), "f", 4), v), 0.0);

    const json bad = json::parse(R"({"dim": 1, "trunc_order": 2, "coeffs": {"3": [[1]]}})");
    EXPECT_THROW(matrix_laurent_from_json(bad, "symbol", 8), ValidationError);
}

TEST(Json, ProductsAndMapsRoundTrip) {
    Rng rng(3);
    const BlaschkePotapovProduct p = random_product(rng, ProductDraw{3, 3, 8, 0.5});
    const BlaschkePotapovProduct q = product_from_json(to_json(p), "theta1");
    EXPECT_LE((p.evaluate(cplx(0, 1)) - q.evaluate(cplx(0, 1))).norm(), 1e-15);
    EXPECT_EQ(q.model_dimension(), p.model_dimension());

    const PotapovFactor f = factor_from_json(json::parse(R"({"a": [0.5, 0]})"), "f", 2);
    EXPECT_EQ(f.a, cplx(0.5, 0));
    EXPECT_EQ(f.frame, Mat::Identity(2, 2));

    const Conjugation c = conjugation_from_json(to_json(Conjugation::entrywise(2)), "J1", 2);
    EXPECT_EQ(c.matrix(), Mat::Identity(2, 2));
    try {
        conjugation_from_json(json::parse(R"({"U": [[0, 1], [-1, 0]]})"), "J1", 2);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.field(), "J1.U");
    }
    try {
        crofoot_from_json(json::parse(R"({"W": [[2]]})"), "W1", 1);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.field(), "W1.W");
    }
}

TEST(Json, OperatorAndMembership) {
    const auto k = std::make_shared<const ModelSpace>(ModelSpace::build(BlaschkePotapovProduct::monomial(1, 2), 16));
    const ModelOperator op = build_matho(k, k, MatrixLaurent::monomial(Mat::Identity(1, 1), -1, 16));
    const json j = to_json(op);
    EXPECT_EQ(matrix_from_json(j["matrix"], "matrix"), op.matrix);
    EXPECT_TRUE(j.contains("theta1"));
    EXPECT_TRUE(j.contains("theta2"));
    const json m = to_json(displacement_check(op, DisplacementKind::H1));
    EXPECT_EQ(m["kind"], "H1");
    EXPECT_EQ(m["verdict"], "accept");
    for (const char* key : {"residual", "threshold", "displacement_norm"}) EXPECT_TRUE(m.contains(key));
}

TEST(Scenario, MinimalParses) {
    const Scenario s = parse_scenario(minimal_check());
    EXPECT_EQ(*s.command, Command::check);
    EXPECT_EQ(s.trunc_order, 16);
    EXPECT_EQ(*s.family, Family::hankel);
    ASSERT_EQ(s.kinds.size(), 1u);
    EXPECT_EQ(s.kinds[0], "H1");
    json j = minimal_check();
    j.erase("family");  // inferred from the kind
    EXPECT_EQ(*parse_scenario(j).family, Family::hankel);
}

TEST(Scenario, ErrorsNameTheField) {
    json frame = minimal_check();
    frame["theta1"] = json::parse(R"({"dim": 2, "factors": [{"frame": [[1], [1]]}]})");
    EXPECT_EQ(error_field(frame), "theta1.factors[0].frame");

    json tol = minimal_check();
    tol["tolerance"] = 1.0;
    EXPECT_EQ(error_field(tol), "tolerance");
    Overrides ov;
    ov.tolerance = 1e-20;
    EXPECT_EQ(error_field(minimal_check(), ov), "tolerance");

    json version = minimal_check();
    version["schema_version"] = 2;
    EXPECT_EQ(error_field(version), "schema_version");

    json order = minimal_check();
    order["trunc_order"] = 4;
    EXPECT_EQ(error_field(order), "trunc_order");

    json unknown = minimal_check();
    unknown["symbl"] = 1;
    EXPECT_EQ(error_field(unknown), "symbl");

    json kind = minimal_check();
    kind["kind"] = "H9";
    EXPECT_EQ(error_field(kind), "kind");

    Overrides cmd;
    cmd.command = Command::verify;
    EXPECT_EQ(error_field(minimal_check(), cmd), "command");

    json impure = minimal_check();
    impure["theta1"] = json::parse(R"({"dim": 2, "factors": [{"frame": [[1], [0]]}]})");
    EXPECT_EQ(error_field(impure), "theta1");

    json no_symbol = minimal_check();
    no_symbol.erase("symbol");
    EXPECT_NE(error_field(no_symbol), "<no error>");
}

TEST(Scenario, OverridesApply) {
    Overrides ov;
    ov.trunc_order = 32;
    ov.seed = 99;
    ov.tolerance = 1e-10;
    const Scenario s = parse_scenario(minimal_check(), ov);
    EXPECT_EQ(s.trunc_order, 32);
    EXPECT_EQ(s.seed, 99u);
    EXPECT_EQ(s.tolerance, 1e-10);
}

TEST(Scenario, LoadErrors) {
    try {
        load_scenario(scenario_path("does_not_exist.json"));
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.field(), "scenario");
    }
    try {
        load_scenario(scenario_path("bad_frame.json"));
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.field(), "theta1.factors[0].frame");
    }
}

TEST(Report, VerdictsAndExitCodes) {
    Report r;
    r.command = "check";
    r.add("a", 0.0, 1e-8, true);
    EXPECT_EQ(exit_code(r), kExitAccept);
    r.records.push_back(CheckRecord{"b", 1.0, 1e-8, Verdict::info, "informational"});
    r.records.push_back(CheckRecord{"c", 0.0, 1e-8, Verdict::skip, "hypothesis fails"});
    EXPECT_TRUE(r.accepted());
    EXPECT_EQ(to_json(r)["overall"], "accept");
    r.add("d", 1.0, 1e-8, false);
    EXPECT_FALSE(r.accepted());
    EXPECT_EQ(exit_code(r), kExitReject);
    const json j = to_json(r, false);
    EXPECT_EQ(j["overall"], "reject");
    EXPECT_FALSE(j.contains("wall_time_s"));
    for (const char* key : {"version", "command", "scenario", "seed", "trunc_order", "tolerance", "records", "results"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["records"][1]["verdict"], "info");

    const std::string text = to_text(r);
    EXPECT_NE(text.find("1.000e+00"), std::string::npos);
    EXPECT_NE(text.find("overall: reject"), std::string::npos);

    const json e = error_json(kExitInvalid, "bad", "tolerance");
    EXPECT_EQ(e["overall"], "invalid");
    EXPECT_EQ(e["error"]["field"], "tolerance");
}

TEST(Runner, Examples) {
    const Report ok = run_command(load_scenario(scenario_path("check_h1_accept.json")));
    EXPECT_EQ(exit_code(ok), kExitAccept);
    ASSERT_EQ(ok.records.size(), 1u);
    EXPECT_LE(ok.records[0].residual, 1e-12);

    const Report bad = run_command(load_scenario(scenario_path("check_h1_reject.json")));
    EXPECT_EQ(exit_code(bad), kExitReject);
    EXPECT_NEAR(bad.records[0].residual, 1.0, 1e-12);

    const Report all = run_command(load_scenario(scenario_path("verify_all.json")));
    EXPECT_EQ(exit_code(all), kExitAccept);
    EXPECT_EQ(all.records.size(), transform_names().size());
    for (const auto& rec : all.records) EXPECT_LE(rec.residual, 1e-8) << rec.name;

    const Report build = run_command(load_scenario(scenario_path("build_matto.json")));
    EXPECT_EQ(matrix_from_json(build.results["operator"]["matrix"], "matrix"),
              (Mat(2, 2) << 0, 0, 1, 0).finished());
}

TEST(Runner, RecoverStopsOnRejection) {
    json j = minimal_check();
    j["command"] = "recover";
    j.erase("symbol");
    j.erase("kind");
    j["matrix"] = json::parse("[[0, 1], [0, 0]]");
    j["J1"] = json::parse(R"({"U": [[1]]})");
    j["J2"] = json::parse(R"({"U": [[1]]})");
    const Report r = run_command(parse_scenario(j));
    EXPECT_EQ(exit_code(r), kExitReject);
    EXPECT_EQ(r.records.size(), 1u);
    EXPECT_FALSE(r.results.contains("symbol"));
}

TEST(Runner, Deterministic) {
    for (const char* name : {"verify_fuzz.json", "check_all_random_modifiers.json", "space_blaschke.json"}) {
        const Scenario s = load_scenario(scenario_path(name));
        EXPECT_EQ(to_json(run_command(s), false).dump(), to_json(run_command(s), false).dump()) << name;
    }
}
