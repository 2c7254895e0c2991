#include "matho/runner.hpp"

#include <chrono>

#include "matho/kernel_class.hpp"
#include "matho/random.hpp"
#include "matho/recovery.hpp"
#include "matho/transforms.hpp"

namespace matho {

namespace {

SpacePtr make_space(const BlaschkePotapovProduct& theta, int order) {
    return std::make_shared<const ModelSpace>(ModelSpace::build(theta, order));
}

struct Setup {
    SpacePtr k1;
    SpacePtr k2;
};

Setup spaces(const Scenario& s) { return {make_space(*s.theta1, s.trunc_order), make_space(*s.theta2, s.trunc_order)}; }

ModelOperator the_operator(const Scenario& s, const Setup& st) {
    if (s.matrix) {
        const ModelOperator op{st.k1, st.k2, *s.matrix};
        if (op.matrix.rows() != st.k2->dim_k() || op.matrix.cols() != st.k1->dim_k()) {
            throw DimensionError("expected a " + std::to_string(st.k2->dim_k()) + " x " + std::to_string(st.k1->dim_k()) +
                                     " matrix (dim K_theta2 x dim K_theta1)",
                                 "matrix");
        }
        return op;
    }
    return build_operator(*s.family, st.k1, st.k2, *s.symbol);
}

void run_space(const Scenario& s, Report& r) {
    const bool first = s.space == "theta1";
    const BlaschkePotapovProduct& theta = first ? *s.theta1 : *s.theta2;
    const Conjugation* j = first ? (s.j1 ? &*s.j1 : nullptr) : (s.j2 ? &*s.j2 : nullptr);
    const ModelSpace k = ModelSpace::build(theta, s.trunc_order);
    const InnerReport v = validate(theta, j);
    json basis = json::array();
    for (const auto& e : k.basis()) basis.push_back(to_json(e));
    json validation{{"inner", v.inner},
                    {"pure", v.pure},
                    {"unitarity_defect", v.unitarity_defect},
                    {"value_at_zero", v.value_at_zero}};
    if (j != nullptr) {
        validation["j_symmetric"] = v.j_symmetric;
        validation["j_defect"] = v.j_defect;
    }
    r.results = json{{"space", s.space},
                     {"theta", to_json(theta)},
                     {"dim", k.dim()},
                     {"dim_k", k.dim_k()},
                     {"basis", basis},
                     {"S", matrix_to_json(k.s())},
                     {"S_star", matrix_to_json(k.s_star())},
                     {"D", matrix_to_json(k.d())},
                     {"D_tilde", matrix_to_json(k.d_tilde())},
                     {"P_D", matrix_to_json(k.p_d())},
                     {"P_D_tilde", matrix_to_json(k.p_d_tilde())},
                     {"defect_rank", k.q_d().cols()},
                     {"defect_tilde_rank", k.q_d_tilde().cols()},
                     {"Omega", matrix_to_json(k.omega())},
                     {"J_theta", matrix_to_json(k.j_theta())},
                     {"gram_defect", k.gram_defect()},
                     {"validation", validation}};
    r.add("basis_orthonormality", k.gram_defect(), s.tolerance, k.gram_defect() <= s.tolerance);
    r.add("inner", v.unitarity_defect, s.tolerance, v.unitarity_defect <= s.tolerance);
}

void run_build(const Scenario& s, Report& r) {
    const Setup st = spaces(s);
    const ModelOperator op = build_operator(*s.family, st.k1, st.k2, *s.symbol);
    const DisplacementKind self = *s.family == Family::toeplitz ? DisplacementKind::T1 : DisplacementKind::H1;
    const MembershipReport m = displacement_check(op, self, s.tolerance);
    r.results = json{{"family", to_string(*s.family)},
                     {"dim_k1", st.k1->dim_k()},
                     {"dim_k2", st.k2->dim_k()},
                     {"operator", to_json(op)},
                     {"membership", to_json(m)}};
    r.add(m.kind, m.residual, m.threshold * (1.0 + m.displacement_norm), m.accept);
}

std::vector<std::string> expand_kinds(const Scenario& s) {
    std::vector<std::string> out;
    for (const auto& k : s.kinds) {
        if (k != "all") {
            out.push_back(k);
            continue;
        }
        for (const auto kind : all_displacement_kinds()) {
            if (is_toeplitz_kind(kind) == (*s.family == Family::toeplitz)) out.push_back(to_string(kind));
        }
        for (const char* sh : {"shift-a", "shift-b", "shift-c", "shift-d"}) out.push_back(sh);
    }
    return out;
}

void run_check(const Scenario& s, Report& r) {
    const Setup st = spaces(s);
    const ModelOperator op = the_operator(s, st);
    const std::vector<std::string> kinds = expand_kinds(s);
    bool modified = false;
    for (const auto& k : kinds) modified = modified || (k.rfind("shift-", 0) != 0 && is_modified_kind(parse_displacement_kind(k)));
    std::optional<Modifiers> mods;
    if (modified) {
        mods = s.modifiers ? *s.modifiers : random_modifiers(*st.k1, *st.k2, s.seed);
        try {
            st.k1->modified_shift(mods->x1);
        } catch (const ValidationError& e) {
            throw ValidationError(e.message(), "modifiers.X1");
        }
        try {
            st.k2->modified_shift(mods->x2);
        } catch (const ValidationError& e) {
            throw ValidationError(e.message(), "modifiers.X2");
        }
    }
    json reports = json::array();
    for (const auto& k : kinds) {
        MembershipReport m;
        double scale = 1.0;
        if (k.rfind("shift-", 0) == 0) {
            m = shift_invariance_check(op, *s.family, k.back(), s.tolerance);
            scale = 1.0 + op.matrix.norm();
        } else {
            m = displacement_check(op, parse_displacement_kind(k), s.tolerance, mods ? &*mods : nullptr);
            scale = 1.0 + m.displacement_norm;
        }
        reports.push_back(to_json(m));
        r.add(m.kind, m.residual, m.threshold * scale, m.accept);
    }
    r.results = json{{"operator", to_json(op)}, {"reports", reports}};
    if (mods) {
        r.results["modifiers"] = json{{"X1", matrix_to_json(mods->x1)},
                                      {"X2", matrix_to_json(mods->x2)},
                                      {"source", s.modifiers ? "scenario" : "random"}};
    }
}

void run_recover(const Scenario& s, Report& r) {
    const Setup st = spaces(s);
    const ModelOperator op = the_operator(s, st);
    const Family fam = *s.family;
    const MembershipReport m =
        displacement_check(op, fam == Family::toeplitz ? DisplacementKind::T1 : DisplacementKind::H1, s.tolerance);
    r.add(m.kind, m.residual, m.threshold * (1.0 + m.displacement_norm), m.accept);
    r.results = json{{"family", to_string(fam)}, {"operator", to_json(op)}, {"membership", to_json(m)}};
    if (!m.accept) return;
    RecoveryOptions opts;
    opts.threshold = s.tolerance;
    opts.j1 = s.j1 ? &*s.j1 : nullptr;
    opts.j2 = s.j2 ? &*s.j2 : nullptr;
    opts.reduce = s.reduce;
    const RecoveryResult rec = recover_symbol(op, fam, opts);
    const double thr = s.tolerance * (1.0 + op.matrix.norm());
    r.add("rebuild", rec.rebuild_residual, thr, rec.rebuild_residual <= thr);
    r.results["symbol"] = to_json(rec.symbol);
    r.results["rebuild_residual"] = rec.rebuild_residual;
    r.results["reduced"] = s.reduce;
}

void run_kernel(const Scenario& s, Report& r) {
    const Setup st = spaces(s);
    const KernelContext ctx{st.k1, st.k2, *s.family, s.j1 ? &*s.j1 : nullptr, s.j2 ? &*s.j2 : nullptr};
    const KernelTestResult k = kernel_test(*s.symbol, ctx, s.tolerance);
    const double scale = 1.0 + s.symbol->norm();
    r.add("kernel_membership", k.distance, s.tolerance * scale, k.in_kernel);
    r.add("zero_operator_agreement", k.operator_norm, 1e-10 * scale, k.agree,
          k.agree ? std::string() : "least-squares verdict and zero-operator check disagree");
    r.results = json{{"family", to_string(*s.family)},
                     {"in_kernel", k.in_kernel},
                     {"distance", k.distance},
                     {"operator_norm", k.operator_norm},
                     {"operator_zero", k.operator_zero},
                     {"agree", k.agree},
                     {"window", k.window}};
}

void add_transform(Report& r, const std::string& prefix, const TransformResult& t, double tol) {
    CheckRecord c{prefix + t.name, t.residual, tol * (1.0 + t.lhs_norm), Verdict::accept, t.note};
    if (!t.applicable) {
        c.verdict = Verdict::skip;
    } else if (t.informational) {
        c.verdict = Verdict::info;
    } else if (!(t.residual <= c.threshold)) {
        c.verdict = Verdict::reject;
    }
    r.records.push_back(std::move(c));
}

std::vector<TransformResult> run_transforms(TransformVerifier& v, const std::string& name) {
    if (name == "all") return v.run_all();
    return {v.run(name)};
}

void run_verify(const Scenario& s, Report& r) {
    r.results = json::object();
    if (s.theta1 && s.theta2 && s.symbol) {
        TransformVerifier v({*s.theta1, *s.theta2, *s.j1, *s.j2, s.w1, s.w2, *s.symbol, s.trunc_order});
        for (const auto& t : run_transforms(v, s.transform)) add_transform(r, "", t, s.tolerance);
    }
    if (s.fuzz && s.fuzz->instances > 0) {
        const FuzzSpec& f = *s.fuzz;
        Rng rng(s.seed);
        const ProductDraw draw{f.dim, f.max_factors, f.max_dim_k, f.max_pole};
        auto random_w = [&]() {
            const Mat g = rng.gaussian(f.dim, f.dim);
            const double n = g.jacobiSvd().singularValues()(0);
            return CrofootData(n > 0.0 ? Mat(g * (f.max_w_norm * rng.uniform(0.0, 1.0) / n)) : g);
        };
        for (int i = 0; i < f.instances; ++i) {
            SymmetricDraw a = random_j_symmetric(rng, draw);
            SymmetricDraw b = random_j_symmetric(rng, draw);
            const MatrixLaurent phi = random_symbol(rng, f.dim, f.symbol_degree, s.trunc_order);
            const CrofootData w1 = random_w();
            const CrofootData w2 = random_w();
            TransformVerifier v({a.theta, b.theta, a.j, b.j, w1, w2, phi, s.trunc_order});
            const std::string prefix = "fuzz[" + std::to_string(i) + "].";
            for (const auto& t : run_transforms(v, s.transform)) add_transform(r, prefix, t, s.tolerance);
        }
        r.results["fuzz"] = json{{"generator", "mt19937_64"},
                                 {"seed", s.seed},
                                 {"instances", f.instances},
                                 {"dim", f.dim},
                                 {"max_pole", f.max_pole}};
    }
    r.results["name"] = s.transform;
}

}  // namespace

Report run_command(const Scenario& s) {
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.command = to_string(*s.command);
    r.seed = s.seed;
    r.trunc_order = s.trunc_order;
    r.tolerance = s.tolerance;
    switch (*s.command) {
        case Command::space: run_space(s, r); break;
        case Command::build: run_build(s, r); break;
        case Command::check: run_check(s, r); break;
        case Command::recover: run_recover(s, r); break;
        case Command::kernel: run_kernel(s, r); break;
        case Command::verify: run_verify(s, r); break;
    }
    r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace matho
