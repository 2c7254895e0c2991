#include "matho/transforms.hpp"

#include "matho/error.hpp"

namespace matho {

namespace {

SemilinearMatrix linear(const Mat& m) { return SemilinearMatrix{m, false}; }

Mat linear_part(const SemilinearMatrix& m) {
    if (m.antilinear) throw NumericError("composition expected to be linear");
    return m.m;
}

SemilinearMatrix tau_matrix(const ModelSpace& from, const ModelSpace& to) {
    const MatrixLaurent th = from.theta();
    return represent([th](const VectorLaurent& f) { return tau(th, f); }, false, from, to).op;
}

SemilinearMatrix jstar_matrix(const Conjugation& j, const ModelSpace& from, const ModelSpace& to) {
    return represent([j](const VectorLaurent& f) { return jstar(j, f); }, true, from, to).op;
}

SemilinearMatrix c_theta_matrix(const Conjugation& j, const ModelSpace& space) {
    const MatrixLaurent th = space.theta();
    return represent([th, j](const VectorLaurent& f) { return c_theta(th, j, f).value; }, true, space, space).op;
}

SemilinearMatrix crofoot_matrix(const BlaschkePotapovProduct& theta, const CrofootData& w, CrofootDirection dir,
                                const ModelSpace& from, const ModelSpace& to) {
    return represent([theta, w, dir](const VectorLaurent& f) { return crofoot_map(theta, w, f, dir); }, false, from,
                     to)
        .op;
}

TransformResult finish(std::string name, const Mat& lhs, const Mat& rhs) {
    TransformResult r;
    r.name = std::move(name);
    r.residual = (lhs - rhs).norm();
    r.lhs_norm = lhs.norm();
    return r;
}

TransformResult skipped(std::string name, std::string note) {
    TransformResult r;
    r.name = std::move(name);
    r.applicable = false;
    r.note = std::move(note);
    return r;
}

MatrixLaurent constant(const Mat& c, int order) { return MatrixLaurent::monomial(c, 0, order); }

}  // namespace

const std::vector<std::string>& transform_names() {
    static const std::vector<std::string> names = {"crofoot", "tau",     "jstar",   "ctheta",  "prop61a",
                                                   "prop61b", "prop61c", "prop61d", "prop61e", "prop61f",
                                                   "eq_sz",   "eq_ddd",  "remark412"};
    return names;
}

TransformVerifier::TransformVerifier(TransformInputs inputs) : in_(std::move(inputs)) {
    const int d = in_.theta1.dim();
    if (in_.theta2.dim() != d || in_.phi.dim() != d || in_.j1.dim() != d || in_.j2.dim() != d) {
        throw DimensionError("all inputs must share the coefficient dimension");
    }
    if (!in_.w1) in_.w1 = CrofootData::zero(d);
    if (!in_.w2) in_.w2 = CrofootData::zero(d);
    if (in_.w1->dim() != d) throw DimensionError("W1 dimension mismatch", "W1");
    if (in_.w2->dim() != d) throw DimensionError("W2 dimension mismatch", "W2");
}

SpacePtr TransformVerifier::k1() {
    auto& s = spaces_["k1"];
    if (!s) s = std::make_shared<const ModelSpace>(ModelSpace::build(in_.theta1, in_.order));
    return s;
}
SpacePtr TransformVerifier::k2() {
    auto& s = spaces_["k2"];
    if (!s) s = std::make_shared<const ModelSpace>(ModelSpace::build(in_.theta2, in_.order));
    return s;
}
SpacePtr TransformVerifier::k1_tilde() {
    auto& s = spaces_["k1~"];
    if (!s) s = std::make_shared<const ModelSpace>(ModelSpace::build(reflect_tilde(in_.theta1), in_.order));
    return s;
}
SpacePtr TransformVerifier::k2_tilde() {
    auto& s = spaces_["k2~"];
    if (!s) s = std::make_shared<const ModelSpace>(ModelSpace::build(reflect_tilde(in_.theta2), in_.order));
    return s;
}
SpacePtr TransformVerifier::k1_conj() {
    auto& s = spaces_["k1J"];
    if (!s) s = std::make_shared<const ModelSpace>(ModelSpace::build(reflect_conjugated(in_.theta1, in_.j1), in_.order));
    return s;
}
SpacePtr TransformVerifier::k2_conj() {
    auto& s = spaces_["k2J"];
    if (!s) s = std::make_shared<const ModelSpace>(ModelSpace::build(reflect_conjugated(in_.theta2, in_.j2), in_.order));
    return s;
}

bool TransformVerifier::symmetric1() {
    if (!sym1_) sym1_ = validate(in_.theta1, &in_.j1).j_symmetric;
    return *sym1_;
}
bool TransformVerifier::symmetric2() {
    if (!sym2_) sym2_ = validate(in_.theta2, &in_.j2).j_symmetric;
    return *sym2_;
}

MatrixLaurent TransformVerifier::theta1() { return k1()->theta(); }
MatrixLaurent TransformVerifier::theta2() { return k2()->theta(); }

TransformResult TransformVerifier::run(const std::string& name) {
    if (name == "crofoot") return crofoot(CrofootSymbol::derived);
    if (name == "tau") return tau();
    if (name == "jstar") return jstar();
    if (name == "ctheta") return ctheta(ConjugationSymbol::derived);
    if (name.size() == 7 && name.rfind("prop61", 0) == 0 && name[6] >= 'a' && name[6] <= 'f') {
        return prop61(name[6]);
    }
    if (name == "eq_sz") return eq_sz();
    if (name == "eq_ddd") return eq_ddd();
    if (name == "remark412") return remark412();
    throw ValidationError("unknown transform '" + name + "'", "name");
}

std::vector<TransformResult> TransformVerifier::run_all() {
    std::vector<TransformResult> out;
    for (const auto& n : transform_names()) out.push_back(run(n));
    return out;
}

TransformResult TransformVerifier::crofoot(CrofootSymbol symbol) {
    const CrofootData& w1 = *in_.w1;
    const CrofootData& w2 = *in_.w2;
    const int m = in_.order;
    const int d = in_.theta1.dim();
    auto space_w = [&](const BlaschkePotapovProduct& theta, const CrofootData& w, const ModelSpace& k) {
        std::vector<VectorLaurent> span;
        for (const auto& e : k.basis()) span.push_back(crofoot_map(theta, w, e, CrofootDirection::forward));
        return std::make_shared<const ModelSpace>(ModelSpace::from_spanning_set(crofoot_theta_w(theta, w, m), span, m));
    };
    const SpacePtr kw1 = space_w(in_.theta1, w1, *k1());
    const SpacePtr kw2 = space_w(in_.theta2, w2, *k2());

    const Mat b = build_matho(k1(), k2(), in_.phi).matrix;
    const Mat fwd2 = linear_part(crofoot_matrix(in_.theta2, w2, CrofootDirection::forward, *k2(), *kw2));
    const Mat adj1 = linear_part(crofoot_matrix(in_.theta1, w1, CrofootDirection::adjoint, *kw1, *k1()));
    const Mat lhs = fwd2 * b * adj1;

    MatrixLaurent psi;
    const Mat id = Mat::Identity(d, d);
    if (symbol == CrofootSymbol::derived) {
        const Mat dw2_inv = w2.d_wstar().inverse();
        const Mat dw1_inv = w1.d_wstar().inverse();
        const MatrixLaurent left =
            constant(dw2_inv, 0) - mul(constant(dw2_inv * w2.w(), 0), tilde_series(theta2()));
        const MatrixLaurent right =
            mul(constant(id, 0) - mul(theta1(), constant(w1.w().adjoint(), 0)), constant(dw1_inv, 0));
        psi = mul(mul(left, in_.phi), right);
    } else {
        const int n = refit_sample_count(m);
        const auto zs = circle_points(n);
        const auto phi_vals = sample_circle(in_.phi, n);
        std::vector<Mat> vals(zs.size());
        for (std::size_t k = 0; k < zs.size(); ++k) {
            const Mat t1 = in_.theta1.evaluate(zs[k]);
            const Mat t2 = in_.theta2.evaluate(zs[k]);
            const Mat g2 = w2.d_wstar() * (id - t2 * w2.w().adjoint()).inverse();
            const Mat g1 = w1.d_wstar() * (id + theta_w_value(t1, w1) * w1.w().adjoint()).inverse();
            vals[k] = g2 * phi_vals[k] * g1;
        }
        psi = fit_from_samples<MatrixShape>(vals, m);
    }
    const Mat rhs = build_matho(kw1, kw2, psi).matrix;
    TransformResult r = finish("crofoot", lhs, rhs);
    if (symbol == CrofootSymbol::literal) r.note = "literal symbol formula";
    return r;
}

TransformResult TransformVerifier::tau() {
    const Mat b = build_matho(k1(), k2(), in_.phi).matrix;
    const Mat t2 = linear_part(tau_matrix(*k2(), *k2_tilde()));
    const Mat t1_adj = linear_part(tau_matrix(*k1_tilde(), *k1()));
    const MatrixLaurent psi = reverse(mul(mul(tilde_series(theta2()), in_.phi), theta1()));
    return finish("tau", t2 * b * t1_adj, build_matho(k1_tilde(), k2_tilde(), psi).matrix);
}

TransformResult TransformVerifier::jstar() {
    const SemilinearMatrix b = linear(build_matho(k1(), k2(), in_.phi).matrix);
    const SemilinearMatrix j2 = jstar_matrix(in_.j2, *k2(), *k2_conj());
    const SemilinearMatrix j1 = jstar_matrix(in_.j1, *k1_conj(), *k1());
    const Mat lhs = linear_part(compose(j2, compose(b, j1)));
    const MatrixLaurent psi = conjugate_symbol(in_.j2, in_.phi, in_.j1);
    return finish("jstar", lhs, build_matho(k1_conj(), k2_conj(), psi).matrix);
}

TransformResult TransformVerifier::ctheta(ConjugationSymbol symbol) {
    if (!symmetric1() || !symmetric2()) return skipped("ctheta", "requires J-symmetric Theta1 and Theta2");
    const SemilinearMatrix b = linear(build_matho(k1(), k2(), in_.phi).matrix);
    const Mat lhs = linear_part(compose(c_theta_matrix(in_.j2, *k2()), compose(b, c_theta_matrix(in_.j1, *k1()))));
    const MatrixLaurent inner = symbol == ConjugationSymbol::derived
                                    ? mul(mul(tilde_series(theta2()), in_.phi), theta1())
                                    : mul(mul(theta2(), in_.phi), tilde_series(theta1()));
    const MatrixLaurent psi = sandwich(in_.j2, inner, in_.j1);
    TransformResult r = finish("ctheta", lhs, build_matho(k1(), k2(), psi).matrix);
    if (symbol == ConjugationSymbol::literal) r.note = "literal symbol formula";
    return r;
}

TransformResult TransformVerifier::prop61(char which) {
    const std::string name = std::string("prop61") + which;
    const bool need1 = which == 'a' || which == 'b' || which == 'f';
    const bool need2 = which == 'a' || which == 'b' || which == 'e';
    if ((need1 && !symmetric1()) || (need2 && !symmetric2())) {
        return skipped(name, "requires J-symmetric inner functions");
    }
    switch (which) {
        case 'a': {
            const SemilinearMatrix a = linear(build_matto(k1(), k2(), in_.phi).matrix);
            const Mat lhs =
                linear_part(compose(c_theta_matrix(in_.j2, *k2()), compose(a, c_theta_matrix(in_.j1, *k1()))));
            const MatrixLaurent psi =
                sandwich(in_.j2, mul(mul(adjoint_star(theta2()), in_.phi), theta1()), in_.j1);
            return finish(name, lhs, build_matto(k1(), k2(), psi).matrix);
        }
        case 'b': {
            TransformResult r = ctheta(ConjugationSymbol::derived);
            r.name = name;
            return r;
        }
        case 'c': {
            const SemilinearMatrix a = linear(build_matto(k1(), k2(), in_.phi).matrix);
            const Mat lhs = linear_part(compose(jstar_matrix(in_.j2, *k2(), *k2_conj()),
                                                compose(a, jstar_matrix(in_.j1, *k1_conj(), *k1()))));
            const MatrixLaurent psi = conjugate_symbol(in_.j2, in_.phi, in_.j1);
            return finish(name, lhs, build_matto(k1_conj(), k2_conj(), psi).matrix);
        }
        case 'd': {
            TransformResult r = jstar();
            r.name = name;
            return r;
        }
        case 'e': {
            const SemilinearMatrix a = linear(build_matto(k1(), k2(), in_.phi).matrix);
            const Mat lhs = linear_part(
                compose(c_theta_matrix(in_.j2, *k2()), compose(a, jstar_matrix(in_.j1, *k1_conj(), *k1()))));
            const MatrixLaurent psi = sandwich(in_.j2, mul(tilde_series(theta2()), reverse(in_.phi)), in_.j1);
            return finish(name, lhs, build_matho(k1_conj(), k2(), psi).matrix);
        }
        default: {
            const SemilinearMatrix b = linear(build_matho(k1(), k2(), in_.phi).matrix);
            const Mat lhs = linear_part(
                compose(jstar_matrix(in_.j2, *k2(), *k2_conj()), compose(b, c_theta_matrix(in_.j1, *k1()))));
            const MatrixLaurent psi = sandwich(in_.j2, mul(in_.phi, theta1()), in_.j1);
            return finish(name, lhs, build_matto(k1(), k2_conj(), psi).matrix);
        }
    }
}

TransformResult TransformVerifier::eq_sz() {
    const ModelSpace& k = *k1();
    const ModelSpace& kt = *k1_tilde();
    const Mat lhs = linear_part(tau_matrix(k, kt)) * k.s() * linear_part(tau_matrix(kt, k));
    return finish("eq_sz", lhs, kt.s_star());
}

TransformResult TransformVerifier::eq_ddd() {
    const ModelSpace& k = *k1();
    const ModelSpace& kt = *k1_tilde();
    const Mat rhs = linear_part(tau_matrix(kt, k)) * kt.d() * linear_part(tau_matrix(k, kt));
    return finish("eq_ddd", k.d_tilde(), rhs);
}

TransformResult TransformVerifier::remark412() {
    if (!symmetric1()) return skipped("remark412", "requires J-symmetric Theta1");
    const SpacePtr k = k1();
    const SemilinearMatrix a = linear(build_matto(k, k, in_.phi).matrix);
    const SemilinearMatrix c = c_theta_matrix(in_.j1, *k);
    const Mat lhs = linear_part(compose(c, compose(a, c)));
    TransformResult r = finish("remark412", lhs, build_matto(k, k, adjoint_star(in_.phi)).matrix);

    const double scale = 1.0 + in_.phi.l1_norm();
    const bool phi_symmetric =
        coeff_distance(sandwich(in_.j1, in_.phi, in_.j1), adjoint_star(in_.phi)) <= 1e-12 * scale;
    const bool commutes = coeff_distance(mul(in_.phi, theta1()), mul(theta1(), in_.phi)) <= 1e-12 * scale;
    if (!phi_symmetric || !commutes) {
        r.informational = true;
        r.note = phi_symmetric ? "Phi does not commute with Theta" : "Phi is not J-symmetric";
    }
    return r;
}

}  // namespace matho
