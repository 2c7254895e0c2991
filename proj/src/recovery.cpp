#include "matho/recovery.hpp"

#include <algorithm>

#include "matho/symmetry_maps.hpp"

namespace matho {

DisplacementFactors solve_displacement(const ModelOperator& a) {
    a.check();
    const ModelSpace& k1 = *a.domain;
    const ModelSpace& k2 = *a.codomain;
    const int n1 = k1.dim_k();
    const int n2 = k2.dim_k();
    const Mat x = a.matrix - k2.s() * a.matrix * k1.s_star();
    // vec(B1 D1) = (D1^T kron I) vec(B1), vec(D2 C) = (I kron D2) vec(C)
    const int nn = n1 * n2;
    Mat sys = Mat::Zero(nn, 2 * nn);
    const Mat d1t = k1.d().transpose();
    const Mat& d2 = k2.d();
    for (int p = 0; p < n1; ++p) {
        for (int q = 0; q < n1; ++q) {
            sys.block(p * n2, q * n2, n2, n2) = d1t(p, q) * Mat::Identity(n2, n2);
        }
        sys.block(p * n2, nn + p * n2, n2, n2) = d2;
    }
    const Vec rhs = Eigen::Map<const Vec>(x.data(), nn);
    // the threshold must be set before compute(): the rank is fixed there
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(sys.rows(), sys.cols());
    cod.setThreshold(1e-12);
    cod.compute(sys);
    const Vec sol = cod.solve(rhs);
    DisplacementFactors f;
    f.b1 = Eigen::Map<const Mat>(sol.data(), n2, n1);
    const Mat c = Eigen::Map<const Mat>(sol.data() + nn, n2, n1);
    f.b2 = c.adjoint();
    f.residual = (x - f.b1 * k1.d() - d2 * c).norm();
    return f;
}

namespace {

MatrixLaurent toeplitz_symbol(const ModelOperator& a, const DisplacementFactors& f) {
    const ModelSpace& k1 = *a.domain;
    const ModelSpace& k2 = *a.codomain;
    const int d = k1.dim();
    const int order = std::max(k1.order(), k2.order());
    MatrixLaurent psi = MatrixLaurent::zero(d, order);
    MatrixLaurent xi = MatrixLaurent::zero(d, order);
    for (int i = 0; i < d; ++i) {
        const VectorLaurent pc = k2.synthesize(f.b1 * k1.k0_columns().col(i)).resized(order);
        const VectorLaurent xc = k1.synthesize(f.b2 * k2.k0_columns().col(i)).resized(order);
        for (int n = -order; n <= order; ++n) {
            psi.coeff(n).col(i) = pc.coeff(n);
            xi.coeff(n).col(i) = xc.coeff(n);
        }
    }
    return psi + adjoint_star(xi);
}

}  // namespace

RecoveryResult recover_symbol(const ModelOperator& op, Family family, const RecoveryOptions& options) {
    op.check();
    RecoveryResult r;
    if (family == Family::toeplitz) {
        r.membership = displacement_check(op, DisplacementKind::T1, options.threshold);
        if (!r.membership.accept) throw ValidationError("operator is rejected by the T1 displacement test", "matrix");
        r.symbol = toeplitz_symbol(op, solve_displacement(op));
    } else {
        r.membership = displacement_check(op, DisplacementKind::H1, options.threshold);
        if (!r.membership.accept) throw ValidationError("operator is rejected by the H1 displacement test", "matrix");
        if (options.j1 == nullptr || options.j2 == nullptr) {
            throw ValidationError("hankel recovery needs conjugations J1 and J2", "conjugations");
        }
        const ModelSpace& k1 = *op.domain;
        const ModelSpace& k2 = *op.codomain;
        if (!k1.product() || !k2.product()) throw ValidationError("hankel recovery needs product-form inner functions");
        if (!validate(*k1.product(), options.j1).j_symmetric) throw ValidationError("theta1 is not J1-symmetric", "theta1");
        if (!validate(*k2.product(), options.j2).j_symmetric) throw ValidationError("theta2 is not J2-symmetric", "theta2");
        // J2^* B C_1 is a MATTO from K1 into K_{(Theta2)_J2}
        const auto k2j = std::make_shared<const ModelSpace>(
            ModelSpace::build(reflect_conjugated(*k2.product(), *options.j2), k2.order()));
        const Conjugation& j1 = *options.j1;
        const Conjugation& j2 = *options.j2;
        const MatrixLaurent& th1 = k1.theta();
        const Representation c1 = represent(
            [&](const VectorLaurent& f) { return c_theta(th1, j1, f).value; }, true, k1, k1);
        const Representation js2 = represent([&](const VectorLaurent& f) { return jstar(j2, f); }, true, k2, *k2j);
        const SemilinearMatrix bmat{op.matrix, false};
        const SemilinearMatrix a = compose(js2.op, compose(bmat, c1.op));
        const ModelOperator at{op.domain, k2j, a.m};
        const MatrixLaurent sigma = toeplitz_symbol(at, solve_displacement(at));
        // Sigma = J2 Phi Theta1 J1 pointwise, so Phi = (J2 Sigma J1) Theta1^*
        r.symbol = mul(sandwich(j2, sigma, j1), adjoint_star(th1));
        if (k1.product()->is_polynomial()) r.symbol = r.symbol.truncated(std::max(k1.order(), k2.order()));
    }
    if (options.reduce) {
        r.symbol = reduce_modulo_kernel(r.symbol, KernelContext{op.domain, op.codomain, family, options.j1, options.j2});
    }
    r.rebuild_residual = (build_operator(family, op.domain, op.codomain, r.symbol).matrix - op.matrix).norm();
    return r;
}

}  // namespace matho
