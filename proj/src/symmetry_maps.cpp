#include "matho/symmetry_maps.hpp"

#include <algorithm>

namespace matho {

VectorLaurent jstar(const Conjugation& j, const VectorLaurent& f) {
    if (j.dim() != f.dim()) throw DimensionError("jstar: conjugation dimension differs");
    VectorLaurent out(f.rows(), 1, f.order());
    for (int n = -f.order(); n <= f.order(); ++n) out.coeff(n) = j.matrix() * f.coeff(n).conjugate();
    out.set_tail_bound(f.tail_bound());
    return out;
}

MatrixLaurent tilde_series(const MatrixLaurent& f) {
    MatrixLaurent out(f.cols(), f.rows(), f.order());
    for (int n = -f.order(); n <= f.order(); ++n) out.coeff(n) = f.coeff(n).adjoint();
    out.set_tail_bound(f.tail_bound());
    return out;
}

MatrixLaurent conjugate_symbol(const Conjugation& left, const MatrixLaurent& f, const Conjugation& right) {
    if (left.dim() != f.rows() || right.dim() != f.cols()) throw DimensionError("conjugate_symbol: dimensions differ");
    MatrixLaurent out(f.rows(), f.cols(), f.order());
    for (int n = -f.order(); n <= f.order(); ++n) out.coeff(n) = conjugate_operator(left, f.coeff(n), right);
    out.set_tail_bound(f.tail_bound());
    return out;
}

MatrixLaurent sandwich(const Conjugation& left, const MatrixLaurent& f, const Conjugation& right) {
    return reverse(conjugate_symbol(left, f, right));
}

VectorLaurent tau(const MatrixLaurent& theta, const VectorLaurent& f) {
    if (theta.cols() != f.dim()) throw DimensionError("tau: dimensions differ");
    return shift(mul(tilde_series(theta), reverse(f)), -1).truncated(f.order());
}

ConjugationResult c_theta(const MatrixLaurent& theta, const Conjugation& j, const VectorLaurent& f, double tol) {
    if (theta.cols() != f.dim()) throw DimensionError("c_theta: dimensions differ");
    // J(f(z)) pointwise has coefficient J(a_{-n}) at n
    const VectorLaurent jf = reverse(jstar(j, f));
    ConjugationResult r{mul(theta, shift(jf, -1)).truncated(f.order()), validate(theta, &j, tol).j_symmetric};
    return r;
}

Mat theta_w_value(const Mat& theta_z, const CrofootData& w) {
    const Mat id = Mat::Identity(w.dim(), w.dim());
    Eigen::PartialPivLU<Mat> lu(id - theta_z * w.w().adjoint());
    return -w.w() + w.d_wstar() * lu.solve(theta_z * w.d_w());
}

VectorLaurent crofoot_map(const BlaschkePotapovProduct& theta, const CrofootData& w, const VectorLaurent& f,
                          CrofootDirection direction) {
    if (theta.dim() != w.dim() || theta.dim() != f.dim()) throw DimensionError("crofoot_map: dimensions differ");
    // both directions reduce to the identity
    if (w.w().isZero(0.0)) return f;
    const int order = f.order();
    const Mat id = Mat::Identity(w.dim(), w.dim());
    const Mat ws = w.w().adjoint();
    std::vector<Mat> values;
    for (cplx z : circle_points(refit_sample_count(order))) {
        const Mat t = theta.evaluate(z);
        const Mat m = direction == CrofootDirection::forward ? Mat(id - t * ws) : Mat(id + theta_w_value(t, w) * ws);
        Eigen::PartialPivLU<Mat> lu(m);
        values.push_back(w.d_wstar() * lu.solve(evaluate(f, z)));
    }
    VectorLaurent out = fit_from_samples<VectorShape>(values, order);
    // ||(I - Theta W^*)^{-1}|| <= 1 / (1 - ||W||) bounds the propagated input tail
    out.add_tail(f.tail_bound() / (1.0 - kMaxCrofootNorm));
    return out;
}

SemilinearMatrix compose(const SemilinearMatrix& a, const SemilinearMatrix& b) {
    if (a.m.cols() != b.m.rows()) throw DimensionError("compose: inner dimensions differ");
    if (a.antilinear) return {a.m * b.m.conjugate(), !b.antilinear};
    return {a.m * b.m, b.antilinear};
}

Representation represent(const VectorMap& map, bool antilinear, const ModelSpace& source, const ModelSpace& target) {
    Representation r;
    r.op.antilinear = antilinear;
    r.op.m.resize(target.dim_k(), source.dim_k());
    for (int j = 0; j < source.dim_k(); ++j) {
        const VectorLaurent img = map(source.basis()[static_cast<std::size_t>(j)]);
        r.op.m.col(j) = target.coords(img);
        r.leakage = std::max(r.leakage, target.distance_to_space(img));
    }
    return r;
}

}  // namespace matho
