#include "matho/model_space.hpp"

#include <cmath>

#include "matho/linalg.hpp"

namespace matho {

namespace {

constexpr double kGramLimit = 1e-9;

/// sqrt(1 - |a|^2) sum_n conj(a)^n z^n v, truncated to the window.
VectorLaurent szego_column(cplx a, const Vec& v, int order) {
    VectorLaurent out = VectorLaurent::zero(static_cast<int>(v.size()), order);
    const double r = std::abs(a);
    const double scale = std::sqrt(1.0 - r * r);
    cplx power = 1.0;
    for (int n = 0; n <= order; ++n) {
        out.coeff(n) = (scale * power) * v;
        power *= std::conj(a);
    }
    if (r > 0.0) out.set_tail_bound(scale * std::pow(r, order + 1) / (1.0 - r) * v.norm());
    return out;
}

}  // namespace

ModelSpace::ModelSpace(MatrixLaurent theta, std::vector<VectorLaurent> basis, int order,
                       std::optional<BlaschkePotapovProduct> product)
    : theta_(std::move(theta)), basis_(std::move(basis)), order_(order), product_(std::move(product)) {
    if (basis_.empty()) throw ValidationError("model space is trivial (Theta is a constant unitary)", "theta");
    if (gram_defect() > kGramLimit) {
        throw ValidationError("window too small to hold the model-space basis; increase the truncation order",
                              "trunc_order");
    }
    compute_operators();
}

ModelSpace ModelSpace::build(const BlaschkePotapovProduct& theta, int order) {
    if (order < 1) throw ValidationError("truncation order must be positive", "trunc_order");
    require_pure_inner(theta);
    const BlaschkePotapovProduct th = theta.absorbed();
    std::vector<VectorLaurent> basis;
    MatrixLaurent prefix = MatrixLaurent::identity(th.dim(), order);
    for (const auto& f : th.factors()) {
        for (int i = 0; i < f.rank(); ++i) {
            basis.push_back(mul(prefix, szego_column(f.a, f.frame.col(i), order)).truncated(order));
        }
        prefix = mul(prefix, f.series(order)).truncated(order);
    }
    return ModelSpace(theta_laurent(theta, order), std::move(basis), order, theta);
}

ModelSpace ModelSpace::from_spanning_set(MatrixLaurent theta, const std::vector<VectorLaurent>& span, int order) {
    const int n = static_cast<int>(span.size());
    if (n == 0) throw ValidationError("empty spanning set");
    Mat g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) g(i, j) = inner_product(span[static_cast<std::size_t>(j)], span[static_cast<std::size_t>(i)]);
    }
    // new_j = sum_i span_i R_{ij} with G = L L^*, R = L^{-*}: Gram of new basis is R^* G R = I
    Eigen::LLT<Mat> llt(g);
    if (llt.info() != Eigen::Success) throw NumericError("spanning set is linearly dependent");
    const Mat r = llt.matrixU().solve(Mat::Identity(n, n));
    std::vector<VectorLaurent> basis;
    for (int j = 0; j < n; ++j) {
        VectorLaurent e = VectorLaurent::zero(theta.dim(), order);
        for (int i = 0; i <= j; ++i) e += r(i, j) * span[static_cast<std::size_t>(i)].resized(order);
        basis.push_back(e);
    }
    return ModelSpace(theta.resized(order), std::move(basis), order, std::nullopt);
}

Mat ModelSpace::theta_at(cplx lambda) const {
    if (std::abs(lambda) >= 1.0) throw DomainError("|lambda| must be < 1", "lambda");
    if (product_) return product_->evaluate(lambda);
    return evaluate_disk(theta_, lambda);
}

Vec ModelSpace::coords(const VectorLaurent& f) const {
    if (f.dim() != dim()) throw DimensionError("coords: dimension differs from the space");
    Vec c(dim_k());
    for (int i = 0; i < dim_k(); ++i) c(i) = inner_product(f, basis_[static_cast<std::size_t>(i)]);
    return c;
}

VectorLaurent ModelSpace::synthesize(const Vec& c) const {
    if (c.size() != dim_k()) throw DimensionError("synthesize: coordinate length differs from dim K");
    VectorLaurent out = VectorLaurent::zero(dim(), order_);
    for (int i = 0; i < dim_k(); ++i) out += c(i) * basis_[static_cast<std::size_t>(i)];
    return out;
}

VectorLaurent ModelSpace::project(const VectorLaurent& f) const {
    return synthesize(coords(f));
}

VectorLaurent ModelSpace::project_formula(const VectorLaurent& f) const {
    const VectorLaurent fa = analytic_part(f);
    const VectorLaurent inner = analytic_part(mul(adjoint_star(theta_), fa));
    return (fa - mul(theta_, inner)).truncated(std::max(order_, f.order()));
}

double ModelSpace::distance_to_space(const VectorLaurent& f) const {
    const VectorLaurent p = project(f);
    return (f - p).norm();
}

VectorLaurent ModelSpace::kernel(cplx lambda, KernelVariant variant, const Vec& x) const {
    if (x.size() != dim()) throw DimensionError("kernel: vector dimension differs from the space", "x");
    const double r = std::abs(lambda);
    if (r >= 1.0) throw DomainError("|lambda| must be < 1", "lambda");
    const Mat tl = theta_at(lambda);
    if (variant == KernelVariant::k) {
        // (I - Theta Theta(lambda)^*) x, then the Szego factor
        VectorLaurent g = VectorLaurent::monomial(x, 0, order_) - mul(theta_, VectorLaurent::monomial(tl.adjoint() * x, 0, order_));
        MatrixLaurent szego = MatrixLaurent::zero(1, order_);
        cplx power = 1.0;
        for (int n = 0; n <= order_; ++n) {
            szego.coeff(n)(0, 0) = power;
            power *= std::conj(lambda);
        }
        if (r > 0.0) szego.set_tail_bound(std::pow(r, order_ + 1) / (1.0 - r));
        // scalar series times vector series, coefficientwise
        VectorLaurent out = VectorLaurent::zero(dim(), 2 * order_);
        const auto [lo, hi] = g.support();
        for (int n = 0; n <= order_; ++n) {
            const cplx s = szego.coeff(n)(0, 0);
            if (s == cplx(0.0)) continue;
            for (int m = lo; m <= hi; ++m) out.coeff(n + m) += s * g.coeff(m);
        }
        out.set_tail_bound(szego.l1_norm() * g.tail_bound() + szego.tail_bound() * (g.l1_norm() + g.tail_bound()));
        return out.truncated(order_);
    }
    // q_m = c_{m+1} x + lambda q_{m+1}
    VectorLaurent out = VectorLaurent::zero(dim(), order_);
    Vec q = Vec::Zero(dim());
    for (int m = order_ - 1; m >= 0; --m) {
        q = theta_.coeff(m + 1) * x + lambda * q;
        out.coeff(m) = q;
    }
    out.set_tail_bound(theta_.tail_bound() * x.norm() / (1.0 - r));
    return out;
}

double ModelSpace::gram_defect() const {
    const int n = dim_k();
    Mat g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) g(i, j) = inner_product(basis_[static_cast<std::size_t>(j)], basis_[static_cast<std::size_t>(i)]);
    }
    return (g - Mat::Identity(n, n)).norm();
}

void ModelSpace::compute_operators() {
    const int n = dim_k();
    s_.resize(n, n);
    for (int j = 0; j < n; ++j) s_.col(j) = coords(shift(basis_[static_cast<std::size_t>(j)], 1));
    s_star_ = s_.adjoint();
    const Mat id = Mat::Identity(n, n);
    d_ = id - s_ * s_star_;
    d_tilde_ = id - s_star_ * s_;

    k0_.resize(n, dim());
    k0t_.resize(n, dim());
    for (int i = 0; i < dim(); ++i) {
        const Vec e = Vec::Unit(dim(), i);
        k0_.col(i) = coords(kernel(0.0, KernelVariant::k, e));
        k0t_.col(i) = coords(kernel(0.0, KernelVariant::k_tilde, e));
    }
    q_d_ = orthonormal_range(k0_);
    q_dt_ = orthonormal_range(k0t_);
    p_d_ = q_d_ * q_d_.adjoint();
    p_dt_ = q_dt_ * q_dt_.adjoint();

    omega_ = pseudo_inverse(k0_);
    const Mat restricted = q_d_.adjoint() * d_ * q_d_;
    Eigen::FullPivLU<Mat> lu(restricted);
    if (!lu.isInvertible()) throw NumericError("D_Theta is singular on its defect space");
    j_theta_ = q_d_ * lu.inverse() * q_d_.adjoint();
}

Mat ModelSpace::modified_shift(const Mat& x, double tol) const {
    const int n = dim_k();
    if (x.rows() != n || x.cols() != n) throw DimensionError("modifier must be dim K x dim K", "modifier");
    const Mat id = Mat::Identity(n, n);
    if (((id - p_d_) * x).norm() > tol * (1.0 + x.norm())) {
        throw ValidationError("modifier range is not contained in the defect space", "modifier");
    }
    return s_ + p_d_ * (x * p_dt_ - s_) * p_dt_;
}

}  // namespace matho
