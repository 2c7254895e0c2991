#include "matho/inner_function.hpp"

#include <algorithm>
#include <cmath>

#include "matho/linalg.hpp"

namespace matho {

cplx blaschke(cplx a, cplx z) {
    return (z - a) / (1.0 - std::conj(a) * z);
}

void PotapovFactor::validate(const std::string& path) const {
    const auto field = [&](const char* name) { return path.empty() ? std::string(name) : path + "." + name; };
    if (!(std::abs(a) <= kMaxPoleModulus)) throw DomainError("|a| must be <= 0.9", field("a"));
    if (frame.rows() == 0 || frame.cols() == 0) throw DimensionError("frame must be a non-empty d x r matrix", field("frame"));
    if (frame.cols() > frame.rows()) throw DimensionError("frame has more columns than rows", field("frame"));
    const Mat gram = frame.adjoint() * frame;
    if ((gram - Mat::Identity(gram.rows(), gram.cols())).norm() > 1e-12) {
        throw ValidationError("frame columns are not orthonormal", field("frame"));
    }
    if (post_unitary.rows() != frame.rows() || post_unitary.cols() != frame.rows()) {
        throw DimensionError("post_unitary must be d x d", field("post_unitary"));
    }
    if (unitarity_defect(post_unitary) > 1e-12) throw ValidationError("post_unitary is not unitary", field("post_unitary"));
}

Mat PotapovFactor::value(cplx z) const {
    const Mat p = projection();
    const Mat id = Mat::Identity(dim(), dim());
    return (id - p + blaschke(a, z) * p) * post_unitary;
}

MatrixLaurent PotapovFactor::series(int order) const {
    const Mat p = projection();
    const Mat pu = p * post_unitary;
    MatrixLaurent out = MatrixLaurent::zero(dim(), std::max(order, 1));
    out.coeff(0) = (Mat::Identity(dim(), dim()) - p) * post_unitary - a * pu;
    const double r = std::abs(a);
    if (r == 0.0) {
        out.coeff(1) = pu;
        return order >= 1 ? out : out.truncated(order);
    }
    const double scale = 1.0 - r * r;
    cplx power = 1.0;  // conj(a)^{n-1}
    for (int n = 1; n <= order; ++n) {
        out.coeff(n) = (scale * power) * pu;
        power *= std::conj(a);
    }
    out.set_tail_bound((1.0 + r) * std::pow(r, order) * pu.norm());
    return out;
}

BlaschkePotapovProduct::BlaschkePotapovProduct(int dim, std::vector<PotapovFactor> factors, std::optional<Mat> left_unitary)
    : dim_(dim), factors_(std::move(factors)) {
    if (dim <= 0) throw DimensionError("dimension must be positive", "dim");
    left_ = left_unitary.value_or(Mat::Identity(dim, dim));
    if (left_.rows() != dim || left_.cols() != dim) throw DimensionError("left_unitary must be d x d", "left_unitary");
    if (unitarity_defect(left_) > 1e-12) throw ValidationError("left_unitary is not unitary", "left_unitary");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::string path = "factors[" + std::to_string(i) + "]";
        if (factors_[i].frame.rows() != dim) throw DimensionError("frame row count must equal dim", path + ".frame");
        factors_[i].validate(path);
    }
}

BlaschkePotapovProduct BlaschkePotapovProduct::monomial(int dim, int power) {
    const Mat id = Mat::Identity(dim, dim);
    std::vector<PotapovFactor> fs(static_cast<std::size_t>(power), PotapovFactor{0.0, id, id});
    return BlaschkePotapovProduct(dim, std::move(fs));
}

int BlaschkePotapovProduct::model_dimension() const {
    int n = 0;
    for (const auto& f : factors_) n += f.rank();
    return n;
}

bool BlaschkePotapovProduct::is_polynomial() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const PotapovFactor& f) { return f.a == cplx(0.0); });
}

Mat BlaschkePotapovProduct::evaluate(cplx z0) const {
    if (std::abs(z0) > 1.0 + 1e-12) throw DomainError("evaluate_theta: |z| must be <= 1");
    Mat out = left_;
    for (const auto& f : factors_) out = out * f.value(z0);
    return out;
}

BlaschkePotapovProduct BlaschkePotapovProduct::absorbed() const {
    if (factors_.empty()) return *this;
    std::vector<PotapovFactor> fs = factors_;
    // L (I - P + bP) U = (I - LPL^* + b LPL^*) LU
    fs.front().frame = left_ * fs.front().frame;
    fs.front().post_unitary = left_ * fs.front().post_unitary;
    return BlaschkePotapovProduct(dim_, std::move(fs));
}

MatrixLaurent theta_laurent(const BlaschkePotapovProduct& theta, int order) {
    MatrixLaurent acc = MatrixLaurent::monomial(theta.left_unitary(), 0, order);
    for (const auto& f : theta.factors()) acc = mul(acc, f.series(order)).truncated(order);
    return acc;
}

BlaschkePotapovProduct reflect_tilde(const BlaschkePotapovProduct& theta) {
    // f(conj z)^* = U^*(I - P + b_{conj a} P) = (I - P' + b_{conj a} P') U^*, P' = U^* P U
    std::vector<PotapovFactor> fs;
    const auto& src = theta.factors();
    for (auto it = src.rbegin(); it != src.rend(); ++it) {
        const Mat us = it->post_unitary.adjoint();
        fs.push_back(PotapovFactor{std::conj(it->a), us * it->frame, us});
    }
    if (fs.empty()) return BlaschkePotapovProduct(theta.dim(), {}, theta.left_unitary().adjoint());
    fs.back().post_unitary = fs.back().post_unitary * theta.left_unitary().adjoint();
    return BlaschkePotapovProduct(theta.dim(), std::move(fs));
}

BlaschkePotapovProduct reflect_conjugated(const BlaschkePotapovProduct& theta, const Conjugation& j) {
    if (j.dim() != theta.dim()) throw DimensionError("conjugation dimension differs from Theta");
    const Mat& v = j.matrix();
    const auto sandwich = [&](const Mat& m) -> Mat { return v * m.conjugate() * v.adjoint(); };
    std::vector<PotapovFactor> fs;
    for (const auto& f : theta.factors()) {
        fs.push_back(PotapovFactor{std::conj(f.a), v * f.frame.conjugate(), sandwich(f.post_unitary)});
    }
    return BlaschkePotapovProduct(theta.dim(), std::move(fs), sandwich(theta.left_unitary()));
}

int refit_sample_count(int order) {
    int n = 512;
    while (n < 8 * order) n *= 2;
    return n;
}

MatrixLaurent crofoot_theta_w(const BlaschkePotapovProduct& theta, const CrofootData& w, int order) {
    if (w.dim() != theta.dim()) throw DimensionError("W dimension differs from Theta");
    if (w.w().isZero(0.0)) return theta_laurent(theta, order);
    const int d = theta.dim();
    const Mat id = Mat::Identity(d, d);
    const Mat ws = w.w().adjoint();
    std::vector<Mat> values;
    for (cplx z : circle_points(refit_sample_count(order))) {
        const Mat t = theta.evaluate(z);
        Eigen::PartialPivLU<Mat> lu(id - t * ws);
        values.push_back(-w.w() + w.d_wstar() * lu.solve(t * w.d_w()));
    }
    return fit_from_samples<MatrixShape>(values, order);
}

namespace {

template <class Eval>
InnerReport run_checks(int dim, Eval eval, const Mat& at_zero, const Conjugation* j, double tol) {
    InnerReport r;
    const Mat id = Mat::Identity(dim, dim);
    for (cplx z : circle_points(kValidationSamples)) {
        const Mat t = eval(z);
        r.unitarity_defect = std::max(r.unitarity_defect, (t.adjoint() * t - id).norm());
        if (j != nullptr) r.j_defect = std::max(r.j_defect, (conjugate_operator(*j, t, *j) - t.adjoint()).norm());
    }
    r.value_at_zero = op_norm(at_zero);
    r.inner = r.unitarity_defect <= tol;
    r.pure = r.value_at_zero <= 1.0 - kPurityMargin;
    r.j_symmetric = j != nullptr && r.j_defect <= tol;
    return r;
}

}  // namespace

InnerReport validate(const BlaschkePotapovProduct& theta, const Conjugation* j, double tol) {
    if (j != nullptr && j->dim() != theta.dim()) throw DimensionError("conjugation dimension differs from Theta");
    return run_checks(
        theta.dim(), [&](cplx z) { return theta.evaluate(z); }, theta.evaluate(0.0), j, tol);
}

InnerReport validate(const MatrixLaurent& theta, const Conjugation* j, double tol) {
    if (j != nullptr && j->dim() != theta.dim()) throw DimensionError("conjugation dimension differs from Theta");
    return run_checks(
        theta.dim(), [&](cplx z) { return evaluate(theta, z); }, theta.at(0), j, tol);
}

void require_pure_inner(const BlaschkePotapovProduct& theta) {
    const InnerReport r = validate(theta);
    if (!r.inner) throw ValidationError("Theta is not inner", "theta");
    if (!r.pure) throw ValidationError("Theta is not pure (||Theta(0)|| = 1)", "theta");
}

}  // namespace matho
