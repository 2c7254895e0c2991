#include "matho/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace matho {

double op_norm(const Mat& a) {
    if (a.size() == 0) return 0.0;
    return Eigen::JacobiSVD<Mat>(a).singularValues()(0);
}

double unitarity_defect(const Mat& a) {
    return (a * a.adjoint() - Mat::Identity(a.rows(), a.rows())).norm();
}

Mat hermitian_sqrt(const Mat& a) {
    const Mat h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    Eigen::VectorXd ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) < -1e-12) throw NumericError("hermitian_sqrt: matrix is not positive semidefinite");
        ev(i) = std::sqrt(std::max(ev(i), 0.0));
    }
    return es.eigenvectors() * ev.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

int numerical_rank(const Eigen::VectorXd& s, double rel_tol) {
    if (s.size() == 0) return 0;
    const double cut = rel_tol * std::max(1.0, s(0));
    int r = 0;
    while (r < s.size() && s(r) > cut) ++r;
    return r;
}

}  // namespace

Mat orthonormal_range(const Mat& a, double rel_tol) {
    if (a.cols() == 0) return Mat(a.rows(), 0);
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinU);
    const int r = numerical_rank(svd.singularValues(), rel_tol);
    return svd.matrixU().leftCols(r);
}

Mat range_projection(const Mat& a, double rel_tol) {
    const Mat q = orthonormal_range(a, rel_tol);
    return q * q.adjoint();
}

Mat pseudo_inverse(const Mat& a, double rel_tol) {
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& s = svd.singularValues();
    const int r = numerical_rank(s, rel_tol);
    Mat out = Mat::Zero(a.cols(), a.rows());
    for (int i = 0; i < r; ++i) {
        out += svd.matrixV().col(i) * (1.0 / s(i)) * svd.matrixU().col(i).adjoint();
    }
    return out;
}

Mat orthonormal_complement(const Mat& q, int ambient_dim) {
    const Mat p = Mat::Identity(ambient_dim, ambient_dim) - q * q.adjoint();
    return orthonormal_range(p, 1e-8);
}

double subspace_angle(const Mat& a, const Mat& b) {
    const Mat qa = orthonormal_range(a);
    const Mat qb = orthonormal_range(b);
    if (qa.cols() != qb.cols()) return std::acos(0.0);
    if (qa.cols() == 0) return 0.0;
    // sine form: acos of the cosines loses half the digits near zero
    const Mat residual = qa - qb * (qb.adjoint() * qa);
    return std::asin(std::clamp(op_norm(residual), 0.0, 1.0));
}

}  // namespace matho
