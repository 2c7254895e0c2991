#include "matho/conjugation.hpp"

#include "matho/linalg.hpp"

namespace matho {

Conjugation::Conjugation(Mat u) : u_(std::move(u)) {
    if (u_.rows() != u_.cols() || u_.rows() == 0) throw DimensionError("conjugation matrix must be square", "U");
    if (unitarity_defect(u_) > 1e-12) throw ValidationError("conjugation matrix is not unitary", "U");
    if ((u_ - u_.transpose()).norm() > 1e-12) throw ValidationError("conjugation matrix is not symmetric", "U");
}

Conjugation Conjugation::entrywise(int dim) {
    return Conjugation(Mat::Identity(dim, dim));
}

Mat conjugate_operator(const Conjugation& left, const Mat& x, const Conjugation& right) {
    return left.matrix() * x.conjugate() * right.matrix().conjugate();
}

CrofootData::CrofootData(Mat w) : w_(std::move(w)) {
    if (w_.rows() != w_.cols() || w_.rows() == 0) throw DimensionError("W must be square", "W");
    if (op_norm(w_) > kMaxCrofootNorm) throw ValidationError("||W|| exceeds 0.9", "W");
    const Mat id = Mat::Identity(w_.rows(), w_.rows());
    d_w_ = hermitian_sqrt(id - w_.adjoint() * w_);
    d_wstar_ = hermitian_sqrt(id - w_ * w_.adjoint());
}

}  // namespace matho
