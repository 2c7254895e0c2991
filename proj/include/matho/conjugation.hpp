#pragma once

// Conjugations on C^d and the data of a generalized Crofoot transform.

#include "matho/laurent.hpp"

namespace matho {

/// Antilinear involution J x = U conj(x) on C^d. U must be a symmetric
/// unitary; that is exactly the condition J^2 = I with J isometric.
class Conjugation {
   public:
    /// Validates U (unitary and symmetric to 1e-12).
    explicit Conjugation(Mat u);
    /// Entrywise complex conjugation, U = I.
    static Conjugation entrywise(int dim);

    int dim() const { return static_cast<int>(u_.rows()); }
    const Mat& matrix() const { return u_; }

    Vec apply(const Vec& x) const { return u_ * x.conjugate(); }

   private:
    Mat u_;
};

/// Linear operator y -> J_left X (J_right y), i.e. U_l conj(X) conj(U_r).
Mat conjugate_operator(const Conjugation& left, const Mat& x, const Conjugation& right);

/// W with ||W|| <= 0.9 together with its defect operators
/// D_W = (I - W^*W)^{1/2} and D_{W^*} = (I - WW^*)^{1/2}.
class CrofootData {
   public:
    explicit CrofootData(Mat w);
    static CrofootData zero(int dim) { return CrofootData(Mat::Zero(dim, dim)); }

    int dim() const { return static_cast<int>(w_.rows()); }
    const Mat& w() const { return w_; }
    const Mat& d_w() const { return d_w_; }
    const Mat& d_wstar() const { return d_wstar_; }

   private:
    Mat w_;
    Mat d_w_;
    Mat d_wstar_;
};

inline constexpr double kMaxCrofootNorm = 0.9;

}  // namespace matho
