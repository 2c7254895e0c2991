#pragma once

// Finite-dimensional model spaces K_Theta = H^2(C^d) minus Theta H^2(C^d),
// realized by an orthonormal basis of truncated series.

#include <optional>
#include <vector>

#include "matho/inner_function.hpp"

namespace matho {

enum class KernelVariant { k, k_tilde };

class ModelSpace {
   public:
    /// Factor-major basis of K_Theta (Theta must be pure). Throws
    /// ValidationError on "trunc_order" when the window cannot hold the
    /// basis to 1e-9 orthonormality.
    static ModelSpace build(const BlaschkePotapovProduct& theta, int order);

    /// Space of a series-represented inner function, from a spanning set of
    /// K_Theta (orthonormalized here in the given order).
    static ModelSpace from_spanning_set(MatrixLaurent theta, const std::vector<VectorLaurent>& span, int order);

    int dim() const { return theta_.dim(); }
    int dim_k() const { return static_cast<int>(basis_.size()); }
    int order() const { return order_; }
    const MatrixLaurent& theta() const { return theta_; }
    const std::optional<BlaschkePotapovProduct>& product() const { return product_; }
    const std::vector<VectorLaurent>& basis() const { return basis_; }

    /// Theta(lambda), |lambda| < 1 (closed form when available).
    Mat theta_at(cplx lambda) const;

    /// <f, e_i> for every basis member: coordinates of P_Theta f.
    Vec coords(const VectorLaurent& f) const;
    VectorLaurent synthesize(const Vec& c) const;
    /// P_Theta f through the basis.
    VectorLaurent project(const VectorLaurent& f) const;
    /// P_Theta f = P_+f - Theta P_+(Theta^* P_+f), computed from the series.
    VectorLaurent project_formula(const VectorLaurent& f) const;
    /// ||f - P_Theta f||.
    double distance_to_space(const VectorLaurent& f) const;

    /// k_lambda x = (1 - conj(lambda) z)^{-1} (I - Theta(z) Theta(lambda)^*) x, or
    /// the tilde kernel (Theta(z) - Theta(lambda)) x / (z - lambda).
    VectorLaurent kernel(cplx lambda, KernelVariant variant, const Vec& x) const;

    /// Orthonormality defect of the stored basis, ||G - I||_F.
    double gram_defect() const;

    // Matrices in basis coordinates.
    const Mat& s() const { return s_; }
    const Mat& s_star() const { return s_star_; }
    const Mat& d() const { return d_; }
    const Mat& d_tilde() const { return d_tilde_; }
    const Mat& p_d() const { return p_d_; }
    const Mat& p_d_tilde() const { return p_dt_; }
    /// Orthonormal bases of the defect spaces (columns in coordinates).
    const Mat& q_d() const { return q_d_; }
    const Mat& q_d_tilde() const { return q_dt_; }
    /// Columns coords(k_0 e_i) and coords(tilde k_0 e_i).
    const Mat& k0_columns() const { return k0_; }
    const Mat& k0_tilde_columns() const { return k0t_; }

    /// Omega_Theta in coordinates (d x dim_k): Omega coords(k_0 x) = x.
    const Mat& omega() const { return omega_; }
    /// J_Theta = (D restricted to the defect space)^{-1} P_D.
    const Mat& j_theta() const { return j_theta_; }

    /// S + P_D (X P_Dtilde - S) P_Dtilde for X mapping into the defect space.
    /// Throws ValidationError when ran X leaves the defect space by more than tol.
    Mat modified_shift(const Mat& x, double tol = 1e-9) const;

   private:
    ModelSpace(MatrixLaurent theta, std::vector<VectorLaurent> basis, int order,
               std::optional<BlaschkePotapovProduct> product);
    void compute_operators();

    MatrixLaurent theta_;
    std::vector<VectorLaurent> basis_;
    int order_ = 0;
    std::optional<BlaschkePotapovProduct> product_;
    Mat s_, s_star_, d_, d_tilde_, p_d_, p_dt_, q_d_, q_dt_, k0_, k0t_, omega_, j_theta_;
};

}  // namespace matho
