#pragma once

// Pure matrix-valued inner functions as Blaschke-Potapov products
// Theta = L * prod_k (I - P_k + b_{a_k}(z) P_k) U_k.

#include <optional>
#include <string>
#include <vector>

#include "matho/conjugation.hpp"
#include "matho/laurent.hpp"

namespace matho {

/// b_a(z) = (z - a) / (1 - conj(a) z).
cplx blaschke(cplx a, cplx z);

inline constexpr double kMaxPoleModulus = 0.9;

struct PotapovFactor {
    cplx a;
    Mat frame;         // d x r, orthonormal columns spanning ran P
    Mat post_unitary;  // d x d

    /// Checks |a| <= 0.9, orthonormal frame, unitary U. Field names in
    /// errors are relative ("a", "frame", "post_unitary").
    void validate(const std::string& path = {}) const;

    int dim() const { return static_cast<int>(frame.rows()); }
    int rank() const { return static_cast<int>(frame.cols()); }
    Mat projection() const { return frame * frame.adjoint(); }
    /// (I - P + b_a(z) P) U for |z| <= 1.
    Mat value(cplx z) const;
    /// Series of the factor on [-order, order] with certified tail.
    MatrixLaurent series(int order) const;
};

class BlaschkePotapovProduct {
   public:
    /// Validates every factor; field paths look like "factors[2].frame".
    BlaschkePotapovProduct(int dim, std::vector<PotapovFactor> factors, std::optional<Mat> left_unitary = {});

    /// Product of scalar-frame factors with a = 0 and P = I, i.e. z^n I.
    static BlaschkePotapovProduct monomial(int dim, int power);

    int dim() const { return dim_; }
    const std::vector<PotapovFactor>& factors() const { return factors_; }
    const Mat& left_unitary() const { return left_; }
    /// Sum of factor ranks: the dimension of K_Theta.
    int model_dimension() const;
    bool is_polynomial() const;

    /// Theta(z0) for |z0| <= 1.
    Mat evaluate(cplx z0) const;

    /// Same function with the left unitary folded into the first factor, so
    /// that left_unitary() is the identity.
    BlaschkePotapovProduct absorbed() const;

   private:
    int dim_;
    std::vector<PotapovFactor> factors_;
    Mat left_;
};

/// Theta as a series on [-order, order] (exact when every a = 0 and the
/// number of factors is at most order).
MatrixLaurent theta_laurent(const BlaschkePotapovProduct& theta, int order);

/// tilde Theta(z) = Theta(conj z)^*.
BlaschkePotapovProduct reflect_tilde(const BlaschkePotapovProduct& theta);
/// Theta_J(z) = J Theta(conj z) J, i.e. coefficients c_n -> J c_n J.
BlaschkePotapovProduct reflect_conjugated(const BlaschkePotapovProduct& theta, const Conjugation& j);

/// Theta^W(z) = -W + D_{W*} (I - Theta(z) W^*)^{-1} Theta(z) D_W, fitted on
/// [-order, order] from samples of the closed-form Theta.
MatrixLaurent crofoot_theta_w(const BlaschkePotapovProduct& theta, const CrofootData& w, int order);

/// Number of circle samples used by every sampling-and-refit routine.
int refit_sample_count(int order);

struct InnerReport {
    bool inner = false;
    bool pure = false;
    bool j_symmetric = false;
    double unitarity_defect = 0.0;  // max_z ||Theta^*Theta - I||_F over samples
    double value_at_zero = 0.0;     // ||Theta(0)||_op
    double j_defect = 0.0;          // max_z ||J Theta(z) J - Theta(z)^*||_F
};

inline constexpr int kValidationSamples = 64;
inline constexpr double kPurityMargin = 1e-10;

InnerReport validate(const BlaschkePotapovProduct& theta, const Conjugation* j = nullptr, double tol = 1e-10);
/// Same checks for a series representation (e.g. Theta^W).
InnerReport validate(const MatrixLaurent& theta, const Conjugation* j = nullptr, double tol = 1e-8);

/// Throws ValidationError unless Theta is inner and pure.
void require_pure_inner(const BlaschkePotapovProduct& theta);

}  // namespace matho
