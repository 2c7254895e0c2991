#pragma once

// Coefficient conjugation J^*, the reflection tau_Theta, the model
// conjugation C_Theta, generalized Crofoot transforms, and their matrices
// between model spaces.

#include <functional>

#include "matho/model_space.hpp"

namespace matho {

/// Coefficientwise a_n -> J(a_n). Antilinear, commutes with M_z.
VectorLaurent jstar(const Conjugation& j, const VectorLaurent& f);

/// z -> Theta(conj z)^*: c_n -> c_n^*.
MatrixLaurent tilde_series(const MatrixLaurent& f);

/// Coefficientwise c_n -> J_l c_n J_r (as operators, V_l conj(c_n) V_r^*).
/// Pointwise this is z -> J_l F(conj z) J_r; with J_l = J_r = J it gives F_J.
MatrixLaurent conjugate_symbol(const Conjugation& left, const MatrixLaurent& f, const Conjugation& right);

/// Pointwise z -> J_l F(z) J_r.
MatrixLaurent sandwich(const Conjugation& left, const MatrixLaurent& f, const Conjugation& right);

/// (tau_Theta f)(z) = conj(z) tilde Theta(z) f(conj z), kept in f's window.
VectorLaurent tau(const MatrixLaurent& theta, const VectorLaurent& f);

struct ConjugationResult {
    VectorLaurent value;
    /// False when Theta is not J-symmetric: the map is then not an involution.
    bool involutive = false;
};

/// (C_Theta f)(z) = Theta(z) conj(z) J(f(z)).
ConjugationResult c_theta(const MatrixLaurent& theta, const Conjugation& j, const VectorLaurent& f, double tol = 1e-8);

enum class CrofootDirection { forward, adjoint };

/// Pointwise values of Theta^W at z from Theta(z).
Mat theta_w_value(const Mat& theta_z, const CrofootData& w);

/// forward: D_{W*}(I - Theta W^*)^{-1} f; adjoint: D_{W*}(I + Theta^W W^*)^{-1} f.
/// Sampled on the circle and refitted in f's window; the aliasing mass is
/// added to the tail.
VectorLaurent crofoot_map(const BlaschkePotapovProduct& theta, const CrofootData& w, const VectorLaurent& f,
                          CrofootDirection direction);

/// A dense matrix that is either linear (c -> M c) or antilinear
/// (c -> M conj(c)).
struct SemilinearMatrix {
    Mat m;
    bool antilinear = false;

    Vec apply(const Vec& c) const { return antilinear ? Vec(m * c.conjugate()) : Vec(m * c); }
};

/// a after b.
SemilinearMatrix compose(const SemilinearMatrix& a, const SemilinearMatrix& b);

using VectorMap = std::function<VectorLaurent(const VectorLaurent&)>;

struct Representation {
    SemilinearMatrix op;
    /// max_j ||map(e_j) - P_target map(e_j)||: how far images leave the target.
    double leakage = 0.0;
};

/// Matrix of a (linear or antilinear) map between model spaces in their bases.
Representation represent(const VectorMap& map, bool antilinear, const ModelSpace& source, const ModelSpace& target);

}  // namespace matho
