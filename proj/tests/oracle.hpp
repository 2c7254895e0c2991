#pragma once

// Independent quadrature oracle: basis members of K_Theta are evaluated
// pointwise from the closed-form factor formulas and every inner product is
// a 512-point circle quadrature. Shares no code with the series path beyond
// the product's stored parameters.

#include <functional>
#include <vector>

#include "matho/inner_function.hpp"

namespace oracle {

using matho::cplx;
using matho::Mat;
using matho::Vec;

inline constexpr int kSamples = 512;

/// Pointwise vector function on the circle.
using VecFn = std::function<Vec(cplx)>;
/// Pointwise matrix function on the circle.
using MatFn = std::function<Mat(cplx)>;

std::vector<cplx> nodes(int n = kSamples);

/// (1/N) sum_k <f(z_k), g(z_k)>.
cplx inner(const VecFn& f, const VecFn& g, int n = kSamples);

/// Theta(z) = L prod (I - P + b_a(z) P) U, evaluated directly.
Mat theta_value(const matho::BlaschkePotapovProduct& theta, cplx z);

/// Factor-major closed-form basis: L F_1(z) ... F_{k-1}(z) sqrt(1-|a_k|^2)/(1 - conj(a_k) z) v.
std::vector<VecFn> basis(const matho::BlaschkePotapovProduct& theta);

/// <g, e_i> for every basis member.
Vec coords(const std::vector<VecFn>& basis, const VecFn& g);

/// Gram matrix G_ij = <e_j, e_i>.
Mat gram(const std::vector<VecFn>& basis);

/// S_ij = <z e_j, e_i>.
Mat compressed_shift(const std::vector<VecFn>& basis);

/// <Phi e_j, f_i>.
Mat matto(const std::vector<VecFn>& b1, const std::vector<VecFn>& b2, const MatFn& phi);

/// <J (I - P_+) Phi e_j, f_i> = <Phi e_j, conj(z) f_i(conj z)>.
Mat matho(const std::vector<VecFn>& b1, const std::vector<VecFn>& b2, const MatFn& phi);

/// Pointwise values of a Laurent polynomial given as (index, coefficient) pairs.
MatFn laurent_fn(const std::vector<std::pair<int, Mat>>& terms);

}  // namespace oracle
