#pragma once

// Truncated Laurent series on the unit circle with vector or matrix
// coefficients. These realize L^2(H) and L^2(L(H)) at finite truncation:
// coefficients are stored for every index n in the symmetric window
// [-order, order] and the mass of everything discarded is carried in
// tail_bound.

#include <complex>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "matho/error.hpp"

namespace matho {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

struct VectorShape {};
struct MatrixShape {};

/// Truncated Laurent series sum_{n=-M}^{M} c_n z^n.
///
/// tail_bound bounds the sum of Frobenius norms of all coefficients that the
/// represented function has outside the stored window (or that were lost by
/// truncation). Since the Frobenius norm dominates both the operator norm and
/// the l2 contribution, it also bounds the L^2 and sup norms of the remainder.
template <class Shape>
class Laurent {
   public:
    Laurent() = default;
    /// Zero series; for VectorShape, cols must be 1.
    Laurent(int rows, int cols, int order);

    static Laurent zero(int dim, int order);
    /// c * z^n with c of the right shape.
    static Laurent monomial(const Mat& c, int n, int order);
    /// Constant identity (MatrixShape) or constant x (use monomial for vectors).
    static Laurent identity(int dim, int order)
        requires std::is_same_v<Shape, MatrixShape>;

    int dim() const { return rows_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int order() const { return order_; }
    double tail_bound() const { return tail_; }
    void set_tail_bound(double t) { tail_ = t; }
    void add_tail(double t) { tail_ += t; }

    bool in_window(int n) const { return n >= -order_ && n <= order_; }

    auto coeff(int n) { return data_.middleCols(static_cast<Eigen::Index>(n + order_) * cols_, cols_); }
    auto coeff(int n) const {
        return data_.middleCols(static_cast<Eigen::Index>(n + order_) * cols_, cols_);
    }
    /// Coefficient at n, zero outside the window.
    Mat at(int n) const;

    /// Smallest [lo, hi] containing every coefficient with Frobenius norm
    /// above eps. Returns lo > hi when the series is (numerically) zero.
    std::pair<int, int> support(double eps = 0.0) const;

    /// Restrict to [-m, m]; dropped coefficient mass is added to the tail.
    Laurent truncated(int m) const;
    /// Embed in the larger window [-m, m] (m >= order).
    Laurent widened(int m) const;
    /// Truncate or widen to exactly [-m, m].
    Laurent resized(int m) const { return m >= order_ ? widened(m) : truncated(m); }

    /// sqrt(sum ||c_n||_F^2)
    double norm() const;
    /// sum ||c_n||_F, a bound for sup_z ||F(z)||_op on the stored part.
    double l1_norm() const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(cplx s);

    const Mat& raw() const { return data_; }

   private:
    int rows_ = 0;
    int cols_ = 0;
    int order_ = 0;
    double tail_ = 0.0;
    Mat data_;
};

using VectorLaurent = Laurent<VectorShape>;
using MatrixLaurent = Laurent<MatrixShape>;

template <class S>
Laurent<S> operator+(Laurent<S> a, const Laurent<S>& b) {
    a += b;
    return a;
}
template <class S>
Laurent<S> operator-(Laurent<S> a, const Laurent<S>& b) {
    a -= b;
    return a;
}
template <class S>
Laurent<S> operator*(cplx s, Laurent<S> a) {
    a *= s;
    return a;
}

/// Pointwise product F(z) g(z). The result window is the sum of the operand
/// windows, so products of Laurent polynomials are exact.
template <class S>
Laurent<S> mul(const MatrixLaurent& f, const Laurent<S>& g);

/// F*(z) = F(z)^*: c_n -> (c_{-n})^*.
MatrixLaurent adjoint_star(const MatrixLaurent& f);

/// Flip (J f)(z) = conj(z) f(conj(z)): coefficient of z^m becomes a_{-m-1}.
template <class S>
Laurent<S> flip(const Laurent<S>& f);

/// f(conj(z)): c_n -> c_{-n}.
template <class S>
Laurent<S> reverse(const Laurent<S>& f);

/// z^k f(z). The window grows by |k| so nothing is lost.
template <class S>
Laurent<S> shift(const Laurent<S>& f, int k);

/// (P_+ f, (I - P_+) f).
template <class S>
std::pair<Laurent<S>, Laurent<S>> riesz_split(const Laurent<S>& f);

template <class S>
Laurent<S> analytic_part(const Laurent<S>& f) {
    return riesz_split(f).first;
}

/// <f, g> = sum_n <a_n, b_n>, linear in f.
cplx inner_product(const VectorLaurent& f, const VectorLaurent& g);
/// Certified bound on |<f,g>_true - inner_product(f,g)|.
double inner_product_error(const VectorLaurent& f, const VectorLaurent& g);

/// Value at a point of the unit circle. Throws DomainError if |z0| != 1.
template <class S>
Mat evaluate(const Laurent<S>& f, cplx z0);

/// Values at the N-th roots of unity exp(2 pi i k / N), k = 0..N-1.
template <class S>
std::vector<Mat> sample_circle(const Laurent<S>& f, int n_samples);

/// (P_+ f)(lambda) for |lambda| < 1.
template <class S>
Mat evaluate_disk(const Laurent<S>& f, cplx lambda);

/// Max Frobenius distance between coefficients over the union of windows.
template <class S>
double coeff_distance(const Laurent<S>& a, const Laurent<S>& b);

/// Roots of unity used by every sampling routine.
std::vector<cplx> circle_points(int n_samples);

/// Fit the window [-order, order] of a function from its samples at the
/// N-th roots of unity (discrete Fourier projection). The l1 mass of the
/// discrete coefficients outside the window is recorded as the tail.
template <class S>
Laurent<S> fit_from_samples(const std::vector<Mat>& values, int order);

}  // namespace matho
