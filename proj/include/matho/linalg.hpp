#pragma once

// Dense linear-algebra helpers shared by every module.

#include "matho/laurent.hpp"

namespace matho {

/// Spectral norm.
double op_norm(const Mat& a);

/// ||A A^* - I||_F (and the same for A^* A when rectangular checks are not needed).
double unitarity_defect(const Mat& a);

/// Hermitian square root of a PSD matrix; eigenvalues in [-1e-12, 0) are
/// clipped to 0, anything more negative throws NumericError.
Mat hermitian_sqrt(const Mat& a);

/// Orthonormal basis (as columns) for the span of the columns of `a`,
/// with numerical rank decided by singular values > rel_tol * max(1, s_max).
Mat orthonormal_range(const Mat& a, double rel_tol = 1e-10);

/// Orthogonal projection onto the span of the columns of `a`.
Mat range_projection(const Mat& a, double rel_tol = 1e-10);

/// Moore-Penrose pseudo-inverse with the same rank rule.
Mat pseudo_inverse(const Mat& a, double rel_tol = 1e-10);

/// Orthonormal basis of the orthogonal complement of span(q) (q orthonormal).
Mat orthonormal_complement(const Mat& q, int ambient_dim);

/// Largest principal angle (radians) between the column spans of a and b.
double subspace_angle(const Mat& a, const Mat& b);

}  // namespace matho
