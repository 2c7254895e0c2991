#pragma once

// Symbols giving the zero operator: Theta_2 H^2 + (Theta_1 H^2)^* for MATTOs
// and J_2 [H^2]^* J_1 + J_2 tilde Theta_2 H^2 Theta_1 J_1 for MATHOs.

#include <vector>

#include "matho/operators.hpp"

namespace matho {

struct KernelContext {
    SpacePtr space1;
    SpacePtr space2;
    Family family = Family::toeplitz;
    const Conjugation* j1 = nullptr;  // hankel family only
    const Conjugation* j2 = nullptr;
};

struct KernelTestResult {
    bool in_kernel = false;      // least-squares distance verdict
    double distance = 0.0;       // distance of Phi to the generator span
    double operator_norm = 0.0;  // ||build(Phi)||_F
    bool operator_zero = false;  // ||build(Phi)||_F <= 1e-10 (1 + ||Phi||)
    bool agree = false;
    int window = 0;              // working window actually used
};

/// Effective analytic degree of a series: last index with a coefficient
/// above 1e-15 of its l1 mass.
int effective_degree(const MatrixLaurent& theta);

/// Generators with lag k = 0..lag_max, truncated to [-window, window].
std::vector<MatrixLaurent> kernel_generators(const KernelContext& ctx, int lag_max, int window);

/// Throws ValidationError ("trunc_order") when Phi's support plus the
/// inner-function degrees does not fit in the truncation window.
KernelTestResult kernel_test(const MatrixLaurent& phi, const KernelContext& ctx, double tol = 1e-8);

/// Phi minus its least-squares projection onto the kernel class.
MatrixLaurent reduce_modulo_kernel(const MatrixLaurent& phi, const KernelContext& ctx);

}  // namespace matho
