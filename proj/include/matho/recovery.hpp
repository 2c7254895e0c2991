#pragma once

// Symbol recovery for operators accepted by the displacement tests.

#include "matho/kernel_class.hpp"
#include "matho/membership.hpp"

namespace matho {

/// Minimal-norm (B1, B2) with A - S2 A S1^* = B1 D1 + D2 B2^*.
struct DisplacementFactors {
    Mat b1;  // K1 -> K2
    Mat b2;  // K2 -> K1
    double residual = 0.0;
};

DisplacementFactors solve_displacement(const ModelOperator& a);

struct RecoveryResult {
    MatrixLaurent symbol;
    double rebuild_residual = 0.0;
    MembershipReport membership;
};

struct RecoveryOptions {
    double threshold = kDefaultThreshold;
    const Conjugation* j1 = nullptr;  // hankel family
    const Conjugation* j2 = nullptr;
    /// Subtract the least-squares kernel-class component from the result.
    bool reduce = false;
};

/// Throws ValidationError when the operator is rejected by T1 (toeplitz) or
/// H1 (hankel), or when a hankel recovery meets a non-J-symmetric Theta.
RecoveryResult recover_symbol(const ModelOperator& op, Family family, const RecoveryOptions& options = {});

}  // namespace matho
