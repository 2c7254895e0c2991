#pragma once

// Membership tests for MATTO/MATHO classes: projected displacement
// residuals and shift-invariance deviations.

#include <string>
#include <vector>

#include "matho/operators.hpp"

namespace matho {

enum class DisplacementKind { T1, T2, T3, T4, H1, H2, H3, H4, MT, MHa, MHb, MHc, MHd };

DisplacementKind parse_displacement_kind(const std::string& s);
std::string to_string(DisplacementKind k);
std::vector<DisplacementKind> all_displacement_kinds();
bool is_toeplitz_kind(DisplacementKind k);
bool is_modified_kind(DisplacementKind k);

/// X_{Theta_1}, X_{Theta_2} for the modified compressed shifts.
struct Modifiers {
    Mat x1;
    Mat x2;
};

/// Random modifiers P_D G P_Dtilde with Gaussian G.
Modifiers random_modifiers(const ModelSpace& s1, const ModelSpace& s2, unsigned long long seed);

struct MembershipReport {
    std::string kind;
    double displacement_norm = 0.0;
    double residual = 0.0;
    double threshold = 0.0;
    bool accept = false;
};

inline constexpr double kDefaultThreshold = 1e-8;

/// residual = ||(I - P_left) X (I - P_right)||_F; accept iff
/// residual <= threshold (1 + ||X||_F).
MembershipReport displacement_check(const ModelOperator& op, DisplacementKind kind, double threshold = kDefaultThreshold,
                                    const Modifiers* modifiers = nullptr);

/// The bilinear identity of the kind tested on orthonormal bases of the
/// relevant defect complements; accept iff max |deviation| <=
/// threshold (1 + ||op||_F).
MembershipReport shift_invariance_check(const ModelOperator& op, Family family, char kind,
                                        double threshold = kDefaultThreshold);

}  // namespace matho
