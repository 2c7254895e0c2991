#pragma once

// Matrices of asymmetric truncated Toeplitz (MATTO) and Hankel (MATHO)
// operators between two model spaces.

#include <memory>

#include "matho/model_space.hpp"

namespace matho {

using SpacePtr = std::shared_ptr<const ModelSpace>;

struct ModelOperator {
    SpacePtr domain;    // K_{Theta_1}
    SpacePtr codomain;  // K_{Theta_2}
    Mat matrix;         // dim_k(codomain) x dim_k(domain)

    /// Checks shape consistency; throws DimensionError.
    void check() const;
};

enum class Family { toeplitz, hankel };

Family parse_family(const std::string& s);
std::string to_string(Family f);

/// Column j = coords of P_2(Phi e_j).
ModelOperator build_matto(const SpacePtr& domain, const SpacePtr& codomain, const MatrixLaurent& phi);
/// Column j = coords of P_2 J (I - P_+)(Phi e_j), J the flip.
ModelOperator build_matho(const SpacePtr& domain, const SpacePtr& codomain, const MatrixLaurent& phi);

ModelOperator build_operator(Family family, const SpacePtr& domain, const SpacePtr& codomain, const MatrixLaurent& phi);

}  // namespace matho
