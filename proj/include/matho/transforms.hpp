#pragma once

// Transform identities between MATTOs/MATHOs checked as matrix residuals:
// the left side is composed from the maps' matrices, the right side is
// rebuilt from the transformed symbol.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matho/operators.hpp"
#include "matho/symmetry_maps.hpp"

namespace matho {

struct TransformInputs {
    BlaschkePotapovProduct theta1;
    BlaschkePotapovProduct theta2;
    Conjugation j1;
    Conjugation j2;
    std::optional<CrofootData> w1;  // zero when absent
    std::optional<CrofootData> w2;
    MatrixLaurent phi;
    int order = 64;
};

struct TransformResult {
    std::string name;
    double residual = 0.0;
    double lhs_norm = 0.0;
    /// False when a hypothesis of the identity (J-symmetry) fails; the
    /// residual is then not meaningful and the entry is skipped.
    bool applicable = true;
    /// remark412 outside its hypotheses: the residual is reported but no
    /// verdict is drawn.
    bool informational = false;
    std::string note;
};

enum class CrofootSymbol {
    /// D_{W2*}^{-1} (I - W2 tilde Theta2) Phi (I - Theta1 W1^*) D_{W1*}^{-1}
    derived,
    /// D_{W2*} (I - Theta2 W2^*)^{-1} Phi D_{W1*} (I + Theta1^W W1^*)^{-1}, sampled
    literal,
};

enum class ConjugationSymbol {
    /// J2 tilde Theta2(z) Phi(z) Theta1(z) J1
    derived,
    /// J2 Theta2(z) Phi(z) Theta1(conj z)^* J1
    literal,
};

const std::vector<std::string>& transform_names();

/// Lazily builds and caches the spaces and map matrices the registry needs.
class TransformVerifier {
   public:
    explicit TransformVerifier(TransformInputs inputs);

    /// Throws ValidationError("name") for unknown names.
    TransformResult run(const std::string& name);
    std::vector<TransformResult> run_all();

    /// Residual of the Crofoot identity with either symbol formula.
    TransformResult crofoot(CrofootSymbol symbol);
    /// Residual of the C_Theta identity with either symbol formula.
    TransformResult ctheta(ConjugationSymbol symbol);

    const TransformInputs& inputs() const { return in_; }

   private:
    SpacePtr k1();
    SpacePtr k2();
    SpacePtr k1_tilde();
    SpacePtr k2_tilde();
    SpacePtr k1_conj();
    SpacePtr k2_conj();
    bool symmetric1();
    bool symmetric2();
    MatrixLaurent theta1();
    MatrixLaurent theta2();

    TransformResult tau();
    TransformResult jstar();
    TransformResult prop61(char which);
    TransformResult eq_sz();
    TransformResult eq_ddd();
    TransformResult remark412();

    TransformInputs in_;
    std::map<std::string, SpacePtr> spaces_;
    std::optional<bool> sym1_;
    std::optional<bool> sym2_;
};

}  // namespace matho
