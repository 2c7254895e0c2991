#pragma once

// Seeded generators for inner functions, symbols and dense matrices, shared
// by the CLI fuzz batches and the test suites.

#include <cstdint>
#include <random>

#include "matho/inner_function.hpp"

namespace matho {

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double normal() { return normal_(eng_); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
    cplx complex_normal() { return cplx(normal(), normal()) / std::sqrt(2.0); }
    /// Uniform in the disc of the given radius.
    cplx disc(double radius);
    Mat gaussian(int rows, int cols);
    /// Haar-distributed unitary.
    Mat unitary(int dim);

   private:
    std::mt19937_64 eng_;
    std::normal_distribution<double> normal_;
};

struct ProductDraw {
    int dim = 2;
    int max_factors = 3;
    int max_dim_k = 12;
    /// Pole moduli are drawn from [0, max_pole]; 0 gives polynomial products.
    double max_pole = 0.0;
};

/// Random pure Blaschke-Potapov product (rejection-sampled for purity).
BlaschkePotapovProduct random_product(Rng& rng, const ProductDraw& draw);

struct SymmetricDraw {
    BlaschkePotapovProduct theta;
    Conjugation j;
};

/// Random pure inner function together with a conjugation it is symmetric for.
SymmetricDraw random_j_symmetric(Rng& rng, const ProductDraw& draw);

/// Gaussian coefficients on [-degree, degree].
MatrixLaurent random_symbol(Rng& rng, int dim, int degree, int order);

}  // namespace matho
