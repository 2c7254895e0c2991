#include "matho/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace matho {

cplx Rng::disc(double radius) {
    if (radius <= 0.0) return 0.0;
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
}

Mat Rng::gaussian(int rows, int cols) {
    Mat m(rows, cols);
    for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = complex_normal();
    return m;
}

Mat Rng::unitary(int dim) {
    const Mat g = gaussian(dim, dim);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ() * Mat::Identity(dim, dim);
    const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    // fix the phases so the distribution is Haar
    for (int i = 0; i < dim; ++i) {
        const cplx d = r(i, i);
        if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
    }
    return q;
}

BlaschkePotapovProduct random_product(Rng& rng, const ProductDraw& draw) {
    const int d = draw.dim;
    for (int attempt = 0; attempt < 200; ++attempt) {
        const int n = rng.integer(1, std::max(1, draw.max_factors));
        std::vector<PotapovFactor> fs;
        int budget = draw.max_dim_k;
        for (int k = 0; k < n && budget > 0; ++k) {
            const int r = rng.integer(1, std::min(d, budget));
            budget -= r;
            const Mat u = rng.unitary(d);
            fs.push_back(PotapovFactor{rng.disc(draw.max_pole), u.leftCols(r), rng.unitary(d)});
        }
        BlaschkePotapovProduct theta(d, std::move(fs), rng.unitary(d));
        if (validate(theta).pure) return theta;
    }
    // fall back to a full-rank first factor, which is always pure
    const Mat id = Mat::Identity(d, d);
    return BlaschkePotapovProduct(d, {PotapovFactor{rng.disc(draw.max_pole), id, rng.unitary(d)}});
}

SymmetricDraw random_j_symmetric(Rng& rng, const ProductDraw& draw) {
    const int d = draw.dim;
    const Mat m = rng.unitary(d);
    const Mat p = rng.unitary(d);
    const Mat r = m * p;
    const Mat r_right = p.transpose() * m.adjoint();
    // Theta = R D(z) R' with D diagonal: every coordinate needs a zero for purity
    const int extra_budget = std::max(0, std::min(draw.max_dim_k, draw.max_factors * d) - d);
    std::vector<int> zeros(static_cast<std::size_t>(d), 1);
    const int extra = rng.integer(0, extra_budget);
    for (int e = 0; e < extra; ++e) zeros[static_cast<std::size_t>(rng.integer(0, d - 1))] += 1;
    std::vector<PotapovFactor> fs;
    const Mat id = Mat::Identity(d, d);
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < zeros[static_cast<std::size_t>(i)]; ++k) {
            fs.push_back(PotapovFactor{rng.disc(draw.max_pole), r.col(i), id});
        }
    }
    fs.back().post_unitary = r * r_right;
    return SymmetricDraw{BlaschkePotapovProduct(d, std::move(fs)), Conjugation(m * m.transpose())};
}

MatrixLaurent random_symbol(Rng& rng, int dim, int degree, int order) {
    MatrixLaurent out = MatrixLaurent::zero(dim, std::max(order, degree));
    for (int n = -degree; n <= degree; ++n) out.coeff(n) = rng.gaussian(dim, dim);
    return out;
}

}  // namespace matho
