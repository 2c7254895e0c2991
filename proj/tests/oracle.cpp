#include "oracle.hpp"

#include <cmath>
#include <numbers>

namespace oracle {

std::vector<cplx> nodes(int n) {
    std::vector<cplx> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    return z;
}

cplx inner(const VecFn& f, const VecFn& g, int n) {
    cplx s = 0.0;
    for (const cplx z : nodes(n)) s += g(z).dot(f(z));
    return s / static_cast<double>(n);
}

namespace {

Mat factor_value(const matho::PotapovFactor& f, cplx z) {
    const Mat p = f.frame * f.frame.adjoint();
    const cplx b = (z - f.a) / (1.0 - std::conj(f.a) * z);
    const Mat id = Mat::Identity(p.rows(), p.cols());
    return (id - p + b * p) * f.post_unitary;
}

}  // namespace

Mat theta_value(const matho::BlaschkePotapovProduct& theta, cplx z) {
    Mat v = theta.left_unitary();
    for (const auto& f : theta.factors()) v = v * factor_value(f, z);
    return v;
}

std::vector<VecFn> basis(const matho::BlaschkePotapovProduct& theta) {
    std::vector<VecFn> out;
    const auto& fs = theta.factors();
    for (std::size_t k = 0; k < fs.size(); ++k) {
        for (int i = 0; i < fs[k].rank(); ++i) {
            out.push_back([&theta, k, i](cplx z) -> Vec {
                const auto& fk = theta.factors()[k];
                Mat prefix = theta.left_unitary();
                for (std::size_t m = 0; m < k; ++m) prefix = prefix * factor_value(theta.factors()[m], z);
                const cplx scale = std::sqrt(1.0 - std::norm(fk.a)) / (1.0 - std::conj(fk.a) * z);
                return prefix * fk.frame.col(i) * scale;
            });
        }
    }
    return out;
}

Vec coords(const std::vector<VecFn>& basis, const VecFn& g) {
    Vec c(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) c(static_cast<Eigen::Index>(i)) = inner(g, basis[i]);
    return c;
}

Mat gram(const std::vector<VecFn>& basis) {
    const auto n = static_cast<Eigen::Index>(basis.size());
    Mat g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) g(i, j) = inner(basis[j], basis[i]);
    }
    return g;
}

Mat compressed_shift(const std::vector<VecFn>& basis) {
    const auto n = static_cast<Eigen::Index>(basis.size());
    Mat s(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const VecFn zf = [&basis, j](cplx z) -> Vec { return z * basis[j](z); };
        for (Eigen::Index i = 0; i < n; ++i) s(i, j) = inner(zf, basis[i]);
    }
    return s;
}

Mat matto(const std::vector<VecFn>& b1, const std::vector<VecFn>& b2, const MatFn& phi) {
    Mat a(static_cast<Eigen::Index>(b2.size()), static_cast<Eigen::Index>(b1.size()));
    for (std::size_t j = 0; j < b1.size(); ++j) {
        const VecFn pf = [&, j](cplx z) -> Vec { return phi(z) * b1[j](z); };
        for (std::size_t i = 0; i < b2.size(); ++i) a(i, j) = inner(pf, b2[i]);
    }
    return a;
}

Mat matho(const std::vector<VecFn>& b1, const std::vector<VecFn>& b2, const MatFn& phi) {
    Mat b(static_cast<Eigen::Index>(b2.size()), static_cast<Eigen::Index>(b1.size()));
    for (std::size_t j = 0; j < b1.size(); ++j) {
        const VecFn pf = [&, j](cplx z) -> Vec { return phi(z) * b1[j](z); };
        for (std::size_t i = 0; i < b2.size(); ++i) {
            // the flip of f_i is anti-analytic, so only (I - P_+) Phi e_j contributes
            const VecFn flipped = [&, i](cplx z) -> Vec { return std::conj(z) * b2[i](std::conj(z)); };
            b(i, j) = inner(pf, flipped);
        }
    }
    return b;
}

MatFn laurent_fn(const std::vector<std::pair<int, Mat>>& terms) {
    return [terms](cplx z) -> Mat {
        Mat v = Mat::Zero(terms.front().second.rows(), terms.front().second.cols());
        for (const auto& [n, c] : terms) v += std::pow(z, n) * c;
        return v;
    };
}

}  // namespace oracle
