#include "matho/kernel_class.hpp"

#include <algorithm>
#include <cmath>

#include "matho/symmetry_maps.hpp"

namespace matho {

namespace {

constexpr double kZeroOperatorTol = 1e-10;

void check_context(const KernelContext& ctx) {
    if (!ctx.space1 || !ctx.space2) throw ValidationError("kernel test needs both spaces");
    if (ctx.family == Family::hankel && (ctx.j1 == nullptr || ctx.j2 == nullptr)) {
        throw ValidationError("hankel kernel class needs conjugations J1 and J2", "conjugations");
    }
}

int symbol_extent(const MatrixLaurent& phi) {
    const double scale = std::max(1.0, phi.l1_norm());
    const auto [lo, hi] = phi.support(1e-14 * scale);
    if (lo > hi) return 0;
    return std::max(std::abs(lo), std::abs(hi));
}

Vec flatten(const MatrixLaurent& f, int window) {
    const int d2 = f.rows() * f.cols();
    Vec v(static_cast<Eigen::Index>(d2) * (2 * window + 1));
    for (int n = -window; n <= window; ++n) {
        const Mat c = f.at(n);
        v.segment(static_cast<Eigen::Index>(n + window) * d2, d2) = Eigen::Map<const Vec>(c.data(), d2);
    }
    return v;
}

MatrixLaurent unflatten(const Vec& v, int dim, int window) {
    const int d2 = dim * dim;
    MatrixLaurent out = MatrixLaurent::zero(dim, window);
    for (int n = -window; n <= window; ++n) {
        out.coeff(n) = Eigen::Map<const Mat>(v.segment(static_cast<Eigen::Index>(n + window) * d2, d2).data(), dim, dim);
    }
    return out;
}

struct Plan {
    int lag_max = 0;
    int window = 0;
};

Plan plan_for(const MatrixLaurent& phi, const KernelContext& ctx) {
    const int n1 = effective_degree(ctx.space1->theta());
    const int n2 = effective_degree(ctx.space2->theta());
    const int m = std::min(ctx.space1->order(), ctx.space2->order());
    Plan p;
    p.lag_max = symbol_extent(phi);
    p.window = p.lag_max + (ctx.family == Family::toeplitz ? std::max(n1, n2) : n1 + n2) + 1;
    if (p.window > m) {
        throw ValidationError("window too small for the kernel-class generators: need order >= " +
                                  std::to_string(p.window),
                              "trunc_order");
    }
    return p;
}

/// Least-squares fit of phi by the generators: (coefficient-space residual, fitted part).
std::pair<double, Vec> fit(const MatrixLaurent& phi, const KernelContext& ctx, const Plan& p) {
    const auto gens = kernel_generators(ctx, p.lag_max, p.window);
    const Vec target = flatten(phi, p.window);
    Mat g(target.size(), static_cast<Eigen::Index>(gens.size()));
    for (std::size_t i = 0; i < gens.size(); ++i) g.col(static_cast<Eigen::Index>(i)) = flatten(gens[i], p.window);
    // the threshold must be set before compute(): the rank is fixed there
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(g.rows(), g.cols());
    cod.setThreshold(1e-12);
    cod.compute(g);
    const Vec c = cod.solve(target);
    const Vec fitted = g * c;
    // coefficients of phi outside the working window are not representable
    double outside = 0.0;
    for (int n = -phi.order(); n <= phi.order(); ++n) {
        if (std::abs(n) > p.window) outside += phi.coeff(n).squaredNorm();
    }
    return {std::sqrt((target - fitted).squaredNorm() + outside), fitted};
}

}  // namespace

int effective_degree(const MatrixLaurent& theta) {
    const double scale = std::max(1.0, theta.l1_norm());
    const auto [lo, hi] = theta.support(1e-15 * scale);
    return lo > hi ? 0 : std::max(hi, 0);
}

std::vector<MatrixLaurent> kernel_generators(const KernelContext& ctx, int lag_max, int window) {
    check_context(ctx);
    const int d = ctx.space1->dim();
    const MatrixLaurent th1 = ctx.space1->theta();
    const MatrixLaurent th2 = ctx.space2->theta();
    std::vector<MatrixLaurent> out;
    const auto push = [&](const MatrixLaurent& f) { out.push_back(f.resized(window)); };
    for (int k = 0; k <= lag_max; ++k) {
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                Mat e = Mat::Zero(d, d);
                e(i, j) = 1.0;
                const MatrixLaurent mono = MatrixLaurent::monomial(e, k, 0);
                if (ctx.family == Family::toeplitz) {
                    push(mul(th2, mono));
                    push(adjoint_star(mul(th1, mono)));
                } else {
                    push(sandwich(*ctx.j2, adjoint_star(mono), *ctx.j1));
                    push(sandwich(*ctx.j2, mul(mul(tilde_series(th2), mono), th1), *ctx.j1));
                }
            }
        }
    }
    if (ctx.family == Family::hankel) {
        // the analytic family needs every lag up to the window
        for (int k = lag_max + 1; k <= window; ++k) {
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    Mat e = Mat::Zero(d, d);
                    e(i, j) = 1.0;
                    push(sandwich(*ctx.j2, adjoint_star(MatrixLaurent::monomial(e, k, 0)), *ctx.j1));
                }
            }
        }
    }
    return out;
}

KernelTestResult kernel_test(const MatrixLaurent& phi, const KernelContext& ctx, double tol) {
    check_context(ctx);
    const Plan p = plan_for(phi, ctx);
    KernelTestResult r;
    r.window = p.window;
    r.distance = fit(phi, ctx, p).first;
    r.in_kernel = r.distance <= tol * (1.0 + phi.norm());
    r.operator_norm = build_operator(ctx.family, ctx.space1, ctx.space2, phi).matrix.norm();
    r.operator_zero = r.operator_norm <= kZeroOperatorTol * (1.0 + phi.norm());
    r.agree = r.in_kernel == r.operator_zero;
    return r;
}

MatrixLaurent reduce_modulo_kernel(const MatrixLaurent& phi, const KernelContext& ctx) {
    check_context(ctx);
    const Plan p = plan_for(phi, ctx);
    const Vec fitted = fit(phi, ctx, p).second;
    MatrixLaurent out = phi.resized(std::max(phi.order(), p.window));
    out -= unflatten(fitted, phi.rows(), p.window);
    out.set_tail_bound(phi.tail_bound());
    return out;
}

}  // namespace matho
