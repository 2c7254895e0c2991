#include <gtest/gtest.h>

#include <memory>

#include "matho/random.hpp"
#include "matho/recovery.hpp"
#include "matho/transforms.hpp"
#include "oracle.hpp"

using namespace matho;

namespace {

SpacePtr space(const BlaschkePotapovProduct& theta, int order = 32) {
    return std::make_shared<const ModelSpace>(ModelSpace::build(theta, order));
}
SpacePtr z2_space(int order = 32) { return space(BlaschkePotapovProduct::monomial(1, 2), order); }

MatrixLaurent mono(int n, int order = 32, cplx c = 1.0) { return MatrixLaurent::monomial(Mat::Constant(1, 1, c), n, order); }

Mat mat2(cplx a, cplx b, cplx c, cplx d) {
    Mat m(2, 2);
    m << a, b, c, d;
    return m;
}

double max_entry(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

oracle::MatFn as_fn(const MatrixLaurent& phi) {
    std::vector<std::pair<int, Mat>> terms;
    for (int n = -phi.order(); n <= phi.order(); ++n)
        if (phi.at(n).norm() > 0.0) terms.emplace_back(n, phi.at(n));
    return oracle::laurent_fn(terms);
}

std::vector<DisplacementKind> kinds_of(Family f) {
    std::vector<DisplacementKind> out;
    for (auto k : all_displacement_kinds())
        if (is_toeplitz_kind(k) == (f == Family::toeplitz)) out.push_back(k);
    return out;
}

/// Every displacement kind of the family plus shift-invariance a..d.
std::vector<MembershipReport> all_checks(const ModelOperator& op, Family f, const Modifiers& mods) {
    std::vector<MembershipReport> out;
    for (auto k : kinds_of(f)) out.push_back(displacement_check(op, k, kDefaultThreshold, &mods));
    for (char c : {'a', 'b', 'c', 'd'}) out.push_back(shift_invariance_check(op, f, c));
    return out;
}

const Conjugation kConj1 = Conjugation::entrywise(1);

}  // namespace

TEST(Operators, MattoExamples) {
    const SpacePtr k = z2_space();
    EXPECT_LE(max_entry(build_matto(k, k, mono(1)).matrix - mat2(0, 0, 1, 0)), 1e-12);
    EXPECT_LE(max_entry(build_matto(k, k, mono(0)).matrix - Mat::Identity(2, 2)), 1e-12);
    EXPECT_LE(max_entry(build_matto(k, k, mono(-1)).matrix - mat2(0, 1, 0, 0)), 1e-12);
    EXPECT_LE(max_entry(build_matto(k, k, mono(1)).matrix - k->s()), 1e-12);
}

TEST(Operators, MathoExamples) {
    const SpacePtr k = z2_space();
    EXPECT_LE(max_entry(build_matho(k, k, mono(-1)).matrix - mat2(1, 0, 0, 0)), 1e-12);
    EXPECT_LE(max_entry(build_matho(k, k, mono(-2)).matrix - mat2(0, 1, 1, 0)), 1e-12);
    EXPECT_LE(max_entry(build_matho(k, k, mono(-3)).matrix - mat2(0, 0, 0, 1)), 1e-12);

    Rng rng(1);
    const SpacePtr k2 = space(random_product(rng, ProductDraw{2, 3, 6, 0.5}));
    MatrixLaurent analytic = random_symbol(rng, 2, 3, 32);
    analytic = analytic_part(analytic);
    EXPECT_EQ(build_matho(k2, k2, analytic).matrix.norm(), 0.0);
}

TEST(Operators, DimensionMismatch) {
    const SpacePtr k = z2_space();
    const MatrixLaurent phi2 = MatrixLaurent::identity(2, 8);
    EXPECT_THROW(build_matto(k, k, phi2), DimensionError);
    EXPECT_THROW(build_matho(k, k, phi2), DimensionError);
    EXPECT_THROW(parse_family("circulant"), ValidationError);
}

TEST(Operators, MatchesQuadratureOracle) {
    Rng rng(2);
    for (int t = 0; t < 6; ++t) {
        const int d = 1 + t % 3;
        const BlaschkePotapovProduct th1 = random_product(rng, ProductDraw{d, 2, 6, t % 2 ? 0.5 : 0.0});
        const BlaschkePotapovProduct th2 = random_product(rng, ProductDraw{d, 2, 6, 0.4});
        const SpacePtr k1 = space(th1, 64);
        const SpacePtr k2 = space(th2, 64);
        const MatrixLaurent phi = random_symbol(rng, d, 2, 64);
        const auto b1 = oracle::basis(th1);
        const auto b2 = oracle::basis(th2);
        EXPECT_LE(max_entry(build_matto(k1, k2, phi).matrix - oracle::matto(b1, b2, as_fn(phi))), 1e-8);
        EXPECT_LE(max_entry(build_matho(k1, k2, phi).matrix - oracle::matho(b1, b2, as_fn(phi))), 1e-8);
    }
}

TEST(Operators, Linearity) {
    Rng rng(3);
    const SpacePtr k1 = space(random_product(rng, ProductDraw{2, 3, 6, 0.0}));
    const SpacePtr k2 = space(random_product(rng, ProductDraw{2, 3, 6, 0.0}));
    const MatrixLaurent phi = random_symbol(rng, 2, 3, 32);
    const MatrixLaurent psi = random_symbol(rng, 2, 3, 32);
    const cplx c(0.3, -1.2);
    for (Family f : {Family::toeplitz, Family::hankel}) {
        const Mat lhs = build_operator(f, k1, k2, phi + c * psi).matrix;
        const Mat rhs = build_operator(f, k1, k2, phi).matrix + c * build_operator(f, k1, k2, psi).matrix;
        EXPECT_LE(max_entry(lhs - rhs), 1e-13);
    }
}

TEST(Membership, DisplacementExamples) {
    const SpacePtr k = z2_space();
    const MembershipReport good = displacement_check(build_matho(k, k, mono(-1)), DisplacementKind::H1);
    EXPECT_TRUE(good.accept);
    EXPECT_LE(good.residual, 1e-12);

    const MembershipReport bad = displacement_check(ModelOperator{k, k, mat2(0, 1, 0, 0)}, DisplacementKind::H1);
    EXPECT_FALSE(bad.accept);
    EXPECT_NEAR(bad.residual, 1.0, 1e-12);
    EXPECT_EQ(bad.kind, "H1");

    const MembershipReport shift = displacement_check(ModelOperator{k, k, k->s()}, DisplacementKind::T1);
    EXPECT_TRUE(shift.accept);
    EXPECT_LE(shift.residual, 1e-12);

    EXPECT_THROW(parse_displacement_kind("H5"), ValidationError);
    EXPECT_THROW(displacement_check(ModelOperator{k, k, k->s()}, DisplacementKind::MT), ValidationError);
    EXPECT_THROW(ModelOperator({k, k, Mat::Zero(3, 2)}).check(), DimensionError);
}

TEST(Membership, ShiftInvarianceExamples) {
    const SpacePtr k = z2_space();
    EXPECT_TRUE(shift_invariance_check(build_matho(k, k, mono(-1)), Family::hankel, 'a').accept);
    const MembershipReport bad = shift_invariance_check(ModelOperator{k, k, mat2(0, 1, 0, 0)}, Family::hankel, 'a');
    EXPECT_FALSE(bad.accept);
    EXPECT_NEAR(bad.residual, 1.0, 1e-12);
    EXPECT_TRUE(shift_invariance_check(ModelOperator{k, k, k->s()}, Family::toeplitz, 'c').accept);
    EXPECT_THROW(shift_invariance_check(ModelOperator{k, k, k->s()}, Family::toeplitz, 'e'), ValidationError);
}

TEST(Membership, BuiltOperatorsPassEveryCharacterization) {
    Rng rng(4);
    for (int t = 0; t < 24; ++t) {
        const int d = 1 + t % 3;
        const ProductDraw draw{d, 3, 12, t % 2 ? 0.5 : 0.0};
        const SpacePtr k1 = space(random_product(rng, draw), 64);
        const SpacePtr k2 = space(random_product(rng, draw), 64);
        const MatrixLaurent phi = random_symbol(rng, d, 3, 64);
        const Modifiers mods = random_modifiers(*k1, *k2, 100 + t);
        for (Family f : {Family::toeplitz, Family::hankel}) {
            for (const auto& r : all_checks(build_operator(f, k1, k2, phi), f, mods)) {
                EXPECT_TRUE(r.accept) << to_string(f) << " " << r.kind << " residual " << r.residual;
            }
        }
    }
}

TEST(Membership, RandomMatricesAreRejectedByEveryCharacterization) {
    const SpacePtr k = z2_space();
    Rng rng(5);
    const Modifiers mods = random_modifiers(*k, *k, 6);
    int rejected = 0;
    for (int t = 0; t < 100; ++t) {
        const ModelOperator op{k, k, rng.gaussian(2, 2)};
        const MembershipReport h1 = displacement_check(op, DisplacementKind::H1);
        if (!h1.accept && h1.residual >= 0.1 * op.matrix.norm()) ++rejected;
        for (const auto& r : all_checks(op, Family::hankel, mods)) EXPECT_EQ(r.accept, h1.accept) << r.kind;
    }
    EXPECT_GE(rejected, 90);
}

TEST(Membership, ProjectedResidualEqualsLeastSquaresResidual) {
    Rng rng(7);
    for (int t = 0; t < 6; ++t) {
        const SpacePtr k1 = space(random_product(rng, ProductDraw{2, 2, 6, 0.3}));
        const SpacePtr k2 = space(random_product(rng, ProductDraw{2, 2, 6, 0.0}));
        const ModelOperator op{k1, k2, rng.gaussian(k2->dim_k(), k1->dim_k())};
        const DisplacementFactors f = solve_displacement(op);
        EXPECT_NEAR(f.residual, displacement_check(op, DisplacementKind::T1).residual, 1e-10);
        const Mat x = op.matrix - k2->s() * op.matrix * k1->s_star();
        EXPECT_NEAR((x - f.b1 * k1->d() - k2->d() * f.b2.adjoint()).norm(), f.residual, 1e-10);
    }
}

TEST(Recovery, Examples) {
    const SpacePtr k = z2_space();
    const RecoveryResult toe = recover_symbol(ModelOperator{k, k, k->s()}, Family::toeplitz);
    EXPECT_LE(toe.rebuild_residual, 1e-9);
    EXPECT_LE(max_entry(build_matto(k, k, toe.symbol).matrix - k->s()), 1e-9);

    RecoveryOptions opts;
    opts.j1 = &kConj1;
    opts.j2 = &kConj1;
    const RecoveryResult han = recover_symbol(ModelOperator{k, k, mat2(1, 0, 0, 0)}, Family::hankel, opts);
    EXPECT_LE(han.rebuild_residual, 1e-9);

    const RecoveryResult zero = recover_symbol(ModelOperator{k, k, Mat::Zero(2, 2)}, Family::toeplitz);
    EXPECT_LE(build_matto(k, k, zero.symbol).matrix.norm(), 1e-12);
    EXPECT_TRUE(kernel_test(zero.symbol, KernelContext{k, k, Family::toeplitz}).in_kernel);

    EXPECT_THROW(recover_symbol(ModelOperator{k, k, mat2(0, 1, 0, 0)}, Family::hankel, opts), ValidationError);
    EXPECT_THROW(recover_symbol(ModelOperator{k, k, mat2(1, 0, 0, 0)}, Family::hankel), ValidationError);

    const SpacePtr rot = space(BlaschkePotapovProduct(2, {PotapovFactor{0.0, Mat::Identity(2, 2), mat2(0, 1, -1, 0)}}));
    const Conjugation conj2 = Conjugation::entrywise(2);
    RecoveryOptions opts2;
    opts2.j1 = &conj2;
    opts2.j2 = &conj2;
    EXPECT_THROW(recover_symbol(build_matho(rot, rot, MatrixLaurent::monomial(Mat::Identity(2, 2), -1, 32)),
                                Family::hankel, opts2),
                 ValidationError);
}

TEST(Recovery, RoundTrip) {
    Rng rng(8);
    for (int t = 0; t < 12; ++t) {
        const int d = 1 + t % 3;
        const ProductDraw draw{d, 2, 8, t % 2 ? 0.5 : 0.0};
        const SymmetricDraw s1 = random_j_symmetric(rng, draw);
        const SymmetricDraw s2 = random_j_symmetric(rng, draw);
        const SpacePtr k1 = space(s1.theta, 64);
        const SpacePtr k2 = space(s2.theta, 64);
        const MatrixLaurent phi = random_symbol(rng, d, 2, 64);
        RecoveryOptions opts;
        opts.j1 = &s1.j;
        opts.j2 = &s2.j;
        for (Family f : {Family::toeplitz, Family::hankel}) {
            const ModelOperator op = build_operator(f, k1, k2, phi);
            const RecoveryResult r = recover_symbol(op, f, opts);
            EXPECT_LE(r.rebuild_residual, 1e-8) << to_string(f) << " trial " << t;
            EXPECT_LE((build_operator(f, k1, k2, r.symbol).matrix - op.matrix).norm(), 1e-8);
        }
    }
}

TEST(Recovery, ReducedSymbolRebuildsTheSameOperator) {
    const SpacePtr k = z2_space();
    const MatrixLaurent phi = mono(1) + mono(2, 32, 3.0) + mono(-3, 32, 2.0);
    RecoveryOptions opts;
    opts.reduce = true;
    const RecoveryResult r = recover_symbol(build_matto(k, k, phi), Family::toeplitz, opts);
    EXPECT_LE(r.rebuild_residual, 1e-9);
    const MatrixLaurent red = reduce_modulo_kernel(phi, KernelContext{k, k, Family::toeplitz});
    EXPECT_LE(max_entry(build_matto(k, k, red).matrix - build_matto(k, k, phi).matrix), 1e-12);
    EXPECT_LT(red.norm(), phi.norm());
}

TEST(Kernel, Examples) {
    const SpacePtr k = z2_space();
    const KernelTestResult toe = kernel_test(mono(2), KernelContext{k, k, Family::toeplitz});
    EXPECT_TRUE(toe.in_kernel);
    EXPECT_TRUE(toe.operator_zero);
    EXPECT_TRUE(toe.agree);

    const KernelContext han{k, k, Family::hankel, &kConj1, &kConj1};
    const KernelTestResult z4 = kernel_test(mono(-4), han);
    EXPECT_TRUE(z4.in_kernel);
    EXPECT_TRUE(z4.operator_zero);

    const KernelTestResult z2 = kernel_test(mono(-2), han);
    EXPECT_FALSE(z2.in_kernel);
    EXPECT_FALSE(z2.operator_zero);
    EXPECT_TRUE(z2.agree);
    EXPECT_GT(z2.distance, 0.5);

    EXPECT_THROW(kernel_test(mono(-4), KernelContext{k, k, Family::hankel}), ValidationError);
    EXPECT_THROW(kernel_test(mono(-30), han), ValidationError);
}

TEST(Kernel, VerdictMatchesZeroOperator) {
    Rng rng(9);
    for (int t = 0; t < 6; ++t) {
        const int d = 1 + t % 2;
        const SymmetricDraw s1 = random_j_symmetric(rng, ProductDraw{d, 2, 4, 0.0});
        const SymmetricDraw s2 = random_j_symmetric(rng, ProductDraw{d, 2, 4, 0.0});
        const SpacePtr k1 = space(s1.theta, 24);
        const SpacePtr k2 = space(s2.theta, 24);
        for (Family f : {Family::toeplitz, Family::hankel}) {
            const KernelContext ctx{k1, k2, f, &s1.j, &s2.j};
            const auto gens = kernel_generators(ctx, 2, 12);
            MatrixLaurent combo = MatrixLaurent::zero(d, 12);
            for (const auto& g : gens) {
                const KernelTestResult r = kernel_test(g, ctx);
                EXPECT_TRUE(r.in_kernel && r.operator_zero && r.agree) << to_string(f);
                combo += rng.complex_normal() * g;
            }
            const KernelTestResult rc = kernel_test(combo, ctx);
            EXPECT_TRUE(rc.in_kernel && rc.operator_zero && rc.agree) << to_string(f);
            const KernelTestResult rn = kernel_test(combo + random_symbol(rng, d, 1, 12), ctx);
            EXPECT_TRUE(rn.agree);
            EXPECT_FALSE(rn.in_kernel);
        }
    }
}

TEST(Transforms, HandCheckedInstances) {
    const BlaschkePotapovProduct z2 = BlaschkePotapovProduct::monomial(1, 2);
    TransformVerifier v({z2, z2, kConj1, kConj1, {}, {}, mono(-1, 16), 16});
    const TransformResult tau = v.run("tau");
    EXPECT_LE(tau.residual, 1e-12);
    EXPECT_NEAR(tau.lhs_norm, 1.0, 1e-12);
    const TransformResult f = v.run("prop61f");
    EXPECT_LE(f.residual, 1e-12);
    EXPECT_NEAR(f.lhs_norm, 1.0, 1e-12);
    EXPECT_EQ(v.run("crofoot").residual, 0.0);
    for (const auto& r : v.run_all()) {
        EXPECT_TRUE(r.applicable) << r.name;
        EXPECT_LE(r.residual, 1e-8) << r.name;
    }
    EXPECT_THROW(v.run("prop62"), ValidationError);
    EXPECT_EQ(transform_names().size(), 13u);
}

TEST(Transforms, RandomInstances) {
    Rng rng(10);
    for (int t = 0; t < 6; ++t) {
        const int d = 1 + t % 3;
        const ProductDraw draw{d, 2, 6, t % 2 ? 0.5 : 0.0};
        const SymmetricDraw s1 = random_j_symmetric(rng, draw);
        const SymmetricDraw s2 = random_j_symmetric(rng, draw);
        Mat w1 = rng.gaussian(d, d), w2 = rng.gaussian(d, d);
        w1 *= 0.25 / w1.jacobiSvd().singularValues()(0);
        w2 *= 0.25 / w2.jacobiSvd().singularValues()(0);
        TransformVerifier v({s1.theta, s2.theta, s1.j, s2.j, CrofootData(w1), CrofootData(w2),
                             random_symbol(rng, d, 2, 64), 64});
        for (const auto& r : v.run_all()) {
            if (r.name == "remark412") continue;
            EXPECT_TRUE(r.applicable) << r.name;
            EXPECT_LE(r.residual, 1e-8 * (1.0 + r.lhs_norm)) << r.name << " trial " << t;
        }
    }
}

TEST(Transforms, AlternativeSymbolFormulasFailOffTheScalarCase) {
    Rng rng(11);
    const SymmetricDraw s1 = random_j_symmetric(rng, ProductDraw{2, 2, 6, 0.0});
    const SymmetricDraw s2 = random_j_symmetric(rng, ProductDraw{2, 2, 6, 0.0});
    Mat w = rng.gaussian(2, 2);
    w *= 0.5 / w.jacobiSvd().singularValues()(0);
    TransformVerifier v({s1.theta, s2.theta, s1.j, s2.j, CrofootData(w), CrofootData(w), random_symbol(rng, 2, 2, 48), 48});
    EXPECT_LE(v.crofoot(CrofootSymbol::derived).residual, 1e-8);
    EXPECT_GT(v.crofoot(CrofootSymbol::literal).residual, 1e-4);
    EXPECT_LE(v.ctheta(ConjugationSymbol::derived).residual, 1e-8);
    EXPECT_GT(v.ctheta(ConjugationSymbol::literal).residual, 1e-4);

    // both formulas coincide for scalar data and W = 0
    const BlaschkePotapovProduct z2 = BlaschkePotapovProduct::monomial(1, 2);
    TransformVerifier s({z2, z2, kConj1, kConj1, {}, {}, mono(-1, 16) + mono(2, 16, 0.5), 16});
    EXPECT_LE(s.crofoot(CrofootSymbol::literal).residual, 1e-12);
    EXPECT_LE(s.ctheta(ConjugationSymbol::literal).residual, 1e-12);
}

TEST(Transforms, CommutationIdentityNeedsItsHypotheses) {
    const BlaschkePotapovProduct z2 = BlaschkePotapovProduct::monomial(1, 2);
    // z + conj(z) is J-symmetric for entrywise conjugation and commutes with z^2
    TransformVerifier good({z2, z2, kConj1, kConj1, {}, {}, mono(1, 16) + mono(-1, 16), 16});
    const TransformResult r = good.run("remark412");
    EXPECT_FALSE(r.informational);
    EXPECT_LE(r.residual, 1e-12);

    Rng rng(12);
    const SymmetricDraw s = random_j_symmetric(rng, ProductDraw{2, 2, 6, 0.0});
    TransformVerifier bad({s.theta, s.theta, s.j, s.j, {}, {}, random_symbol(rng, 2, 2, 32), 32});
    const TransformResult rb = bad.run("remark412");
    EXPECT_TRUE(rb.informational);
    EXPECT_GT(rb.residual, 1e-4);
}

TEST(Transforms, SkippedWithoutJSymmetry) {
    const Mat u = mat2(0, 1, -1, 0);
    const BlaschkePotapovProduct rot(2, {PotapovFactor{0.0, Mat::Identity(2, 2), u}});
    const Conjugation conj2 = Conjugation::entrywise(2);
    TransformVerifier v({rot, rot, conj2, conj2, {}, {}, MatrixLaurent::identity(2, 16), 16});
    EXPECT_FALSE(v.run("ctheta").applicable);
    EXPECT_TRUE(v.run("tau").applicable);
    EXPECT_LE(v.run("tau").residual, 1e-12);
}
