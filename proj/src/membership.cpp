#include "matho/membership.hpp"

#include <array>
#include <random>

#include "matho/linalg.hpp"

namespace matho {

namespace {

struct KindInfo {
    DisplacementKind kind;
    const char* name;
};

constexpr std::array<KindInfo, 13> kKinds{{{DisplacementKind::T1, "T1"},
                                           {DisplacementKind::T2, "T2"},
                                           {DisplacementKind::T3, "T3"},
                                           {DisplacementKind::T4, "T4"},
                                           {DisplacementKind::H1, "H1"},
                                           {DisplacementKind::H2, "H2"},
                                           {DisplacementKind::H3, "H3"},
                                           {DisplacementKind::H4, "H4"},
                                           {DisplacementKind::MT, "MT"},
                                           {DisplacementKind::MHa, "MH-a"},
                                           {DisplacementKind::MHb, "MH-b"},
                                           {DisplacementKind::MHc, "MH-c"},
                                           {DisplacementKind::MHd, "MH-d"}}};

enum class Defect { d, d_tilde };

const Mat& proj(const ModelSpace& s, Defect which) {
    return which == Defect::d ? s.p_d() : s.p_d_tilde();
}

const Mat& basis(const ModelSpace& s, Defect which) {
    return which == Defect::d ? s.q_d() : s.q_d_tilde();
}

Mat complement_projection(const ModelSpace& s, Defect which) {
    return Mat::Identity(s.dim_k(), s.dim_k()) - proj(s, which);
}

}  // namespace

DisplacementKind parse_displacement_kind(const std::string& s) {
    for (const auto& k : kKinds) {
        if (s == k.name) return k.kind;
    }
    if (s == "MHa") return DisplacementKind::MHa;
    if (s == "MHb") return DisplacementKind::MHb;
    if (s == "MHc") return DisplacementKind::MHc;
    if (s == "MHd") return DisplacementKind::MHd;
    throw ValidationError("unknown displacement kind '" + s + "'", "kind");
}

std::string to_string(DisplacementKind k) {
    for (const auto& info : kKinds) {
        if (info.kind == k) return info.name;
    }
    return "?";
}

std::vector<DisplacementKind> all_displacement_kinds() {
    std::vector<DisplacementKind> out;
    for (const auto& k : kKinds) out.push_back(k.kind);
    return out;
}

bool is_toeplitz_kind(DisplacementKind k) {
    return k == DisplacementKind::T1 || k == DisplacementKind::T2 || k == DisplacementKind::T3 ||
           k == DisplacementKind::T4 || k == DisplacementKind::MT;
}

bool is_modified_kind(DisplacementKind k) {
    return k == DisplacementKind::MT || k == DisplacementKind::MHa || k == DisplacementKind::MHb ||
           k == DisplacementKind::MHc || k == DisplacementKind::MHd;
}

Modifiers random_modifiers(const ModelSpace& s1, const ModelSpace& s2, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    const auto draw = [&](const ModelSpace& s) {
        Mat m(s.dim_k(), s.dim_k());
        for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = cplx(g(rng), g(rng));
        return Mat(s.p_d() * m * s.p_d_tilde());
    };
    Modifiers out;
    out.x1 = draw(s1);
    out.x2 = draw(s2);
    return out;
}

MembershipReport displacement_check(const ModelOperator& op, DisplacementKind kind, double threshold,
                                    const Modifiers* modifiers) {
    op.check();
    const ModelSpace& k1 = *op.domain;
    const ModelSpace& k2 = *op.codomain;
    Mat s1 = k1.s();
    Mat s2 = k2.s();
    if (is_modified_kind(kind)) {
        if (modifiers == nullptr) throw ValidationError("modified-shift kinds need modifiers", "modifiers");
        s1 = k1.modified_shift(modifiers->x1);
        s2 = k2.modified_shift(modifiers->x2);
    }
    const Mat& a = op.matrix;
    const Mat s1s = s1.adjoint();
    const Mat s2s = s2.adjoint();
    Mat x;
    Defect right = Defect::d;  // defect space of Theta_1 on the right
    Defect left = Defect::d;   // defect space of Theta_2 on the left
    switch (kind) {
        case DisplacementKind::T1:
        case DisplacementKind::MT:
            x = a - s2 * a * s1s;
            right = Defect::d, left = Defect::d;
            break;
        case DisplacementKind::T2:
            x = a - s2s * a * s1;
            right = Defect::d_tilde, left = Defect::d_tilde;
            break;
        case DisplacementKind::T3:
            x = s2s * a - a * s1s;
            right = Defect::d, left = Defect::d_tilde;
            break;
        case DisplacementKind::T4:
            x = s2 * a - a * s1;
            right = Defect::d_tilde, left = Defect::d;
            break;
        case DisplacementKind::H1:
        case DisplacementKind::MHa:
            x = a - s2 * a * s1;
            right = Defect::d_tilde, left = Defect::d;
            break;
        case DisplacementKind::H2:
        case DisplacementKind::MHb:
            x = s2s * a - a * s1;
            right = Defect::d_tilde, left = Defect::d_tilde;
            break;
        case DisplacementKind::H3:
        case DisplacementKind::MHc:
            x = a - s2s * a * s1s;
            right = Defect::d, left = Defect::d_tilde;
            break;
        case DisplacementKind::H4:
        case DisplacementKind::MHd:
            x = s2 * a - a * s1s;
            right = Defect::d, left = Defect::d;
            break;
    }
    MembershipReport r;
    r.kind = to_string(kind);
    r.displacement_norm = x.norm();
    r.residual = (complement_projection(k2, left) * x * complement_projection(k1, right)).norm();
    r.threshold = threshold;
    r.accept = r.residual <= threshold * (1.0 + r.displacement_norm);
    return r;
}

MembershipReport shift_invariance_check(const ModelOperator& op, Family family, char kind, double threshold) {
    op.check();
    const ModelSpace& k1 = *op.domain;
    const ModelSpace& k2 = *op.codomain;
    const Mat& a = op.matrix;
    const Mat& s1 = k1.s();
    const Mat& s2 = k2.s();
    Mat m;
    Defect right = Defect::d;
    Defect left = Defect::d;
    const bool toeplitz = family == Family::toeplitz;
    switch (kind) {
        case 'a':
            m = toeplitz ? Mat(s2 * a * s1.adjoint() - a) : Mat(s2 * a * s1 - a);
            right = toeplitz ? Defect::d : Defect::d_tilde, left = Defect::d;
            break;
        case 'b':
            m = toeplitz ? Mat(a * s1.adjoint() - s2.adjoint() * a) : Mat(s2.adjoint() * a - a * s1);
            right = toeplitz ? Defect::d : Defect::d_tilde, left = Defect::d_tilde;
            break;
        case 'c':
            m = toeplitz ? Mat(s2.adjoint() * a * s1 - a) : Mat(s2.adjoint() * a * s1.adjoint() - a);
            right = toeplitz ? Defect::d_tilde : Defect::d, left = Defect::d_tilde;
            break;
        case 'd':
            m = toeplitz ? Mat(a * s1 - s2 * a) : Mat(s2 * a - a * s1.adjoint());
            right = toeplitz ? Defect::d_tilde : Defect::d, left = Defect::d;
            break;
        default:
            throw ValidationError(std::string("unknown shift-invariance kind '") + kind + "'", "kind");
    }
    const Mat ql = orthonormal_complement(basis(k2, left), k2.dim_k());
    const Mat qr = orthonormal_complement(basis(k1, right), k1.dim_k());
    const Mat dev = ql.adjoint() * m * qr;
    MembershipReport r;
    r.kind = to_string(family) + "-" + kind;
    r.displacement_norm = m.norm();
    r.residual = dev.size() == 0 ? 0.0 : dev.cwiseAbs().maxCoeff();
    r.threshold = threshold;
    r.accept = r.residual <= threshold * (1.0 + a.norm());
    return r;
}

}  // namespace matho
