#include "matho/operators.hpp"

namespace matho {

void ModelOperator::check() const {
    if (!domain || !codomain) throw ValidationError("operator spaces are missing");
    if (domain->dim() != codomain->dim()) throw DimensionError("spaces have different coefficient dimensions");
    if (matrix.rows() != codomain->dim_k() || matrix.cols() != domain->dim_k()) {
        throw DimensionError("operator matrix must be dim K(theta2) x dim K(theta1)", "matrix");
    }
}

Family parse_family(const std::string& s) {
    if (s == "toeplitz" || s == "matto") return Family::toeplitz;
    if (s == "hankel" || s == "matho") return Family::hankel;
    throw ValidationError("unknown family '" + s + "' (expected toeplitz or hankel)", "family");
}

std::string to_string(Family f) {
    return f == Family::toeplitz ? "toeplitz" : "hankel";
}

namespace {

void check_symbol(const ModelSpace& s, const MatrixLaurent& phi) {
    if (phi.rows() != s.dim() || phi.cols() != s.dim()) throw DimensionError("symbol must be d x d", "symbol");
}

}  // namespace

ModelOperator build_matto(const SpacePtr& domain, const SpacePtr& codomain, const MatrixLaurent& phi) {
    check_symbol(*domain, phi);
    ModelOperator op{domain, codomain, Mat(codomain->dim_k(), domain->dim_k())};
    op.check();
    for (int j = 0; j < domain->dim_k(); ++j) {
        op.matrix.col(j) = codomain->coords(mul(phi, domain->basis()[static_cast<std::size_t>(j)]));
    }
    return op;
}

ModelOperator build_matho(const SpacePtr& domain, const SpacePtr& codomain, const MatrixLaurent& phi) {
    check_symbol(*domain, phi);
    ModelOperator op{domain, codomain, Mat(codomain->dim_k(), domain->dim_k())};
    op.check();
    for (int j = 0; j < domain->dim_k(); ++j) {
        const VectorLaurent g = mul(phi, domain->basis()[static_cast<std::size_t>(j)]);
        op.matrix.col(j) = codomain->coords(flip(riesz_split(g).second));
    }
    return op;
}

ModelOperator build_operator(Family family, const SpacePtr& domain, const SpacePtr& codomain, const MatrixLaurent& phi) {
    return family == Family::toeplitz ? build_matto(domain, codomain, phi) : build_matho(domain, codomain, phi);
}

}  // namespace matho
