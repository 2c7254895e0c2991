#include "matho/json_io.hpp"

#include <cmath>

namespace matho {

namespace {

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& require(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw ValidationError("expected an object", path);
    const auto it = j.find(key);
    if (it == j.end()) throw ValidationError("missing field", at(path, key));
    return *it;
}

double finite(const json& j, const std::string& path) {
    if (!j.is_number()) throw ValidationError("expected a number", path);
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ValidationError("non-finite number", path);
    return v;
}

int integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ValidationError("expected an integer", path);
    return j.get<int>();
}

}  // namespace

cplx complex_from_json(const json& j, const std::string& path) {
    if (j.is_number()) return {finite(j, path), 0.0};
    if (j.is_array() && j.size() == 2) return {finite(j[0], at(path, 0)), finite(j[1], at(path, 1))};
    throw ValidationError("expected a number or [re, im]", path);
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

Mat matrix_from_json(const json& j, const std::string& path, int rows, int cols) {
    if (!j.is_array() || j.empty()) throw ValidationError("expected a non-empty list of rows", path);
    const int r = static_cast<int>(j.size());
    if (!j[0].is_array() || j[0].empty()) throw ValidationError("expected a non-empty row", at(path, 0));
    const int c = static_cast<int>(j[0].size());
    if (rows >= 0 && r != rows) {
        throw DimensionError("expected " + std::to_string(rows) + " rows, got " + std::to_string(r), path);
    }
    if (cols >= 0 && c != cols) {
        throw DimensionError("expected " + std::to_string(cols) + " columns, got " + std::to_string(c), path);
    }
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        const auto& row = j[static_cast<std::size_t>(i)];
        const std::string rp = at(path, static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != c) throw DimensionError("ragged row", rp);
        for (int k = 0; k < c; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)], at(rp, k));
    }
    return m;
}

json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Vec vector_from_json(const json& j, const std::string& path, int size) {
    if (!j.is_array()) throw ValidationError("expected a list", path);
    if (size >= 0 && static_cast<int>(j.size()) != size) {
        throw DimensionError("expected " + std::to_string(size) + " entries", path);
    }
    Vec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i], at(path, i));
    return v;
}

json vector_to_json(const Vec& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
    return out;
}

namespace {

template <class S>
Laurent<S> laurent_from_json(const json& j, const std::string& path, int default_order) {
    constexpr bool is_matrix = std::is_same_v<S, MatrixShape>;
    const int d = integer(require(j, "dim", path), at(path, "dim"));
    if (d < 1) throw ValidationError("dim must be positive", at(path, "dim"));
    int order = default_order;
    if (j.contains("trunc_order")) order = integer(j["trunc_order"], at(path, "trunc_order"));
    if (order < 0) throw ValidationError("trunc_order must be nonnegative", at(path, "trunc_order"));
    Laurent<S> f(d, is_matrix ? d : 1, order);
    const json& coeffs = require(j, "coeffs", path);
    if (!coeffs.is_object()) throw ValidationError("expected an object keyed by index", at(path, "coeffs"));
    for (const auto& [key, value] : coeffs.items()) {
        const std::string cp = at(at(path, "coeffs"), key);
        int n = 0;
        std::size_t used = 0;
        try {
            n = std::stoi(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != key.size()) throw ValidationError("coefficient key must be an integer", cp);
        if (!f.in_window(n)) throw ValidationError("index outside the window [-trunc_order, trunc_order]", cp);
        if constexpr (is_matrix) {
            f.coeff(n) = matrix_from_json(value, cp, d, d);
        } else {
            f.coeff(n) = vector_from_json(value, cp, d);
        }
    }
    if (j.contains("tail_bound")) {
        const double t = finite(j["tail_bound"], at(path, "tail_bound"));
        if (t < 0.0) throw ValidationError("tail_bound must be nonnegative", at(path, "tail_bound"));
        f.set_tail_bound(t);
    }
    return f;
}

template <class S>
json laurent_to_json(const Laurent<S>& f) {
    json coeffs = json::object();
    for (int n = -f.order(); n <= f.order(); ++n) {
        const Mat c = f.coeff(n);
        if (c.isZero(0.0)) continue;
        if constexpr (std::is_same_v<S, MatrixShape>) {
            coeffs[std::to_string(n)] = matrix_to_json(c);
        } else {
            coeffs[std::to_string(n)] = vector_to_json(c.col(0));
        }
    }
    return json{{"dim", f.dim()}, {"coeffs", coeffs}, {"trunc_order", f.order()}, {"tail_bound", f.tail_bound()}};
}

}  // namespace

MatrixLaurent matrix_laurent_from_json(const json& j, const std::string& path, int default_order) {
    return laurent_from_json<MatrixShape>(j, path, default_order);
}
VectorLaurent vector_laurent_from_json(const json& j, const std::string& path, int default_order) {
    return laurent_from_json<VectorShape>(j, path, default_order);
}
json to_json(const MatrixLaurent& f) { return laurent_to_json(f); }
json to_json(const VectorLaurent& f) { return laurent_to_json(f); }

PotapovFactor factor_from_json(const json& j, const std::string& path, int dim) {
    if (!j.is_object()) throw ValidationError("expected an object", path);
    PotapovFactor f{0.0, Mat::Identity(dim, dim), Mat::Identity(dim, dim)};
    if (j.contains("a")) f.a = complex_from_json(j["a"], at(path, "a"));
    if (j.contains("frame")) f.frame = matrix_from_json(j["frame"], at(path, "frame"), dim);
    if (j.contains("post_unitary")) f.post_unitary = matrix_from_json(j["post_unitary"], at(path, "post_unitary"), dim, dim);
    return f;
}

json to_json(const PotapovFactor& f) {
    return json{{"a", to_json(f.a)}, {"frame", matrix_to_json(f.frame)}, {"post_unitary", matrix_to_json(f.post_unitary)}};
}

BlaschkePotapovProduct product_from_json(const json& j, const std::string& path) {
    const int d = integer(require(j, "dim", path), at(path, "dim"));
    if (d < 1) throw ValidationError("dim must be positive", at(path, "dim"));
    const json& fs = require(j, "factors", path);
    if (!fs.is_array()) throw ValidationError("expected a list of factors", at(path, "factors"));
    std::vector<PotapovFactor> factors;
    for (std::size_t i = 0; i < fs.size(); ++i) factors.push_back(factor_from_json(fs[i], at(at(path, "factors"), i), d));
    std::optional<Mat> left;
    if (j.contains("left_unitary")) left = matrix_from_json(j["left_unitary"], at(path, "left_unitary"), d, d);
    try {
        return BlaschkePotapovProduct(d, std::move(factors), left);
    } catch (const ValidationError& e) {
        // the product reports paths relative to itself
        throw e.nested(path);
    }
}

json to_json(const BlaschkePotapovProduct& p) {
    json fs = json::array();
    for (const auto& f : p.factors()) fs.push_back(to_json(f));
    return json{{"dim", p.dim()}, {"left_unitary", matrix_to_json(p.left_unitary())}, {"factors", fs}};
}

Conjugation conjugation_from_json(const json& j, const std::string& path, int dim) {
    const Mat u = matrix_from_json(require(j, "U", path), at(path, "U"), dim, dim);
    try {
        return Conjugation(u);
    } catch (const ValidationError& e) {
        throw e.nested(path);
    }
}

json to_json(const Conjugation& c) { return json{{"U", matrix_to_json(c.matrix())}}; }

CrofootData crofoot_from_json(const json& j, const std::string& path, int dim) {
    const Mat w = matrix_from_json(require(j, "W", path), at(path, "W"), dim, dim);
    try {
        return CrofootData(w);
    } catch (const ValidationError& e) {
        throw e.nested(path);
    }
}

json to_json(const CrofootData& w) { return json{{"W", matrix_to_json(w.w())}}; }

json to_json(const ModelOperator& op) {
    json out{{"matrix", matrix_to_json(op.matrix)}};
    if (op.domain && op.domain->product()) out["theta1"] = to_json(*op.domain->product());
    if (op.codomain && op.codomain->product()) out["theta2"] = to_json(*op.codomain->product());
    return out;
}

json to_json(const MembershipReport& r) {
    return json{{"kind", r.kind},
                {"displacement_norm", r.displacement_norm},
                {"residual", r.residual},
                {"threshold", r.threshold},
                {"verdict", r.accept ? "accept" : "reject"}};
}

}  // namespace matho
