#pragma once

// JSON encodings. Complex numbers are [re, im] (a bare number is read as a
// real value); matrices are lists of rows; vectors are lists of entries.
// Parsers throw ValidationError with the offending field path.

#include <string>

#include <json.hpp>

#include "matho/inner_function.hpp"
#include "matho/membership.hpp"

namespace matho {

using json = nlohmann::json;

cplx complex_from_json(const json& j, const std::string& path);
json to_json(cplx z);

/// Expected shape is checked when rows/cols are nonnegative.
Mat matrix_from_json(const json& j, const std::string& path, int rows = -1, int cols = -1);
json matrix_to_json(const Mat& m);

Vec vector_from_json(const json& j, const std::string& path, int size = -1);
json vector_to_json(const Vec& v);

/// {"dim": d, "coeffs": {"n": ...}, "trunc_order": M, "tail_bound": t}.
/// trunc_order defaults to default_order; coefficients outside the window are an error.
MatrixLaurent matrix_laurent_from_json(const json& j, const std::string& path, int default_order);
VectorLaurent vector_laurent_from_json(const json& j, const std::string& path, int default_order);
/// Only coefficients with nonzero entries are written.
json to_json(const MatrixLaurent& f);
json to_json(const VectorLaurent& f);

/// {"a": [re,im], "frame": [[...]], "post_unitary": [[...]]}; a defaults to
/// 0, frame to the identity (P = I) and post_unitary to the identity.
PotapovFactor factor_from_json(const json& j, const std::string& path, int dim);
json to_json(const PotapovFactor& f);

/// {"dim": d, "left_unitary": [[...]], "factors": [...]}.
BlaschkePotapovProduct product_from_json(const json& j, const std::string& path);
json to_json(const BlaschkePotapovProduct& p);

/// {"U": [[...]]}
Conjugation conjugation_from_json(const json& j, const std::string& path, int dim);
json to_json(const Conjugation& c);

/// {"W": [[...]]}
CrofootData crofoot_from_json(const json& j, const std::string& path, int dim);
json to_json(const CrofootData& w);

/// {"matrix": [[...]], "theta1": ..., "theta2": ...}; the product entries are
/// written only when the spaces carry a product.
json to_json(const ModelOperator& op);

/// {"kind", "displacement_norm", "residual", "threshold", "verdict"}
json to_json(const MembershipReport& r);

}  // namespace matho
