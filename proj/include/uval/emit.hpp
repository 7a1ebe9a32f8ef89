#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "uval/duality.hpp"
#include "uval/matrix.hpp"
#include "uval/poly.hpp"
#include "uval/scan.hpp"
#include "uval/suite.hpp"
#include "uval/tensor.hpp"

namespace uval {

enum class Format { kPlain, kJson, kLatex, kCsv };

/// "plain" | "json" | "latex" | "csv"; throws std::invalid_argument.
Format parse_format(const std::string& name);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const ExactMatrix& m);
nlohmann::json to_json(const TensorElement& t);
nlohmann::json to_json(const CompanionData& c);
nlohmann::json to_json(const std::vector<PositivityRow>& rows);
nlohmann::json to_json(const SuiteReport& report);
nlohmann::json to_json(const AlgebraId& id);

/// Inverse of to_json for matrices: an array of equal-length arrays of "p/q" strings.
ExactMatrix matrix_from_json(const nlohmann::json& j);

std::string to_latex(const ExactMatrix& m);
/// Aligned sum of l ⊗ r terms grouped by bidegree.
std::string to_latex(const TensorElement& t);

std::string to_plain(const ExactMatrix& m);
std::string to_plain(const TensorElement& t);
std::string to_plain(const SuiteReport& report);
std::string to_plain(const std::vector<PositivityRow>& rows);
std::string to_csv(const std::vector<PositivityRow>& rows);

/// Basis listing "t^4, s*t^2" (plain), JSON array, or LaTeX.
std::string format_basis(const std::vector<Monomial>& basis, Format format);
std::string format_poly(const GradedPoly& p, Format format);
std::string format_matrix(const ExactMatrix& m, Format format);
std::string format_tensor(const TensorElement& t, Format format);

}  // namespace uval
