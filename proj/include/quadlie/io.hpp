#pragma once

#include "quadlie/doubleext.hpp"
#include "quadlie/quadfam.hpp"
#include "quadlie/tstar.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quadlie::io {

using json = nlohmann::ordered_json;

/// Malformed input. line and column are 1-based; both are 0 when the
/// problem is structural rather than syntactic.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// 1-based line and column of a byte offset into text.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset);

json parse_text(std::string_view text);
json read_file(const std::string &path);

json scalar_to_json(const Scalar &s);
Scalar scalar_from_json(const json &j);
json vec_to_json(const Vec &v);
Vec vec_from_json(const json &j, std::size_t expected);
json mat_to_json(const Mat &m);
Mat mat_from_json(const json &j);

/// {"dim": n, "brackets": [{"i", "j", "v"}...]} with 1-based indices.
json algebra_to_json(const AlgebraData &a);
/// Adds the "form" key.
json algebra_to_json(const QuadraticStructure &q);
AlgebraData algebra_from_json(const json &j);
/// The optional "form" key of an algebra object.
std::optional<Mat> form_from_json(const json &j);

/// {"n": n, "terms": [{"ijk": [i, j, k], "c": "q"}...]} with i < j < k.
json coeffs_to_json(const AlternatingCoeffs &c);
AlternatingCoeffs coeffs_from_json(const json &j);

/// An object with "base" (algebra) plus either alternating "terms" or
/// "values" [{"i", "j", "v"}...]; without "base" the terms form an abelian cocycle.
json cocycle_to_json(const GeneralCocycle &w);
GeneralCocycle cocycle_from_json(const json &j);

/// {"n": n, "mats": [M_1, ..., M_n]}.
json family_to_json(const QuadraticFamily &f);
QuadraticFamily family_from_json(const json &j);

/// {"n": n, "derivs": [d_0, ..., d_{n-1}]}.
json chain_to_json(const ExtensionChain &ch);
ExtensionChain chain_from_json(const json &j);

} // namespace quadlie::io
