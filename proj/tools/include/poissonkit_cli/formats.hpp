#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "poissonkit/ce_complex.hpp"
#include "poissonkit/lie_algebra.hpp"
#include "poissonkit/multivector.hpp"
#include "poissonkit/poisson_structure.hpp"
#include "poissonkit/stability.hpp"

namespace poissonkit::cli {

using Json = nlohmann::ordered_json;

/// Malformed input file or argument. The message names the line/column or
/// the JSON field at fault.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
std::string sha256_hex(std::string_view bytes);

/// Throws ParseError with "line L, column C" on malformed JSON.
Json parse_json_text(std::string_view text);

/// {"dim", "basis", "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}]}, i < j.
struct LieAlgebraFile {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  StructureMap brackets;
};

LieAlgebraFile lie_file_from_json(const Json& j);
/// Canonical form: brackets ordered by (i, j), zero coefficients dropped.
Json to_json(const LieAlgebraFile& f);
LieAlgebraFile lie_file_of(const LieAlgebra& g);
/// Throws JacobiViolation.
LieAlgebra build(const LieAlgebraFile& f);

/// {"n", "terms": [{"indices": [i, j], "monomial": [...], "coeff"}]}, i < j.
PolyMultivector bivector_from_json(const Json& j);
Json bivector_to_json(const PolyMultivector& pi);

/// Any degree: {"n", "degree", "terms"}.
Json field_to_json(const PolyMultivector& a);
PolyMultivector field_from_json(const Json& j);

/// {"dim", "degree", "terms": [{"indices", "coeff"}]}.
Json cochain_to_json(const CeCochain& c);
CeCochain cochain_from_json(const Json& j);

/// {"n", "pi0": [terms], "pi1": [terms]}. A report whose results carry a
/// "pencil" entry is accepted as well.
Json pencil_to_json(const Pencil& p);
Pencil pencil_from_json(const Json& j);

enum class FileKind { LieAlgebra, Bivector, Pencil, Cochain };
FileKind detect_kind(const Json& j);

/// "0,1/2,-3" -> exact point of dimension n; empty text means the origin.
Vector parse_point(std::string_view text, std::size_t n);

Json to_json(const Vector& v);
Json to_json(const Rational& q);

}  // namespace poissonkit::cli
