#include "poissonkit_cli/formats.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <limits>
#include <set>
#include <sstream>

namespace poissonkit::cli {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError("field " + path + ": " + what);
}

std::string at_key(const std::string& path, std::string_view key) { return path + "." + std::string(key); }
std::string at_index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& member(const Json& obj, std::string_view key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(at_key(path, key), "missing");
  return *it;
}

const Json& array_member(const Json& obj, std::string_view key, const std::string& path) {
  const Json& v = member(obj, key, path);
  if (!v.is_array()) fail(at_key(path, key), "expected an array");
  return v;
}

std::size_t as_count(const Json& v, const std::string& path) {
  if (!v.is_number_unsigned()) fail(path, "expected a nonnegative integer");
  return v.get<std::size_t>();
}

std::size_t as_index(const Json& v, std::size_t bound, const std::string& path) {
  const std::size_t i = as_count(v, path);
  if (i >= bound) fail(path, "index " + std::to_string(i) + " out of range for dimension " + std::to_string(bound));
  return i;
}

Rational as_rational(const Json& v, const std::string& path) {
  std::string text;
  if (v.is_number_integer()) {
    text = v.dump();
  } else if (v.is_string()) {
    text = v.get<std::string>();
  } else {
    fail(path, "expected a rational string \"p/q\"");
  }
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

IndexTuple read_indices(const Json& v, std::size_t n, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of indices");
  IndexTuple out;
  for (std::size_t a = 0; a < v.size(); ++a) {
    const std::size_t i = as_index(v[a], n, at_index(path, a));
    if (!out.empty() && i <= out.back()) fail(path, "indices must be strictly increasing");
    out.push_back(i);
  }
  return out;
}

Exponents read_monomial(const Json& v, std::size_t n, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an exponent list");
  if (v.size() != n) fail(path, "expected " + std::to_string(n) + " exponents");
  Exponents out;
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t e = as_count(v[a], at_index(path, a));
    if (e > std::numeric_limits<std::uint32_t>::max()) fail(at_index(path, a), "exponent too large");
    out.push_back(static_cast<std::uint32_t>(e));
  }
  return out;
}

void read_terms(const Json& arr, PolyMultivector& into, const std::string& path) {
  if (!arr.is_array()) fail(path, "expected an array of terms");
  const std::size_t n = into.ambient_dim();
  for (std::size_t t = 0; t < arr.size(); ++t) {
    const std::string tp = at_index(path, t);
    const Json& term = arr[t];
    IndexTuple idx = read_indices(member(term, "indices", tp), n, at_key(tp, "indices"));
    if (idx.size() != into.degree()) {
      fail(at_key(tp, "indices"), "expected " + std::to_string(into.degree()) + " indices");
    }
    Exponents mono = read_monomial(member(term, "monomial", tp), n, at_key(tp, "monomial"));
    into.add_term(std::move(mono), std::move(idx), as_rational(member(term, "coeff", tp), at_key(tp, "coeff")));
  }
}

Json terms_to_json(const PolyMultivector& a) {
  Json terms = Json::array();
  for (const auto& [key, c] : a.terms()) {
    terms.push_back(Json{{"indices", key.indices}, {"monomial", key.monomial}, {"coeff", to_string(c)}});
  }
  return terms;
}

PolyMultivector read_bivector_terms(const Json& arr, std::size_t n, const std::string& path) {
  PolyMultivector pi(n, 2);
  read_terms(arr, pi, path);
  return pi;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string detail = e.what();
    if (const auto colon = detail.rfind(": "); colon != std::string::npos) detail = detail.substr(colon + 2);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail);
  }
}

LieAlgebraFile lie_file_from_json(const Json& j) {
  const std::string root = "$";
  LieAlgebraFile f;
  f.dim = as_count(member(j, "dim", root), "$.dim");
  if (j.contains("basis")) {
    const Json& basis = j["basis"];
    if (!basis.is_array() || basis.size() != f.dim) fail("$.basis", "expected " + std::to_string(f.dim) + " labels");
    for (std::size_t i = 0; i < f.dim; ++i) {
      if (!basis[i].is_string()) fail(at_index("$.basis", i), "expected a string");
      f.basis.push_back(basis[i].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < f.dim; ++i) f.basis.push_back("e" + std::to_string(i + 1));
  }
  const Json& brackets = array_member(j, "brackets", root);
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string bp = at_index("$.brackets", b);
    const Json& entry = brackets[b];
    const std::size_t i = as_index(member(entry, "i", bp), f.dim, at_key(bp, "i"));
    const std::size_t jj = as_index(member(entry, "j", bp), f.dim, at_key(bp, "j"));
    if (i >= jj) fail(bp, "requires i < j");
    if (f.brackets.contains({i, jj})) fail(bp, "duplicate bracket [" + std::to_string(i) + "," + std::to_string(jj) + "]");
    const Json& coeffs = member(entry, "coeffs", bp);
    if (!coeffs.is_object()) fail(at_key(bp, "coeffs"), "expected an object of index -> rational");
    std::map<std::size_t, Rational> row;
    for (const auto& [key, value] : coeffs.items()) {
      const std::string kp = at_key(at_key(bp, "coeffs"), key);
      if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        fail(kp, "key must be a basis index");
      }
      std::size_t k = 0;
      try {
        k = std::stoul(key);
      } catch (const std::exception&) {
        fail(kp, "key must be a basis index");
      }
      if (k >= f.dim) fail(kp, "index " + key + " out of range for dimension " + std::to_string(f.dim));
      const Rational q = as_rational(value, kp);
      if (q != 0) row[k] = q;
    }
    if (!row.empty()) f.brackets[{i, jj}] = std::move(row);
  }
  return f;
}

Json to_json(const LieAlgebraFile& f) {
  Json brackets = Json::array();
  for (const auto& [ij, row] : f.brackets) {
    Json coeffs = Json::object();
    for (const auto& [k, q] : row) {
      if (q != 0) coeffs[std::to_string(k)] = to_string(q);
    }
    if (coeffs.empty()) continue;
    brackets.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"coeffs", coeffs}});
  }
  return Json{{"dim", f.dim}, {"basis", f.basis}, {"brackets", brackets}};
}

LieAlgebraFile lie_file_of(const LieAlgebra& g) { return {g.dim(), g.basis_names(), g.brackets()}; }

LieAlgebra build(const LieAlgebraFile& f) { return LieAlgebra(f.dim, f.basis, f.brackets); }

PolyMultivector bivector_from_json(const Json& j) {
  const std::size_t n = as_count(member(j, "n", "$"), "$.n");
  if (j.contains("degree") && j["degree"] != 2) fail("$.degree", "a bivector file has degree 2");
  return read_bivector_terms(array_member(j, "terms", "$"), n, "$.terms");
}

Json bivector_to_json(const PolyMultivector& pi) {
  if (pi.degree() != 2) throw std::invalid_argument("bivector_to_json expects degree 2");
  return Json{{"n", pi.ambient_dim()}, {"terms", terms_to_json(pi)}};
}

Json field_to_json(const PolyMultivector& a) {
  return Json{{"n", a.ambient_dim()}, {"degree", a.degree()}, {"terms", terms_to_json(a)}};
}

PolyMultivector field_from_json(const Json& j) {
  const std::size_t n = as_count(member(j, "n", "$"), "$.n");
  const std::size_t degree = as_count(member(j, "degree", "$"), "$.degree");
  PolyMultivector a(n, degree);
  read_terms(array_member(j, "terms", "$"), a, "$.terms");
  return a;
}

Json cochain_to_json(const CeCochain& c) {
  Json terms = Json::array();
  for (const auto& [idx, q] : c.coefficients()) terms.push_back(Json{{"indices", idx}, {"coeff", to_string(q)}});
  return Json{{"dim", c.algebra_dim()}, {"degree", c.degree()}, {"terms", terms}};
}

CeCochain cochain_from_json(const Json& j) {
  const std::size_t dim = as_count(member(j, "dim", "$"), "$.dim");
  const std::size_t degree = as_count(member(j, "degree", "$"), "$.degree");
  if (degree > dim) fail("$.degree", "exceeds the algebra dimension");
  CeCochain c(dim, degree);
  const Json& terms = array_member(j, "terms", "$");
  std::set<IndexTuple> seen;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tp = at_index("$.terms", t);
    IndexTuple idx = read_indices(member(terms[t], "indices", tp), dim, at_key(tp, "indices"));
    if (idx.size() != degree) fail(at_key(tp, "indices"), "expected " + std::to_string(degree) + " indices");
    if (!seen.insert(idx).second) fail(tp, "duplicate term");
    c.set(std::move(idx), as_rational(member(terms[t], "coeff", tp), at_key(tp, "coeff")));
  }
  return c;
}

Json pencil_to_json(const Pencil& p) {
  return Json{{"n", p.ambient_dim()},
              {"pi0", terms_to_json(p.base().bivector())},
              {"pi1", terms_to_json(p.direction())}};
}

Pencil pencil_from_json(const Json& j) {
  if (j.is_object() && j.contains("results") && j["results"].is_object() && j["results"].contains("pencil")) {
    return pencil_from_json(j["results"]["pencil"]);
  }
  const std::size_t n = as_count(member(j, "n", "$"), "$.n");
  PolyMultivector pi0 = read_bivector_terms(array_member(j, "pi0", "$"), n, "$.pi0");
  PolyMultivector pi1 = read_bivector_terms(array_member(j, "pi1", "$"), n, "$.pi1");
  return Pencil(certify(std::move(pi0)), std::move(pi1));
}

FileKind detect_kind(const Json& j) {
  if (!j.is_object()) throw ParseError("field $: expected an object");
  if (j.contains("pi0") || (j.contains("results") && j["results"].is_object() && j["results"].contains("pencil"))) {
    return FileKind::Pencil;
  }
  if (j.contains("brackets")) return FileKind::LieAlgebra;
  if (j.contains("terms") && j.contains("n")) return FileKind::Bivector;
  if (j.contains("terms") && j.contains("dim")) return FileKind::Cochain;
  throw ParseError("field $: not a Lie algebra, bivector, pencil or cochain file");
}

Vector parse_point(std::string_view text, std::size_t n) {
  if (text.find_first_not_of(" \t") == std::string_view::npos) return Vector(n);
  Vector out;
  std::stringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw ParseError("--point: coordinate " + std::to_string(out.size() + 1) + ": " + e.what());
    }
  }
  if (!text.empty() && text.back() == ',') throw ParseError("--point: trailing comma");
  if (out.size() != n) {
    throw ParseError("--point: expected " + std::to_string(n) + " coordinates, got " + std::to_string(out.size()));
  }
  return out;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

}  // namespace poissonkit::cli
