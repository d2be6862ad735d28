#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poissonkit/combinatorics.hpp"
#include "poissonkit/rational.hpp"

namespace poissonkit {

struct VectorKind {};
struct FormKind {};

/// One basis element: x^monomial times d_{i_1} ^ ... ^ d_{i_k} (or dx_{i_1} ^ ...).
struct TermKey {
  IndexTuple indices;
  Exponents monomial;
  auto operator<=>(const TermKey&) const = default;
};

/// Polynomial-coefficient k-vector field (VectorKind) or k-form (FormKind) on
/// R^n. Terms are kept in TermKey order with no zero coefficients. A degree
/// above n is allowed and always holds the zero field.
template <class Kind>
class GradedField {
 public:
  using Terms = std::map<TermKey, Rational>;

  GradedField(std::size_t ambient_dim, std::size_t degree);

  static GradedField constant(std::size_t n, const Rational& value);
  static GradedField coordinate(std::size_t n, std::size_t var);
  /// d_I (resp. dx_I) with coefficient 1; `indices` may be unsorted.
  static GradedField basis(std::size_t n, IndexTuple indices);
  static GradedField term(std::size_t n, Exponents monomial, IndexTuple indices, const Rational& coeff);

  std::size_t ambient_dim() const { return n_; }
  std::size_t degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * x^monomial * d_indices; unsorted indices are sorted with
  /// the permutation sign, repeated indices contribute nothing.
  /// Throws std::invalid_argument / std::out_of_range on malformed input.
  void add_term(Exponents monomial, IndexTuple indices, const Rational& coeff);

  /// Coefficient polynomial of d_I (I sorted), as a degree-0 multivector.
  GradedField<VectorKind> coefficient(const IndexTuple& sorted_indices) const;

  /// Common total degree of all coefficient monomials; nullopt if mixed or zero.
  std::optional<std::size_t> homogeneous_degree() const;
  std::size_t max_poly_degree() const;
  bool has_constant_coefficients() const { return max_poly_degree() == 0; }

  GradedField& operator+=(const GradedField& other);
  GradedField& operator-=(const GradedField& other);
  GradedField& operator*=(const Rational& s);
  GradedField operator-() const;

  friend GradedField operator+(GradedField a, const GradedField& b) { return a += b; }
  friend GradedField operator-(GradedField a, const GradedField& b) { return a -= b; }
  friend GradedField operator*(const Rational& s, GradedField a) { return a *= s; }
  friend bool operator==(const GradedField&, const GradedField&) = default;

 private:
  void add_sorted(const Exponents& monomial, const IndexTuple& indices, const Rational& coeff);
  template <class> friend class GradedField;

  std::size_t n_;
  std::size_t degree_;
  Terms terms_;
};

using PolyMultivector = GradedField<VectorKind>;
using PolyForm = GradedField<FormKind>;
/// Polynomial functions are degree-0 multivectors.
using Function = PolyMultivector;

extern template class GradedField<VectorKind>;
extern template class GradedField<FormKind>;

/// Degree-preserving change of kind (function <-> 0-form, etc.).
PolyForm as_form(const PolyMultivector& a);
PolyMultivector as_multivector(const PolyForm& a);

/// Exterior product; the sign comes from sorting the concatenated indices.
PolyMultivector wedge(const PolyMultivector& a, const PolyMultivector& b);
PolyForm wedge(const PolyForm& a, const PolyForm& b);

/// Schouten-Nijenhuis bracket of a p-vector and a q-vector (p + q >= 1).
/// Lie bracket on vector fields, [X, f] = X(f), and
/// [a, b] = -(-1)^{(p-1)(q-1)} [b, a]. On decomposables
/// [X_1^..^X_p, Y_1^..^Y_q] = sum_{i,j} (-1)^{i+j} [X_i,Y_j] ^ X_1..^X_i..X_p ^ Y_1..^Y_j..Y_q.
PolyMultivector schouten(const PolyMultivector& a, const PolyMultivector& b);

/// L_x a = [x, a] for a vector field x.
PolyMultivector lie_derivative(const PolyMultivector& x, const PolyMultivector& a);

/// alpha# = contraction of pi with alpha; component j of (dx_i)# is pi^{ij}.
PolyMultivector sharp(const PolyMultivector& pi, const PolyForm& alpha);

PolyForm exterior_derivative(const PolyForm& a);
/// df as a 1-form.
PolyForm differential(const Function& f);

/// pi(alpha, beta) = sum_{i,j} pi^{ij} alpha_i beta_j.
Function pair(const PolyMultivector& pi, const PolyForm& alpha, const PolyForm& beta);
/// omega(X, Y) for a 2-form and two vector fields.
Function contract(const PolyForm& omega, const PolyMultivector& x, const PolyMultivector& y);

/// Multiplies every coefficient by the polynomial f.
PolyMultivector times(const Function& f, const PolyMultivector& a);
PolyForm times(const Function& f, const PolyForm& a);

/// Partial derivative of every coefficient with respect to x_var.
template <class Kind>
GradedField<Kind> partial(const GradedField<Kind>& a, std::size_t var);

/// Substitutes a point into every coefficient; the result has constant
/// coefficients. Throws std::invalid_argument on a dimension mismatch.
template <class Kind>
GradedField<Kind> evaluate(const GradedField<Kind>& a, std::span<const Rational> point);

/// The field in coordinates y = x - shift, i.e. coefficients c(y + shift).
template <class Kind>
GradedField<Kind> translate(const GradedField<Kind>& a, std::span<const Rational> shift);

/// Keeps only coefficient monomials of total degree d.
template <class Kind>
GradedField<Kind> homogeneous_part(const GradedField<Kind>& a, std::size_t d);

/// Human-readable form, e.g. "-x3 D1^D2 + 1/2 x1^2 D3" or "x1 dx2".
template <class Kind>
std::string to_string(const GradedField<Kind>& a);

}  // namespace poissonkit
