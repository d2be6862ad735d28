#include "poissonkit/multivector.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace poissonkit {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("ambient dimensions differ");
}

Rational power(const Rational& base, std::uint32_t e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return Rational(num, den);
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

template <class Out, class A, class B>
Out wedge_impl(const A& a, const B& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim());
  Out out(a.ambient_dim(), a.degree() + b.degree());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      IndexTuple idx = ka.indices;
      idx.insert(idx.end(), kb.indices.begin(), kb.indices.end());
      out.add_term(add_exponents(ka.monomial, kb.monomial), std::move(idx), ca * cb);
    }
  }
  return out;
}

// out += s * sum_i (u contracted on d_i from the right) ^ (d/dx_i v).
void schouten_half(PolyMultivector& out, const PolyMultivector& u, const PolyMultivector& v, int s) {
  for (const auto& [ku, cu] : u.terms()) {
    const std::size_t pu = ku.indices.size();
    for (std::size_t m = 0; m < pu; ++m) {
      const std::size_t var = ku.indices[m];
      const int rsign = ((pu - 1 - m) % 2 == 0) ? s : -s;
      IndexTuple rest = ku.indices;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(m));
      for (const auto& [kv, cv] : v.terms()) {
        const std::uint32_t e = kv.monomial[var];
        if (e == 0) continue;
        Exponents mono = add_exponents(ku.monomial, kv.monomial);
        --mono[var];
        IndexTuple idx = rest;
        idx.insert(idx.end(), kv.indices.begin(), kv.indices.end());
        Rational c = cu * cv * e;
        if (rsign < 0) c = -c;
        out.add_term(std::move(mono), std::move(idx), c);
      }
    }
  }
}

template <class Kind>
const char* basis_symbol();
template <>
const char* basis_symbol<VectorKind>() { return "D"; }
template <>
const char* basis_symbol<FormKind>() { return "dx"; }

template <class To, class From>
GradedField<To> retag(const GradedField<From>& a) {
  GradedField<To> out(a.ambient_dim(), a.degree());
  for (const auto& [k, c] : a.terms()) out.add_term(k.monomial, k.indices, c);
  return out;
}

}  // namespace

template <class Kind>
GradedField<Kind>::GradedField(std::size_t ambient_dim, std::size_t degree)
    : n_(ambient_dim), degree_(degree) {}

template <class Kind>
GradedField<Kind> GradedField<Kind>::constant(std::size_t n, const Rational& value) {
  GradedField f(n, 0);
  f.add_term(Exponents(n, 0), {}, value);
  return f;
}

template <class Kind>
GradedField<Kind> GradedField<Kind>::coordinate(std::size_t n, std::size_t var) {
  if (var >= n) throw std::out_of_range("coordinate index out of range");
  Exponents e(n, 0);
  e[var] = 1;
  GradedField f(n, 0);
  f.add_term(std::move(e), {}, 1);
  return f;
}

template <class Kind>
GradedField<Kind> GradedField<Kind>::basis(std::size_t n, IndexTuple indices) {
  GradedField f(n, indices.size());
  f.add_term(Exponents(n, 0), std::move(indices), 1);
  return f;
}

template <class Kind>
GradedField<Kind> GradedField<Kind>::term(std::size_t n, Exponents monomial, IndexTuple indices,
                                          const Rational& coeff) {
  GradedField f(n, indices.size());
  f.add_term(std::move(monomial), std::move(indices), coeff);
  return f;
}

template <class Kind>
void GradedField<Kind>::add_term(Exponents monomial, IndexTuple indices, const Rational& coeff) {
  if (monomial.size() != n_) throw std::invalid_argument("monomial length does not match ambient dimension");
  if (indices.size() != degree_) throw std::invalid_argument("index tuple length does not match degree");
  for (auto i : indices) {
    if (i >= n_) throw std::out_of_range("basis index out of range");
  }
  const int sign = sort_with_sign(indices);
  if (sign == 0 || coeff == 0) return;
  add_sorted(monomial, indices, sign > 0 ? coeff : Rational(-coeff));
}

template <class Kind>
void GradedField<Kind>::add_sorted(const Exponents& monomial, const IndexTuple& indices,
                                   const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(TermKey{indices, monomial}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

template <class Kind>
GradedField<VectorKind> GradedField<Kind>::coefficient(const IndexTuple& sorted_indices) const {
  GradedField<VectorKind> f(n_, 0);
  for (const auto& [k, c] : terms_) {
    if (k.indices == sorted_indices) f.add_sorted(k.monomial, {}, c);
  }
  return f;
}

template <class Kind>
std::optional<std::size_t> GradedField<Kind>::homogeneous_degree() const {
  std::optional<std::size_t> d;
  for (const auto& [k, c] : terms_) {
    const std::size_t td = total_degree(k.monomial);
    if (d && *d != td) return std::nullopt;
    d = td;
  }
  return d;
}

template <class Kind>
std::size_t GradedField<Kind>::max_poly_degree() const {
  std::size_t d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, total_degree(k.monomial));
  return d;
}

template <class Kind>
GradedField<Kind>& GradedField<Kind>::operator+=(const GradedField& other) {
  require_same_dim(n_, other.n_);
  if (degree_ != other.degree_) throw std::invalid_argument("cannot add fields of different degree");
  for (const auto& [k, c] : other.terms_) add_sorted(k.monomial, k.indices, c);
  return *this;
}

template <class Kind>
GradedField<Kind>& GradedField<Kind>::operator-=(const GradedField& other) {
  return *this += -other;
}

template <class Kind>
GradedField<Kind>& GradedField<Kind>::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

template <class Kind>
GradedField<Kind> GradedField<Kind>::operator-() const {
  GradedField out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

template class GradedField<VectorKind>;
template class GradedField<FormKind>;

PolyForm as_form(const PolyMultivector& a) { return retag<FormKind>(a); }
PolyMultivector as_multivector(const PolyForm& a) { return retag<VectorKind>(a); }

PolyMultivector wedge(const PolyMultivector& a, const PolyMultivector& b) {
  return wedge_impl<PolyMultivector>(a, b);
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) { return wedge_impl<PolyForm>(a, b); }

PolyMultivector schouten(const PolyMultivector& a, const PolyMultivector& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim());
  const std::size_t p = a.degree();
  const std::size_t q = b.degree();
  if (p + q == 0) throw std::invalid_argument("Schouten bracket of two functions is undefined");
  PolyMultivector out(a.ambient_dim(), p + q - 1);
  schouten_half(out, a, b, 1);
  // -(-1)^{(p-1)(q-1)}; (p-1)(q-1) has the parity of (p+1)(q+1).
  const bool even = ((p + 1) * (q + 1)) % 2 == 0;
  schouten_half(out, b, a, even ? -1 : 1);
  return out;
}

PolyMultivector lie_derivative(const PolyMultivector& x, const PolyMultivector& a) {
  if (x.degree() != 1) throw std::invalid_argument("Lie derivative needs a vector field");
  return schouten(x, a);
}

PolyMultivector sharp(const PolyMultivector& pi, const PolyForm& alpha) {
  require_same_dim(pi.ambient_dim(), alpha.ambient_dim());
  if (pi.degree() != 2 || alpha.degree() != 1) throw std::invalid_argument("sharp needs a bivector and a 1-form");
  PolyMultivector out(pi.ambient_dim(), 1);
  for (const auto& [kp, cp] : pi.terms()) {
    const std::size_t i = kp.indices[0];
    const std::size_t j = kp.indices[1];
    for (const auto& [ka, ca] : alpha.terms()) {
      const std::size_t a = ka.indices[0];
      if (a == i) out.add_term(add_exponents(kp.monomial, ka.monomial), {j}, cp * ca);
      else if (a == j) out.add_term(add_exponents(kp.monomial, ka.monomial), {i}, -cp * ca);
    }
  }
  return out;
}

PolyForm exterior_derivative(const PolyForm& a) {
  PolyForm out(a.ambient_dim(), a.degree() + 1);
  for (const auto& [k, c] : a.terms()) {
    for (std::size_t v = 0; v < a.ambient_dim(); ++v) {
      if (k.monomial[v] == 0) continue;
      Exponents mono = k.monomial;
      --mono[v];
      IndexTuple idx{v};
      idx.insert(idx.end(), k.indices.begin(), k.indices.end());
      out.add_term(std::move(mono), std::move(idx), c * k.monomial[v]);
    }
  }
  return out;
}

PolyForm differential(const Function& f) {
  if (f.degree() != 0) throw std::invalid_argument("differential expects a function");
  return exterior_derivative(as_form(f));
}

Function pair(const PolyMultivector& pi, const PolyForm& alpha, const PolyForm& beta) {
  require_same_dim(pi.ambient_dim(), alpha.ambient_dim());
  require_same_dim(pi.ambient_dim(), beta.ambient_dim());
  if (pi.degree() != 2 || alpha.degree() != 1 || beta.degree() != 1) {
    throw std::invalid_argument("pair needs a bivector and two 1-forms");
  }
  const std::size_t n = pi.ambient_dim();
  Function out(n, 0);
  for (const auto& [k, c] : pi.terms()) {
    const std::size_t i = k.indices[0];
    const std::size_t j = k.indices[1];
    const Function coeff = Function::term(n, k.monomial, {}, c);
    const Function cross = wedge(alpha.coefficient({i}), beta.coefficient({j})) -
                           wedge(alpha.coefficient({j}), beta.coefficient({i}));
    out += wedge(coeff, cross);
  }
  return out;
}

Function contract(const PolyForm& omega, const PolyMultivector& x, const PolyMultivector& y) {
  require_same_dim(omega.ambient_dim(), x.ambient_dim());
  require_same_dim(omega.ambient_dim(), y.ambient_dim());
  if (omega.degree() != 2 || x.degree() != 1 || y.degree() != 1) {
    throw std::invalid_argument("contract needs a 2-form and two vector fields");
  }
  const std::size_t n = omega.ambient_dim();
  Function out(n, 0);
  for (const auto& [k, c] : omega.terms()) {
    const std::size_t i = k.indices[0];
    const std::size_t j = k.indices[1];
    const Function coeff = Function::term(n, k.monomial, {}, c);
    const Function cross =
        wedge(x.coefficient({i}), y.coefficient({j})) - wedge(x.coefficient({j}), y.coefficient({i}));
    out += wedge(coeff, cross);
  }
  return out;
}

PolyMultivector times(const Function& f, const PolyMultivector& a) {
  if (f.degree() != 0) throw std::invalid_argument("times expects a function");
  return wedge(f, a);
}

PolyForm times(const Function& f, const PolyForm& a) {
  if (f.degree() != 0) throw std::invalid_argument("times expects a function");
  return wedge(as_form(f), a);
}

template <class Kind>
GradedField<Kind> partial(const GradedField<Kind>& a, std::size_t var) {
  if (var >= a.ambient_dim()) throw std::out_of_range("partial: variable index out of range");
  GradedField<Kind> out(a.ambient_dim(), a.degree());
  for (const auto& [k, c] : a.terms()) {
    if (k.monomial[var] == 0) continue;
    Exponents mono = k.monomial;
    --mono[var];
    out.add_term(std::move(mono), k.indices, c * k.monomial[var]);
  }
  return out;
}

template <class Kind>
GradedField<Kind> evaluate(const GradedField<Kind>& a, std::span<const Rational> point) {
  if (point.size() != a.ambient_dim()) throw std::invalid_argument("point dimension mismatch");
  GradedField<Kind> out(a.ambient_dim(), a.degree());
  const Exponents zero(a.ambient_dim(), 0);
  for (const auto& [k, c] : a.terms()) {
    Rational v = c;
    for (std::size_t i = 0; i < point.size() && v != 0; ++i) {
      if (k.monomial[i] != 0) v *= power(point[i], k.monomial[i]);
    }
    out.add_term(zero, k.indices, v);
  }
  return out;
}

template <class Kind>
GradedField<Kind> translate(const GradedField<Kind>& a, std::span<const Rational> shift) {
  const std::size_t n = a.ambient_dim();
  if (shift.size() != n) throw std::invalid_argument("shift dimension mismatch");
  GradedField<Kind> out(n, a.degree());
  for (const auto& [k, c] : a.terms()) {
    // prod_i (y_i + s_i)^{a_i} = sum_{b <= a} prod_i C(a_i, b_i) s_i^{a_i - b_i} y_i^{b_i}
    std::vector<std::pair<Exponents, Rational>> partial_terms{{Exponents{}, c}};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::pair<Exponents, Rational>> next;
      const std::uint32_t ai = k.monomial[i];
      for (const auto& [mono, coef] : partial_terms) {
        for (std::uint32_t b = 0; b <= ai; ++b) {
          Rational f = coef * Rational(Integer(static_cast<unsigned long>(binomial(ai, b)))) *
                       power(shift[i], ai - b);
          if (f == 0) continue;
          Exponents m = mono;
          m.push_back(b);
          next.emplace_back(std::move(m), std::move(f));
        }
      }
      partial_terms = std::move(next);
    }
    for (auto& [mono, coef] : partial_terms) out.add_term(std::move(mono), k.indices, coef);
  }
  return out;
}

template <class Kind>
GradedField<Kind> homogeneous_part(const GradedField<Kind>& a, std::size_t d) {
  GradedField<Kind> out(a.ambient_dim(), a.degree());
  for (const auto& [k, c] : a.terms()) {
    if (total_degree(k.monomial) == d) out.add_term(k.monomial, k.indices, c);
  }
  return out;
}

template <class Kind>
std::string to_string(const GradedField<Kind>& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : a.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    std::ostringstream factors;
    bool any = false;
    for (std::size_t i = 0; i < k.monomial.size(); ++i) {
      if (k.monomial[i] == 0) continue;
      factors << (any ? "*" : "") << "x" << (i + 1);
      if (k.monomial[i] > 1) factors << "^" << k.monomial[i];
      any = true;
    }
    for (std::size_t i = 0; i < k.indices.size(); ++i) {
      factors << (any ? (i == 0 ? " " : "^") : (i == 0 ? "" : "^")) << basis_symbol<Kind>()
              << (k.indices[i] + 1);
      any = true;
    }
    if (mag != 1 || !any) os << to_string(mag) << (any ? " " : "");
    os << factors.str();
  }
  return os.str();
}

#define POISSONKIT_INSTANTIATE(KIND)                                                              \
  template GradedField<KIND> partial(const GradedField<KIND>&, std::size_t);                     \
  template GradedField<KIND> evaluate(const GradedField<KIND>&, std::span<const Rational>);      \
  template GradedField<KIND> translate(const GradedField<KIND>&, std::span<const Rational>);     \
  template GradedField<KIND> homogeneous_part(const GradedField<KIND>&, std::size_t);            \
  template std::string to_string(const GradedField<KIND>&);

POISSONKIT_INSTANTIATE(VectorKind)
POISSONKIT_INSTANTIATE(FormKind)

#undef POISSONKIT_INSTANTIATE

}  // namespace poissonkit
