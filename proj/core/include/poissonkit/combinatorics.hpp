#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace poissonkit {

/// Strictly increasing tuple of basis indices (0-based).
using IndexTuple = std::vector<std::size_t>;
/// Exponent vector of a monomial x_1^a_1 ... x_n^a_n.
using Exponents = std::vector<std::uint32_t>;

std::size_t binomial(std::size_t n, std::size_t k);

/// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<IndexTuple> k_subsets(std::size_t n, std::size_t k);

/// All exponent vectors of total degree d in n variables, lexicographically
/// descending (x_1^d first).
std::vector<Exponents> monomials_of_degree(std::size_t n, std::size_t d);

std::size_t total_degree(const Exponents& e);

/// Sorts `indices` in place and returns the sign of the sorting permutation,
/// or 0 if an index repeats.
int sort_with_sign(IndexTuple& indices);

/// Position lookup for an ordered list of keys.
template <class Key>
std::map<Key, std::size_t> index_of(const std::vector<Key>& keys) {
  std::map<Key, std::size_t> out;
  for (std::size_t i = 0; i < keys.size(); ++i) out.emplace(keys[i], i);
  return out;
}

}  // namespace poissonkit
