#include "poissonkit/combinatorics.hpp"

#include <numeric>

namespace poissonkit {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::vector<IndexTuple> k_subsets(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > n) return out;
  IndexTuple cur(k);
  std::iota(cur.begin(), cur.end(), std::size_t{0});
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

void fill_monomials(std::size_t var, std::size_t remaining, Exponents& cur,
                    std::vector<Exponents>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = static_cast<std::uint32_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (std::size_t a = remaining + 1; a-- > 0;) {
    cur[var] = static_cast<std::uint32_t>(a);
    fill_monomials(var + 1, remaining - a, cur, out);
  }
}

}  // namespace

std::vector<Exponents> monomials_of_degree(std::size_t n, std::size_t d) {
  std::vector<Exponents> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents cur(n, 0);
  fill_monomials(0, d, cur, out);
  return out;
}

std::size_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::size_t{0});
}

int sort_with_sign(IndexTuple& indices) {
  int sign = 1;
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
      if (indices[j - 1] == indices[j]) return 0;
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace poissonkit
