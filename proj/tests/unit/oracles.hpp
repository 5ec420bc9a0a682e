#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// into the library's linear algebra.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

inline std::int64_t modp(std::int64_t v, std::int64_t p) { return ((v % p) + p) % p; }

inline std::int64_t inv(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a = modp(a, p);
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Plain Gaussian elimination on a copy.
inline std::size_t rank(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && modp(m[piv][c], p) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const std::int64_t iv = inv(m[r][c], p);
    for (auto& x : m[r]) x = modp(x * iv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      const std::int64_t f = modp(m[i][c], p);
      if (!f) continue;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = modp(m[i][j] - f * m[r][j], p);
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<std::int64_t>> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                                            std::int64_t p, int zero_percent = 50) {
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols, 0));
  for (auto& row : m) {
    for (auto& x : row) {
      if (static_cast<int>(rng() % 100) >= zero_percent) x = static_cast<std::int64_t>(rng() % p);
    }
  }
  return m;
}

// A polynomial as a map from exponent vectors to coefficients mod p.
using Poly = std::map<std::vector<std::uint32_t>, std::int64_t>;

inline void monomials_of_degree(std::size_t n, std::uint32_t d, std::vector<std::uint32_t>& cur, std::size_t v,
                                std::vector<std::vector<std::uint32_t>>& out) {
  if (v + 1 == n) {
    cur[v] = d;
    out.push_back(cur);
    return;
  }
  for (std::uint32_t k = 0; k <= d; ++k) {
    cur[v] = k;
    monomials_of_degree(n, d - k, cur, v + 1, out);
  }
}

inline std::vector<std::vector<std::uint32_t>> monomials_up_to(std::size_t n, std::uint32_t d) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(n, 0);
  for (std::uint32_t k = 0; k <= d; ++k) monomials_of_degree(n, k, cur, 0, out);
  return out;
}

// dim_k k[x]_{<=D} / (I cap k[x]_{<=D}) for an ideal with homogeneous
// generators: spanned by all monomial multiples of the generators that stay
// in degree <= D.
inline std::size_t truncated_quotient_dim(std::size_t n, const std::vector<Poly>& gens, std::uint32_t D,
                                          std::int64_t p) {
  const auto monos = monomials_up_to(n, D);
  std::map<std::vector<std::uint32_t>, std::size_t> col;
  for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& g : gens) {
    std::uint32_t gdeg = 0;
    for (const auto& [e, c] : g) {
      std::uint32_t s = 0;
      for (auto x : e) s += x;
      gdeg = std::max(gdeg, s);
    }
    for (const auto& m : monos) {
      std::uint32_t md = 0;
      for (auto x : m) md += x;
      if (md + gdeg > D) continue;
      std::vector<std::int64_t> row(monos.size(), 0);
      for (const auto& [e, c] : g) {
        std::vector<std::uint32_t> prod(n);
        for (std::size_t v = 0; v < n; ++v) prod[v] = e[v] + m[v];
        row[col.at(prod)] = modp(row[col.at(prod)] + c, p);
      }
      rows.push_back(std::move(row));
    }
  }
  return monos.size() - rank(rows, p);
}

// Exponents of t spanning A = k[t^{h+1}, ..., t^{2h+1}] / (t^{2h+2}): the
// semigroup elements s with s - (2h+2) outside the semigroup.
inline std::set<std::uint32_t> semigroup_basis(unsigned h) {
  auto in_semigroup = [h](std::int64_t s) { return s == 0 || s >= static_cast<std::int64_t>(h) + 1; };
  std::set<std::uint32_t> out;
  for (std::uint32_t s = 0; s <= 4 * h + 4; ++s) {
    if (in_semigroup(s) && !in_semigroup(static_cast<std::int64_t>(s) - (2 * h + 2))) out.insert(s);
  }
  return out;
}

}  // namespace oracle
