#pragma once

// Independent reference computations used by the test suites. Nothing here
// calls the library's arithmetic beyond building elements from coefficients.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cogredient/localring.hpp"
#include "cogredient/matrix.hpp"

namespace cogredient::testing {

inline bool naive_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Every supported ring with |R| <= max_card: zmod for all odd prime powers,
/// gr with r >= 2 and trunc with m >= 2 (m = 1 duplicates a field).
inline std::vector<std::string> ring_specs_up_to(std::uint64_t max_card) {
  std::vector<std::string> specs;
  for (std::uint64_t p = 3; p <= max_card; p += 2) {
    if (!naive_is_prime(p)) continue;
    for (std::uint64_t n = 1; ipow(p, n) <= max_card; ++n) {
      specs.push_back("zmod:" + std::to_string(p) + "^" + std::to_string(n));
      for (std::uint64_t r = 2; ipow(p, n * r) <= max_card; ++r) {
        specs.push_back("gr:" + std::to_string(p) + "^" + std::to_string(n) + ":" + std::to_string(r));
      }
    }
    for (std::uint64_t r = 1; ipow(p, 2 * r) <= max_card; ++r) {
      for (std::uint64_t m = 2; ipow(p, r * m) <= max_card; ++m) {
        specs.push_back("trunc:" + std::to_string(p) + ":" + std::to_string(r) + ":" + std::to_string(m));
      }
    }
  }
  return specs;
}

/// Schoolbook product in (Z/q)[x]/(f) (f monic, non-leading coefficients
/// low-first) by full polynomial multiplication and long division.
inline std::vector<std::uint64_t> naive_block_mul(const std::vector<std::uint64_t>& a,
                                                  const std::vector<std::uint64_t>& b,
                                                  const std::vector<std::uint64_t>& f, std::uint64_t q) {
  const std::size_t r = f.size();
  std::vector<std::int64_t> prod(2 * r, 0);
  const auto qi = static_cast<std::int64_t>(q);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::int64_t>(a[i] * b[j] % q)) % qi;
    }
  }
  for (std::size_t deg = 2 * r - 1; deg >= r; --deg) {
    const std::int64_t c = prod[deg];
    prod[deg] = 0;
    for (std::size_t j = 0; j < r; ++j) {
      prod[deg - r + j] = ((prod[deg - r + j] - c * static_cast<std::int64_t>(f[j])) % qi + qi) % qi;
    }
  }
  return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(r)};
}

/// Product in F_{p^r}[t]/(t^m) from the definition, coefficients t^0 first.
inline std::vector<std::uint64_t> naive_trunc_mul(const std::vector<std::uint64_t>& a,
                                                  const std::vector<std::uint64_t>& b,
                                                  const std::vector<std::uint64_t>& f, std::uint64_t p,
                                                  std::size_t m) {
  const std::size_t r = f.size();
  std::vector<std::uint64_t> out(r * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; i + j < m; ++j) {
      const std::vector<std::uint64_t> ai(a.begin() + i * r, a.begin() + (i + 1) * r);
      const std::vector<std::uint64_t> bj(b.begin() + j * r, b.begin() + (j + 1) * r);
      const auto c = naive_block_mul(ai, bj, f, p);
      for (std::size_t k = 0; k < r; ++k) out[(i + j) * r + k] = (out[(i + j) * r + k] + c[k]) % p;
    }
  }
  return out;
}

/// {u^2 : u a unit}, by direct enumeration.
inline std::set<std::vector<std::uint64_t>> unit_squares(const RingContext& ring) {
  std::set<std::vector<std::uint64_t>> squares;
  for (const Element& u : ring.units()) {
    const Element s = ring.mul(u, u);
    squares.insert({s.coeffs().begin(), s.coeffs().end()});
  }
  return squares;
}

inline std::vector<std::uint64_t> key(const Element& a) { return {a.coeffs().begin(), a.coeffs().end()}; }

/// Laplace expansion along the first row.
inline Element cofactor_det(const Matrix& a) {
  const RingContext& ring = *a.ring();
  const std::size_t n = a.rows();
  if (n == 0) return ring.one();
  if (n == 1) return a(0, 0);
  Element total = ring.zero();
  for (std::size_t col = 0; col < n; ++col) {
    Matrix minor(a.ring(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == col) continue;
        minor(i - 1, jj++) = a(i, j);
      }
    }
    const Element term = ring.mul(a(0, col), cofactor_det(minor));
    total = col % 2 == 0 ? ring.add(total, term) : ring.sub(total, term);
  }
  return total;
}

}  // namespace cogredient::testing
