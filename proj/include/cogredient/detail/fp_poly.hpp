#pragma once

// Dense polynomial helpers over the prime field F_p. Polynomials are stored
// low-degree-first and kept trimmed (no trailing zero coefficients); the zero
// polynomial is the empty vector.

#include <cstdint>
#include <vector>

namespace cogredient::detail {

using FpPoly = std::vector<std::uint64_t>;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return result;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly poly_sub(FpPoly a, const FpPoly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

/// Remainder of a modulo b; b must be nonzero.
inline FpPoly poly_rem(FpPoly a, const FpPoly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = pow_mod(b.back(), p - 2, p);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint64_t c = mul_mod(a.back(), lead_inv, p);
    for (std::size_t j = 0; j <= db; ++j) {
      a[shift + j] = (a[shift + j] + p - mul_mod(c, b[j], p)) % p;
    }
    trim(a);
  }
  return a;
}

inline FpPoly poly_mul_rem(const FpPoly& a, const FpPoly& b, const FpPoly& f,
                           std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  return poly_rem(std::move(prod), f, p);
}

inline FpPoly poly_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Ben-Or test: f (full coefficient list, degree >= 1) is irreducible over
/// F_p iff gcd(x^(p^i) - x, f) = 1 for every 1 <= i <= deg(f)/2.
inline bool is_irreducible(FpPoly f, std::uint64_t p) {
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t degree = f.size() - 1;
  const FpPoly x{0, 1};
  FpPoly h = poly_rem(x, f, p);
  for (std::size_t i = 1; i <= degree / 2; ++i) {
    // h <- h^p mod f
    FpPoly acc{1};
    FpPoly base = h;
    for (std::uint64_t e = p; e != 0; e >>= 1U) {
      if (e & 1U) acc = poly_mul_rem(acc, base, f, p);
      base = poly_mul_rem(base, base, f, p);
    }
    h = std::move(acc);
    const FpPoly g = poly_gcd(f, poly_sub(h, x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

/// Lexicographically smallest monic irreducible polynomial of the given degree
/// over F_p, comparing coefficients low-degree-first. Returns the non-leading
/// coefficients (leading 1 omitted).
inline FpPoly smallest_irreducible(std::uint64_t p, unsigned degree) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t index = 0; index < count; ++index) {
    // Digit 0 (the constant term) is the most significant.
    FpPoly low(degree, 0);
    std::uint64_t rest = index;
    for (unsigned i = degree; i-- > 0;) {
      low[i] = rest % p;
      rest /= p;
    }
    FpPoly full = low;
    full.push_back(1);
    if (is_irreducible(full, p)) return low;
  }
  return {};  // unreachable: irreducibles exist in every degree
}

}  // namespace cogredient::detail
