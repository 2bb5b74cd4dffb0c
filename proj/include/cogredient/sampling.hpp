#pragma once

// Seeded random ring elements and matrices. Only the raw mt19937_64 stream is
// used (no std distributions), so outputs are identical across platforms.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "cogredient/localring.hpp"
#include "cogredient/matrix.hpp"

namespace cogredient {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  Element element(const RingContext& ring) { return ring.from_index(below(ring.card_R())); }

  Element unit(const RingContext& ring) {
    while (true) {
      Element e = element(ring);
      if (ring.is_unit(e)) return e;
    }
  }

  /// A product of random elementary matrices (transvections, swaps and unit
  /// scalings), hence invertible.
  Matrix invertible(const Ring& ring, std::size_t n) {
    Matrix e = Matrix::identity(ring, n);
    const std::size_t steps = 2 * n * n + n;
    for (std::size_t s = 0; s < steps; ++s) {
      const std::uint64_t op = n > 1 ? below(3) : 2;
      if (op == 0) {
        const std::size_t i = below(n);
        std::size_t j = below(n - 1);
        if (j >= i) ++j;
        const Element a = element(*ring);
        for (std::size_t c = 0; c < n; ++c) e(i, c) = e(i, c) + a * e(j, c);
      } else if (op == 1) {
        const std::size_t i = below(n);
        const std::size_t j = below(n);
        for (std::size_t c = 0; c < n; ++c) std::swap(e(i, c), e(j, c));
      } else {
        const std::size_t i = below(n);
        const Element u = unit(*ring);
        for (std::size_t c = 0; c < n; ++c) e(i, c) = u * e(i, c);
      }
    }
    return e;
  }

  /// E D E^T for a random unit diagonal D and random invertible E.
  Matrix symmetric_invertible(const Ring& ring, std::size_t n) {
    std::vector<Element> d;
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(unit(*ring));
    const Matrix e = invertible(ring, n);
    return congruence_apply(e, Matrix::diagonal(ring, d));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cogredient
