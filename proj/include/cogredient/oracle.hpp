#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force congruence orbits of symmetric invertible matrices over
 *        tiny rings.
 *
 * Orbits are computed by breadth-first closure under elementary congruences
 * S -> E S E^T, with E ranging over unit row scalings, row swaps and the
 * transvections row_j += row_k. Over a local ring these generate GL_n(R)
 * (unit-pivot elimination), so the closures are the full congruence orbits.
 * Matrices are identified by a mixed-radix code of their upper triangle,
 * which doubles as the index into a dense visited table.
 *
 * Nothing here calls into the reduction pipeline except to check it.
 */

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cogredient/error.hpp"
#include "cogredient/localring.hpp"
#include "cogredient/matrix.hpp"
#include "cogredient/reduction.hpp"

namespace cogredient {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

/// Number of symmetric n x n matrices, |R|^(n(n+1)/2); throws
/// BudgetExceeded if that exceeds `budget`.
inline std::uint64_t symmetric_state_count(const RingContext& ring, std::size_t n, std::uint64_t budget) {
  const std::size_t digits = n * (n + 1) / 2;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    if (count > budget / ring.card_R()) {
      throw BudgetExceeded("oracle: |R|^(n(n+1)/2) for " + ring.spec() + ", n = " + std::to_string(n) +
                           " exceeds the budget of " + std::to_string(budget) + " states");
    }
    count *= ring.card_R();
  }
  return count;
}

namespace detail {

// Element arithmetic on canonical indices, table-driven for small rings.
class IndexArithmetic {
 public:
  explicit IndexArithmetic(const RingContext& ring) : ring_(ring), size_(ring.card_R()) {
    if (size_ <= kTableLimit) {
      const auto elems = ring.elements();
      add_.resize(size_ * size_);
      mul_.resize(size_ * size_);
      for (std::uint64_t a = 0; a < size_; ++a) {
        for (std::uint64_t b = 0; b < size_; ++b) {
          add_[a * size_ + b] = static_cast<std::uint32_t>(ring.index_of(ring.add(elems[a], elems[b])));
          mul_[a * size_ + b] = static_cast<std::uint32_t>(ring.index_of(ring.mul(elems[a], elems[b])));
        }
      }
    }
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (!add_.empty()) return add_[a * size_ + b];
    return ring_.index_of(ring_.add(ring_.from_index(a), ring_.from_index(b)));
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (!mul_.empty()) return mul_[a * size_ + b];
    return ring_.index_of(ring_.mul(ring_.from_index(a), ring_.from_index(b)));
  }

 private:
  static constexpr std::uint64_t kTableLimit = 1024;
  const RingContext& ring_;
  std::uint64_t size_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
};

// Upper-triangle mixed-radix code <-> full symmetric index matrix.
class SymmetricCodec {
 public:
  SymmetricCodec(std::uint64_t radix, std::size_t n) : radix_(radix), n_(n) {}

  std::vector<std::uint64_t> decode(std::uint64_t code) const {
    std::vector<std::uint64_t> m(n_ * n_);
    for (std::size_t i = n_; i-- > 0;) {
      for (std::size_t j = n_; j-- > i;) {
        const std::uint64_t digit = code % radix_;
        code /= radix_;
        m[i * n_ + j] = digit;
        m[j * n_ + i] = digit;
      }
    }
    return m;
  }

  std::uint64_t encode(const std::vector<std::uint64_t>& m) const {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) code = code * radix_ + m[i * n_ + j];
    }
    return code;
  }

 private:
  std::uint64_t radix_;
  std::size_t n_;
};

inline Matrix index_matrix_to_matrix(const Ring& ring, const std::vector<std::uint64_t>& m, std::size_t n) {
  Matrix out(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = ring->from_index(m[i * n + j]);
  }
  return out;
}

inline std::uint64_t matrix_code(const Matrix& s) {
  const RingContext& ring = *s.ring();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = i; j < s.cols(); ++j) code = code * ring.card_R() + ring.index_of(s(i, j));
  }
  return code;
}

}  // namespace detail

/// Streams every symmetric n x n matrix with unit determinant, in code order.
inline void for_each_symmetric_invertible(const Ring& ring, std::size_t n, std::uint64_t budget,
                                          const std::function<void(std::uint64_t, const Matrix&)>& visit) {
  const std::uint64_t states = symmetric_state_count(*ring, n, budget);
  const detail::SymmetricCodec codec(ring->card_R(), n);
  for (std::uint64_t code = 0; code < states; ++code) {
    const Matrix s = detail::index_matrix_to_matrix(ring, codec.decode(code), n);
    if (ring->is_unit(det(s))) visit(code, s);
  }
}

inline std::vector<Matrix> enumerate_symmetric_invertible(const Ring& ring, std::size_t n,
                                                          std::uint64_t budget = kDefaultOracleBudget) {
  std::vector<Matrix> out;
  for_each_symmetric_invertible(ring, n, budget, [&](std::uint64_t, const Matrix& s) { out.push_back(s); });
  return out;
}

struct Orbit {
  std::uint64_t size;
  Matrix representative;  // member with the smallest code
  bool det_square;
  std::vector<StandardForm> canonical_forms;  // standard matrices found in this orbit
};

struct OrbitChecks {
  bool two_orbits = false;
  bool canonical_separation = false;  // each orbit holds exactly one standard matrix
  bool det_class_separation = false;  // det square class constant per orbit, distinct across
  bool classify_consistent = false;   // classify constant per orbit and matches its standard matrix
  bool reduce_witnesses = false;      // reduce lands in the right orbit with a valid witness

  bool all() const {
    return two_orbits && canonical_separation && det_class_separation && classify_consistent && reduce_witnesses;
  }
};

struct OrbitReport {
  Ring ring;
  std::size_t n = 0;
  std::uint64_t total = 0;  // symmetric invertible matrices
  std::vector<Orbit> orbits;
  OrbitChecks checks;
  std::uint64_t reduce_checked = 0;
  std::optional<Matrix> counterexample;
  std::string failure;

  std::size_t orbit_count() const noexcept { return orbits.size(); }
  bool passed() const noexcept { return checks.all(); }
};

namespace detail {

struct OrbitPartition {
  std::vector<std::int32_t> orbit_of;  // by code; -1 = not symmetric invertible
  std::vector<std::uint64_t> members_in_order;
  OrbitReport report;
};

inline OrbitPartition partition_orbits(const Ring& ring, std::size_t n, std::uint64_t budget) {
  const std::uint64_t states = symmetric_state_count(*ring, n, budget);
  const SymmetricCodec codec(ring->card_R(), n);
  const IndexArithmetic arith(*ring);
  std::vector<std::uint64_t> units;
  for (const Element& u : ring->units()) units.push_back(ring->index_of(u));
  const std::uint64_t one = ring->index_of(ring->one());

  OrbitPartition part;
  part.report.ring = ring;
  part.report.n = n;
  std::vector<bool> invertible(states, false);
  for_each_symmetric_invertible(ring, n, budget, [&](std::uint64_t code, const Matrix&) {
    invertible[code] = true;
    ++part.report.total;
  });
  part.orbit_of.assign(states, -1);

  auto visit = [&](std::vector<std::uint64_t>& m, std::int32_t id, std::deque<std::uint64_t>& queue) {
    const std::uint64_t code = codec.encode(m);
    if (!invertible[code]) throw std::logic_error("oracle: generator left the set of invertible matrices");
    if (part.orbit_of[code] == -1) {
      part.orbit_of[code] = id;
      queue.push_back(code);
    } else if (part.orbit_of[code] != id) {
      throw std::logic_error("oracle: orbit closure reached a matrix of another orbit");
    }
  };

  for (std::uint64_t start = 0; start < states; ++start) {
    if (!invertible[start] || part.orbit_of[start] != -1) continue;
    const auto id = static_cast<std::int32_t>(part.report.orbits.size());
    Matrix representative = index_matrix_to_matrix(ring, codec.decode(start), n);
    const bool det_square = ring->is_square_unit(det(representative));
    Orbit orbit{.size = 0, .representative = std::move(representative), .det_square = det_square, .canonical_forms = {}};
    std::deque<std::uint64_t> queue{start};
    part.orbit_of[start] = id;
    while (!queue.empty()) {
      const std::uint64_t code = queue.front();
      queue.pop_front();
      ++orbit.size;
      part.members_in_order.push_back(code);
      const std::vector<std::uint64_t> base = codec.decode(code);
      // Unit scalings of row/column i.
      for (std::size_t i = 0; i < n; ++i) {
        for (std::uint64_t u : units) {
          if (u == one) continue;
          std::vector<std::uint64_t> m = base;
          for (std::size_t j = 0; j < n; ++j) {
            m[i * n + j] = arith.mul(u, m[i * n + j]);
            m[j * n + i] = m[i * n + j];
          }
          m[i * n + i] = arith.mul(u, arith.mul(u, base[i * n + i]));
          visit(m, id, queue);
        }
      }
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (j == k) continue;
          if (j < k) {
            // Swap rows/columns j and k.
            std::vector<std::uint64_t> m = base;
            for (std::size_t c = 0; c < n; ++c) std::swap(m[j * n + c], m[k * n + c]);
            for (std::size_t r = 0; r < n; ++r) std::swap(m[r * n + j], m[r * n + k]);
            visit(m, id, queue);
          }
          // row_j += row_k, col_j += col_k.
          std::vector<std::uint64_t> m = base;
          for (std::size_t c = 0; c < n; ++c) m[j * n + c] = arith.add(m[j * n + c], m[k * n + c]);
          for (std::size_t r = 0; r < n; ++r) m[r * n + j] = arith.add(m[r * n + j], m[r * n + k]);
          visit(m, id, queue);
        }
      }
    }
    part.report.orbits.push_back(std::move(orbit));
  }
  return part;
}

}  // namespace detail

/// Partition of the symmetric invertible n x n matrices into congruence
/// orbits. Only the partition fields of the report are filled in.
inline OrbitReport congruence_orbits(const Ring& ring, std::size_t n, std::uint64_t budget = kDefaultOracleBudget) {
  return detail::partition_orbits(ring, n, budget).report;
}

/// Checks the two-class classification against the exhaustive orbits:
/// exactly two orbits, one standard matrix in each, det square class as the
/// separating invariant, classify constant on orbits, and reduce producing
/// exact witnesses. reduce is run on every matrix when there are at most
/// `reduce_sample` of them, otherwise on an evenly spaced subset.
inline OrbitReport verify_classification(const Ring& ring, std::size_t n, std::uint64_t budget = kDefaultOracleBudget,
                                         std::uint64_t reduce_sample = 5000) {
  detail::OrbitPartition part = detail::partition_orbits(ring, n, budget);
  OrbitReport& report = part.report;
  const detail::SymmetricCodec codec(ring->card_R(), n);
  auto fail = [&](std::string message, const Matrix& s) {
    if (report.failure.empty()) {
      report.failure = std::move(message);
      report.counterexample = s;
    }
  };

  report.checks.two_orbits = report.orbit_count() == 2;
  if (!report.checks.two_orbits) {
    fail("expected 2 orbits, found " + std::to_string(report.orbit_count()), report.orbits.front().representative);
  }

  std::vector<std::int32_t> form_orbit;
  for (const StandardForm& form : realizable_forms(ring, n)) {
    const Matrix canonical = standard_matrix(form);
    const std::int32_t id = part.orbit_of[detail::matrix_code(canonical)];
    form_orbit.push_back(id);
    if (id >= 0) report.orbits[static_cast<std::size_t>(id)].canonical_forms.push_back(form);
  }
  report.checks.canonical_separation = true;
  for (const Orbit& orbit : report.orbits) {
    if (orbit.canonical_forms.size() != 1) {
      report.checks.canonical_separation = false;
      fail("orbit contains " + std::to_string(orbit.canonical_forms.size()) + " standard matrices",
           orbit.representative);
    }
  }

  report.checks.det_class_separation = report.orbit_count() != 2 || report.orbits[0].det_square != report.orbits[1].det_square;
  report.checks.classify_consistent = true;
  report.checks.reduce_witnesses = true;
  const std::uint64_t stride =
      report.total <= reduce_sample ? 1 : (report.total + reduce_sample - 1) / reduce_sample;
  std::uint64_t position = 0;
  for (std::uint64_t code : part.members_in_order) {
    const std::int32_t id = part.orbit_of[code];
    const Orbit& orbit = report.orbits[static_cast<std::size_t>(id)];
    const Matrix s = detail::index_matrix_to_matrix(ring, codec.decode(code), n);
    if (ring->is_square_unit(det(s)) != orbit.det_square) {
      report.checks.det_class_separation = false;
      fail("det square class varies within an orbit", s);
    }
    const StandardForm form = classify(s);
    if (orbit.canonical_forms.size() != 1 || !(form == orbit.canonical_forms.front())) {
      report.checks.classify_consistent = false;
      fail("classify disagrees with the standard matrix of the orbit", s);
    }
    if (position++ % stride == 0) {
      ++report.reduce_checked;
      const ReductionWitness w = reduce(s);
      const std::int32_t target_orbit = part.orbit_of[detail::matrix_code(w.target)];
      if (!w.verify(s) || target_orbit != id) {
        report.checks.reduce_witnesses = false;
        fail("reduce produced an invalid witness or left the orbit", s);
      }
    }
  }
  return report;
}

}  // namespace cogredient
