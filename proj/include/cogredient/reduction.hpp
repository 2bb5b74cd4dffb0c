#pragma once

/**
 * @file reduction.hpp
 * @brief Canonical congruence forms of nondegenerate symmetric matrices over
 *        finite local rings of odd characteristic, with explicit witnesses.
 *
 * Every symmetric invertible S of rank n is congruent to exactly one of two
 * standard matrices
 *
 *     S_{2nu+delta, Delta} = H_{2nu} (+) Delta,
 *     H_{2nu} = [[0, I_nu], [I_nu, 0]],
 *     Delta in { empty, (1), (z), diag(1, -z) },
 *
 * and the class is decided by the square class of det(S). The pipeline is
 *
 *   diagonalize -> normalize_diagonal -> collapse_z_pairs   (type form)
 *               -> hyperbolize                              (standard form)
 *
 * and every stage returns an invertible P with P S P^T equal to its output.
 */

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cogredient/error.hpp"
#include "cogredient/localring.hpp"
#include "cogredient/matrix.hpp"

namespace cogredient {

enum class DeltaKind { kNone, kOne, kZ, kDiagOneNegZ };

inline std::string_view to_string(DeltaKind kind) {
  switch (kind) {
    case DeltaKind::kNone: return "NONE";
    case DeltaKind::kOne: return "ONE";
    case DeltaKind::kZ: return "Z";
    case DeltaKind::kDiagOneNegZ: return "DIAG_1_NEG_Z";
  }
  return "NONE";
}

inline DeltaKind delta_kind_from_string(std::string_view text) {
  if (text == "NONE") return DeltaKind::kNone;
  if (text == "ONE") return DeltaKind::kOne;
  if (text == "Z") return DeltaKind::kZ;
  if (text == "DIAG_1_NEG_Z") return DeltaKind::kDiagOneNegZ;
  throw ParseError("unknown delta_kind '" + std::string(text) + "'");
}

/// The invariant triple (nu, delta, Delta); rank = 2 nu + delta.
struct StandardForm {
  Ring ring;
  std::size_t nu = 0;
  unsigned delta = 0;
  DeltaKind kind = DeltaKind::kNone;

  std::size_t rank() const noexcept { return 2 * nu + delta; }
  const Element& z() const noexcept { return ring->z(); }

  friend bool operator==(const StandardForm& a, const StandardForm& b) {
    return a.ring == b.ring && a.nu == b.nu && a.delta == b.delta && a.kind == b.kind;
  }
};

enum class TypeKind { kIdentity, kIdentityZ };

/// I_n or I_{n-1} (+) (z).
struct TypeForm {
  TypeKind kind = TypeKind::kIdentity;
  std::size_t n = 0;
  friend bool operator==(const TypeForm&, const TypeForm&) = default;
};

// ---- canonical matrices -----------------------------------------------------

inline Matrix hyperbolic(const Ring& ring, std::size_t nu) {
  Matrix h(ring, 2 * nu, 2 * nu);
  for (std::size_t i = 0; i < nu; ++i) {
    h(i, nu + i) = ring->one();
    h(nu + i, i) = ring->one();
  }
  return h;
}

inline Matrix delta_block(const Ring& ring, DeltaKind kind) {
  switch (kind) {
    case DeltaKind::kNone: return Matrix(ring, 0, 0);
    case DeltaKind::kOne: return Matrix::identity(ring, 1);
    case DeltaKind::kZ: {
      const std::array<Element, 1> d{ring->z()};
      return Matrix::diagonal(ring, d);
    }
    case DeltaKind::kDiagOneNegZ: {
      const std::array<Element, 2> d{ring->one(), ring->neg(ring->z())};
      return Matrix::diagonal(ring, d);
    }
  }
  return Matrix(ring, 0, 0);
}

inline Matrix standard_matrix(const StandardForm& form) {
  return direct_sum(hyperbolic(form.ring, form.nu), delta_block(form.ring, form.kind));
}

inline Matrix type_matrix(const Ring& ring, const TypeForm& type) {
  Matrix m = Matrix::identity(ring, type.n);
  if (type.kind == TypeKind::kIdentityZ) m(type.n - 1, type.n - 1) = ring->z();
  return m;
}

/// Maps a type form to its standard form. det H_{2k} = (-1)^k, so the
/// choice depends on whether -1 is a square and, when it is not, on the
/// parity of the number k of hyperbolic planes that fit.
inline StandardForm form_for_type(const Ring& ring, const TypeForm& type) {
  if (type.n == 0) throw DomainError("form_for_type: rank must be >= 1");
  const bool identity = type.kind == TypeKind::kIdentity;
  const std::size_t k = type.n / 2;
  // True when H_{2k} has square determinant.
  const bool hyperbolic_is_square = ring->minus_one_is_square() || k % 2 == 0;
  StandardForm form{ring};
  if (type.n % 2 == 0) {
    // Even rank: H_{2k} (det (-1)^k) or H_{2k-2} (+) diag(1,-z) (det (-1)^k z).
    if (identity == hyperbolic_is_square) {
      form.nu = k;
      form.delta = 0;
      form.kind = DeltaKind::kNone;
    } else {
      form.nu = k - 1;
      form.delta = 2;
      form.kind = DeltaKind::kDiagOneNegZ;
    }
  } else {
    // Odd rank: H_{2k} (+) (1) or H_{2k} (+) (z).
    form.nu = k;
    form.delta = 1;
    form.kind = identity == hyperbolic_is_square ? DeltaKind::kOne : DeltaKind::kZ;
  }
  return form;
}

/// The two standard forms realizable in rank n: {IDENTITY class, IDENTITY_Z class}.
inline std::array<StandardForm, 2> realizable_forms(const Ring& ring, std::size_t n) {
  return {form_for_type(ring, {TypeKind::kIdentity, n}), form_for_type(ring, {TypeKind::kIdentityZ, n})};
}

namespace detail {

// Returns det(S) after checking that S is a nondegenerate symmetric form.
inline Element require_orthogonal(const Matrix& s, const char* op) {
  if (!s.is_square() || s.rows() == 0) throw DomainError(std::string(op) + ": matrix must be square with n >= 1");
  if (!s.is_symmetric()) throw DomainError(std::string(op) + ": matrix is not symmetric");
  Element d = det(s);
  if (!s.ring()->is_unit(d)) throw DomainError(std::string(op) + ": matrix is degenerate (determinant is not a unit)");
  return d;
}

// Congruence-elementary operations on a working matrix, mirrored on the
// accumulated transform (which only sees the row operation).
struct CongruenceWork {
  Matrix a;
  Matrix p;

  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t c = 0; c < p.cols(); ++c) std::swap(p(i, c), p(j, c));
  }

  // row_j += c row_k, then col_j += c col_k.
  void add(std::size_t j, std::size_t k, const Element& c) {
    const RingContext& ring = *a.ring();
    for (std::size_t col = 0; col < a.cols(); ++col) a(j, col) = ring.add(a(j, col), ring.mul(c, a(k, col)));
    for (std::size_t row = 0; row < a.rows(); ++row) a(row, j) = ring.add(a(row, j), ring.mul(c, a(row, k)));
    for (std::size_t col = 0; col < p.cols(); ++col) p(j, col) = ring.add(p(j, col), ring.mul(c, p(k, col)));
  }
};

}  // namespace detail

// ---- diagonalization --------------------------------------------------------

struct Diagonalization {
  Matrix transform;  // P
  Matrix diagonal;   // D = P S P^T, unit diagonal
};

/// Orthogonal basis construction. At step i a unit diagonal entry of the
/// trailing block is moved to (i,i); if there is none, the first unit
/// off-diagonal entry (j,k) is folded in via row/col k -> j, which makes
/// (j,j) = s_jj + 2 s_jk + s_kk a unit. Row/column i is then cleared.
inline Diagonalization diagonalize(const Matrix& s) {
  detail::require_orthogonal(s, "diagonalize");
  const RingContext& ring = *s.ring();
  const std::size_t n = s.rows();
  detail::CongruenceWork work{s, Matrix::identity(s.ring(), n)};
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> pivot;
    for (std::size_t j = i; j < n && !pivot; ++j) {
      if (ring.is_unit(work.a(j, j))) pivot = j;
    }
    if (!pivot) {
      for (std::size_t j = i; j < n && !pivot; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          if (ring.is_unit(work.a(j, k))) {
            work.add(j, k, ring.one());
            pivot = j;
            break;
          }
        }
      }
    }
    if (!pivot) throw std::logic_error("diagonalize: no unit pivot in an invertible block");
    work.swap(i, *pivot);
    const Element pivot_inv = ring.inv(work.a(i, i));
    for (std::size_t l = i + 1; l < n; ++l) {
      if (work.a(l, i) == ring.zero()) continue;
      work.add(l, i, ring.neg(ring.mul(work.a(l, i), pivot_inv)));
    }
  }
  return {std::move(work.p), std::move(work.a)};
}

struct NormalizedDiagonal {
  Matrix transform;       // P with P D P^T = I_r (+) z I_{n-r}
  Matrix result;          // I_r (+) z I_{n-r}
  std::size_t squares;    // r
  std::size_t nonsquares; // n - r
};

/// Scales square entries to 1 and non-square entries to exactly z, then
/// moves the squares to the front (stable order).
inline NormalizedDiagonal normalize_diagonal(const Matrix& d) {
  if (!d.is_diagonal()) throw DomainError("normalize_diagonal: matrix is not diagonal");
  const Ring& ring = d.ring();
  const std::size_t n = d.rows();
  const Element& z = ring->z();
  const Element z_inv = ring->inv(z);

  Matrix scale(ring, n, n);
  std::vector<std::size_t> square_idx;
  std::vector<std::size_t> nonsquare_idx;
  for (std::size_t i = 0; i < n; ++i) {
    const Element& u = d(i, i);
    if (!ring->is_unit(u)) throw DomainError("normalize_diagonal: diagonal entry is not a unit");
    if (ring->is_square_unit(u)) {
      scale(i, i) = ring->inv(ring->sqrt_unit(u));
      square_idx.push_back(i);
    } else {
      scale(i, i) = ring->inv(ring->sqrt_unit(ring->mul(u, z_inv)));
      nonsquare_idx.push_back(i);
    }
  }
  Matrix perm(ring, n, n);
  std::size_t row = 0;
  for (std::size_t i : square_idx) perm(row++, i) = ring->one();
  for (std::size_t i : nonsquare_idx) perm(row++, i) = ring->one();

  const std::size_t r = square_idx.size();
  Matrix result = Matrix::identity(ring, n);
  for (std::size_t i = r; i < n; ++i) result(i, i) = z;
  return {perm * scale, std::move(result), r, n - r};
}

// ---- 2x2 building blocks ----------------------------------------------------

/// -1 = u^2 branch: P = 2^{-1} [[1+z, u^{-1}(1-z)], [u(1-z), 1+z]], P P^T = z I_2.
inline Matrix z_square_block_from_root(const Ring& ring) {
  if (!ring->minus_one_is_square()) throw DomainError("z_square_block_from_root: -1 is not a square in " + ring->spec());
  const RingContext& r = *ring;
  const Element& z = r.z();
  const Element u = r.sqrt_unit(r.neg(r.one()));
  const Element half = r.inv(r.from_int(2));
  const Element plus = r.add(r.one(), z);
  const Element minus = r.sub(r.one(), z);
  Matrix p(ring, 2, 2);
  p(0, 0) = r.mul(half, plus);
  p(0, 1) = r.mul(half, r.mul(r.inv(u), minus));
  p(1, 0) = r.mul(half, r.mul(u, minus));
  p(1, 1) = r.mul(half, plus);
  return p;
}

/// -1 non-square branch: z = (1 + x^2) y^2, Q = [[xy, y], [-y, xy]], Q Q^T = z I_2.
inline Matrix z_square_block_from_decomposition(const Ring& ring) {
  const RingContext& r = *ring;
  const auto [x, y] = r.decompose_nonsquare(r.z());
  const Element xy = r.mul(x, y);
  Matrix q(ring, 2, 2);
  q(0, 0) = xy;
  q(0, 1) = y;
  q(1, 0) = r.neg(y);
  q(1, 1) = xy;
  return q;
}

/// A 2x2 P with P P^T = z I_2, using whichever construction the ring admits.
inline Matrix z_square_block(const Ring& ring) {
  return ring->minus_one_is_square() ? z_square_block_from_root(ring) : z_square_block_from_decomposition(ring);
}

/// W with W (z I_count) W^T = I_count, built from z^{-1} P blocks.
inline Matrix collapse_z_pairs(const Ring& ring, std::size_t count) {
  if (count % 2 != 0) throw DomainError("collapse_z_pairs: count must be even");
  const Matrix block = ring->inv(ring->z()) * z_square_block(ring);
  Matrix w(ring, 0, 0);
  for (std::size_t i = 0; i < count; i += 2) w = direct_sum(w, block);
  return w;
}

/// -1 = u^2: diag(1, u) sends diag(1, z) to diag(1, -z).
inline Matrix one_z_to_one_neg_z(const Ring& ring) {
  if (!ring->minus_one_is_square()) throw DomainError("one_z_to_one_neg_z: -1 is not a square in " + ring->spec());
  const std::array<Element, 2> d{ring->one(), ring->sqrt_unit(ring->neg(ring->one()))};
  return Matrix::diagonal(ring, d);
}

/// -1 = z c^2: diag(1, c) sends diag(1, -z) to I_2.
inline Matrix one_neg_z_to_identity(const Ring& ring) {
  if (ring->minus_one_is_square()) throw DomainError("one_neg_z_to_identity: -1 is a square in " + ring->spec());
  const RingContext& r = *ring;
  const Element c = r.sqrt_unit(r.mul(r.neg(r.one()), r.inv(r.z())));
  const std::array<Element, 2> d{r.one(), c};
  return Matrix::diagonal(ring, d);
}

/// L = 2 (I_nu (+) -I_nu).
inline Matrix split_diagonal(const Ring& ring, std::size_t nu) {
  Matrix l(ring, 2 * nu, 2 * nu);
  const Element two = ring->from_int(2);
  for (std::size_t i = 0; i < nu; ++i) {
    l(i, i) = two;
    l(nu + i, nu + i) = ring->neg(two);
  }
  return l;
}

/// P = 2^{-1} [[I, -I], [I, I]] with P L P^T = H_{2nu}.
inline Matrix hyperbolic_transform(const Ring& ring, std::size_t nu) {
  Matrix p(ring, 2 * nu, 2 * nu);
  const Element half = ring->inv(ring->from_int(2));
  for (std::size_t i = 0; i < nu; ++i) {
    p(i, i) = half;
    p(i, nu + i) = ring->neg(half);
    p(nu + i, i) = half;
    p(nu + i, nu + i) = half;
  }
  return p;
}

// ---- type form ----------------------------------------------------------------

struct TypeReduction {
  Matrix transform;  // P with P S P^T = type_matrix(type)
  TypeForm type;
};

/// Diagonalize, normalize square classes, then pair up the z entries.
inline TypeReduction to_type_form(const Matrix& s) {
  const Diagonalization diag = diagonalize(s);
  const NormalizedDiagonal norm = normalize_diagonal(diag.diagonal);
  const Ring& ring = s.ring();
  const std::size_t n = s.rows();
  const std::size_t k = norm.nonsquares;
  Matrix collapse = k % 2 == 0
      ? direct_sum(Matrix::identity(ring, norm.squares), collapse_z_pairs(ring, k))
      : direct_sum(direct_sum(Matrix::identity(ring, norm.squares), collapse_z_pairs(ring, k - 1)),
                   Matrix::identity(ring, 1));
  TypeForm type{k % 2 == 0 ? TypeKind::kIdentity : TypeKind::kIdentityZ, n};
  return {collapse * norm.transform * diag.transform, type};
}

/// An invertible P with P from P^T = to, for congruent nondegenerate
/// symmetric matrices. Throws DomainError if they are not congruent.
inline Matrix congruence_transport(const Matrix& from, const Matrix& to) {
  detail::require_same_ring(from, to, "congruence_transport");
  const TypeReduction a = to_type_form(from);
  const TypeReduction b = to_type_form(to);
  if (!(a.type == b.type)) throw DomainError("congruence_transport: matrices are not congruent");
  return inverse(b.transform) * a.transform;
}

/// -1 square: P with P I_{2nu} P^T = H_{2nu}.
inline Matrix identity_to_hyperbolic(const Ring& ring, std::size_t nu) {
  if (!ring->minus_one_is_square()) throw DomainError("identity_to_hyperbolic: -1 is not a square in " + ring->spec());
  return hyperbolic_transform(ring, nu) * congruence_transport(Matrix::identity(ring, 2 * nu), split_diagonal(ring, nu));
}

/// -1 non-square: P with P (I_nu (+) z I_nu) P^T = H_{2nu}.
inline Matrix split_to_hyperbolic(const Ring& ring, std::size_t nu) {
  if (ring->minus_one_is_square()) throw DomainError("split_to_hyperbolic: -1 is a square in " + ring->spec());
  const Element& z = ring->z();
  Matrix split = Matrix::identity(ring, 2 * nu);
  for (std::size_t i = nu; i < 2 * nu; ++i) split(i, i) = z;
  return hyperbolic_transform(ring, nu) * congruence_transport(split, split_diagonal(ring, nu));
}

struct HyperbolicStep {
  Matrix transform;  // P with P type_matrix(T) P^T = standard_matrix(form)
  StandardForm form;
};

/// Type form to standard form: the type matrix is carried to
/// 2(I_nu (+) -I_nu) (+) Delta by diagonal congruences, and the first block
/// is then turned into H_{2nu}.
inline HyperbolicStep hyperbolize(const Ring& ring, const TypeForm& type) {
  StandardForm form = form_for_type(ring, type);
  const Matrix staging = direct_sum(split_diagonal(ring, form.nu), delta_block(ring, form.kind));
  const Matrix to_staging = congruence_transport(type_matrix(ring, type), staging);
  Matrix transform = direct_sum(hyperbolic_transform(ring, form.nu), Matrix::identity(ring, form.delta)) * to_staging;
  return {std::move(transform), std::move(form)};
}

// ---- top level ------------------------------------------------------------------

struct ReductionWitness {
  StandardForm form;
  Matrix transform;  // P
  Matrix target;     // standard_matrix(form)

  /// P S P^T == target exactly and P is invertible.
  bool verify(const Matrix& s) const {
    return s.ring() == transform.ring() && transform.rows() == s.rows() && is_invertible(transform) &&
           congruence_apply(transform, s) == target;
  }
};

struct ReductionStep {
  std::string stage;
  Matrix transform;  // cumulative P after this stage
  Matrix result;     // P S P^T after this stage
};

/// Witness-free classification by the square class of det(S).
inline StandardForm classify(const Matrix& s) {
  const Element d = detail::require_orthogonal(s, "classify");
  const TypeKind kind = s.ring()->is_square_unit(d) ? TypeKind::kIdentity : TypeKind::kIdentityZ;
  return form_for_type(s.ring(), {kind, s.rows()});
}

/// Full reduction with a single composed witness. When `trace` is given the
/// cumulative transform after each stage is appended to it.
inline ReductionWitness reduce(const Matrix& s, std::vector<ReductionStep>* trace = nullptr) {
  StandardForm form = classify(s);
  Matrix target = standard_matrix(form);
  const Ring& ring = s.ring();
  const std::size_t n = s.rows();
  if (s == target) {
    if (trace) trace->push_back({"canonical", Matrix::identity(ring, n), target});
    return {std::move(form), Matrix::identity(ring, n), std::move(target)};
  }

  TypeReduction type = to_type_form(s);
  HyperbolicStep hyper = hyperbolize(ring, type.type);
  Matrix transform = hyper.transform * type.transform;
  if (trace) {
    const Diagonalization diag = diagonalize(s);
    const NormalizedDiagonal norm = normalize_diagonal(diag.diagonal);
    trace->push_back({"diagonalize", diag.transform, diag.diagonal});
    trace->push_back({"normalize", norm.transform * diag.transform, norm.result});
    trace->push_back({"type_form", type.transform, type_matrix(ring, type.type)});
    trace->push_back({"standard_form", transform, target});
  }
  return {std::move(hyper.form), std::move(transform), std::move(target)};
}

}  // namespace cogredient
