#pragma once

/**
 * @file localring.hpp
 * @brief Exact arithmetic in finite local rings of odd characteristic.
 *
 * Three families are supported, all modelled as B[t]/(t^m) where
 * B = (Z/qZ)[x]/(f) is a "block" ring:
 *
 *   zmod:p^n         Z/p^nZ              q = p^n, f = x,  m = 1
 *   gr:p^n:r         GR(p^n, r)          q = p^n, deg f = r, m = 1
 *   trunc:p:r:m      F_{p^r}[t]/(t^m)    q = p,   deg f = r
 *
 * An element is m blocks of r coefficients, t^0 block first and the x^0
 * coefficient first inside each block. Comparing coefficient vectors
 * lexicographically is the canonical enumeration order used to pick the
 * distinguished non-square z and canonical square roots.
 *
 * The unit group has index-2 squares (the kernel of u -> u^2 is {1, -1}),
 * so u is a square iff u^(|R^x|/2) = 1.
 */

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "cogredient/detail/fp_poly.hpp"
#include "cogredient/error.hpp"

namespace cogredient {

enum class RingFamily { kZmod, kGalois, kTrunc };

/// Parsed form of a ring spec string.
struct RingParams {
  RingFamily family = RingFamily::kZmod;
  std::uint64_t p = 3;
  unsigned exponent = 1;    // n: coefficients live in Z/p^n (zmod, gr)
  unsigned degree = 1;      // r: residue field is F_{p^r} (gr, trunc)
  unsigned truncation = 1;  // m: nilpotency order of t (trunc)
  /// Non-leading coefficients of the monic defining polynomial, low degree
  /// first. Empty selects the default polynomial.
  std::vector<std::uint64_t> poly;
};

class RingContext;
using Ring = std::shared_ptr<const RingContext>;
using Coeffs = boost::container::small_vector<std::uint64_t, 4>;

/// One element of a specific ring. Elements refer to their ring by address;
/// the ring must outlive them (rings are held by shared_ptr everywhere).
class Element {
 public:
  Element() = default;

  const RingContext* context() const noexcept { return ring_; }
  std::span<const std::uint64_t> coeffs() const noexcept { return {c_.data(), c_.size()}; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.ring_ == b.ring_ && a.c_ == b.c_;
  }
  /// Canonical enumeration order (constant coefficient most significant).
  friend bool operator<(const Element& a, const Element& b) {
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }

 private:
  friend class RingContext;
  Element(const RingContext* ring, Coeffs c) : ring_(ring), c_(std::move(c)) {}

  const RingContext* ring_ = nullptr;
  Coeffs c_;
};

namespace detail {

inline std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("ring spec: invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

inline unsigned parse_small(std::string_view text, std::string_view what) {
  const std::uint64_t v = parse_uint(text, what);
  if (v == 0 || v > 64) {
    throw ParseError("ring spec: " + std::string(what) + " must be in [1, 64]");
  }
  return static_cast<unsigned>(v);
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (result > kLimit / base) throw ParseError("ring spec: ring too large (|R| must stay below 2^62)");
    result *= base;
  }
  return result;
}

// base^e, or 0 once the value exceeds `limit`.
inline std::uint64_t bounded_pow(std::uint64_t base, unsigned e, std::uint64_t limit) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && result > limit / base) return 0;
    result *= base;
  }
  return result;
}

/// Splits q = p^n with p prime; ParseError if q is not a prime power.
inline std::pair<std::uint64_t, unsigned> split_prime_power(std::uint64_t q) {
  for (unsigned k = 1; k < 64 && (std::uint64_t{1} << k) <= q; ++k) {
    const auto guess = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(q), 1.0 / k)));
    for (std::uint64_t r = guess > 2 ? guess - 2 : 1; r <= guess + 2; ++r) {
      if (r >= 2 && bounded_pow(r, k, q) == q && is_prime(r)) return {r, k};
    }
  }
  throw ParseError("ring spec: " + std::to_string(q) + " is not a prime power");
}

}  // namespace detail

/// Parses `zmod:<p>^<n>`, `gr:<p>^<n>:<r>[:<poly>]` or `trunc:<p>:<r>:<m>[:<poly>]`.
/// `zmod:<q>` with q = p^n a prime power is shorthand for `zmod:<p>^<n>`.
inline RingParams parse_ring_spec(std::string_view spec) {
  const auto parts = detail::split(spec, ':');
  RingParams params;
  auto parse_prime_power = [&](std::string_view token) {
    const auto pp = detail::split(token, '^');
    if (pp.size() > 2) throw ParseError("ring spec: malformed prime power '" + std::string(token) + "'");
    params.p = detail::parse_uint(pp[0], "prime");
    params.exponent = pp.size() == 2 ? detail::parse_small(pp[1], "exponent") : 1;
  };
  if (parts[0] == "zmod" && parts.size() == 2 && parts[1].find('^') == std::string_view::npos) {
    params.family = RingFamily::kZmod;
    std::tie(params.p, params.exponent) = detail::split_prime_power(detail::parse_uint(parts[1], "modulus"));
    return params;
  }
  auto parse_poly = [&](std::string_view token) {
    for (std::string_view c : detail::split(token, ',')) {
      params.poly.push_back(detail::parse_uint(c, "polynomial coefficient"));
    }
  };
  const std::string_view family = parts[0];
  if (family == "zmod") {
    if (parts.size() != 2) throw ParseError("ring spec: expected zmod:<p>^<n>");
    params.family = RingFamily::kZmod;
    parse_prime_power(parts[1]);
  } else if (family == "gr") {
    if (parts.size() != 3 && parts.size() != 4) throw ParseError("ring spec: expected gr:<p>^<n>:<r>[:<poly>]");
    params.family = RingFamily::kGalois;
    parse_prime_power(parts[1]);
    params.degree = detail::parse_small(parts[2], "degree");
    if (parts.size() == 4) parse_poly(parts[3]);
  } else if (family == "trunc") {
    if (parts.size() != 4 && parts.size() != 5) throw ParseError("ring spec: expected trunc:<p>:<r>:<m>[:<poly>]");
    params.family = RingFamily::kTrunc;
    params.p = detail::parse_uint(parts[1], "prime");
    params.degree = detail::parse_small(parts[2], "degree");
    params.truncation = detail::parse_small(parts[3], "truncation order");
    if (parts.size() == 5) parse_poly(parts[4]);
  } else {
    throw ParseError("ring spec: unknown family '" + std::string(family) + "'");
  }
  return params;
}

class RingContext {
 public:
  /// Validates the parameters and precomputes cardinalities, the default
  /// defining polynomial, the residue field and the canonical non-square.
  explicit RingContext(RingParams params) : params_(std::move(params)) {
    auto& pr = params_;
    if (pr.p < 3 || pr.p % 2 == 0 || !detail::is_prime(pr.p)) {
      throw ParseError("ring spec: p must be an odd prime (got " + std::to_string(pr.p) + ")");
    }
    if (pr.exponent == 0 || pr.degree == 0 || pr.truncation == 0) {
      throw ParseError("ring spec: parameters must be >= 1");
    }
    switch (pr.family) {
      case RingFamily::kZmod:
        pr.degree = 1;
        pr.truncation = 1;
        if (!pr.poly.empty()) throw ParseError("ring spec: zmod takes no polynomial");
        pr.poly = {0};
        break;
      case RingFamily::kGalois:
        pr.truncation = 1;
        break;
      case RingFamily::kTrunc:
        pr.exponent = 1;
        break;
    }
    q_ = detail::checked_pow(pr.p, pr.exponent);
    if (q_ >= (std::uint64_t{1} << 62)) throw ParseError("ring spec: coefficient modulus too large");
    r_ = pr.degree;
    m_ = pr.truncation;
    card_r_ = detail::checked_pow(q_, std::uint64_t{r_} * m_);
    card_m_ = card_r_ / detail::checked_pow(pr.p, r_);
    card_units_ = card_r_ - card_m_;

    if (pr.family != RingFamily::kZmod) {
      if (pr.poly.empty()) {
        default_poly_ = true;
        pr.poly = detail::smallest_irreducible(pr.p, r_);
      } else {
        if (pr.poly.size() != r_) {
          throw ParseError("ring spec: defining polynomial must have exactly r = " + std::to_string(r_) +
                           " non-leading coefficients");
        }
        for (std::uint64_t c : pr.poly) {
          if (c >= q_) throw ParseError("ring spec: polynomial coefficient out of range");
        }
        detail::FpPoly full(pr.poly.begin(), pr.poly.end());
        full.push_back(1);
        if (!detail::is_irreducible(full, pr.p)) {
          throw ParseError("ring spec: defining polynomial is reducible mod p");
        }
        default_poly_ = pr.poly == detail::smallest_irreducible(pr.p, r_);
      }
    }

    if (!is_field()) {
      RingParams residue;
      residue.family = r_ == 1 ? RingFamily::kZmod : RingFamily::kGalois;
      residue.p = pr.p;
      residue.degree = r_;
      if (r_ > 1) {
        for (std::uint64_t c : pr.poly) residue.poly.push_back(c % pr.p);
      }
      residue_ = std::make_shared<const RingContext>(std::move(residue));
    }

    // Square class depends only on the residue, and the lexicographically
    // smallest lift of a residue keeps its coefficients and zero elsewhere.
    if (residue_) {
      Coeffs lifted(width(), 0);
      std::copy(residue_->z_.c_.begin(), residue_->z_.c_.end(), lifted.begin());
      z_ = Element(this, std::move(lifted));
    } else {
      for (std::uint64_t i = 1; i < card_r_; ++i) {
        Element candidate = from_index(i);
        if (!is_square_unit(candidate)) {
          z_ = std::move(candidate);
          break;
        }
      }
    }
    minus_one_square_ = is_square_unit(neg(one()));
  }

  RingContext(const RingContext&) = delete;
  RingContext& operator=(const RingContext&) = delete;

  RingFamily family() const noexcept { return params_.family; }
  std::uint64_t p() const noexcept { return params_.p; }
  unsigned exponent() const noexcept { return params_.exponent; }
  unsigned degree() const noexcept { return r_; }
  unsigned truncation() const noexcept { return m_; }
  const std::vector<std::uint64_t>& defining_poly() const noexcept { return params_.poly; }
  std::uint64_t coefficient_modulus() const noexcept { return q_; }
  /// Number of coefficients in an element encoding.
  std::size_t width() const noexcept { return std::size_t{r_} * m_; }

  std::uint64_t card_R() const noexcept { return card_r_; }
  std::uint64_t card_M() const noexcept { return card_m_; }
  std::uint64_t card_units() const noexcept { return card_units_; }

  bool is_field() const noexcept { return params_.exponent == 1 && m_ == 1; }
  bool minus_one_is_square() const noexcept { return minus_one_square_; }
  /// The canonical non-square unit: smallest in enumeration order.
  const Element& z() const noexcept { return z_; }

  /// Canonical spec string. The polynomial is printed only when it differs
  /// from the default.
  std::string spec() const {
    std::ostringstream os;
    switch (params_.family) {
      case RingFamily::kZmod:
        os << "zmod:" << params_.p << '^' << params_.exponent;
        break;
      case RingFamily::kGalois:
        os << "gr:" << params_.p << '^' << params_.exponent << ':' << r_;
        break;
      case RingFamily::kTrunc:
        os << "trunc:" << params_.p << ':' << r_ << ':' << m_;
        break;
    }
    if (params_.family != RingFamily::kZmod && !default_poly_) {
      os << ':';
      for (std::size_t i = 0; i < params_.poly.size(); ++i) os << (i ? "," : "") << params_.poly[i];
    }
    return os.str();
  }

  // ---- construction -----------------------------------------------------

  Element zero() const { return Element(this, Coeffs(width(), 0)); }
  Element one() const { return from_int(1); }

  Element from_int(std::int64_t v) const {
    Coeffs c(width(), 0);
    const auto q = static_cast<std::int64_t>(q_);
    std::int64_t r = v % q;
    if (r < 0) r += q;
    c[0] = static_cast<std::uint64_t>(r);
    return Element(this, std::move(c));
  }

  /// Builds an element from its canonical coefficient list.
  Element from_coeffs(std::span<const std::uint64_t> coeffs) const {
    if (coeffs.size() != width()) {
      throw ParseError("element encoding: expected " + std::to_string(width()) + " coefficients, got " +
                       std::to_string(coeffs.size()));
    }
    Coeffs c(coeffs.begin(), coeffs.end());
    for (std::uint64_t v : c) {
      if (v >= q_) throw ParseError("element encoding: coefficient " + std::to_string(v) + " out of range");
    }
    return Element(this, std::move(c));
  }

  /// Element with the given position in canonical enumeration order.
  Element from_index(std::uint64_t index) const {
    Coeffs c(width(), 0);
    for (std::size_t i = width(); i-- > 0;) {
      c[i] = index % q_;
      index /= q_;
    }
    return Element(this, std::move(c));
  }

  std::uint64_t index_of(const Element& a) const {
    check(a);
    std::uint64_t index = 0;
    for (std::uint64_t c : a.c_) index = index * q_ + c;
    return index;
  }

  std::vector<Element> elements() const {
    std::vector<Element> all;
    all.reserve(card_r_);
    for (std::uint64_t i = 0; i < card_r_; ++i) all.push_back(from_index(i));
    return all;
  }

  std::vector<Element> units() const {
    std::vector<Element> all;
    all.reserve(card_units_);
    for (std::uint64_t i = 0; i < card_r_; ++i) {
      Element e = from_index(i);
      if (is_unit(e)) all.push_back(std::move(e));
    }
    return all;
  }

  // ---- ring operations --------------------------------------------------

  Element add(const Element& a, const Element& b) const {
    check(a, b);
    Coeffs c(a.c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = add_q(c[i], b.c_[i]);
    return Element(this, std::move(c));
  }

  Element sub(const Element& a, const Element& b) const {
    check(a, b);
    Coeffs c(a.c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = sub_q(c[i], b.c_[i]);
    return Element(this, std::move(c));
  }

  Element neg(const Element& a) const {
    check(a);
    Coeffs c(a.c_);
    for (auto& v : c) v = v == 0 ? 0 : q_ - v;
    return Element(this, std::move(c));
  }

  Element mul(const Element& a, const Element& b) const {
    check(a, b);
    Coeffs c(width(), 0);
    for (unsigned i = 0; i < m_; ++i) {
      const std::uint64_t* ai = a.c_.data() + std::size_t{i} * r_;
      if (std::all_of(ai, ai + r_, [](std::uint64_t v) { return v == 0; })) continue;
      for (unsigned j = 0; i + j < m_; ++j) {
        mul_block_acc(ai, b.c_.data() + std::size_t{j} * r_, c.data() + std::size_t{i + j} * r_);
      }
    }
    return Element(this, std::move(c));
  }

  Element pow(Element base, std::uint64_t e) const {
    check(base);
    Element result = one();
    while (e != 0) {
      if (e & 1U) result = mul(result, base);
      base = mul(base, base);
      e >>= 1U;
    }
    return result;
  }

  /// Units are exactly the elements with nonzero residue-field image.
  bool is_unit(const Element& a) const {
    check(a);
    for (unsigned i = 0; i < r_; ++i) {
      if (a.c_[i] % params_.p != 0) return true;
    }
    return false;
  }

  Element inv(const Element& u) const {
    if (!is_unit(u)) throw DomainError("inv: element is not a unit");
    return pow(u, card_units_ - 1);
  }

  bool is_square_unit(const Element& u) const {
    if (!is_unit(u)) throw DomainError("is_square_unit: element is not a unit");
    return pow(u, card_units_ / 2) == one();
  }

  /// Canonical square root: the smaller of the two roots {w, -w}. The root
  /// is found in the residue field and lifted by Newton iteration.
  Element sqrt_unit(const Element& u) const {
    if (!is_square_unit(u)) throw DomainError("sqrt_unit: element is not a square unit");
    const RingContext& field = residue_ ? *residue_ : *this;
    Coeffs residue(field.width(), 0);
    for (unsigned i = 0; i < r_; ++i) residue[i] = u.c_[i] % params_.p;
    const Element root = field.field_sqrt(Element(&field, std::move(residue)));

    Coeffs lifted(width(), 0);
    std::copy(root.c_.begin(), root.c_.end(), lifted.begin());
    Element w(this, std::move(lifted));
    const Element two = from_int(2);
    for (int iter = 0; iter < 128; ++iter) {
      const Element err = sub(mul(w, w), u);
      if (err == zero()) break;
      w = sub(w, mul(err, inv(mul(two, w))));
    }
    if (mul(w, w) != u) throw std::logic_error("sqrt_unit: Newton lifting did not converge");
    Element other = neg(w);
    return other < w ? other : w;
  }

  /// Returns c with c^2 (u + a) = u, for a unit u and a in M.
  Element scale_to(const Element& u, const Element& a) const {
    if (!is_unit(u)) throw DomainError("scale_to: u is not a unit");
    if (is_unit(a)) throw DomainError("scale_to: a is not in the maximal ideal");
    const Element t = mul(inv(u), add(u, a));  // t in 1 + M, so t^|M| = 1
    return inv(pow(t, (card_m_ + 1) / 2));
  }

  /// For -1 non-square and z a non-square unit, returns units (x, y) with
  /// (1 + x^2) y^2 = z. x is the first unit in canonical order for which
  /// 1 + x^2 is a non-square unit.
  std::pair<Element, Element> decompose_nonsquare(const Element& zz) const {
    if (minus_one_square_) throw DomainError("decompose_nonsquare: -1 is a square in " + spec());
    if (!is_unit(zz) || is_square_unit(zz)) throw DomainError("decompose_nonsquare: argument is not a non-square unit");
    for (std::uint64_t i = 1; i < card_r_; ++i) {
      Element x = from_index(i);
      if (!is_unit(x)) continue;
      const Element s = add(one(), mul(x, x));
      if (is_unit(s) && !is_square_unit(s)) {
        return {std::move(x), sqrt_unit(mul(zz, inv(s)))};
      }
    }
    throw std::logic_error("decompose_nonsquare: no unit x with 1 + x^2 non-square");
  }

 private:
  void check(const Element& a) const {
    if (a.ring_ != this) throw MismatchError("element does not belong to ring " + spec());
  }
  void check(const Element& a, const Element& b) const {
    check(a);
    check(b);
  }

  std::uint64_t add_q(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint64_t sub_q(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + q_ - b; }
  std::uint64_t mul_q(std::uint64_t a, std::uint64_t b) const {
    if (q_ <= std::numeric_limits<std::uint32_t>::max()) return a * b % q_;
    return detail::mul_mod(a, b, q_);
  }

  // out += a * b in (Z/q)[x]/(f).
  void mul_block_acc(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const {
    if (r_ == 1) {
      out[0] = add_q(out[0], mul_q(a[0], b[0]));
      return;
    }
    boost::container::small_vector<std::uint64_t, 16> prod(2 * r_ - 1, 0);
    for (unsigned i = 0; i < r_; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < r_; ++j) prod[i + j] = add_q(prod[i + j], mul_q(a[i], b[j]));
    }
    // x^r = -(f_0 + f_1 x + ... + f_{r-1} x^{r-1})
    const auto& f = params_.poly;
    for (unsigned k = 2 * r_ - 2; k >= r_; --k) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      for (unsigned j = 0; j < r_; ++j) prod[k - r_ + j] = sub_q(prod[k - r_ + j], mul_q(c, f[j]));
    }
    for (unsigned j = 0; j < r_; ++j) out[j] = add_q(out[j], prod[j]);
  }

  // Tonelli-Shanks; only called on a field context.
  Element field_sqrt(const Element& a) const {
    std::uint64_t t = card_r_ - 1;
    unsigned s = 0;
    while (t % 2 == 0) {
      t /= 2;
      ++s;
    }
    Element c = pow(z_, t);
    Element acc = pow(a, t);
    Element root = pow(a, (t + 1) / 2);
    const Element unity = one();
    unsigned order = s;
    while (acc != unity) {
      unsigned i = 0;
      for (Element probe = acc; probe != unity; probe = mul(probe, probe)) ++i;
      Element b = c;
      for (unsigned k = 0; k + i + 1 < order; ++k) b = mul(b, b);
      order = i;
      c = mul(b, b);
      acc = mul(acc, c);
      root = mul(root, b);
    }
    return root;
  }

  RingParams params_;
  bool default_poly_ = false;
  std::uint64_t q_ = 0;
  unsigned r_ = 1;
  unsigned m_ = 1;
  std::uint64_t card_r_ = 0;
  std::uint64_t card_m_ = 0;
  std::uint64_t card_units_ = 0;
  std::shared_ptr<const RingContext> residue_;
  Element z_;
  bool minus_one_square_ = false;
};

inline Ring make_ring(RingParams params) { return std::make_shared<const RingContext>(std::move(params)); }
inline Ring make_ring(std::string_view spec) { return make_ring(parse_ring_spec(spec)); }

// ---- free-function surface ------------------------------------------------

namespace detail {
inline const RingContext& ring_of(const Element& a) {
  if (a.context() == nullptr) throw MismatchError("element is not attached to a ring");
  return *a.context();
}
}  // namespace detail

inline Element operator+(const Element& a, const Element& b) { return detail::ring_of(a).add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return detail::ring_of(a).sub(a, b); }
inline Element operator-(const Element& a) { return detail::ring_of(a).neg(a); }
inline Element operator*(const Element& a, const Element& b) { return detail::ring_of(a).mul(a, b); }

inline Element pow(const Element& a, std::uint64_t e) { return detail::ring_of(a).pow(a, e); }
inline bool is_unit(const Element& a) { return detail::ring_of(a).is_unit(a); }
inline Element inv(const Element& a) { return detail::ring_of(a).inv(a); }
inline bool is_square_unit(const Element& a) { return detail::ring_of(a).is_square_unit(a); }
inline Element sqrt_unit(const Element& a) { return detail::ring_of(a).sqrt_unit(a); }
inline Element scale_to(const Element& u, const Element& a) { return detail::ring_of(u).scale_to(u, a); }
inline std::pair<Element, Element> decompose_nonsquare(const Element& z) {
  return detail::ring_of(z).decompose_nonsquare(z);
}
inline const Element& canonical_nonsquare(const RingContext& ring) { return ring.z(); }

/// zmod: `5`; gr: `[1,2]`; trunc: `[[1,0],[2,1]]`.
inline std::string to_string(const Element& a) {
  const RingContext& ring = detail::ring_of(a);
  const auto c = a.coeffs();
  std::ostringstream os;
  switch (ring.family()) {
    case RingFamily::kZmod:
      os << c[0];
      break;
    case RingFamily::kGalois:
      os << '[';
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
      os << ']';
      break;
    case RingFamily::kTrunc:
      os << '[';
      for (unsigned b = 0; b < ring.truncation(); ++b) {
        os << (b ? ",[" : "[");
        for (unsigned i = 0; i < ring.degree(); ++i) os << (i ? "," : "") << c[b * ring.degree() + i];
        os << ']';
      }
      os << ']';
      break;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Element& a) { return os << to_string(a); }

}  // namespace cogredient
