#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace dieudonne {

inline constexpr int kMaxDegree = 8;

/// An element of W(F_{p^m}) / p^N, stored as its m coefficients in the power
/// basis 1, x, ..., x^{m-1} of the context's modulus. Each coefficient is a
/// residue in [0, p^N).
struct RingElement {
  std::array<std::uint64_t, kMaxDegree> coeffs{};

  friend bool operator==(const RingElement&, const RingElement&) = default;
};

class RingContext;
using Ring = std::shared_ptr<const RingContext>;

/// The truncated unramified Witt ring W(F_{p^m}) / p^N together with its
/// Frobenius automorphism.
///
/// The ring is realised as (Z/p^N)[x] / f(x) where f is the lexicographically
/// least monic polynomial of degree m that is irreducible mod p (coefficients
/// taken in [0, p), constant term least significant). Frobenius is determined
/// by the image of x, the root of f congruent to x^p, Hensel-lifted to full
/// precision. Contexts are immutable and shared between all values built on
/// them.
class RingContext {
 public:
  /// Throws std::invalid_argument for p = 2, non-prime p, m outside
  /// [1, kMaxDegree], N < 1, or p^N not representable in 63 bits.
  static Ring make(std::uint64_t p, int degree, int precision);

  /// Context with a caller-supplied modulus x^m + c_{m-1} x^{m-1} + ... + c_0,
  /// given as {c_0, ..., c_{m-1}}. The modulus must be irreducible mod p.
  static Ring with_modulus(std::uint64_t p, int precision,
                           std::vector<std::uint64_t> modulus);

  /// Largest N with p^N < 2^63.
  static int max_precision(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  int degree() const noexcept { return m_; }
  int precision() const noexcept { return n_; }
  std::uint64_t modulus_power() const noexcept { return pn_; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
  const RingElement& frobenius_image() const noexcept { return frob_x_; }

  bool same_as(const RingContext& other) const noexcept;

  RingElement zero() const { return {}; }
  RingElement one() const;
  RingElement from_integer(std::int64_t value) const;
  /// The residue class of x.
  RingElement generator() const;
  RingElement p_power(int k) const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement pow(const RingElement& a, std::uint64_t e) const;

  /// p^k * a.
  RingElement shift_up(const RingElement& a, int k) const;
  /// a / p^k; throws std::domain_error unless p^k divides a.
  RingElement shift_down(const RingElement& a, int k) const;

  /// Valuation with N standing in for "at least N" (the zero residue).
  int val(const RingElement& a) const;
  /// Valuation, or nullopt for the zero residue.
  std::optional<int> valuation(const RingElement& a) const;
  bool is_zero(const RingElement& a) const;
  bool is_unit(const RingElement& a) const { return val(a) == 0; }
  RingElement inverse(const RingElement& unit) const;

  /// sigma^twist(a); any integer twist.
  RingElement frobenius(const RingElement& a, int twist) const;

  /// Coefficients reduced mod p^k.
  RingElement truncate(const RingElement& a, int k) const;
  bool congruent(const RingElement& a, const RingElement& b, int k) const;

  /// Unit delta with sigma(delta) = -delta: the Teichmueller lift of the least
  /// nonzero residue d with d^p = -d. Requires an even degree.
  const RingElement& delta() const;

  RingElement random(std::mt19937_64& rng) const;

  std::vector<std::string> to_strings(const RingElement& a) const;
  RingElement from_strings(const std::vector<std::string>& digits) const;

 private:
  RingContext(std::uint64_t p, int m, int n, std::vector<std::uint64_t> modulus);

  std::uint64_t madd(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t msub(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t mmul(std::uint64_t a, std::uint64_t b) const noexcept;
  RingElement apply_frobenius_table(const RingElement& a, int twist) const;

  std::uint64_t p_;
  int m_;
  int n_;
  std::uint64_t pn_;
  std::vector<std::uint64_t> modulus_;
  RingElement frob_x_;
  // frob_powers_[t][k] = sigma^t(x)^k for 0 <= t < m, 0 <= k < m.
  std::vector<std::vector<RingElement>> frob_powers_;
  std::optional<RingElement> delta_;
};

}  // namespace dieudonne
