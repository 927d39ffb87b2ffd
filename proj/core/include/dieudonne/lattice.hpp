#pragma once

#include <vector>

#include "dieudonne/matrix.hpp"
#include "dieudonne/semilinear.hpp"

namespace dieudonne {

/// A full-rank lattice p^{-denom} * span(basis) in Q_p-coordinates.
///
/// The basis is the canonical column Hermite form and denom is the least
/// nonnegative exponent, so two lattices are equal exactly when their stored
/// data are equal. Lattices are exact: construction fails with
/// PrecisionExhausted when the generators do not determine the span at their
/// precision.
class Lattice {
 public:
  Lattice() = default;

  static Lattice from_generators(const Matrix& generators, int denom = 0);
  static Lattice standard(const Ring& ring, int n);

  const Ring& ring() const { return basis_.ring(); }
  const Matrix& basis() const noexcept { return basis_; }
  int denom() const noexcept { return denom_; }
  int dim() const noexcept { return basis_.rows(); }
  const std::vector<int>& diagonal() const noexcept { return diagonal_; }

  /// Signed length of the standard lattice relative to this one:
  /// sum(diagonal) - dim * denom.
  int volume() const;
  /// Least k >= 0 with p^k L contained in the standard lattice.
  int exponent() const;
  /// Least j with p^j * standard contained in L (may be negative).
  int codepth() const;

  friend bool operator==(const Lattice& a, const Lattice& b);

 private:
  Matrix basis_;
  int denom_ = 0;
  std::vector<int> diagonal_;
  int max_divisor_ = 0;
};

/// The form <<x, y>> = x^T * gram * sigma^twist(y).
struct PairingContext {
  Matrix gram;
  int twist = 1;
};

Lattice sum(const Lattice& a, const Lattice& b);
/// Computed as the standard dual of the sum of standard duals.
Lattice intersect(const Lattice& a, const Lattice& b);
bool contains(const Lattice& outer, const Lattice& inner);
/// Length of b / a; throws NotContained unless a is inside b.
int index(const Lattice& a, const Lattice& b);
/// p*b inside a inside b.
bool is_adjacent(const Lattice& a, const Lattice& b);
/// p^k * L.
Lattice scale(const Lattice& l, int k);
Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice frobenius_twist(const Lattice& l, int twist);

/// {x : x^T y integral for all y in L}.
Lattice standard_dual(const Lattice& l);
/// {x : <<x, y>> integral for all y in L}.
Lattice dual(const Lattice& l, const PairingContext& pairing);

/// {v : A v in L} for a square matrix A nonsingular at its precision.
Lattice preimage_linear(const Matrix& a, const Lattice& l);
/// f(L).
Lattice image(const SemilinearMap& f, const Lattice& l);
/// {v : f(v) in L}.
Lattice preimage(const SemilinearMap& f, const Lattice& l);

}  // namespace dieudonne
