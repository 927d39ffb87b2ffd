#pragma once

#include "dieudonne/matrix.hpp"

namespace dieudonne {

/// The map v -> p^scale * A * sigma^twist(v) on coordinate column vectors.
///
/// A negative scale allows operators such as p^{-1} F^2 whose matrix is not
/// integral in the given basis.
struct SemilinearMap {
  Matrix matrix;
  int twist = 0;
  int scale = 0;

  int dim() const { return matrix.rows(); }

  static SemilinearMap identity(const Ring& ring, int n) {
    return {Matrix::identity(ring, n), 0, 0};
  }
};

/// Image of a vector (or of each column of a matrix). The result is
/// p^{-exponent} * integral with exponent = max(0, -scale).
ScaledMatrix apply(const SemilinearMap& f, const Matrix& v);

/// f after g: p^{s_f + s_g} * A_f * sigma^{t_f}(A_g), twist t_f + t_g.
SemilinearMap compose(const SemilinearMap& f, const SemilinearMap& g);

/// n-fold composition, n >= 1, by repeated composition.
SemilinearMap semilinear_power(const SemilinearMap& f, int n);

/// Moves a positive scale into the matrix and cancels any common power of p
/// between the matrix and a negative scale.
SemilinearMap normalized(const SemilinearMap& f);

/// True when both maps agree as operators at the given precision.
bool same_operator(const SemilinearMap& f, const SemilinearMap& g);

}  // namespace dieudonne
