#include "dieudonne/semilinear.hpp"

#include <algorithm>
#include <stdexcept>

namespace dieudonne {

ScaledMatrix apply(const SemilinearMap& f, const Matrix& v) {
  if (f.matrix.cols() != v.rows()) {
    throw std::invalid_argument("dimension mismatch applying semilinear map");
  }
  Matrix image = f.matrix * frobenius(v, f.twist);
  if (f.scale >= 0) return {scale_p(image, f.scale), 0};
  return {std::move(image), -f.scale};
}

SemilinearMap compose(const SemilinearMap& f, const SemilinearMap& g) {
  if (f.dim() != g.dim() || f.matrix.cols() != g.matrix.rows()) {
    throw std::invalid_argument("dimension mismatch composing semilinear maps");
  }
  return {f.matrix * frobenius(g.matrix, f.twist), f.twist + g.twist,
          f.scale + g.scale};
}

SemilinearMap semilinear_power(const SemilinearMap& f, int n) {
  if (n < 1) throw std::invalid_argument("semilinear power needs n >= 1");
  SemilinearMap acc = f;
  for (int i = 1; i < n; ++i) acc = compose(f, acc);
  return acc;
}

SemilinearMap normalized(const SemilinearMap& f) {
  SemilinearMap out = f;
  if (out.scale > 0) {
    out.matrix = scale_p(out.matrix, out.scale);
    out.scale = 0;
  } else if (out.scale < 0) {
    const int k = std::min(-out.scale, out.matrix.min_valuation());
    if (k > 0) {
      out.matrix = divide_p(out.matrix, k);
      out.scale += k;
    }
  }
  return out;
}

bool same_operator(const SemilinearMap& f, const SemilinearMap& g) {
  const int m = f.matrix.ctx().degree();
  if (((f.twist - g.twist) % m + m) % m != 0) return false;
  // Compare p^{s - s_min} A on both sides.
  const int lo = std::min(f.scale, g.scale);
  const Matrix a = scale_p(f.matrix, f.scale - lo);
  const Matrix b = scale_p(g.matrix, g.scale - lo);
  return congruent(a, b, std::min(a.prec(), b.prec()));
}

}  // namespace dieudonne
