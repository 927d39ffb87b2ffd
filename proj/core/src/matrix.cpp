#include "dieudonne/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dieudonne/errors.hpp"

namespace dieudonne {

namespace {

void require_same_ring(const Matrix& a, const Matrix& b) {
  if (!a.ring() || !b.ring() || !a.ctx().same_as(b.ctx())) {
    throw std::invalid_argument("matrices live over different rings");
  }
}

}  // namespace

Matrix::Matrix(Ring ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (!ring_) throw std::invalid_argument("matrix needs a ring");
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
  prec_ = ring_->precision();
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                  ring_->zero());
}

Matrix Matrix::identity(Ring ring, int n) {
  return scalar(ring, n, ring->one());
}

Matrix Matrix::scalar(Ring ring, int n, const RingElement& value) {
  Matrix m(std::move(ring), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = value;
  return m;
}

Matrix Matrix::random(Ring ring, int rows, int cols, std::mt19937_64& rng) {
  Matrix m(ring, rows, cols);
  for (auto& e : m.entries_) e = ring->random(rng);
  return m;
}

void Matrix::set_prec(int prec) {
  prec_ = std::clamp(prec, 0, ring_->precision());
}

RingElement& Matrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

const RingElement& Matrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

Matrix Matrix::column(int c) const { return block(0, c, rows_, 1); }

Matrix Matrix::block(int r0, int c0, int nrows, int ncols) const {
  Matrix out(ring_, nrows, ncols);
  out.prec_ = prec_;
  for (int i = 0; i < nrows; ++i) {
    for (int j = 0; j < ncols; ++j) out.at(i, j) = at(r0 + i, c0 + j);
  }
  return out;
}

void Matrix::set_block(int r0, int c0, const Matrix& src) {
  for (int i = 0; i < src.rows(); ++i) {
    for (int j = 0; j < src.cols(); ++j) at(r0 + i, c0 + j) = src.at(i, j);
  }
  prec_ = std::min(prec_, src.prec_);
}

void Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void Matrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void Matrix::add_row_multiple(int target, int source, const RingElement& factor) {
  const RingContext& R = *ring_;
  if (R.is_zero(factor)) return;
  for (int j = 0; j < cols_; ++j) {
    at(target, j) = R.add(at(target, j), R.mul(factor, at(source, j)));
  }
}

void Matrix::add_col_multiple(int target, int source, const RingElement& factor) {
  const RingContext& R = *ring_;
  if (R.is_zero(factor)) return;
  for (int i = 0; i < rows_; ++i) {
    at(i, target) = R.add(at(i, target), R.mul(factor, at(i, source)));
  }
}

void Matrix::scale_row(int r, const RingElement& factor) {
  for (int j = 0; j < cols_; ++j) at(r, j) = ring_->mul(factor, at(r, j));
}

void Matrix::scale_col(int c, const RingElement& factor) {
  for (int i = 0; i < rows_; ++i) at(i, c) = ring_->mul(factor, at(i, c));
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const RingElement& e) { return ring_->is_zero(e); });
}

int Matrix::min_valuation() const {
  int v = ring_->precision();
  for (const auto& e : entries_) v = std::min(v, ring_->val(e));
  return v;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.ring_ && b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
  return a.entries_ == b.entries_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix dimension mismatch in addition");
  }
  Matrix out(a.ring(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.ctx().add(a.at(i, j), b.at(i, j));
  }
  out.set_prec(std::min(a.prec(), b.prec()));
  return out;
}

Matrix operator-(const Matrix& a) {
  Matrix out(a.ring(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.ctx().neg(a.at(i, j));
  }
  out.set_prec(a.prec());
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix dimension mismatch in product");
  }
  const RingContext& R = a.ctx();
  Matrix out(a.ring(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const RingElement& aik = a.at(i, k);
      if (R.is_zero(aik)) continue;
      for (int j = 0; j < b.cols(); ++j) {
        out.at(i, j) = R.add(out.at(i, j), R.mul(aik, b.at(k, j)));
      }
    }
  }
  out.set_prec(std::min(a.prec(), b.prec()));
  return out;
}

Matrix scalar_mul(const RingElement& c, const Matrix& a) {
  Matrix out = a;
  for (int i = 0; i < a.rows(); ++i) out.scale_row(i, c);
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.ring(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
  }
  out.set_prec(a.prec());
  return out;
}

Matrix frobenius(const Matrix& a, int twist) {
  Matrix out(a.ring(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.ctx().frobenius(a.at(i, j), twist);
  }
  out.set_prec(a.prec());
  return out;
}

Matrix scale_p(const Matrix& a, int k) {
  if (k < 0) return divide_p(a, -k);
  Matrix out(a.ring(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.ctx().shift_up(a.at(i, j), k);
  }
  out.set_prec(a.prec() + k);
  return out;
}

Matrix divide_p(const Matrix& a, int k) {
  if (k < 0) return scale_p(a, -k);
  if (a.min_valuation() < k) {
    throw std::domain_error("matrix is not divisible by p^" + std::to_string(k));
  }
  Matrix out(a.ring(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.ctx().shift_down(a.at(i, j), k);
  }
  out.set_prec(a.prec() - k);
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix out(a.ring(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix out(a.ring(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  Matrix out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

Matrix truncate(const Matrix& a, int k) {
  Matrix out(a.ring(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.ctx().truncate(a.at(i, j), k);
  }
  out.set_prec(std::min(a.prec(), k));
  return out;
}

bool congruent(const Matrix& a, const Matrix& b, int k) {
  require_same_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (!a.ctx().congruent(a.at(i, j), b.at(i, j), k)) return false;
    }
  }
  return true;
}

SmithForm elementary_divisors(const Matrix& a) {
  const RingContext& R = a.ctx();
  Matrix w = a;
  Matrix left = Matrix::identity(a.ring(), a.rows());
  Matrix right = Matrix::identity(a.ring(), a.cols());
  SmithForm out;
  const int steps = std::min(a.rows(), a.cols());
  for (int s = 0; s < steps; ++s) {
    int best_r = -1, best_c = -1, best_v = a.prec();
    for (int i = s; i < a.rows(); ++i) {
      for (int j = s; j < a.cols(); ++j) {
        const int v = R.val(w.at(i, j));
        if (v < best_v) {
          best_v = v;
          best_r = i;
          best_c = j;
        }
      }
    }
    if (best_r < 0) break;
    w.swap_rows(s, best_r);
    left.swap_rows(s, best_r);
    w.swap_cols(s, best_c);
    right.swap_cols(s, best_c);
    const RingElement unit_inv = R.inverse(R.shift_down(w.at(s, s), best_v));
    w.scale_row(s, unit_inv);
    left.scale_row(s, unit_inv);
    for (int i = s + 1; i < a.rows(); ++i) {
      const RingElement f = R.shift_down(w.at(i, s), best_v);
      w.add_row_multiple(i, s, R.neg(f));
      left.add_row_multiple(i, s, R.neg(f));
    }
    for (int j = s + 1; j < a.cols(); ++j) {
      const RingElement f = R.shift_down(w.at(s, j), best_v);
      w.add_col_multiple(j, s, R.neg(f));
      right.add_col_multiple(j, s, R.neg(f));
    }
    out.divisors.push_back(best_v);
    ++out.rank;
  }
  left.set_prec(a.prec());
  right.set_prec(a.prec());
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

HermiteForm column_hnf(const Matrix& a) {
  const RingContext& R = a.ctx();
  const int n = a.rows();
  const int k = a.cols();
  if (k < n) {
    throw PrecisionExhausted("fewer generators than rows: span is not full rank",
                             R.precision());
  }
  Matrix w = a;
  Matrix u = Matrix::identity(a.ring(), k);
  std::vector<int> diag(static_cast<std::size_t>(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    const int target = k - n + i;
    int best_c = -1, best_v = a.prec();
    for (int j = 0; j <= target; ++j) {
      const int v = R.val(w.at(i, j));
      if (v < best_v) {
        best_v = v;
        best_c = j;
      }
    }
    if (best_c < 0) {
      throw PrecisionExhausted("no pivot of valuation below the precision in row " +
                                   std::to_string(i),
                               R.precision() + 1);
    }
    w.swap_cols(target, best_c);
    u.swap_cols(target, best_c);
    const RingElement unit_inv = R.inverse(R.shift_down(w.at(i, target), best_v));
    w.scale_col(target, unit_inv);
    u.scale_col(target, unit_inv);
    for (int j = 0; j < target; ++j) {
      const RingElement f = R.shift_down(w.at(i, j), best_v);
      w.add_col_multiple(j, target, R.neg(f));
      u.add_col_multiple(j, target, R.neg(f));
    }
    diag[static_cast<std::size_t>(i)] = best_v;
  }
  // Reduce above-diagonal entries, bottom row first so finished rows stay put.
  for (int i = n - 1; i >= 0; --i) {
    const int ci = k - n + i;
    const int h = diag[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      const int cj = k - n + j;
      const RingElement x = w.at(i, cj);
      const RingElement rem = R.truncate(x, h);
      const RingElement q = R.shift_down(R.sub(x, rem), h);
      w.add_col_multiple(cj, ci, R.neg(q));
      u.add_col_multiple(cj, ci, R.neg(q));
    }
  }
  HermiteForm out;
  out.form = w.block(0, k - n, n, n);
  out.form.set_prec(R.precision());
  out.transform = std::move(u);
  out.transform.set_prec(a.prec());
  out.diagonal = std::move(diag);
  SmithForm smith = elementary_divisors(out.form);
  out.divisors = std::move(smith.divisors);
  const int max_div = out.divisors.empty()
                          ? 0
                          : *std::max_element(out.divisors.begin(), out.divisors.end());
  if (static_cast<int>(out.divisors.size()) < n || max_div >= a.prec()) {
    throw PrecisionExhausted(
        "span is not determined at precision p^" + std::to_string(a.prec()),
        R.precision() + (max_div + 1 - a.prec()));
  }
  return out;
}

ScaledMatrix scaled_inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const RingContext& R = a.ctx();
  const SmithForm s = elementary_divisors(a);
  if (s.rank < a.rows()) {
    throw PrecisionExhausted("matrix is singular at its precision", R.precision() + 1);
  }
  const int e = *std::max_element(s.divisors.begin(), s.divisors.end());
  if (e >= a.prec()) {
    throw PrecisionExhausted("matrix inverse not determined at working precision",
                             R.precision() + e + 1 - a.prec());
  }
  // A = L^{-1} D Q^{-1}, so p^e A^{-1} = Q diag(p^{e - d_i}) L.
  Matrix scaled = s.left;
  for (int i = 0; i < a.rows(); ++i) {
    scaled.scale_row(i, R.p_power(e - s.divisors[static_cast<std::size_t>(i)]));
  }
  ScaledMatrix out{s.right * scaled, e};
  out.integral.set_prec(a.prec() - e);
  return out;
}

std::vector<RingElement> characteristic_polynomial(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("characteristic polynomial of non-square matrix");
  }
  const RingContext& R = a.ctx();
  const int n = a.rows();
  // Coefficients highest degree first.
  std::vector<RingElement> c{R.one()};
  for (int r = 0; r < n; ++r) {
    // Column q = [1, -a_rr, -R S, -R M S, ..., -R M^{r-1} S].
    std::vector<RingElement> q(static_cast<std::size_t>(r) + 2, R.zero());
    q[0] = R.one();
    q[1] = R.neg(a.at(r, r));
    std::vector<RingElement> v(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(i)] = a.at(i, r);
    for (int t = 0; t < r; ++t) {
      RingElement dot = R.zero();
      for (int i = 0; i < r; ++i) dot = R.add(dot, R.mul(a.at(r, i), v[static_cast<std::size_t>(i)]));
      q[static_cast<std::size_t>(t) + 2] = R.neg(dot);
      std::vector<RingElement> next(static_cast<std::size_t>(r), R.zero());
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
          next[static_cast<std::size_t>(i)] =
              R.add(next[static_cast<std::size_t>(i)], R.mul(a.at(i, j), v[static_cast<std::size_t>(j)]));
        }
      }
      v = std::move(next);
    }
    std::vector<RingElement> nc(static_cast<std::size_t>(r) + 2, R.zero());
    for (std::size_t i = 0; i < nc.size(); ++i) {
      for (std::size_t j = 0; j < c.size() && j <= i; ++j) {
        nc[i] = R.add(nc[i], R.mul(q[i - j], c[j]));
      }
    }
    c = std::move(nc);
  }
  std::reverse(c.begin(), c.end());
  return c;
}

RingElement determinant(const Matrix& a) {
  const auto c = characteristic_polynomial(a);
  const RingContext& R = a.ctx();
  return a.rows() % 2 == 0 ? c[0] : R.neg(c[0]);
}

}  // namespace dieudonne
