#include "dieudonne/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dieudonne/errors.hpp"

namespace dieudonne {

namespace {

void require_compatible(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("lattices of different rank");
  if (!a.ring()->same_as(*b.ring())) {
    throw std::invalid_argument("lattices over different rings");
  }
}

}  // namespace

Lattice Lattice::from_generators(const Matrix& generators, int denom) {
  Matrix gens = generators;
  if (denom < 0) {
    gens = scale_p(gens, -denom);
    denom = 0;
  }
  HermiteForm hnf = column_hnf(gens);
  Lattice out;
  const int shift = std::min(denom, hnf.form.min_valuation());
  out.basis_ = shift > 0 ? divide_p(hnf.form, shift) : hnf.form;
  out.basis_.set_prec(out.basis_.ctx().precision());
  out.denom_ = denom - shift;
  out.diagonal_ = hnf.diagonal;
  for (auto& h : out.diagonal_) h -= shift;
  out.max_divisor_ = *std::max_element(hnf.divisors.begin(), hnf.divisors.end()) - shift;
  return out;
}

Lattice Lattice::standard(const Ring& ring, int n) {
  return from_generators(Matrix::identity(ring, n), 0);
}

int Lattice::volume() const {
  return std::accumulate(diagonal_.begin(), diagonal_.end(), 0) - dim() * denom_;
}

int Lattice::exponent() const {
  return std::max(0, denom_ - basis_.min_valuation());
}

int Lattice::codepth() const { return max_divisor_ - denom_; }

bool operator==(const Lattice& a, const Lattice& b) {
  return a.denom_ == b.denom_ && a.basis_ == b.basis_;
}

Lattice sum(const Lattice& a, const Lattice& b) {
  require_compatible(a, b);
  const int e = std::max(a.denom(), b.denom());
  return Lattice::from_generators(
      hstack(scale_p(a.basis(), e - a.denom()), scale_p(b.basis(), e - b.denom())), e);
}

Lattice intersect(const Lattice& a, const Lattice& b) {
  require_compatible(a, b);
  return standard_dual(sum(standard_dual(a), standard_dual(b)));
}

bool contains(const Lattice& outer, const Lattice& inner) {
  require_compatible(outer, inner);
  if (inner.volume() < outer.volume()) return false;
  return sum(outer, inner) == outer;
}

int index(const Lattice& a, const Lattice& b) {
  if (!contains(b, a)) throw NotContained("lattice index requested for A not inside B");
  return a.volume() - b.volume();
}

bool is_adjacent(const Lattice& a, const Lattice& b) {
  return contains(b, a) && contains(a, scale(b, 1));
}

Lattice scale(const Lattice& l, int k) {
  return Lattice::from_generators(l.basis(), l.denom() - k);
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  if (!a.ring()->same_as(*b.ring())) {
    throw std::invalid_argument("lattices over different rings");
  }
  const int e = std::max(a.denom(), b.denom());
  return Lattice::from_generators(
      block_diagonal(scale_p(a.basis(), e - a.denom()), scale_p(b.basis(), e - b.denom())),
      e);
}

Lattice frobenius_twist(const Lattice& l, int twist) {
  return Lattice::from_generators(frobenius(l.basis(), twist), l.denom());
}

Lattice standard_dual(const Lattice& l) {
  const Lattice target = Lattice::from_generators(Matrix::identity(l.ring(), l.dim()),
                                                  -l.denom());
  return preimage_linear(transpose(l.basis()), target);
}

Lattice dual(const Lattice& l, const PairingContext& pairing) {
  if (pairing.gram.rows() != l.dim() || pairing.gram.cols() != l.dim()) {
    throw std::invalid_argument("pairing has the wrong size for this lattice");
  }
  const Lattice target = Lattice::from_generators(Matrix::identity(l.ring(), l.dim()),
                                                  -l.denom());
  return preimage_linear(transpose(pairing.gram * frobenius(l.basis(), pairing.twist)),
                         target);
}

Lattice preimage_linear(const Matrix& a, const Lattice& l) {
  if (a.rows() != a.cols() || a.rows() != l.dim()) {
    throw std::invalid_argument("preimage needs a square matrix matching the lattice");
  }
  const RingContext& R = a.ctx();
  const SmithForm s = elementary_divisors(a);
  if (s.rank < a.rows()) {
    throw PrecisionExhausted("map is singular at its precision", R.precision() + 1);
  }
  const int k = *std::max_element(s.divisors.begin(), s.divisors.end());
  // R A Q = D, so {v : A v in L} = Q D^{-1} R L.
  Matrix scaled = s.left * l.basis();
  for (int i = 0; i < a.rows(); ++i) {
    scaled.scale_row(i, R.p_power(k - s.divisors[static_cast<std::size_t>(i)]));
  }
  Matrix y = s.right * scaled;
  y.set_prec(R.precision());
  Lattice result = Lattice::from_generators(y, l.denom() + k);
  const int required = result.exponent() + l.codepth();
  if (a.prec() <= k || a.prec() < required) {
    throw PrecisionExhausted("preimage not determined at precision p^" +
                                 std::to_string(a.prec()),
                             R.precision() + std::max(k + 1, required) - a.prec());
  }
  return result;
}

Lattice image(const SemilinearMap& f, const Lattice& l) {
  if (f.dim() != l.dim()) throw std::invalid_argument("map and lattice differ in rank");
  return Lattice::from_generators(f.matrix * frobenius(l.basis(), f.twist),
                                  l.denom() - f.scale);
}

Lattice preimage(const SemilinearMap& f, const Lattice& l) {
  if (f.dim() != l.dim()) throw std::invalid_argument("map and lattice differ in rank");
  return frobenius_twist(preimage_linear(f.matrix, scale(l, -f.scale)), -f.twist);
}

}  // namespace dieudonne
