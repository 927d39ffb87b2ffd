#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dieudonne/lattice.hpp"

namespace oracle {

using Vec = std::vector<std::int64_t>;

/// A subgroup of (Z/p^k)^dim kept in echelon form. Built only from integer
/// row operations, independently of the library's ring and lattice code.
class Subgroup {
 public:
  Subgroup(std::int64_t p, int k, int dim, std::vector<Vec> generators);

  std::int64_t p() const { return p_; }
  int k() const { return k_; }
  int dim() const { return dim_; }
  const std::vector<Vec>& generators() const { return generators_; }
  /// log_p of the number of elements.
  int log_order() const { return log_order_; }

 private:
  std::int64_t p_;
  int k_;
  int dim_;
  std::int64_t modulus_;
  std::vector<Vec> generators_;
  int log_order_ = 0;
};

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b);
bool subgroup_contains(const Subgroup& outer, const Subgroup& inner);
bool subgroup_equal(const Subgroup& a, const Subgroup& b);
/// log_p |a ∩ b|, from |a| |b| = |a + b| |a ∩ b|.
int intersection_log_order(const Subgroup& a, const Subgroup& b);

/// Size of the subgroup generated by the generators, by closure inside
/// (Z/p^k)^dim. Tiny cases only.
std::int64_t exhaustive_order(std::int64_t p, int k, int dim, const std::vector<Vec>& generators);

/// p^window L inside (W/p^{2 window})^n as a subgroup of
/// (Z/p^{2 window})^{n m}: generators x^j v for every basis vector v. The
/// lattice must lie between p^window and p^{-window} times the standard one.
/// Multiplication by x uses only the modulus coefficients.
Subgroup restrict_scalars(const dieudonne::Lattice& l, int window);

/// p^{-window} (span(G) + p^{2 window} standard) for a random integral G with
/// random column scalings: a lattice inside the window.
dieudonne::Lattice random_window_lattice(const dieudonne::Ring& ring, int n, int window,
                                         std::mt19937_64& rng);

}  // namespace oracle
