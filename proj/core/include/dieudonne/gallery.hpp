#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dieudonne/unitary_module.hpp"

namespace dieudonne {

/// min(20, largest precision supported for p).
int default_precision(std::uint64_t p);

/// W(F_{p^2}) / p^N, the ring every gallery module is defined over.
Ring gallery_ring(std::uint64_t p, std::optional<int> precision = std::nullopt);

struct GalleryOptions {
  /// Read e_{g+1} as e_1 (and f-indices likewise) in the defining formulas.
  bool wraparound = true;
  /// Pair e_i with f_{i+shift} instead of f_{i+r}.
  std::optional<int> pairing_shift;
};

/// The module M_(a,b) for a + b = g odd and a <= b:
///   F(e_i) = f_i (i <= a), F(e_j) = p f_j (j > a),
///   F(f_j) = p e_{j+1} (r < j <= r + a), F(f_i) = e_{i+1} otherwise,
///   <e_i, f_{r+i}> = delta = -<f_{r+i}, e_i>, r = (g - 1) / 2.
/// Requires an even extension degree so that delta exists.
UnitaryModule build_odd(int a, int b, const Ring& ring, GalleryOptions options = {});

/// The same formulas without parameter checks, with r = floor((g - 1) / 2).
/// Used to exhibit why g must be odd.
UnitaryModule build_odd_recipe(int a, int b, const Ring& ring, GalleryOptions options = {});

/// M_(1,0): M_(0,1) with the two graded pieces exchanged.
UnitaryModule build_flip_10(const Ring& ring);

/// M_(a,b) = M_(a,b-1) + M_(0,1) for a < b, a + b even.
UnitaryModule build_even(int a, int b, const Ring& ring);

/// M_(a,a) = M_(a-1,a) + M_(1,0) for a >= 1.
UnitaryModule build_parallel(int a, const Ring& ring);

/// The deformation of M_(a,b) with
///   F_k(f_a) = e_{a+1} + p^k e_1 and F_k(e_{r+1}) = p f_{r+1} - p^{k+1} f_{r+a+1}.
/// Requires a + b odd, 1 <= a <= b, k >= 0 and k + 1 below the precision.
/// Level k = 0 is allowed: it is the level-0 witness needed for signature
/// (2, 2).
UnitaryModule build_deformed(int a, int b, int k, const Ring& ring);

/// X_(q,b) + (a - q) copies of M_(1,0), where X_(q,b) is M_(q,b) for q + b odd
/// and M_(q,b-1) + M_(0,1) otherwise. Minimal height q for 0 <= q <= a
/// (a < b) or 0 <= q <= a - 1 (a = b).
UnitaryModule build_height_realization(int a, int b, int q, const Ring& ring);

enum class Family { odd, even, parallel, deformed, flip10, realization };

std::string to_string(Family family);
Family family_from_string(const std::string& name);

struct FamilySpec {
  Family family = Family::odd;
  int a = 0;
  int b = 1;
  std::optional<int> k;
  std::optional<int> q;
};

/// Dispatches to the constructors above; throws std::invalid_argument when
/// the parameters violate the family's constraints.
UnitaryModule build_family(const FamilySpec& spec, const Ring& ring);

}  // namespace dieudonne
