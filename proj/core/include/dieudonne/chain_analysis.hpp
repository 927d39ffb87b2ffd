#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dieudonne/lattice.hpp"
#include "dieudonne/unitary_module.hpp"

namespace dieudonne {

/// The sequence T_i = M_s + tau(M_s) + ... + tau^i(M_s) on one graded side,
/// starting from T_{-1} = tau^{-1}(p M_s^dual).
///
/// c[i] is the index of T_{i-1} in T_i and d[i] the index of tau(T_{i-1}) in
/// T_i ∩ tau(T_i), both indexed from i = 0. On the side-1 chain these are the
/// g_i and h_i sequences.
struct ChainAnalysis {
  int side = 0;
  bool stabilized = false;
  /// Least i with tau(T_i) = T_i, when found.
  std::optional<int> stabilization_index;
  /// T_{-1}, T_0, T_1, ...
  std::vector<Lattice> lattices;
  std::vector<int> c;
  std::vector<int> d;
  int iterations = 0;
  /// min(a, b), lowered by one for a = b: a supersingular module has
  /// p^budget T_i inside M_s for every i.
  int budget = 0;
  /// First i whose T_i violates the budget, which rules out supersingularity.
  std::optional<int> budget_exceeded_at;

  const Lattice& T(int i) const { return lattices.at(static_cast<std::size_t>(i + 1)); }
  const Lattice& limit() const { return lattices.back(); }
};

int default_max_iter(const UnitaryModule& dm);

/// Working precision needed so that all chain lattices stay certifiable.
int required_chain_precision(const UnitaryModule& dm);

/// Throws PrecisionExhausted before starting when the ring precision is below
/// required_chain_precision.
ChainAnalysis chain_analysis(const UnitaryModule& dm, int side,
                             std::optional<int> max_iter = std::nullopt);

struct MinimalHeightReport {
  Lattice lambda;
  int height = 0;
  std::array<int, 2> side_heights{0, 0};
  std::array<int, 2> stabilization{0, 0};
  int iterations = 0;
  /// The bound a (a < b) or a - 1 (a = b) on the height, with min(a, b) in
  /// place of a.
  int bound = 0;
  bool within_bound = true;
  /// Lambda equals the tau-orbit span computed on the whole module.
  bool cross_check = true;
  ChainAnalysis chains[2];
};

/// Lambda = T_m + S_n and the least r with p^r Lambda inside M. Throws
/// NonStabilization when either chain fails to stabilise.
MinimalHeightReport lambda_and_height(const UnitaryModule& dm,
                                      std::optional<int> max_iter = std::nullopt);

}  // namespace dieudonne
