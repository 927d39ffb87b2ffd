#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dieudonne/lattice.hpp"
#include "dieudonne/matrix.hpp"
#include "dieudonne/semilinear.hpp"

namespace dieudonne {

struct ModuleMeta {
  std::string family;
  std::optional<int> k;
  std::string notes;
};

/// A unitary Dieudonne module M = M_0 + M_1 of signature (a, b), free of rank
/// 2g over W(F_{p^m}) with basis e_1..e_g of M_0 followed by f_1..f_g of M_1.
///
/// Only F and the pairing are stored. V = p F^{-1} is derived on construction
/// when p F^{-1} is integral; validate() reports the module as invalid
/// otherwise. Nothing else is checked by the constructor beyond matching
/// dimensions, so malformed modules can be built and inspected.
class UnitaryModule {
 public:
  UnitaryModule(Ring ring, int a, int b, Matrix frobenius, Matrix pairing,
                ModuleMeta meta = {}, std::vector<std::string> labels0 = {},
                std::vector<std::string> labels1 = {});

  const Ring& ring() const noexcept { return ring_; }
  const RingContext& ctx() const { return *ring_; }
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  int g() const noexcept { return a_ + b_; }
  const Matrix& frobenius_matrix() const noexcept { return frobenius_; }
  const Matrix& pairing_matrix() const noexcept { return pairing_; }
  const std::optional<Matrix>& verschiebung_matrix() const noexcept { return verschiebung_; }
  const std::vector<std::string>& labels0() const noexcept { return labels0_; }
  const std::vector<std::string>& labels1() const noexcept { return labels1_; }
  const ModuleMeta& meta() const noexcept { return meta_; }

  UnitaryModule with_meta(ModuleMeta meta) const;

  /// F, twist 1.
  SemilinearMap F() const;
  /// V, twist -1. Throws std::domain_error if p F^{-1} is not integral.
  SemilinearMap V() const;
  /// tau = p^{-1} F^2 on the whole isocrystal, twist 2.
  SemilinearMap tau() const;
  /// tau restricted to (M_side)_Q in the side's own g coordinates.
  SemilinearMap tau_on(int side) const;

  /// Block of A_F mapping M_from to M_to (g x g).
  Matrix frobenius_block(int to, int from) const;
  Matrix pairing_block(int row_side, int col_side) const;

  /// The twisted form <<x, y>> = <x, F y> on M_side.
  PairingContext twisted_pairing(int side) const;
  /// L^dual inside (M_side)_Q.
  Lattice dual_on(int side, const Lattice& l) const;

  /// The standard lattice of rank g (M_0 or M_1 in its own coordinates).
  Lattice graded_piece() const;
  /// The standard lattice of rank 2g.
  Lattice whole() const;
  /// F(M_side) inside M_{1-side}, in the coordinates of M_{1-side}.
  Lattice frobenius_image_of(int side) const;

 private:
  Ring ring_;
  int a_;
  int b_;
  Matrix frobenius_;
  Matrix pairing_;
  std::optional<Matrix> verschiebung_;
  ModuleMeta meta_;
  std::vector<std::string> labels0_;
  std::vector<std::string> labels1_;
};

struct AxiomResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// One entry per axiom, in a fixed order: shape, homogeneous,
/// frobenius_verschiebung, alternating, perfect, isotropic,
/// pairing_compatibility, signature.
struct ValidationReport {
  std::vector<AxiomResult> axioms;

  bool ok() const;
  std::vector<std::string> failures() const;
  const AxiomResult& axiom(const std::string& name) const;
};

ValidationReport validate(const UnitaryModule& dm);

/// Indices of the chain low ⊆ middle ⊆ high, when the containments hold.
struct ChainCheck {
  std::string name;
  int expected_lower = 0;
  int expected_upper = 0;
  std::optional<int> lower;
  std::optional<int> upper;
  bool passed = false;
};

/// The four chains pM_0^dual ⊆_a M_0 ⊆_b M_0^dual,
/// pM_0^dual ⊆_a tau(M_0) ⊆_b M_0^dual, pM_1^dual ⊆_b M_1 ⊆_a M_1^dual and
/// pM_1^dual ⊆_b tau(M_1) ⊆_a M_1^dual, plus F(M_i) = p M_{1-i}^dual.
struct ChainConditionReport {
  std::vector<ChainCheck> chains;
  bool frobenius_dual[2] = {false, false};

  bool ok() const;
};

ChainConditionReport chain_conditions(const UnitaryModule& dm);

/// tau is superspecial-stable: tau(M) = M.
bool is_superspecial(const UnitaryModule& dm);

/// Basis e^1, e^2, f^1, f^2 with block-diagonal F and pairing.
UnitaryModule direct_sum(const UnitaryModule& first, const UnitaryModule& second);

/// Presentation-level congruence: same ring, signature and grading, with A_F
/// and the pairing agreeing modulo p^k. Throws std::invalid_argument when the
/// shapes differ.
bool truncation_congruent(const UnitaryModule& first, const UnitaryModule& second, int k);

}  // namespace dieudonne
