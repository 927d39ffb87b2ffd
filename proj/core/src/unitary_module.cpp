#include "dieudonne/unitary_module.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "dieudonne/errors.hpp"

namespace dieudonne {

namespace {

std::vector<std::string> default_labels(char prefix, int g) {
  std::vector<std::string> out;
  for (int i = 1; i <= g; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::optional<Matrix> derive_verschiebung(const Matrix& frobenius) {
  try {
    const ScaledMatrix inv = scaled_inverse(frobenius);
    if (inv.exponent > 1) return std::nullopt;
    return ::dieudonne::frobenius(scale_p(inv.integral, 1 - inv.exponent), -1);
  } catch (const PrecisionExhausted&) {
    return std::nullopt;
  }
}

bool all_zero(const Matrix& m) { return m.is_zero(); }

}  // namespace

UnitaryModule::UnitaryModule(Ring ring, int a, int b, Matrix frobenius, Matrix pairing,
                             ModuleMeta meta, std::vector<std::string> labels0,
                             std::vector<std::string> labels1)
    : ring_(std::move(ring)),
      a_(a),
      b_(b),
      frobenius_(std::move(frobenius)),
      pairing_(std::move(pairing)),
      meta_(std::move(meta)),
      labels0_(std::move(labels0)),
      labels1_(std::move(labels1)) {
  if (!ring_) throw std::invalid_argument("module needs a ring");
  if (a_ < 0 || b_ < 0 || a_ + b_ < 1) {
    throw std::invalid_argument("signature must be nonnegative with a + b >= 1");
  }
  const int n = 2 * g();
  if (frobenius_.rows() != n || frobenius_.cols() != n || pairing_.rows() != n ||
      pairing_.cols() != n) {
    throw std::invalid_argument("F and the pairing must be 2g x 2g matrices");
  }
  if (!frobenius_.ctx().same_as(*ring_) || !pairing_.ctx().same_as(*ring_)) {
    throw std::invalid_argument("module matrices live over a different ring");
  }
  if (labels0_.empty()) labels0_ = default_labels('e', g());
  if (labels1_.empty()) labels1_ = default_labels('f', g());
  verschiebung_ = derive_verschiebung(frobenius_);
}

UnitaryModule UnitaryModule::with_meta(ModuleMeta meta) const {
  UnitaryModule out = *this;
  out.meta_ = std::move(meta);
  return out;
}

SemilinearMap UnitaryModule::F() const { return {frobenius_, 1, 0}; }

SemilinearMap UnitaryModule::V() const {
  if (!verschiebung_) throw std::domain_error("p F^{-1} is not integral; V undefined");
  return {*verschiebung_, -1, 0};
}

SemilinearMap UnitaryModule::tau() const {
  return {frobenius_ * ::dieudonne::frobenius(frobenius_, 1), 2, -1};
}

SemilinearMap UnitaryModule::tau_on(int side) const {
  return {frobenius_block(side, 1 - side) *
              ::dieudonne::frobenius(frobenius_block(1 - side, side), 1),
          2, -1};
}

Matrix UnitaryModule::frobenius_block(int to, int from) const {
  return frobenius_.block(to * g(), from * g(), g(), g());
}

Matrix UnitaryModule::pairing_block(int row_side, int col_side) const {
  return pairing_.block(row_side * g(), col_side * g(), g(), g());
}

PairingContext UnitaryModule::twisted_pairing(int side) const {
  return {pairing_block(side, 1 - side) * frobenius_block(1 - side, side), 1};
}

Lattice UnitaryModule::dual_on(int side, const Lattice& l) const {
  return dual(l, twisted_pairing(side));
}

Lattice UnitaryModule::graded_piece() const { return Lattice::standard(ring_, g()); }

Lattice UnitaryModule::whole() const { return Lattice::standard(ring_, 2 * g()); }

Lattice UnitaryModule::frobenius_image_of(int side) const {
  return Lattice::from_generators(frobenius_block(1 - side, side));
}

bool ValidationReport::ok() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& r) { return r.passed; });
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& r : axioms) {
    if (!r.passed) out.push_back(r.name);
  }
  return out;
}

const AxiomResult& ValidationReport::axiom(const std::string& name) const {
  for (const auto& r : axioms) {
    if (r.name == name) return r;
  }
  throw std::out_of_range("unknown axiom " + name);
}

ValidationReport validate(const UnitaryModule& dm) {
  ValidationReport report;
  const RingContext& R = dm.ctx();
  const int g = dm.g();
  auto record = [&](const std::string& name, auto&& check) {
    AxiomResult r{name, false, {}};
    try {
      r.detail = check(r.passed);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    report.axioms.push_back(std::move(r));
  };

  record("shape", [&](bool& ok) -> std::string {
    const std::set<std::string> names0(dm.labels0().begin(), dm.labels0().end());
    const std::set<std::string> names1(dm.labels1().begin(), dm.labels1().end());
    ok = static_cast<int>(dm.labels0().size()) == g &&
         static_cast<int>(dm.labels1().size()) == g &&
         static_cast<int>(names0.size()) == g && static_cast<int>(names1.size()) == g;
    return ok ? "" : "basis labels must be g distinct names per graded piece";
  });

  const bool homogeneous =
      all_zero(dm.frobenius_block(0, 0)) && all_zero(dm.frobenius_block(1, 1));
  record("homogeneous", [&](bool& ok) -> std::string {
    ok = homogeneous;
    return ok ? "" : "F does not exchange M_0 and M_1";
  });

  record("frobenius_verschiebung", [&](bool& ok) -> std::string {
    const auto& v = dm.verschiebung_matrix();
    if (!v) {
      ok = false;
      return "p F^{-1} is not integral";
    }
    const Matrix p_id = Matrix::scalar(dm.ring(), 2 * g, R.p_power(1));
    const Matrix fv = dm.frobenius_matrix() * frobenius(*v, 1);
    const Matrix vf = *v * frobenius(dm.frobenius_matrix(), -1);
    ok = congruent(fv, p_id, fv.prec()) && congruent(vf, p_id, vf.prec());
    return ok ? "" : "F V or V F differs from p";
  });

  const Matrix& B = dm.pairing_matrix();
  record("alternating", [&](bool& ok) -> std::string {
    ok = congruent(transpose(B), -B, R.precision());
    for (int i = 0; i < 2 * g && ok; ++i) ok = R.is_zero(B.at(i, i));
    return ok ? "" : "pairing matrix is not alternating";
  });

  record("perfect", [&](bool& ok) -> std::string {
    const SmithForm s = elementary_divisors(B);
    ok = s.rank == 2 * g &&
         std::all_of(s.divisors.begin(), s.divisors.end(), [](int d) { return d == 0; });
    return ok ? "" : "pairing determinant is not a unit";
  });

  record("isotropic", [&](bool& ok) -> std::string {
    ok = all_zero(dm.pairing_block(0, 0)) && all_zero(dm.pairing_block(1, 1));
    return ok ? "" : "M_0 or M_1 is not totally isotropic";
  });

  record("pairing_compatibility", [&](bool& ok) -> std::string {
    const auto& v = dm.verschiebung_matrix();
    if (!v) {
      ok = false;
      return "V is undefined";
    }
    const Matrix lhs = transpose(dm.frobenius_matrix()) * B;
    const Matrix rhs = frobenius(B * *v, 1);
    ok = congruent(lhs, rhs, std::min(lhs.prec(), rhs.prec()));
    return ok ? "" : "A_F^T B differs from sigma(B A_V)";
  });

  // Measured on the graded components M_s -> M_{1-s} of F.
  record("signature", [&](bool& ok) -> std::string {
    const Lattice m = dm.graded_piece();
    const Lattice pm = scale(m, 1);
    const Lattice f1 = dm.frobenius_image_of(1);
    const Lattice f0 = dm.frobenius_image_of(0);
    auto idx = [](const Lattice& lo, const Lattice& hi) -> std::optional<int> {
      if (!contains(hi, lo)) return std::nullopt;
      return index(lo, hi);
    };
    const auto i1 = idx(pm, f1), i2 = idx(f1, m), i3 = idx(pm, f0), i4 = idx(f0, m);
    ok = i1 == dm.b() && i2 == dm.a() && i3 == dm.a() && i4 == dm.b();
    auto show = [](const std::optional<int>& v) {
      return v ? std::to_string(*v) : std::string("not contained");
    };
    return ok ? ""
              : "indices pM0<FM1<M0: " + show(i1) + "," + show(i2) +
                    "; pM1<FM0<M1: " + show(i3) + "," + show(i4);
  });

  return report;
}

bool ChainConditionReport::ok() const {
  return frobenius_dual[0] && frobenius_dual[1] &&
         std::all_of(chains.begin(), chains.end(), [](const ChainCheck& c) { return c.passed; });
}

ChainConditionReport chain_conditions(const UnitaryModule& dm) {
  ChainConditionReport report;
  const Lattice m = dm.graded_piece();
  for (int side = 0; side < 2; ++side) {
    const int lo = side == 0 ? dm.a() : dm.b();
    const int hi = side == 0 ? dm.b() : dm.a();
    const Lattice d = dm.dual_on(side, m);
    const Lattice pd = scale(d, 1);
    const Lattice tm = image(dm.tau_on(side), m);
    const std::string s = std::to_string(side);
    for (const auto& [name, middle] :
         {std::pair<std::string, Lattice>{"pM" + s + "^dual < M" + s + " < M" + s + "^dual", m},
          {"pM" + s + "^dual < tau(M" + s + ") < M" + s + "^dual", tm}}) {
      ChainCheck c{name, lo, hi, std::nullopt, std::nullopt, false};
      if (contains(middle, pd)) c.lower = index(pd, middle);
      if (contains(d, middle)) c.upper = index(middle, d);
      c.passed = c.lower == lo && c.upper == hi;
      report.chains.push_back(c);
    }
    report.frobenius_dual[side] =
        dm.frobenius_image_of(side) == scale(dm.dual_on(1 - side, m), 1);
  }
  return report;
}

bool is_superspecial(const UnitaryModule& dm) {
  return image(dm.tau(), dm.whole()) == dm.whole();
}

UnitaryModule direct_sum(const UnitaryModule& first, const UnitaryModule& second) {
  if (!first.ctx().same_as(second.ctx())) {
    throw std::invalid_argument("direct sum of modules over different rings");
  }
  const int g1 = first.g();
  const int g2 = second.g();
  const int n = 2 * (g1 + g2);
  // New order e^1, e^2, f^1, f^2 inside the block-diagonal order e^1, f^1, e^2, f^2.
  std::vector<int> perm;
  for (int i = 0; i < g1; ++i) perm.push_back(i);
  for (int i = 0; i < g2; ++i) perm.push_back(2 * g1 + i);
  for (int i = 0; i < g1; ++i) perm.push_back(g1 + i);
  for (int i = 0; i < g2; ++i) perm.push_back(2 * g1 + g2 + i);
  auto permuted = [&](const Matrix& a, const Matrix& b) {
    const Matrix bd = block_diagonal(a, b);
    Matrix out(first.ring(), n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) out.at(i, j) = bd.at(perm[i], perm[j]);
    }
    out.set_prec(bd.prec());
    return out;
  };
  auto labels = [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
    std::vector<std::string> out;
    for (const auto& s : x) out.push_back("1." + s);
    for (const auto& s : y) out.push_back("2." + s);
    return out;
  };
  ModuleMeta meta;
  meta.family = "sum(" + first.meta().family + "," + second.meta().family + ")";
  return UnitaryModule(first.ring(), first.a() + second.a(), first.b() + second.b(),
                       permuted(first.frobenius_matrix(), second.frobenius_matrix()),
                       permuted(first.pairing_matrix(), second.pairing_matrix()), meta,
                       labels(first.labels0(), second.labels0()),
                       labels(first.labels1(), second.labels1()));
}

bool truncation_congruent(const UnitaryModule& first, const UnitaryModule& second, int k) {
  if (!first.ctx().same_as(second.ctx()) || first.a() != second.a() ||
      first.b() != second.b()) {
    throw std::invalid_argument("truncation comparison needs the same ring and signature");
  }
  return congruent(first.frobenius_matrix(), second.frobenius_matrix(), k) &&
         congruent(first.pairing_matrix(), second.pairing_matrix(), k);
}

}  // namespace dieudonne
