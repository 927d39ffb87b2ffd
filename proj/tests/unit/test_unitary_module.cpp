#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dieudonne/chain_analysis.hpp"
#include "dieudonne/gallery.hpp"
#include "dieudonne/unitary_module.hpp"
#include "mutations.hpp"

using namespace dieudonne;

namespace {

std::vector<std::string> failures(const UnitaryModule& m) { return validate(m).failures(); }

using Names = std::vector<std::string>;

Matrix unit_vector(const Ring& r, int n, int i) {
  Matrix v(r, n, 1);
  v.at(i, 0) = r->one();
  return v;
}

}  // namespace

TEST(Validate, GalleryModulesPass) {
  const Ring r = gallery_ring(3);
  EXPECT_TRUE(validate(build_odd(1, 2, r)).ok());
  EXPECT_TRUE(validate(build_deformed(2, 3, 1, r)).ok());
  const ValidationReport rep = validate(build_odd(0, 1, r));
  ASSERT_EQ(rep.axioms.size(), 8u);
  EXPECT_EQ(rep.axioms.front().name, "shape");
  EXPECT_EQ(rep.axioms.back().name, "signature");
}

TEST(Validate, IdentityPairingIsNotAlternating) {
  const Ring r = gallery_ring(3);
  const UnitaryModule base = build_odd(1, 2, r);
  const UnitaryModule bad(r, 1, 2, base.frobenius_matrix(), Matrix::identity(r, 6));
  EXPECT_FALSE(validate(bad).axiom("alternating").passed);
  EXPECT_FALSE(validate(bad).ok());
}

TEST(Mutation, EachAxiomFailsOnItsOwn) {
  for (std::uint64_t p : {3u, 5u}) {
    for (const mutations::Mutant& m : mutations::all(p)) {
      SCOPED_TRACE(m.axiom);
      const auto fails = failures(m.module);
      if (m.isolated) {
        EXPECT_EQ(fails, Names{m.axiom});
      } else {
        EXPECT_NE(std::find(fails.begin(), fails.end(), m.axiom), fails.end());
      }
    }
  }
}

TEST(Mutation, NonIntegralVerschiebung) {
  // p F^{-1} stops being integral; V-dependent checks fail with it.
  const auto all = mutations::all(3);
  const UnitaryModule& m = all.back().module;
  ASSERT_EQ(all.back().axiom, "frobenius_verschiebung");
  EXPECT_FALSE(m.verschiebung_matrix().has_value());
  EXPECT_THROW(m.V(), std::domain_error);
}

TEST(UnitaryModule, ConstructorChecksShapes) {
  const Ring r = gallery_ring(3);
  EXPECT_THROW(UnitaryModule(r, 1, 2, Matrix::identity(r, 4), Matrix::identity(r, 6)),
               std::invalid_argument);
  EXPECT_THROW(UnitaryModule(r, -1, 2, Matrix::identity(r, 2), Matrix::identity(r, 2)),
               std::invalid_argument);
  EXPECT_THROW(UnitaryModule(r, 0, 0, Matrix(r, 0, 0), Matrix(r, 0, 0)), std::invalid_argument);
}

TEST(UnitaryModule, TauOnGradedPieces) {
  const Ring r = gallery_ring(3);
  const UnitaryModule m01 = build_odd(0, 1, r);
  EXPECT_EQ(m01.tau_on(0).matrix.min_valuation(), 1);  // p * id with scale -1
  const ScaledMatrix t = apply(normalized(m01.tau_on(0)), unit_vector(r, 1, 0));
  EXPECT_EQ(t.exponent, 0);
  EXPECT_EQ(t.integral, unit_vector(r, 1, 0));

  const UnitaryModule m12 = build_odd(1, 2, r);
  const ScaledMatrix e1 = apply(m12.tau_on(0), unit_vector(r, 3, 0));
  EXPECT_EQ(e1.exponent, 1);
  EXPECT_EQ(e1.integral, unit_vector(r, 3, 1));
}

TEST(UnitaryModule, TauIsVInverseF) {
  const Ring r = gallery_ring(5);
  const UnitaryModule m = build_odd(2, 3, r);
  const Lattice whole = m.whole();
  std::mt19937_64 rng(41);
  for (int t = 0; t < 5; ++t) {
    Matrix g = Matrix::random(r, 10, 10, rng);
    g.scale_col(t, r->p_power(2));
    Lattice l;
    try {
      l = Lattice::from_generators(g);
    } catch (const std::exception&) {
      continue;
    }
    EXPECT_EQ(image(m.tau(), image(m.V(), l)), image(m.F(), l));
  }
}

TEST(ChainConditions, IndicesOfM12) {
  const Ring r = gallery_ring(3);
  const ChainConditionReport rep = chain_conditions(build_odd(1, 2, r));
  ASSERT_TRUE(rep.ok());
  ASSERT_EQ(rep.chains.size(), 4u);
  EXPECT_EQ(rep.chains[0].lower, 1);
  EXPECT_EQ(rep.chains[0].upper, 2);
  EXPECT_EQ(rep.chains[2].lower, 2);
  EXPECT_EQ(rep.chains[2].upper, 1);
}

TEST(ChainConditions, DegenerateSideForM01) {
  const Ring r = gallery_ring(3);
  const ChainConditionReport rep = chain_conditions(build_odd(0, 1, r));
  ASSERT_TRUE(rep.ok());
  EXPECT_EQ(rep.chains[0].lower, 0);
}

TEST(ChainConditions, DeformedKeepsSignature) {
  const Ring r = gallery_ring(3);
  const ChainConditionReport rep = chain_conditions(build_deformed(2, 3, 1, r));
  ASSERT_TRUE(rep.ok());
  EXPECT_EQ(rep.chains[0].lower, 2);
  EXPECT_EQ(rep.chains[0].upper, 3);
  EXPECT_EQ(rep.chains[3].lower, 3);
  EXPECT_EQ(rep.chains[3].upper, 2);
}

TEST(Classification, Superspecial) {
  const Ring r = gallery_ring(3);
  EXPECT_TRUE(is_superspecial(build_odd(0, 1, r)));
  EXPECT_TRUE(is_superspecial(build_flip_10(r)));
  EXPECT_FALSE(is_superspecial(build_odd(1, 2, r)));
}

TEST(DirectSum, SignaturesAndHeights) {
  const Ring r = gallery_ring(3);
  const UnitaryModule a = direct_sum(build_odd(1, 2, r), build_odd(0, 1, r));
  EXPECT_EQ(a.a(), 1);
  EXPECT_EQ(a.b(), 3);
  EXPECT_TRUE(validate(a).ok());
  EXPECT_EQ(lambda_and_height(a).height, 1);

  const UnitaryModule b = direct_sum(build_odd(0, 1, r), build_odd(0, 1, r));
  EXPECT_TRUE(validate(b).ok());
  EXPECT_EQ(lambda_and_height(b).height, 0);

  const UnitaryModule c = direct_sum(build_odd(1, 2, r), build_flip_10(r));
  EXPECT_EQ(c.a(), 2);
  EXPECT_EQ(c.b(), 2);
  EXPECT_TRUE(validate(c).ok());
  EXPECT_EQ(lambda_and_height(c).height, 1);
  EXPECT_EQ(c.labels0().front(), "1.e1");
}

TEST(Truncation, DeformationCongruence) {
  const Ring r = gallery_ring(3);
  const UnitaryModule m = build_odd(2, 3, r);
  const UnitaryModule d = build_deformed(2, 3, 1, r);
  EXPECT_TRUE(truncation_congruent(m, d, 1));
  EXPECT_FALSE(truncation_congruent(m, d, 2));
  EXPECT_TRUE(truncation_congruent(m, m, r->precision()));
  EXPECT_THROW(truncation_congruent(m, build_odd(1, 2, r), 1), std::invalid_argument);
}

TEST(Verschiebung, DeformedValuesMatchClosedForm) {
  // V_k(e_{a+1}) = p f_a - p^{k+1} f_g for (a, b, k) = (2, 3, 1).
  const Ring r = gallery_ring(3);
  const UnitaryModule d = build_deformed(2, 3, 1, r);
  const Matrix& v = *d.verschiebung_matrix();
  const int g = 5;
  for (int row = 0; row < 2 * g; ++row) {
    RingElement want = r->zero();
    if (row == g + 1) want = r->p_power(1);
    if (row == 2 * g - 1) want = r->neg(r->p_power(2));
    EXPECT_EQ(v.at(row, 2), want) << "row " << row;
  }
}
