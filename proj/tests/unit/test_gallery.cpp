#include <gtest/gtest.h>

#include "dieudonne/chain_analysis.hpp"
#include "dieudonne/gallery.hpp"
#include "dieudonne/slopes.hpp"

using namespace dieudonne;

namespace {

Matrix unit(const Ring& r, int n, int i) {
  Matrix v(r, n, 1);
  v.at(i, 0) = r->one();
  return v;
}

}  // namespace

TEST(Gallery, DefaultRing) {
  EXPECT_EQ(default_precision(3), 20);
  EXPECT_EQ(default_precision(7), 20);
  const Ring r = gallery_ring(5);
  EXPECT_EQ(r->degree(), 2);
  EXPECT_EQ(r->precision(), 20);
  EXPECT_EQ(gallery_ring(3, 12)->precision(), 12);
}

TEST(Gallery, OddFormulasForM23) {
  const Ring r = gallery_ring(3);
  const UnitaryModule m = build_odd(2, 3, r);
  const Matrix& f = m.frobenius_matrix();
  const int g = 5;
  const RingElement p = r->p_power(1);
  // F(e_i) = f_i for i <= 2, p f_i afterwards.
  for (int i = 0; i < g; ++i) EXPECT_EQ(f.at(g + i, i), i < 2 ? r->one() : p);
  // r = 2: F(f_3) = p e_4, F(f_4) = p e_5, F(f_5) = e_1, F(f_1) = e_2.
  EXPECT_EQ(f.at(3, g + 2), p);
  EXPECT_EQ(f.at(4, g + 3), p);
  EXPECT_EQ(f.at(0, g + 4), r->one());
  EXPECT_EQ(f.at(1, g + 0), r->one());
  EXPECT_EQ(m.pairing_matrix().at(0, g + 2), r->delta());
  EXPECT_EQ(m.pairing_matrix().at(g + 2, 0), r->neg(r->delta()));
  EXPECT_EQ(m.pairing_matrix().at(3, g), r->delta());  // e_4 pairs with f_1
  EXPECT_TRUE(validate(m).ok());
}

TEST(Gallery, WraparoundIsNeeded) {
  const Ring r = gallery_ring(3);
  GalleryOptions off;
  off.wraparound = false;
  EXPECT_FALSE(validate(build_odd(1, 2, r, off)).ok());
  EXPECT_FALSE(validate(build_odd(2, 3, r, off)).ok());
}

TEST(Gallery, OddModulesAreIsoclinic) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const Ring r = gallery_ring(p);
    for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 3}, {1, 4}, {3, 4}}) {
      const UnitaryModule m = build_odd(a, b, r);
      const int g = a + b;
      const Matrix f = frobenius_power_matrix(m, 2 * g);
      EXPECT_EQ(f.min_valuation(), g);
      const SmithForm s = elementary_divisors(divide_p(f, g));
      EXPECT_EQ(s.divisors, std::vector<int>(static_cast<std::size_t>(2 * g), 0));
    }
  }
}

TEST(Gallery, TauPowersOnE1) {
  const Ring r = gallery_ring(3);
  for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {3, 4}, {2, 5}}) {
    const UnitaryModule m = build_odd(a, b, r);
    const int g = a + b;
    SemilinearMap t = SemilinearMap::identity(r, g);
    for (int i = 0; i < a; ++i) t = compose(m.tau_on(0), t);
    const ScaledMatrix out = apply(t, unit(r, g, 0));
    EXPECT_EQ(out.exponent, a);
    EXPECT_EQ(out.integral, unit(r, g, a));
  }
}

TEST(Gallery, Products) {
  const Ring r = gallery_ring(3);
  const UnitaryModule even = build_even(1, 3, r);
  EXPECT_EQ(even.a(), 1);
  EXPECT_EQ(even.b(), 3);
  EXPECT_EQ(even.meta().family, "even");
  EXPECT_TRUE(validate(even).ok());
  const UnitaryModule par = build_parallel(3, r);
  EXPECT_EQ(par.a(), 3);
  EXPECT_EQ(par.b(), 3);
  EXPECT_TRUE(validate(par).ok());
  EXPECT_EQ(lambda_and_height(par).height, 2);
  const UnitaryModule flip = build_flip_10(r);
  EXPECT_EQ(flip.a(), 1);
  EXPECT_EQ(flip.b(), 0);
  EXPECT_TRUE(validate(flip).ok());
}

TEST(Gallery, HeightRealizations) {
  const Ring r = gallery_ring(5);
  for (auto [a, b] : {std::pair{2, 3}, {2, 4}, {3, 3}, {0, 2}}) {
    const int top = a < b ? a : a - 1;
    for (int q = 0; q <= top; ++q) {
      const UnitaryModule m = build_height_realization(a, b, q, r);
      EXPECT_EQ(m.a(), a);
      EXPECT_EQ(m.b(), b);
      EXPECT_TRUE(validate(m).ok());
      EXPECT_EQ(lambda_and_height(m).height, q);
    }
    EXPECT_THROW(build_height_realization(a, b, top + 1, r), std::invalid_argument);
  }
}

TEST(Gallery, DeformationsAgreeToTheirLevel) {
  const Ring r = gallery_ring(3);
  for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {3, 4}}) {
    const UnitaryModule base = build_odd(a, b, r);
    for (int k = 0; k <= 4; ++k) {
      const UnitaryModule d = build_deformed(a, b, k, r);
      EXPECT_TRUE(validate(d).ok());
      EXPECT_TRUE(truncation_congruent(base, d, k));
      EXPECT_FALSE(truncation_congruent(base, d, k + 1));
      EXPECT_EQ(d.meta().k, k);
    }
  }
}

TEST(Gallery, ParameterErrors) {
  const Ring r = gallery_ring(3);
  EXPECT_THROW(build_odd(1, 1, r), std::invalid_argument);
  EXPECT_THROW(build_odd(2, 1, r), std::invalid_argument);
  EXPECT_THROW(build_odd(1, 2, RingContext::make(3, 1, 10)), std::invalid_argument);
  EXPECT_THROW(build_even(1, 2, r), std::invalid_argument);
  EXPECT_THROW(build_even(2, 2, r), std::invalid_argument);
  EXPECT_THROW(build_parallel(0, r), std::invalid_argument);
  EXPECT_THROW(build_deformed(0, 1, 1, r), std::invalid_argument);
  EXPECT_THROW(build_deformed(1, 2, -1, r), std::invalid_argument);
  EXPECT_THROW(build_deformed(1, 2, 19, r), std::invalid_argument);
  FamilySpec spec;
  spec.family = Family::deformed;
  spec.a = 1;
  spec.b = 2;
  EXPECT_THROW(build_family(spec, r), std::invalid_argument);
  spec.family = Family::parallel;
  EXPECT_THROW(build_family(spec, r), std::invalid_argument);
}

TEST(Gallery, FamilyNames) {
  for (Family f : {Family::odd, Family::even, Family::parallel, Family::deformed,
                   Family::flip10, Family::realization}) {
    EXPECT_EQ(family_from_string(to_string(f)), f);
  }
  EXPECT_THROW(family_from_string("mystery"), std::invalid_argument);
  const Ring r = gallery_ring(3);
  FamilySpec spec{Family::realization, 2, 3, std::nullopt, 1};
  EXPECT_EQ(lambda_and_height(build_family(spec, r)).height, 1);
}

TEST(Gallery, EvenRankRecipeBreaksOnlyPairingCompatibility) {
  const Ring r = gallery_ring(3);
  for (auto [a, b] : {std::pair{0, 2}, {1, 1}, {1, 3}, {2, 2}, {0, 4}, {2, 4}}) {
    const int g = a + b;
    for (int shift = 0; shift < g; ++shift) {
      GalleryOptions opts;
      opts.pairing_shift = shift;
      const auto fails = validate(build_odd_recipe(a, b, r, opts)).failures();
      EXPECT_EQ(fails, std::vector<std::string>{"pairing_compatibility"})
          << a << "," << b << " shift " << shift;
    }
  }
}
