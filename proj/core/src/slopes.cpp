#include "dieudonne/slopes.hpp"

#include <algorithm>
#include <string>

#include "dieudonne/errors.hpp"
#include "dieudonne/gallery.hpp"

namespace dieudonne {

namespace {

std::string show(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

const Rational kHalf{1, 2};

}  // namespace

Matrix frobenius_power_matrix(const UnitaryModule& dm, int n) {
  return semilinear_power(dm.F(), n).matrix;
}

int default_n_max(const UnitaryModule& dm) { return 4 * dm.g(); }

SlopeReport slope_samples(const UnitaryModule& dm, std::optional<int> n_max) {
  const int limit = n_max.value_or(default_n_max(dm));
  if (limit < 1) throw std::invalid_argument("n_max must be positive");
  const RingContext& R = dm.ctx();
  SlopeReport report;
  const SemilinearMap f = dm.F();
  SemilinearMap power = f;
  for (int n = 1; n <= limit; ++n) {
    if (n > 1) power = compose(f, power);
    const int l = power.matrix.min_valuation();
    if (l >= power.matrix.prec()) {
      throw PrecisionExhausted("F^" + std::to_string(n) + " vanishes modulo p^" +
                                   std::to_string(power.matrix.prec()),
                               R.precision() + n);
    }
    report.samples.push_back({n, l, Rational(l, n)});
    report.lower_bound = std::max(report.lower_bound, Rational(l, n));
    if (!report.period) {
      const SmithForm s = elementary_divisors(divide_p(power.matrix, l));
      const bool unit = s.rank == power.matrix.rows() &&
                        std::all_of(s.divisors.begin(), s.divisors.end(),
                                    [](int d) { return d == 0; });
      if (unit) {
        report.period = n;
        report.period_valuation = l;
        report.exact_isoclinic = true;
        report.exact_slope = Rational(l, n);
      }
    }
  }
  report.newton_first_slope = newton_first_slope(dm);
  if (report.exact_slope) {
    report.certified_upper_bound = std::min(report.certified_upper_bound, *report.exact_slope);
  }
  if (report.newton_first_slope) {
    report.certified_upper_bound =
        std::min(report.certified_upper_bound, *report.newton_first_slope);
  }
  return report;
}

std::optional<Rational> newton_first_slope(const UnitaryModule& dm) {
  const RingContext& R = dm.ctx();
  const int m = R.degree();
  const Matrix linear = frobenius_power_matrix(dm, m);
  const auto coeffs = characteristic_polynomial(linear);
  const int h = linear.rows();
  const int n = std::min(R.precision(), linear.prec());
  std::optional<Rational> best;
  for (int j = 1; j <= h; ++j) {
    const int v = R.val(coeffs[static_cast<std::size_t>(h - j)]);
    if (v >= n) continue;
    const Rational candidate(v, j);
    if (!best || candidate < *best) best = candidate;
  }
  // Coefficients lost to the precision have slope at least n / h.
  if (!best || *best * h > n) return std::nullopt;
  return *best / m;
}

int projection_coefficient(const UnitaryModule& dm, int repetitions) {
  if (dm.a() < 1 || repetitions < 1) {
    throw std::invalid_argument("projection coefficient needs a >= 1 and repetitions >= 1");
  }
  const Matrix power = frobenius_power_matrix(dm, 2 * dm.a() * repetitions);
  const RingElement& w = power.at(dm.a(), 0);
  if (dm.ctx().val(w) >= power.prec()) {
    throw PrecisionExhausted("projection coefficient vanishes at the working precision",
                             dm.ctx().precision() + 2 * dm.a() * repetitions);
  }
  return dm.ctx().val(w);
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::exact_period: return "exact_period";
    case CertificateKind::newton_first_slope: return "newton_first_slope";
    case CertificateKind::chain_budget: return "chain_budget";
  }
  return "unknown";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::optional<NotSupersingularCertificate> not_supersingular_certificate(
    const UnitaryModule& dm, std::optional<int> n_max) {
  try {
    const SlopeReport report = slope_samples(dm, n_max);
    if (report.exact_slope && *report.exact_slope < kHalf) {
      NotSupersingularCertificate cert;
      cert.kind = CertificateKind::exact_period;
      cert.slope = report.exact_slope;
      cert.step = *report.period;
      cert.description = "F^" + std::to_string(*report.period) + " = p^" +
                         std::to_string(*report.period_valuation) +
                         " * unit, isoclinic of slope " + show(*report.exact_slope);
      return cert;
    }
    if (report.newton_first_slope && *report.newton_first_slope < kHalf) {
      NotSupersingularCertificate cert;
      cert.kind = CertificateKind::newton_first_slope;
      cert.slope = report.newton_first_slope;
      cert.description = "first Newton slope " + show(*report.newton_first_slope) +
                         " < 1/2 from the characteristic polynomial of F^" +
                         std::to_string(dm.ctx().degree());
      return cert;
    }
  } catch (const PrecisionExhausted&) {
    // Fall through to the chain test.
  }
  for (int side = 0; side < 2; ++side) {
    const ChainAnalysis ca = chain_analysis(dm, side);
    if (ca.budget_exceeded_at) {
      NotSupersingularCertificate cert;
      cert.kind = CertificateKind::chain_budget;
      cert.side = side;
      cert.step = *ca.budget_exceeded_at;
      cert.exponent = ca.limit().exponent();
      cert.budget = ca.budget;
      cert.description = "side " + std::to_string(side) + ": p^" +
                         std::to_string(ca.budget) + " T_" + std::to_string(cert.step) +
                         " is not inside M_" + std::to_string(side) + " (exponent " +
                         std::to_string(cert.exponent) + ")";
      return cert;
    }
  }
  return std::nullopt;
}

SupersingularityResult is_supersingular(const UnitaryModule& dm, std::optional<int> max_iter) {
  SupersingularityResult result;
  try {
    result.height = lambda_and_height(dm, max_iter);
    result.verdict = Verdict::yes;
    return result;
  } catch (const NonStabilization&) {
  }
  result.certificate = not_supersingular_certificate(dm);
  result.verdict = result.certificate ? Verdict::no : Verdict::inconclusive;
  return result;
}

bool CutoffWitness::verified() const {
  if (!required) return true;
  return congruent && supersingular_verdict == Verdict::yes && deformed_verdict == Verdict::no;
}

CutoffWitness cutoff_witness(int a, int b, const Ring& ring) {
  if (a < 0 || a > b || a + b < 1) {
    throw std::invalid_argument("cutoff witness needs 0 <= a <= b and a + b >= 1");
  }
  CutoffWitness w;
  w.a = a;
  w.b = b;
  const std::string sig = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  if (a == 0 || (a == b && a == 1)) {
    w.required = false;
    w.bound = 0;
    w.conclusion = "no witness required for signature " + sig + ": the lower bound is 0";
    return w;
  }
  if (a < b) {
    w.level = a - 1;
    w.bound = a;
    if ((a + b) % 2 == 1) {
      w.supersingular = build_odd(a, b, ring);
      w.deformed = build_deformed(a, b, w.level, ring);
    } else {
      const UnitaryModule extra = build_odd(0, 1, ring);
      w.supersingular = build_even(a, b, ring);
      w.deformed = direct_sum(build_deformed(a, b - 1, w.level, ring), extra);
    }
  } else {
    w.level = a - 2;
    w.bound = a - 1;
    w.supersingular = build_parallel(a, ring);
    w.deformed = direct_sum(build_deformed(a - 1, a, w.level, ring), build_flip_10(ring));
  }
  w.congruent = truncation_congruent(*w.supersingular, *w.deformed, w.level);
  w.supersingular_verdict = is_supersingular(*w.supersingular).verdict;
  w.deformed_verdict = is_supersingular(*w.deformed).verdict;
  w.conclusion = w.verified()
                     ? "isogeny cutoff of X" + sig + " is at least " + std::to_string(w.level + 1)
                     : "witness not verified for signature " + sig;
  return w;
}

}  // namespace dieudonne
