#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "dieudonne/chain_analysis.hpp"
#include "dieudonne/unitary_module.hpp"

namespace dieudonne {

using Rational = boost::rational<long long>;

/// L(n) = max{l : F^n M inside p^l M}, the least entry valuation of the
/// matrix of F^n, and s_n = L(n) / n.
struct SlopeSample {
  int n = 0;
  int min_valuation = 0;
  Rational s;
};

/// Samples of the iterated-Frobenius valuation sequence and what they prove
/// about the first (smallest) Newton slope lambda_1.
///
/// L is superadditive, so every s_n is a lower bound for lambda_1
/// (lower_bound is the best sampled one). If some F^{n0} equals p^c times an
/// invertible operator, the module is isoclinic of slope c / n0 and the slope is
/// exact. Independently, the Newton polygon of the characteristic polynomial
/// of the linear map F^m (m the extension degree) gives lambda_1 from above;
/// newton_first_slope is that value when it is certified at the working
/// precision.
struct SlopeReport {
  std::vector<SlopeSample> samples;
  Rational lower_bound;
  std::optional<int> period;
  std::optional<int> period_valuation;
  bool exact_isoclinic = false;
  std::optional<Rational> exact_slope;
  std::optional<Rational> newton_first_slope;
  /// Smallest certified upper bound on lambda_1; 1/2 when nothing better is
  /// known (lambda_1 <= 1/2 by the symmetry of the Newton polygon).
  Rational certified_upper_bound{1, 2};
};

/// Matrix of F^n, i.e. A_F sigma(A_F) ... sigma^{n-1}(A_F).
Matrix frobenius_power_matrix(const UnitaryModule& dm, int n);

int default_n_max(const UnitaryModule& dm);

/// Throws PrecisionExhausted when some F^n vanishes at the working precision.
SlopeReport slope_samples(const UnitaryModule& dm, std::optional<int> n_max = std::nullopt);

/// First Newton slope of F from the characteristic polynomial of F^m, when
/// certified at the working precision.
std::optional<Rational> newton_first_slope(const UnitaryModule& dm);

/// Valuation of the e_{a+1}-coordinate of F^{2a * repetitions}(e_1).
int projection_coefficient(const UnitaryModule& dm, int repetitions);

enum class CertificateKind { exact_period, newton_first_slope, chain_budget };

std::string to_string(CertificateKind kind);

/// Evidence that a module is not supersingular. For exact_period and
/// newton_first_slope, slope is a certified value of the first slope below
/// 1/2. For chain_budget, a tau-chain T_i escaped p^{-budget} M_side, which
/// no supersingular module allows.
struct NotSupersingularCertificate {
  CertificateKind kind = CertificateKind::exact_period;
  std::optional<Rational> slope;
  int side = 0;
  int step = 0;
  int exponent = 0;
  int budget = 0;
  std::string description;
};

std::optional<NotSupersingularCertificate> not_supersingular_certificate(
    const UnitaryModule& dm, std::optional<int> n_max = std::nullopt);

enum class Verdict { yes, no, inconclusive };

std::string to_string(Verdict verdict);

struct SupersingularityResult {
  Verdict verdict = Verdict::inconclusive;
  std::optional<MinimalHeightReport> height;
  std::optional<NotSupersingularCertificate> certificate;
};

/// yes when both tau-chains stabilise (Lambda is then a tau-stable lattice),
/// no with a certificate, inconclusive otherwise.
SupersingularityResult is_supersingular(const UnitaryModule& dm,
                                        std::optional<int> max_iter = std::nullopt);

/// A supersingular module and a non-supersingular one congruent modulo p^level,
/// showing that the isogeny cutoff of the first is at least level + 1.
struct CutoffWitness {
  int a = 0;
  int b = 0;
  /// Lower bound on the cutoff certified by the witness (0 when none needed).
  int bound = 0;
  bool required = true;
  int level = 0;
  std::optional<UnitaryModule> supersingular;
  std::optional<UnitaryModule> deformed;
  bool congruent = false;
  Verdict supersingular_verdict = Verdict::inconclusive;
  Verdict deformed_verdict = Verdict::inconclusive;
  std::string conclusion;

  bool verified() const;
};

CutoffWitness cutoff_witness(int a, int b, const Ring& ring);

}  // namespace dieudonne
