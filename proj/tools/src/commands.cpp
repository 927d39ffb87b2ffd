#include "dmtool/commands.hpp"

#include <algorithm>
#include <numeric>

#include "dieudonne/errors.hpp"
#include "dieudonne/slopes.hpp"

namespace dmtool {

using namespace dieudonne;

namespace {

std::string signature(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Json module_summary(const UnitaryModule& dm) {
  return Json{{"family", dm.meta().family},
              {"signature", {{"a", dm.a()}, {"b", dm.b()}}},
              {"p", dm.ctx().p()},
              {"m", dm.ctx().degree()},
              {"precision", dm.ctx().precision()}};
}

bool accounting_ok(const ChainAnalysis& ca, int total) {
  for (std::size_t i = 0; i < ca.d.size(); ++i) {
    if (ca.c[i + 1] != ca.c[i] - ca.d[i]) return false;
  }
  if (!ca.stabilized) return true;
  return ca.c.front() == total && ca.c.back() == 0 &&
         std::accumulate(ca.d.begin(), ca.d.end(), 0) == total;
}

bool is_p_power_times_unit(const Matrix& m, int c) {
  if (m.min_valuation() != c) return false;
  const SmithForm s = elementary_divisors(divide_p(m, c));
  return s.rank == m.rows() &&
         std::all_of(s.divisors.begin(), s.divisors.end(), [](int d) { return d == 0; });
}

struct Cell {
  std::string kind;
  int a = 0;
  int b = 0;
  Json params = Json::object();
  bool passed = false;
  std::string detail;
};

Cell realization_cell(int a, int b, int q, const Ring& ring) {
  Cell cell{"minimal_height", a, b, {{"q", q}}, false, {}};
  const UnitaryModule dm = build_height_realization(a, b, q, ring);
  if (!validate(dm).ok()) {
    cell.detail = "validation failed";
    return cell;
  }
  if (!chain_conditions(dm).ok()) {
    cell.detail = "chain conditions failed";
    return cell;
  }
  const MinimalHeightReport h = lambda_and_height(dm);
  const Lattice whole = dm.whole();
  const int lambda_bound = a == b ? a - 1 : a;
  const bool bounds = contains(h.lambda, whole) &&
                      contains(whole, scale(h.lambda, std::max(lambda_bound, 0)));
  const bool accounting = accounting_ok(h.chains[0], a) && accounting_ok(h.chains[1], b) &&
                          (h.chains[0].c.size() < 2 || h.chains[1].c.size() < 2 ||
                           h.chains[0].c[1] == h.chains[1].c[1]);
  cell.params["height"] = h.height;
  cell.passed = h.height == q && h.within_bound && h.cross_check && bounds && accounting;
  cell.detail = cell.passed ? "height " + std::to_string(h.height)
                            : "height " + std::to_string(h.height) + ", bounds " +
                                  (bounds ? "ok" : "violated") + ", accounting " +
                                  (accounting ? "ok" : "violated");
  return cell;
}

Cell odd_slope_cell(int a, int b, const Ring& ring) {
  Cell cell{"slope_half", a, b, {}, false, {}};
  const UnitaryModule dm = build_odd(a, b, ring);
  const int g = a + b;
  cell.passed = is_p_power_times_unit(frobenius_power_matrix(dm, 2 * g), g);
  cell.detail = cell.passed ? "F^" + std::to_string(2 * g) + " = p^" + std::to_string(g) +
                                  " * unit"
                            : "F^2g is not p^g times a unit";
  return cell;
}

Cell deformed_cell(int a, int b, int k, const Ring& ring) {
  Cell cell{"deformation", a, b, {{"k", k}}, false, {}};
  const UnitaryModule dm = build_deformed(a, b, k, ring);
  if (!validate(dm).ok() || !truncation_congruent(dm, build_odd(a, b, ring), k)) {
    cell.detail = "invalid deformation or congruence failure";
    return cell;
  }
  const SlopeReport slopes = slope_samples(dm, 8 * a);
  bool bound_ok = true;
  for (int rep = 1; rep <= 4; ++rep) {
    const int n = 2 * a * rep;
    const Rational limit(k * (rep - 1), n);
    if (slopes.samples[static_cast<std::size_t>(n - 1)].s > limit) bound_ok = false;
  }
  const auto cert = not_supersingular_certificate(dm);
  cell.passed = bound_ok && cert.has_value();
  cell.detail = cert ? cert->description : "no certificate";
  if (!bound_ok) cell.detail = "sample bound violated; " + cell.detail;
  return cell;
}

Cell witness_cell(int a, int b, const Ring& ring) {
  Cell cell{"cutoff_witness", a, b, {}, false, {}};
  const CutoffWitness w = cutoff_witness(a, b, ring);
  cell.params["bound"] = w.bound;
  cell.passed = w.verified();
  cell.detail = w.conclusion;
  return cell;
}

Json cell_to_json(const Cell& cell) {
  return Json{{"check", cell.kind},
              {"signature", signature(cell.a, cell.b)},
              {"params", cell.params},
              {"passed", cell.passed},
              {"detail", cell.detail}};
}

}  // namespace

CommandResult cmd_validate(const UnitaryModule& dm) {
  const ValidationReport report = validate(dm);
  Json out = validation_to_json(report);
  out["module"] = module_summary(dm);
  return {report.ok() ? kPass : kFailure, out};
}

CommandResult cmd_gallery(const FamilySpec& spec, std::uint64_t p,
                          std::optional<int> precision) {
  const Ring ring = gallery_ring(p, precision);
  return {kPass, module_to_json(build_family(spec, ring))};
}

CommandResult cmd_report(const UnitaryModule& dm, std::optional<int> max_iter) {
  Json out{{"module", module_summary(dm)}};
  const ValidationReport v = validate(dm);
  out["valid"] = v.ok();
  out["failures"] = v.failures();
  if (!v.ok()) return {kFailure, out};

  out["chain_conditions"] = chain_conditions(dm).ok();
  out["superspecial"] = is_superspecial(dm);
  const SupersingularityResult s = is_supersingular(dm, max_iter);
  out["supersingular"] = to_string(s.verdict);
  Json chains = Json::array();
  if (s.height) {
    out["height"] = s.height->height;
    out["m"] = s.height->stabilization[0];
    out["n"] = s.height->stabilization[1];
    out["within_bound"] = s.height->within_bound;
    out["lambda"] = lattice_to_json(s.height->lambda);
    for (const auto& ca : s.height->chains) chains.push_back(chain_to_json(ca));
  } else {
    out["height"] = nullptr;
    out["m"] = nullptr;
    out["n"] = nullptr;
    for (int side = 0; side < 2; ++side) {
      chains.push_back(chain_to_json(chain_analysis(dm, side, max_iter)));
    }
  }
  out["chains"] = chains;
  out["certificate"] = s.certificate ? certificate_to_json(*s.certificate) : Json(nullptr);
  try {
    out["slopes"] = slope_report_to_json(slope_samples(dm));
  } catch (const PrecisionExhausted& e) {
    out["slopes"] = {{"error", e.what()},
                     {"recommended_precision", e.recommended_precision()}};
  }
  return {kPass, out};
}

CommandResult cmd_chain(const UnitaryModule& dm, std::optional<int> side,
                        std::optional<int> max_iter) {
  Json chains = Json::array();
  for (int s = 0; s < 2; ++s) {
    if (side && *side != s) continue;
    chains.push_back(chain_to_json(chain_analysis(dm, s, max_iter)));
  }
  return {kPass, Json{{"module", module_summary(dm)}, {"chains", chains}}};
}

CommandResult cmd_minheight(const UnitaryModule& dm, std::optional<int> max_iter) {
  const MinimalHeightReport h = lambda_and_height(dm, max_iter);
  Json out{{"module", module_summary(dm)}};
  out.update(height_to_json(h));
  return {h.within_bound && h.cross_check ? kPass : kFailure, out};
}

CommandResult cmd_slope(const UnitaryModule& dm, std::optional<int> n_max) {
  Json out{{"module", module_summary(dm)}};
  out["report"] = slope_report_to_json(slope_samples(dm, n_max));
  const auto cert = not_supersingular_certificate(dm, n_max);
  out["certificate"] = cert ? certificate_to_json(*cert) : Json(nullptr);
  return {kPass, out};
}

CommandResult cmd_compare_truncation(const UnitaryModule& first, const UnitaryModule& second,
                                     int k) {
  const bool same = truncation_congruent(first, second, k);
  return {same ? kPass : kFailure, Json{{"k", k}, {"congruent", same}}};
}

CommandResult cmd_cutoff_witness(int a, int b, std::uint64_t p, std::optional<int> precision) {
  const Ring ring = gallery_ring(p, precision);
  const CutoffWitness w = cutoff_witness(a, b, ring);
  Json out{{"signature", {{"a", a}, {"b", b}}},
           {"p", p},
           {"required", w.required},
           {"bound", w.bound},
           {"level", w.required ? Json(w.level) : Json(nullptr)},
           {"congruent", w.congruent},
           {"supersingular_verdict", to_string(w.supersingular_verdict)},
           {"deformed_verdict", to_string(w.deformed_verdict)},
           {"verified", w.verified()},
           {"conclusion", w.conclusion}};
  out["supersingular_module"] = w.supersingular ? module_to_json(*w.supersingular) : Json(nullptr);
  out["deformed_module"] = w.deformed ? module_to_json(*w.deformed) : Json(nullptr);
  return {w.verified() ? kPass : kFailure, out};
}

CommandResult cmd_verify_paper(std::uint64_t p, int bound, std::optional<int> precision) {
  if (bound < 1) throw InputError("bound must be at least 1");
  const Ring ring = gallery_ring(p, precision);
  std::vector<Cell> cells;
  for (int g = 1; g <= bound; ++g) {
    for (int a = 0; 2 * a <= g; ++a) {
      const int b = g - a;
      const int top = a < b ? a : a - 1;
      for (int q = 0; q <= top; ++q) cells.push_back(realization_cell(a, b, q, ring));
      if (g % 2 == 1) {
        cells.push_back(odd_slope_cell(a, b, ring));
        for (int k = 1; k <= a - 1; ++k) cells.push_back(deformed_cell(a, b, k, ring));
      }
      cells.push_back(witness_cell(a, b, ring));
    }
  }
  Json rows = Json::array();
  int failed = 0;
  for (const auto& c : cells) {
    rows.push_back(cell_to_json(c));
    if (!c.passed) ++failed;
  }
  Json out{{"p", p},
           {"bound", bound},
           {"cells", static_cast<int>(cells.size())},
           {"passed", static_cast<int>(cells.size()) - failed},
           {"failed", failed},
           {"table", rows}};
  return {failed == 0 ? kPass : kFailure, out};
}

}  // namespace dmtool
