#include "dieudonne/chain_analysis.hpp"

#include <algorithm>
#include <string>

#include "dieudonne/errors.hpp"

namespace dieudonne {

namespace {

int height_budget(const UnitaryModule& dm) {
  return std::min(dm.a(), dm.b()) - (dm.a() == dm.b() ? 1 : 0);
}

}  // namespace

int default_max_iter(const UnitaryModule& dm) { return 4 * dm.g() * dm.ctx().degree(); }

int required_chain_precision(const UnitaryModule& dm) {
  return 2 * std::max(height_budget(dm), 0) + 8;
}

ChainAnalysis chain_analysis(const UnitaryModule& dm, int side, std::optional<int> max_iter) {
  if (side != 0 && side != 1) throw std::invalid_argument("side must be 0 or 1");
  const int needed = required_chain_precision(dm);
  if (dm.ctx().precision() < needed) {
    throw PrecisionExhausted("chain analysis needs precision p^" + std::to_string(needed),
                             needed);
  }
  const int limit = max_iter.value_or(default_max_iter(dm));

  ChainAnalysis out;
  out.side = side;
  out.budget = height_budget(dm);
  const SemilinearMap tau = dm.tau_on(side);
  const Lattice m = dm.graded_piece();
  const Lattice start = preimage(tau, scale(dm.dual_on(side, m), 1));
  out.lattices = {start, m};
  out.c.push_back(index(start, m));

  Lattice previous_image = image(tau, start);
  Lattice current = m;
  for (int i = 0;; ++i) {
    const Lattice current_image = image(tau, current);
    const Lattice next = sum(current, current_image);
    out.d.push_back(index(previous_image, intersect(current, current_image)));
    out.c.push_back(index(current, next));
    out.iterations = i + 1;
    if (next == current) {
      out.stabilized = true;
      out.stabilization_index = i;
      break;
    }
    out.lattices.push_back(next);
    if (next.exponent() > out.budget) {
      out.budget_exceeded_at = i + 1;
      break;
    }
    if (i + 1 >= limit) break;
    previous_image = current_image;
    current = next;
  }
  return out;
}

MinimalHeightReport lambda_and_height(const UnitaryModule& dm, std::optional<int> max_iter) {
  MinimalHeightReport out;
  for (int side = 0; side < 2; ++side) {
    out.chains[side] = chain_analysis(dm, side, max_iter);
    const ChainAnalysis& ca = out.chains[side];
    if (!ca.stabilized) {
      throw NonStabilization(
          "side " + std::to_string(side) + " chain did not stabilise" +
          (ca.budget_exceeded_at ? " (height budget exceeded: not supersingular)"
                                 : " within " + std::to_string(ca.iterations) + " steps"));
    }
    out.stabilization[side] = *ca.stabilization_index;
    out.side_heights[side] = ca.limit().exponent();
    out.iterations += ca.iterations;
  }
  out.lambda = direct_sum(out.chains[0].limit(), out.chains[1].limit());
  out.height = std::max(out.side_heights[0], out.side_heights[1]);
  out.bound = height_budget(dm);
  out.within_bound = out.height <= out.bound;

  const SemilinearMap tau = dm.tau();
  Lattice orbit = dm.whole();
  const int steps = std::max(out.stabilization[0], out.stabilization[1]) + 1;
  for (int i = 0; i < steps; ++i) orbit = sum(orbit, image(tau, orbit));
  out.cross_check = orbit == out.lambda && image(tau, orbit) == orbit;
  return out;
}

}  // namespace dieudonne
