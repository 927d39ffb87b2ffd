#include "suite.hpp"

namespace suite {

using namespace dieudonne;

namespace {

std::string sig(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

std::vector<Entry> modules(std::uint64_t p, int max_g) {
  const Ring ring = gallery_ring(p);
  std::vector<Entry> out;
  out.push_back({"flip10", build_flip_10(ring), true, 0});
  for (int g = 1; g <= max_g; ++g) {
    for (int a = 0; 2 * a <= g; ++a) {
      const int b = g - a;
      const int top = a < b ? a : a - 1;
      for (int q = 0; q <= top; ++q) {
        out.push_back({"realization" + sig(a, b) + " q=" + std::to_string(q),
                       build_height_realization(a, b, q, ring), true, q});
      }
      if (g % 2 == 1) {
        out.push_back({"odd" + sig(a, b), build_odd(a, b, ring), true, a});
        for (int k = 1; k <= a - 1; ++k) {
          out.push_back({"deformed" + sig(a, b) + " k=" + std::to_string(k),
                         build_deformed(a, b, k, ring), false, std::nullopt});
        }
      } else if (a < b) {
        out.push_back({"even" + sig(a, b), build_even(a, b, ring), true, a});
      } else {
        out.push_back({"parallel" + sig(a, b), build_parallel(a, ring), true, a - 1});
      }
    }
  }
  return out;
}

}  // namespace suite
