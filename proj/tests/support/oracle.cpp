#include "oracle.hpp"

#include <set>
#include <stdexcept>

namespace oracle {

namespace {

std::int64_t ipow(std::int64_t p, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

int vp(std::int64_t a, std::int64_t p, int k) {
  if (a == 0) return k;
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::logic_error("not a unit");
  return mod(old_s, m);
}

}  // namespace

Subgroup::Subgroup(std::int64_t p, int k, int dim, std::vector<Vec> generators)
    : p_(p), k_(k), dim_(dim), modulus_(ipow(p, k)), generators_(std::move(generators)) {
  std::vector<Vec> pool;
  for (auto v : generators_) {
    for (auto& x : v) x = mod(x, modulus_);
    pool.push_back(std::move(v));
  }
  // Echelon form with saturation: after choosing a pivot of valuation v in a
  // column, p^{k-v} times the pivot row (zero in that column) rejoins the pool.
  for (int col = 0; col < dim_; ++col) {
    int best = -1;
    int best_v = k_;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const int v = vp(pool[i][static_cast<std::size_t>(col)], p_, k_);
      if (v < best_v) {
        best_v = v;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) continue;
    Vec pivot = pool[static_cast<std::size_t>(best)];
    pool.erase(pool.begin() + best);
    const std::int64_t unit =
        pivot[static_cast<std::size_t>(col)] / ipow(p_, best_v);
    const std::int64_t inv = inverse_mod(unit, modulus_);
    for (auto& x : pivot) x = static_cast<std::int64_t>((static_cast<__int128>(x) * inv) % modulus_);
    const std::int64_t pv = ipow(p_, best_v);
    for (auto& row : pool) {
      const std::int64_t factor = row[static_cast<std::size_t>(col)] / pv;
      if (factor == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        row[static_cast<std::size_t>(j)] =
            mod(row[static_cast<std::size_t>(j)] - factor * pivot[static_cast<std::size_t>(j)],
                modulus_);
      }
    }
    Vec saturated = pivot;
    const std::int64_t s = ipow(p_, k_ - best_v);
    bool nonzero = false;
    for (auto& x : saturated) {
      x = static_cast<std::int64_t>((static_cast<__int128>(x) * s) % modulus_);
      nonzero = nonzero || x != 0;
    }
    if (nonzero) pool.push_back(saturated);
    log_order_ += k_ - best_v;
  }
}

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b) {
  std::vector<Vec> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subgroup(a.p(), a.k(), a.dim(), gens);
}

bool subgroup_contains(const Subgroup& outer, const Subgroup& inner) {
  return subgroup_sum(outer, inner).log_order() == outer.log_order();
}

bool subgroup_equal(const Subgroup& a, const Subgroup& b) {
  return subgroup_contains(a, b) && subgroup_contains(b, a);
}

int intersection_log_order(const Subgroup& a, const Subgroup& b) {
  return a.log_order() + b.log_order() - subgroup_sum(a, b).log_order();
}

std::int64_t exhaustive_order(std::int64_t p, int k, int dim, const std::vector<Vec>& generators) {
  const std::int64_t m = ipow(p, k);
  std::set<Vec> seen{Vec(static_cast<std::size_t>(dim), 0)};
  std::vector<Vec> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier) {
      for (const auto& g : generators) {
        Vec w(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j) {
          w[static_cast<std::size_t>(j)] =
              mod(v[static_cast<std::size_t>(j)] + g[static_cast<std::size_t>(j)], m);
        }
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return static_cast<std::int64_t>(seen.size());
}

Subgroup restrict_scalars(const dieudonne::Lattice& l, int window) {
  const auto& ctx = *l.ring();
  const std::int64_t p = static_cast<std::int64_t>(ctx.p());
  const int m = ctx.degree();
  const int n = l.dim();
  const int k = 2 * window;
  const std::int64_t q = ipow(p, k);
  if (l.denom() > window) throw std::invalid_argument("lattice outside the window");
  const std::int64_t shift = ipow(p, window - l.denom());
  const auto& f = ctx.modulus();

  auto times_x = [&](const Vec& c) {
    // c holds the m coefficients of one element; x^m = -sum f_t x^t.
    Vec out(static_cast<std::size_t>(m), 0);
    const std::int64_t top = c[static_cast<std::size_t>(m - 1)];
    for (int t = m - 1; t >= 1; --t) out[static_cast<std::size_t>(t)] = c[static_cast<std::size_t>(t - 1)];
    for (int t = 0; t < m; ++t) {
      out[static_cast<std::size_t>(t)] =
          mod(out[static_cast<std::size_t>(t)] -
                  top * mod(static_cast<std::int64_t>(f[static_cast<std::size_t>(t)]), q),
              q);
    }
    return out;
  };

  std::vector<Vec> gens;
  for (int col = 0; col < n; ++col) {
    std::vector<Vec> coords(static_cast<std::size_t>(n));
    for (int row = 0; row < n; ++row) {
      Vec c(static_cast<std::size_t>(m));
      for (int t = 0; t < m; ++t) {
        const auto raw = static_cast<std::int64_t>(
            l.basis().at(row, col).coeffs[static_cast<std::size_t>(t)] %
            static_cast<std::uint64_t>(q));
        c[static_cast<std::size_t>(t)] = mod(raw * shift, q);
      }
      coords[static_cast<std::size_t>(row)] = c;
    }
    for (int j = 0; j < m; ++j) {
      Vec flat;
      for (const auto& c : coords) flat.insert(flat.end(), c.begin(), c.end());
      gens.push_back(flat);
      for (auto& c : coords) c = times_x(c);
    }
  }
  return Subgroup(p, k, n * m, gens);
}

dieudonne::Lattice random_window_lattice(const dieudonne::Ring& ring, int n, int window,
                                         std::mt19937_64& rng) {
  using namespace dieudonne;
  std::uniform_int_distribution<int> cols_dist(1, n + 1);
  std::uniform_int_distribution<int> shift_dist(0, 2 * window);
  const int cols = cols_dist(rng);
  Matrix g = Matrix::random(ring, n, cols, rng);
  for (int c = 0; c < cols; ++c) g.scale_col(c, ring->p_power(shift_dist(rng)));
  const Matrix floor = Matrix::scalar(ring, n, ring->p_power(2 * window));
  return Lattice::from_generators(hstack(g, floor), window);
}

}  // namespace oracle
