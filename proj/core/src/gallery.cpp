#include "dieudonne/gallery.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dieudonne {

namespace {

std::string signature_note(int a, int b) {
  return "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

int default_precision(std::uint64_t p) {
  return std::min(20, RingContext::max_precision(p));
}

Ring gallery_ring(std::uint64_t p, std::optional<int> precision) {
  return RingContext::make(p, 2, precision.value_or(default_precision(p)));
}

UnitaryModule build_odd_recipe(int a, int b, const Ring& ring, GalleryOptions options) {
  const RingContext& R = *ring;
  const int g = a + b;
  const int r = (g - 1) / 2;
  const RingElement p = R.p_power(1);
  Matrix f(ring, 2 * g, 2 * g);
  auto e_index = [&](int i) { return i - 1; };
  auto f_index = [&](int i) { return g + i - 1; };
  // Successor index i + 1, wrapping g + 1 to 1; nullopt when wrapping is off.
  auto next = [&](int i) -> std::optional<int> {
    if (i < g) return i + 1;
    if (options.wraparound) return 1;
    return std::nullopt;
  };
  for (int i = 1; i <= g; ++i) {
    f.at(f_index(i), e_index(i)) = i <= a ? R.one() : p;
  }
  for (int j = 1; j <= g; ++j) {
    const auto target = next(j);
    if (!target) continue;
    const bool scaled = j >= r + 1 && j <= r + a;
    f.at(e_index(*target), f_index(j)) = scaled ? p : R.one();
  }
  const int shift = options.pairing_shift.value_or(r);
  const RingElement& delta = R.delta();
  Matrix pairing(ring, 2 * g, 2 * g);
  for (int i = 1; i <= g; ++i) {
    int j = i + shift;
    if (j > g) {
      if (!options.wraparound) continue;
      j = (j - 1) % g + 1;
    }
    pairing.at(e_index(i), f_index(j)) = delta;
    pairing.at(f_index(j), e_index(i)) = R.neg(delta);
  }
  return UnitaryModule(ring, a, b, std::move(f), std::move(pairing),
                       {"odd", std::nullopt, signature_note(a, b)});
}

UnitaryModule build_odd(int a, int b, const Ring& ring, GalleryOptions options) {
  require(a >= 0 && a <= b, "odd family needs 0 <= a <= b");
  require((a + b) % 2 == 1, "odd family needs a + b odd");
  require(ring->degree() % 2 == 0, "odd family needs an even extension degree");
  return build_odd_recipe(a, b, ring, options);
}

UnitaryModule build_flip_10(const Ring& ring) {
  const UnitaryModule base = build_odd(0, 1, ring);
  // Exchange the two basis vectors.
  auto swap = [&](const Matrix& m) {
    Matrix out(ring, 2, 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) out.at(i, j) = m.at(1 - i, 1 - j);
    }
    return out;
  };
  return UnitaryModule(ring, 1, 0, swap(base.frobenius_matrix()), swap(base.pairing_matrix()),
                       {"flip10", std::nullopt, signature_note(1, 0)});
}

UnitaryModule build_even(int a, int b, const Ring& ring) {
  require(a >= 0 && a < b, "even family needs 0 <= a < b");
  require((a + b) % 2 == 0, "even family needs a + b even");
  return direct_sum(build_odd(a, b - 1, ring), build_odd(0, 1, ring))
      .with_meta({"even", std::nullopt, signature_note(a, b)});
}

UnitaryModule build_parallel(int a, const Ring& ring) {
  require(a >= 1, "parallel family needs a >= 1");
  return direct_sum(build_odd(a - 1, a, ring), build_flip_10(ring))
      .with_meta({"parallel", std::nullopt, signature_note(a, a)});
}

UnitaryModule build_deformed(int a, int b, int k, const Ring& ring) {
  require(a >= 1 && a <= b, "deformed family needs 1 <= a <= b");
  require((a + b) % 2 == 1, "deformed family needs a + b odd");
  require(k >= 0 && k + 1 < ring->precision(), "deformation level out of range");
  const UnitaryModule base = build_odd(a, b, ring);
  const RingContext& R = *ring;
  const int g = a + b;
  const int r = (g - 1) / 2;
  Matrix f = base.frobenius_matrix();
  // F_k(f_a) gains p^k e_1; F_k(e_{r+1}) gains -p^{k+1} f_{r+a+1}.
  f.at(0, g + a - 1) = R.add(f.at(0, g + a - 1), R.p_power(k));
  f.at(g + r + a, r) = R.sub(f.at(g + r + a, r), R.p_power(k + 1));
  return UnitaryModule(ring, a, b, std::move(f), base.pairing_matrix(),
                       {"deformed", k, signature_note(a, b)});
}

UnitaryModule build_height_realization(int a, int b, int q, const Ring& ring) {
  require(a >= 0 && a <= b && a + b >= 1, "realization needs 0 <= a <= b");
  const int top = a < b ? a : a - 1;
  require(q >= 0 && q <= top, "claimed height out of range for this signature");
  UnitaryModule module = (q + b) % 2 == 1
                             ? build_odd(q, b, ring)
                             : direct_sum(build_odd(q, b - 1, ring), build_odd(0, 1, ring));
  for (int i = 0; i < a - q; ++i) module = direct_sum(module, build_flip_10(ring));
  return module.with_meta(
      {"realization", std::nullopt, signature_note(a, b) + " q=" + std::to_string(q)});
}

std::string to_string(Family family) {
  switch (family) {
    case Family::odd: return "odd";
    case Family::even: return "even";
    case Family::parallel: return "parallel";
    case Family::deformed: return "deformed";
    case Family::flip10: return "flip10";
    case Family::realization: return "realization";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::odd, Family::even, Family::parallel, Family::deformed,
                   Family::flip10, Family::realization}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

UnitaryModule build_family(const FamilySpec& spec, const Ring& ring) {
  switch (spec.family) {
    case Family::odd: return build_odd(spec.a, spec.b, ring);
    case Family::even: return build_even(spec.a, spec.b, ring);
    case Family::parallel:
      require(spec.a == spec.b, "parallel family needs a = b");
      return build_parallel(spec.a, ring);
    case Family::deformed:
      require(spec.k.has_value(), "deformed family needs k");
      return build_deformed(spec.a, spec.b, *spec.k, ring);
    case Family::flip10: return build_flip_10(ring);
    case Family::realization:
      require(spec.q.has_value(), "realization family needs q");
      return build_height_realization(spec.a, spec.b, *spec.q, ring);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace dieudonne
