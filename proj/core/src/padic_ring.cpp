#include "dieudonne/padic_ring.hpp"

#include <limits>
#include <stdexcept>

namespace dieudonne {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Dense polynomials over F_p, lowest degree first, no trailing zeros.
using FpPoly = std::vector<u64>;

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mod(FpPoly a, const FpPoly& f, u64 p) {
  trim(a);
  const u64 lead_inv = [&] {
    u64 r = 1, b = f.back() % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }();
  while (a.size() >= f.size()) {
    const u64 c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - c * f[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  return fp_mod(std::move(r), f, p);
}

FpPoly fp_powmod(FpPoly base, u64 e, const FpPoly& f, u64 p) {
  FpPoly r{1};
  base = fp_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = fp_mulmod(r, base, f, p);
    base = fp_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FpPoly fp_sub_x(FpPoly a, u64 p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  trim(a);
  return a;
}

// x^(p^k) mod f.
FpPoly frobenius_orbit(const FpPoly& f, u64 p, int k) {
  FpPoly r{0, 1};
  for (int i = 0; i < k; ++i) r = fp_powmod(r, p, f, p);
  return r;
}

// Rabin's test for a monic f of degree m.
bool irreducible_mod_p(const std::vector<u64>& lower, u64 p) {
  const int m = static_cast<int>(lower.size());
  FpPoly f(lower.begin(), lower.end());
  for (auto& c : f) c %= p;
  f.push_back(1);
  if (m == 1) return true;
  if (!fp_sub_x(frobenius_orbit(f, p, m), p).empty()) return false;
  for (int q = 2; q <= m; ++q) {
    if (m % q != 0 || !is_prime(static_cast<u64>(q))) continue;
    FpPoly g = fp_gcd(f, fp_sub_x(frobenius_orbit(f, p, m / q), p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<u64> least_irreducible(u64 p, int m) {
  std::vector<u64> digits(static_cast<std::size_t>(m), 0);
  while (true) {
    if (digits[0] != 0 || m == 1) {
      if (irreducible_mod_p(digits, p)) return digits;
    }
    int i = 0;
    while (i < m && ++digits[static_cast<std::size_t>(i)] == p) {
      digits[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == m) throw std::logic_error("no irreducible polynomial found");
  }
}

u64 ipow(u64 base, int e) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

int v_p(u64 value, u64 p, int cap) {
  if (value == 0) return cap;
  int v = 0;
  while (value % p == 0) {
    value /= p;
    ++v;
  }
  return v;
}

}  // namespace

int RingContext::max_precision(u64 p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  const u64 limit = u64{1} << 63;
  int n = 0;
  u64 acc = 1;
  while (acc <= (limit - 1) / p) {
    acc *= p;
    ++n;
  }
  return n;
}

Ring RingContext::make(u64 p, int degree, int precision) {
  if (p == 2) throw std::invalid_argument("p = 2 is not supported");
  if (!is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (degree < 1 || degree > kMaxDegree) {
    throw std::invalid_argument("extension degree out of range");
  }
  return with_modulus(p, precision, least_irreducible(p, degree));
}

Ring RingContext::with_modulus(u64 p, int precision, std::vector<u64> modulus) {
  if (p == 2) throw std::invalid_argument("p = 2 is not supported");
  if (!is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  const int m = static_cast<int>(modulus.size());
  if (m < 1 || m > kMaxDegree) {
    throw std::invalid_argument("extension degree out of range");
  }
  if (precision < 1 || precision > max_precision(p)) {
    throw std::invalid_argument("precision out of range for this prime");
  }
  if (!irreducible_mod_p(modulus, p)) {
    throw std::invalid_argument("modulus is not irreducible mod p");
  }
  const u64 pn = ipow(p, precision);
  for (auto& c : modulus) c %= pn;
  return Ring(new RingContext(p, m, precision, std::move(modulus)));
}

RingContext::RingContext(u64 p, int m, int n, std::vector<u64> modulus)
    : p_(p), m_(m), n_(n), pn_(ipow(p, n)), modulus_(std::move(modulus)) {
  // Newton iteration for the root of f lifting x^p.
  auto eval = [&](const RingElement& r, bool derivative) {
    RingElement acc = zero();
    for (int k = m_; k >= (derivative ? 1 : 0); --k) {
      const u64 c = k == m_ ? 1 : modulus_[static_cast<std::size_t>(k)];
      const u64 coeff = derivative ? mmul(c, static_cast<u64>(k) % pn_) : c;
      acc = mul(acc, r);
      acc.coeffs[0] = madd(acc.coeffs[0], coeff);
    }
    return acc;
  };
  RingElement root = pow(generator(), p_);
  for (int iter = 0; iter < 2 * n_ + 2; ++iter) {
    const RingElement value = eval(root, false);
    if (is_zero(value)) break;
    root = sub(root, mul(value, inverse(eval(root, true))));
  }
  frob_x_ = root;

  frob_powers_.assign(static_cast<std::size_t>(m_), {});
  RingElement image = generator();
  for (int t = 0; t < m_; ++t) {
    auto& row = frob_powers_[static_cast<std::size_t>(t)];
    row.resize(static_cast<std::size_t>(m_));
    RingElement power = one();
    for (int k = 0; k < m_; ++k) {
      row[static_cast<std::size_t>(k)] = power;
      power = mul(power, image);
    }
    if (t == 0) {
      image = frob_x_;
    } else {
      image = apply_frobenius_table(image, 1);
    }
  }

  if (m_ % 2 == 0) {
    // Least nonzero residue d (digit order, constant coefficient first) with
    // d^p = -d, then its Teichmueller lift.
    std::array<u64, kMaxDegree> digits{};
    while (true) {
      int i = 0;
      while (i < m_ && ++digits[static_cast<std::size_t>(i)] == p_) {
        digits[static_cast<std::size_t>(i)] = 0;
        ++i;
      }
      if (i == m_) break;
      RingElement d;
      d.coeffs = digits;
      if (congruent(pow(d, p_), neg(d), 1)) {
        const u64 q = ipow(p_, m_);
        for (int step = 0; step < n_; ++step) d = pow(d, q);
        delta_ = d;
        break;
      }
    }
  }
}

bool RingContext::same_as(const RingContext& other) const noexcept {
  return this == &other || (p_ == other.p_ && m_ == other.m_ &&
                            n_ == other.n_ && modulus_ == other.modulus_);
}

u64 RingContext::madd(u64 a, u64 b) const noexcept {
  const u64 s = a + b;
  return s >= pn_ ? s - pn_ : s;
}

u64 RingContext::msub(u64 a, u64 b) const noexcept {
  return a >= b ? a - b : a + pn_ - b;
}

u64 RingContext::mmul(u64 a, u64 b) const noexcept {
  return static_cast<u64>(static_cast<u128>(a) * b % pn_);
}

RingElement RingContext::one() const {
  RingElement r;
  r.coeffs[0] = pn_ == 1 ? 0 : 1;
  return r;
}

RingElement RingContext::from_integer(std::int64_t value) const {
  RingElement r;
  if (value >= 0) {
    r.coeffs[0] = static_cast<u64>(value) % pn_;
  } else {
    const u64 mag = static_cast<u64>(-(value + 1)) + 1;
    r.coeffs[0] = msub(0, mag % pn_);
  }
  return r;
}

RingElement RingContext::generator() const {
  RingElement r;
  if (m_ == 1) {
    r.coeffs[0] = msub(0, modulus_[0]);
  } else {
    r.coeffs[1] = 1;
  }
  return r;
}

RingElement RingContext::p_power(int k) const {
  RingElement r;
  if (k < n_) r.coeffs[0] = ipow(p_, k);
  return r;
}

RingElement RingContext::add(const RingElement& a, const RingElement& b) const {
  RingElement r;
  for (int i = 0; i < m_; ++i) r.coeffs[i] = madd(a.coeffs[i], b.coeffs[i]);
  return r;
}

RingElement RingContext::sub(const RingElement& a, const RingElement& b) const {
  RingElement r;
  for (int i = 0; i < m_; ++i) r.coeffs[i] = msub(a.coeffs[i], b.coeffs[i]);
  return r;
}

RingElement RingContext::neg(const RingElement& a) const { return sub(zero(), a); }

RingElement RingContext::mul(const RingElement& a, const RingElement& b) const {
  if (m_ == 1) {
    RingElement r;
    r.coeffs[0] = mmul(a.coeffs[0], b.coeffs[0]);
    return r;
  }
  std::array<u64, 2 * kMaxDegree> prod{};
  for (int i = 0; i < m_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < m_; ++j) {
      prod[i + j] = madd(prod[i + j], mmul(a.coeffs[i], b.coeffs[j]));
    }
  }
  for (int d = 2 * m_ - 2; d >= m_; --d) {
    const u64 c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int k = 0; k < m_; ++k) {
      prod[d - m_ + k] = msub(prod[d - m_ + k], mmul(c, modulus_[k]));
    }
  }
  RingElement r;
  for (int i = 0; i < m_; ++i) r.coeffs[i] = prod[i];
  return r;
}

RingElement RingContext::pow(const RingElement& a, u64 e) const {
  RingElement result = one();
  RingElement base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

RingElement RingContext::shift_up(const RingElement& a, int k) const {
  if (k <= 0) return a;
  if (k >= n_) return zero();
  const u64 f = ipow(p_, k);
  RingElement r;
  for (int i = 0; i < m_; ++i) r.coeffs[i] = mmul(a.coeffs[i], f);
  return r;
}

RingElement RingContext::shift_down(const RingElement& a, int k) const {
  if (k <= 0) return a;
  if (val(a) < k) throw std::domain_error("element not divisible by p^k");
  if (k >= n_) return zero();
  const u64 f = ipow(p_, k);
  RingElement r;
  for (int i = 0; i < m_; ++i) r.coeffs[i] = a.coeffs[i] / f;
  return r;
}

int RingContext::val(const RingElement& a) const {
  int v = n_;
  for (int i = 0; i < m_; ++i) {
    if (a.coeffs[i] != 0) v = std::min(v, v_p(a.coeffs[i], p_, n_));
  }
  return v;
}

std::optional<int> RingContext::valuation(const RingElement& a) const {
  if (is_zero(a)) return std::nullopt;
  return val(a);
}

bool RingContext::is_zero(const RingElement& a) const {
  for (int i = 0; i < m_; ++i) {
    if (a.coeffs[i] != 0) return false;
  }
  return true;
}

RingElement RingContext::inverse(const RingElement& unit) const {
  if (!is_unit(unit)) throw std::domain_error("element is not a unit");
  // u^(p^m - 2) inverts u mod p; Newton steps lift it to p^N.
  RingElement z = pow(unit, ipow(p_, m_) - 2);
  const RingElement two = from_integer(2);
  for (int iter = 0; iter < 64; ++iter) {
    const RingElement uz = mul(unit, z);
    if (uz == one()) return z;
    z = mul(z, sub(two, uz));
  }
  throw std::logic_error("inverse iteration did not converge");
}

RingElement RingContext::apply_frobenius_table(const RingElement& a, int twist) const {
  const auto& table = frob_powers_[static_cast<std::size_t>(twist)];
  RingElement r = zero();
  for (int k = 0; k < m_; ++k) {
    if (a.coeffs[k] == 0) continue;
    const RingElement& basis = table[static_cast<std::size_t>(k)];
    for (int i = 0; i < m_; ++i) {
      r.coeffs[i] = madd(r.coeffs[i], mmul(a.coeffs[k], basis.coeffs[i]));
    }
  }
  return r;
}

RingElement RingContext::frobenius(const RingElement& a, int twist) const {
  const int t = ((twist % m_) + m_) % m_;
  if (t == 0) return a;
  return apply_frobenius_table(a, t);
}

RingElement RingContext::truncate(const RingElement& a, int k) const {
  if (k >= n_) return a;
  const u64 f = ipow(p_, std::max(k, 0));
  RingElement r;
  for (int i = 0; i < m_; ++i) r.coeffs[i] = a.coeffs[i] % f;
  return r;
}

bool RingContext::congruent(const RingElement& a, const RingElement& b, int k) const {
  return val(sub(a, b)) >= std::min(k, n_);
}

const RingElement& RingContext::delta() const {
  if (!delta_) {
    throw std::domain_error(
        "no unit delta with sigma(delta) = -delta for odd extension degree");
  }
  return *delta_;
}

RingElement RingContext::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<u64> dist(0, pn_ - 1);
  RingElement r;
  for (int i = 0; i < m_; ++i) r.coeffs[i] = dist(rng);
  return r;
}

std::vector<std::string> RingContext::to_strings(const RingElement& a) const {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int i = 0; i < m_; ++i) out.push_back(std::to_string(a.coeffs[i]));
  return out;
}

RingElement RingContext::from_strings(const std::vector<std::string>& digits) const {
  if (static_cast<int>(digits.size()) != m_) {
    throw std::invalid_argument("ring element has the wrong number of coefficients");
  }
  RingElement r;
  for (int i = 0; i < m_; ++i) {
    const std::string& s = digits[static_cast<std::size_t>(i)];
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed residue '" + s + "'");
    }
    std::size_t used = 0;
    const u64 value = std::stoull(s, &used);
    if (value >= pn_) throw std::invalid_argument("residue out of range: " + s);
    r.coeffs[i] = value;
  }
  return r;
}

}  // namespace dieudonne
