#include "chevmor/field.hpp"

#include <algorithm>

namespace chevmor {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over Z_p, low degree first, no trailing-zero guarantee.
using Poly = std::vector<uint32_t>;

int poly_deg(const Poly& f) {
  for (int i = int(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// Remainder of f modulo a monic divisor g.
Poly poly_rem(Poly f, const Poly& g, uint32_t p) {
  int dg = poly_deg(g);
  for (int df = poly_deg(f); df >= dg; df = poly_deg(f)) {
    uint32_t c = f[df];
    for (int i = 0; i <= dg; ++i) {
      uint64_t sub = uint64_t(c) * g[i] % p;
      uint32_t& coef = f[df - dg + i];
      coef = uint32_t((coef + p - sub) % p);
    }
  }
  return f;
}

// Trial division: no monic divisor of degree 1..deg/2 divides f.
bool poly_irreducible(const Poly& f, uint32_t p) {
  int df = poly_deg(f);
  if (df < 1) return false;
  if (df == 1) return true;
  for (int dd = 1; dd <= df / 2; ++dd) {
    // enumerate monic divisors of degree dd
    uint64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    Poly g(dd + 1, 0);
    g[dd] = 1;
    for (uint64_t idx = 0; idx < count; ++idx) {
      uint64_t rest = idx;
      for (int i = 0; i < dd; ++i) {
        g[i] = uint32_t(rest % p);
        rest /= p;
      }
      if (poly_deg(poly_rem(f, g, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(uint32_t p, uint32_t k) : p_(p), k_(k) {
  if (!is_prime(p) || p == 2) throw Error("Field: characteristic must be an odd prime");
  if (k < 1 || k > kMaxDegree) throw Error("Field: extension degree out of range");
  q_ = 1;
  for (uint32_t i = 0; i < k; ++i) {
    if (q_ > (uint64_t(1) << 62) / p) throw Error("Field: order exceeds 2^62");
    q_ *= p;
  }
  init_modulus_deterministic();
  find_nonsquare();
}

Field::Field(uint32_t p, uint32_t k, std::vector<uint32_t> modulus) : p_(p), k_(k), mod_(std::move(modulus)) {
  if (!is_prime(p) || p == 2) throw Error("Field: characteristic must be an odd prime");
  if (k < 1 || k > kMaxDegree) throw Error("Field: extension degree out of range");
  q_ = 1;
  for (uint32_t i = 0; i < k; ++i) {
    if (q_ > (uint64_t(1) << 62) / p) throw Error("Field: order exceeds 2^62");
    q_ *= p;
  }
  validate_modulus();
  find_nonsquare();
}

void Field::init_modulus_deterministic() {
  if (k_ == 1) {
    mod_ = {0, 1};
    return;
  }
  // Scan candidate coefficient vectors in the canonical element order until
  // the first irreducible monic polynomial appears.
  uint64_t count = 1;
  for (uint32_t i = 0; i < k_; ++i) count *= p_;
  for (uint64_t idx = 0; idx < count; ++idx) {
    FieldElement low = element(idx);
    Poly f(k_ + 1, 0);
    for (uint32_t i = 0; i < k_; ++i) f[i] = low.c[i];
    f[k_] = 1;
    if (poly_irreducible(f, p_)) {
      mod_ = f;
      return;
    }
  }
  throw Error("Field: no irreducible modulus found");  // unreachable for prime p
}

void Field::validate_modulus() const {
  if (mod_.size() != k_ + 1) throw Error("Field: modulus must have degree k");
  if (mod_[k_] != 1) throw Error("Field: modulus must be monic");
  for (uint32_t c : mod_)
    if (c >= p_) throw Error("Field: modulus coefficient out of range");
  if (k_ > 1 && !poly_irreducible(mod_, p_)) throw Error("Field: modulus is reducible");
}

void Field::find_nonsquare() {
  uint64_t half = (q_ - 1) / 2;
  for (uint64_t idx = 1; idx < q_; ++idx) {
    FieldElement e = element(idx);
    if (!(pow(e, half) == one())) {
      zeta_ = e;
      return;
    }
  }
  throw Error("Field: no non-square found");  // impossible for odd q
}

FieldElement Field::from_uint(uint64_t v) const {
  FieldElement r;
  r.c[0] = uint32_t(v % p_);
  return r;
}

FieldElement Field::from_int(int64_t v) const {
  int64_t m = v % int64_t(p_);
  if (m < 0) m += p_;
  FieldElement r;
  r.c[0] = uint32_t(m);
  return r;
}

FieldElement Field::theta_power(uint32_t j) const {
  if (j >= k_) throw Error("Field: theta power out of range");
  FieldElement r;
  r.c[j] = 1;
  return r;
}

FieldElement Field::mul_ext(const FieldElement& a, const FieldElement& b) const {
  // Schoolbook product followed by reduction against the monic modulus.
  std::array<uint32_t, 2 * kMaxDegree> w{};
  for (uint32_t i = 0; i < k_; ++i) {
    if (a.c[i] == 0) continue;
    for (uint32_t j = 0; j < k_; ++j) {
      w[i + j] = uint32_t((w[i + j] + uint64_t(a.c[i]) * b.c[j]) % p_);
    }
  }
  for (int d = int(2 * k_) - 2; d >= int(k_); --d) {
    uint32_t c = w[d];
    if (c == 0) continue;
    w[d] = 0;
    for (uint32_t j = 0; j < k_; ++j) {
      uint64_t sub = uint64_t(c) * mod_[j] % p_;
      w[d - k_ + j] = uint32_t((w[d - k_ + j] + p_ - sub) % p_);
    }
  }
  FieldElement r;
  for (uint32_t i = 0; i < k_; ++i) r.c[i] = w[i];
  return r;
}

FieldElement Field::inv(const FieldElement& a) const {
  if (is_zero(a)) throw ZeroInverse("inverse of zero");
  return pow(a, q_ - 2);
}

FieldElement Field::pow(const FieldElement& a, uint64_t e) const {
  FieldElement base = a;
  FieldElement r = one();
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool Field::is_square(const FieldElement& a) const {
  if (is_zero(a)) return true;
  return pow(a, (q_ - 1) / 2) == one();
}

std::optional<FieldElement> Field::sqrt(const FieldElement& a) const {
  if (is_zero(a)) return zero();
  if (q_ <= 10000) return sqrt_exhaustive(a);
  return sqrt_tonelli(a);
}

std::optional<FieldElement> Field::sqrt_exhaustive(const FieldElement& a) const {
  // Scanning in canonical order makes the first hit the canonical root.
  for (uint64_t idx = 0; idx < q_; ++idx) {
    FieldElement x = element(idx);
    if (mul(x, x) == a) return x;
  }
  return std::nullopt;
}

std::optional<FieldElement> Field::sqrt_tonelli(const FieldElement& a) const {
  if (!is_square(a)) return std::nullopt;
  uint64_t t = q_ - 1;
  uint32_t s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  FieldElement c = pow(zeta_, t);
  FieldElement x = pow(a, (t + 1) / 2);
  FieldElement m = pow(a, t);
  uint32_t r = s;
  while (!(m == one())) {
    FieldElement probe = m;
    uint32_t i = 0;
    while (!(probe == one())) {
      probe = mul(probe, probe);
      ++i;
    }
    FieldElement b = c;
    for (uint32_t j = 0; j + i + 1 < r; ++j) b = mul(b, b);
    x = mul(x, b);
    c = mul(b, b);
    m = mul(m, c);
    r = i;
  }
  FieldElement nx = neg(x);
  return less(nx, x) ? nx : x;
}

uint64_t Field::ordinal(const FieldElement& a) const {
  uint64_t v = 0;
  for (uint32_t i = 0; i < k_; ++i) v = v * p_ + a.c[i];
  return v;
}

FieldElement Field::element(uint64_t ordinal) const {
  FieldElement r;
  for (int i = int(k_) - 1; i >= 0; --i) {
    r.c[i] = uint32_t(ordinal % p_);
    ordinal /= p_;
  }
  return r;
}

}  // namespace chevmor
