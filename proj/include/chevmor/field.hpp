#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "chevmor/errors.hpp"

namespace chevmor {

/// Largest supported extension degree of F_q = F_{p^k}.
inline constexpr uint32_t kMaxDegree = 8;

/// Element of F_{p^k} as coefficients in the power basis of the modulus,
/// low degree first, each coefficient reduced into [0, p).  Coefficients
/// beyond the field degree stay zero so equality is plain array equality.
struct FieldElement {
  std::array<uint32_t, kMaxDegree> c{};

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// F_{p^k} for an odd prime p.  Carries the monic irreducible modulus and a
/// fixed non-square zeta.  All element operations are pure; a Field is
/// immutable after construction and safe to share between threads.
class Field {
 public:
  /// Deterministic field: modulus is the lexicographically smallest monic
  /// irreducible polynomial of degree k over Z_p (coefficient vectors
  /// compared low-degree-first).
  Field(uint32_t p, uint32_t k);

  /// Explicit modulus, given as k+1 coefficients low degree first; must be
  /// monic and irreducible (verified by trial division).
  Field(uint32_t p, uint32_t k, std::vector<uint32_t> modulus);

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return k_; }
  uint64_t order() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return mod_; }

  /// The canonical non-square: lexicographically smallest element with
  /// zeta^((q-1)/2) = -1.
  const FieldElement& nonsquare() const { return zeta_; }

  FieldElement zero() const { return FieldElement{}; }
  FieldElement one() const { return from_uint(1); }
  FieldElement from_int(int64_t v) const;
  FieldElement from_uint(uint64_t v) const;
  /// Basis element theta^j, 0 <= j < k.
  FieldElement theta_power(uint32_t j) const;

  bool is_zero(const FieldElement& a) const {
    for (uint32_t i = 0; i < k_; ++i)
      if (a.c[i] != 0) return false;
    return true;
  }

  FieldElement add(const FieldElement& a, const FieldElement& b) const {
    FieldElement r;
    for (uint32_t i = 0; i < k_; ++i) {
      uint32_t s = a.c[i] + b.c[i];
      r.c[i] = s >= p_ ? s - p_ : s;
    }
    return r;
  }

  FieldElement sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement r;
    for (uint32_t i = 0; i < k_; ++i) {
      uint32_t s = a.c[i] + p_ - b.c[i];
      r.c[i] = s >= p_ ? s - p_ : s;
    }
    return r;
  }

  FieldElement neg(const FieldElement& a) const {
    FieldElement r;
    for (uint32_t i = 0; i < k_; ++i) r.c[i] = a.c[i] == 0 ? 0 : p_ - a.c[i];
    return r;
  }

  FieldElement mul(const FieldElement& a, const FieldElement& b) const {
    if (k_ == 1) {
      FieldElement r;
      r.c[0] = static_cast<uint32_t>(uint64_t(a.c[0]) * b.c[0] % p_);
      return r;
    }
    return mul_ext(a, b);
  }

  /// Multiplicative inverse; throws ZeroInverse on 0.
  FieldElement inv(const FieldElement& a) const;

  FieldElement pow(const FieldElement& a, uint64_t e) const;

  /// Euler criterion; zero counts as a square.
  bool is_square(const FieldElement& a) const;

  /// Square root with the canonical (lexicographically smaller) root, or
  /// nullopt when the element is not a square.  sqrt(0) = 0.
  std::optional<FieldElement> sqrt(const FieldElement& a) const;

  /// Canonical ordering: lexicographic on coefficient vectors, constant
  /// coefficient first.
  bool less(const FieldElement& a, const FieldElement& b) const {
    for (uint32_t i = 0; i < k_; ++i)
      if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
  }

  /// Rank of an element in the canonical ordering, and its inverse.
  uint64_t ordinal(const FieldElement& a) const;
  FieldElement element(uint64_t ordinal) const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && k_ == o.k_ && mod_ == o.mod_;
  }

 private:
  void init_modulus_deterministic();
  void validate_modulus() const;
  void find_nonsquare();
  FieldElement mul_ext(const FieldElement& a, const FieldElement& b) const;
  std::optional<FieldElement> sqrt_exhaustive(const FieldElement& a) const;
  std::optional<FieldElement> sqrt_tonelli(const FieldElement& a) const;

  uint32_t p_ = 3;
  uint32_t k_ = 1;
  uint64_t q_ = 3;
  std::vector<uint32_t> mod_;  // k+1 coefficients, low degree first, monic
  FieldElement zeta_;

  friend struct FieldTestHook;
};

/// Test-only access to the internal sqrt routes so each can be checked
/// against the other.
struct FieldTestHook {
  static std::optional<FieldElement> sqrt_exhaustive(const Field& f, const FieldElement& a) {
    return f.sqrt_exhaustive(a);
  }
  static std::optional<FieldElement> sqrt_tonelli(const Field& f, const FieldElement& a) {
    return f.sqrt_tonelli(a);
  }
};

}  // namespace chevmor
