#pragma once

#include <cstdint>
#include <random>

#include "chevmor/field.hpp"

namespace chevmor {

/// Deterministic randomness source.  All library sampling goes through an
/// explicitly injected Rng so a fixed seed reproduces every output byte.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  /// Uniform in [0, n), n >= 1, by rejection.
  uint64_t below(uint64_t n) {
    if (n == 0) throw Error("Rng::below(0)");
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform in [lo, hi], inclusive.
  uint64_t range(uint64_t lo, uint64_t hi) { return lo + below(hi - lo + 1); }

  FieldElement element(const Field& F) { return F.element(below(F.order())); }

  FieldElement nonzero(const Field& F) { return F.element(1 + below(F.order() - 1)); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace chevmor
