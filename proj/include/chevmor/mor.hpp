#pragma once

#include <cstdint>
#include <optional>

#include "chevmor/attack.hpp"
#include "chevmor/rng.hpp"

namespace chevmor {

struct PublicKey {
  GroupId group;
  AutoRep phi;    // images of the canonical generators under phi
  AutoRep phi_m;  // images under phi^m
};

struct PrivateKey {
  GroupId group;
  uint64_t m = 0;
  /// Retained for tests; never serialized.
  Matrix conjugator;
};

struct Ciphertext {
  AutoRep phi_r;
  Matrix payload;
};

/// Exponent sampling bound: q^(2d) as an integer, saturated at 2^62 so the
/// exponent always fits machine words (element orders stay far below the
/// saturation point).
uint64_t exponent_bound(const GroupId& G);

struct KeygenOptions {
  std::optional<uint64_t> force_m;        // test hook
  std::optional<Matrix> force_conjugator; // test hook
};

/// Conjugator = random group element times a random diagonal similitude
/// (family A: a random invertible matrix); m uniform in [2, exponent_bound].
std::pair<PublicKey, PrivateKey> keygen(const GroupId& G, Rng& rng, const KeygenOptions& opts = {});

Ciphertext encrypt(const PublicKey& pk, const Matrix& message, Rng& rng,
                   std::optional<uint64_t> force_r = std::nullopt);

/// Recovers the conjugator of phi^{rm} by linear recovery and conjugates the
/// payload back; the scalar ambiguity cancels.
Matrix decrypt(const PrivateKey& sk, const Ciphertext& ct);

/// Byte <-> group element codec through the unipotent block [[I,R],[0,I]]
/// (embedded below the leading 1 for family B).  R runs over symmetric (C),
/// skew-symmetric (B/D) or strictly upper triangular (A) matrices; each free
/// entry carries floor(k log2 p) bits and one bit of the total is spent on a
/// terminator so decode(encode(x)) = x for every length including empty.
size_t codec_free_entries(const GroupId& G);
size_t codec_capacity(const GroupId& G);  // payload bytes
Matrix encode_bytes(const GroupId& G, const std::vector<uint8_t>& data);
std::vector<uint8_t> decode_bytes(const GroupId& G, const Matrix& M);

}  // namespace chevmor
