#include "chevmor/mor.hpp"

namespace chevmor {

uint64_t exponent_bound(const GroupId& G) {
  const uint64_t cap = uint64_t(1) << 62;
  uint64_t q = G.field.order();
  uint64_t b = 1;
  for (int i = 0; i < 2 * G.dim(); ++i) {
    if (b > cap / q) return cap;
    b *= q;
  }
  return b;
}

std::pair<PublicKey, PrivateKey> keygen(const GroupId& G, Rng& rng, const KeygenOptions& opts) {
  const Field& F = G.field;
  Matrix c;
  if (opts.force_conjugator) {
    c = *opts.force_conjugator;
  } else if (G.family == Family::A) {
    int d = G.dim();
    do {
      c = Matrix(d, d);
      for (auto& v : c.a) v = rng.element(F);
    } while (F.is_zero(det(F, c)));
  } else {
    c = matmul(F, random_element(G, rng), sample_diagonal_similitude(G, rng));
  }
  uint64_t m = opts.force_m ? *opts.force_m : rng.range(2, exponent_bound(G));
  AutoRep phi = auto_from_conjugation(G, c);
  AutoRep phi_m = auto_pow(phi, m);
  return {PublicKey{G, std::move(phi), std::move(phi_m)}, PrivateKey{G, m, std::move(c)}};
}

Ciphertext encrypt(const PublicKey& pk, const Matrix& message, Rng& rng, std::optional<uint64_t> force_r) {
  if (!is_member(pk.group, message)) throw NotMember("plaintext matrix outside the group");
  uint64_t r = force_r ? *force_r : rng.range(2, exponent_bound(pk.group));
  AutoRep phi_r = auto_pow(pk.phi, r);
  AutoRep phi_rm = auto_pow(pk.phi_m, r);
  Matrix payload = auto_apply(phi_rm, message);
  return Ciphertext{std::move(phi_r), std::move(payload)};
}

Matrix decrypt(const PrivateKey& sk, const Ciphertext& ct) {
  const GroupId& G = ct.phi_r.group;
  if (!(G == sk.group)) throw GroupMismatch("decrypt: key and ciphertext groups differ");
  if (!is_member(G, ct.payload)) throw NotMember("ciphertext payload outside the group");
  AutoRep phi_mr = auto_pow(ct.phi_r, sk.m);
  Matrix h;
  try {
    h = recover_conjugator_linear(phi_mr);
  } catch (const AmbiguousRecovery& e) {
    throw RecoveryFailed(e.what());
  } catch (const Singular& e) {
    throw RecoveryFailed(e.what());
  }
  return matmul(G.field, matinv(G.field, h), matmul(G.field, ct.payload, h));
}

// ---- codec ------------------------------------------------------------

namespace {

// Free positions of the block R, as (i, j) basis index pairs in fill order.
std::vector<std::pair<int, int>> free_positions(const GroupId& G) {
  std::vector<std::pair<int, int>> pos;
  int l = G.rank;
  switch (G.family) {
    case Family::A:
      for (int i = 1; i <= l + 1; ++i)
        for (int j = i + 1; j <= l + 1; ++j) pos.emplace_back(i, j);
      break;
    case Family::C:
      for (int i = 1; i <= l; ++i)
        for (int j = i; j <= l; ++j) pos.emplace_back(i, j);
      break;
    case Family::B:
    case Family::D:
      for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) pos.emplace_back(i, j);
      break;
  }
  return pos;
}

uint32_t bits_per_entry(const Field& F) {
  uint32_t b = 0;
  uint64_t v = 1;
  while (v <= F.order() / 2) {
    v *= 2;
    ++b;
  }
  return b;
}

}  // namespace

size_t codec_free_entries(const GroupId& G) { return free_positions(G).size(); }

size_t codec_capacity(const GroupId& G) {
  size_t bits = codec_free_entries(G) * bits_per_entry(G.field);
  return bits == 0 ? 0 : (bits - 1) / 8;
}

Matrix encode_bytes(const GroupId& G, const std::vector<uint8_t>& data) {
  const Field& F = G.field;
  if (data.size() > codec_capacity(G)) throw TooLong("payload exceeds codec capacity");
  Matrix M = identity(F, G.dim());
  if (data.empty()) return M;

  auto positions = free_positions(G);
  uint32_t b = bits_per_entry(F);
  size_t total_bits = positions.size() * b;
  std::vector<bool> bits(total_bits, false);
  for (size_t i = 0; i < data.size(); ++i)
    for (int k = 0; k < 8; ++k) bits[i * 8 + k] = (data[i] >> (7 - k)) & 1;
  bits[data.size() * 8] = true;  // terminator

  for (size_t e = 0; e < positions.size(); ++e) {
    uint64_t v = 0;
    for (uint32_t k = 0; k < b; ++k) v = (v << 1) | uint64_t(bits[e * b + k]);
    if (v == 0) continue;
    FieldElement val = F.element(v);
    auto [i, j] = positions[e];
    if (G.family == Family::A) {
      M.at(G.pos(i), G.pos(j)) = val;
    } else {
      M.at(G.pos(i), G.pos(-j)) = val;
      if (i != j) M.at(G.pos(j), G.pos(-i)) = G.family == Family::C ? val : F.neg(val);
    }
  }
  return M;
}

std::vector<uint8_t> decode_bytes(const GroupId& G, const Matrix& M) {
  const Field& F = G.field;
  int d = G.dim();
  if (M.rows != d || M.cols != d) throw NotCodecShape("wrong dimensions");

  auto positions = free_positions(G);
  // everything outside the free block must look like the identity
  Matrix expect = identity(F, d);
  for (const auto& [i, j] : positions) {
    if (G.family == Family::A) {
      expect.at(G.pos(i), G.pos(j)) = M.at(G.pos(i), G.pos(j));
    } else {
      expect.at(G.pos(i), G.pos(-j)) = M.at(G.pos(i), G.pos(-j));
      if (i != j) {
        const FieldElement& v = M.at(G.pos(i), G.pos(-j));
        FieldElement mirror = G.family == Family::C ? v : F.neg(v);
        if (!(M.at(G.pos(j), G.pos(-i)) == mirror)) throw NotCodecShape("mirror entry mismatch");
        expect.at(G.pos(j), G.pos(-i)) = M.at(G.pos(j), G.pos(-i));
      }
    }
  }
  if (!(expect == M)) throw NotCodecShape("matrix is not a codec unipotent block");

  uint32_t b = bits_per_entry(F);
  std::vector<bool> bits(positions.size() * b, false);
  for (size_t e = 0; e < positions.size(); ++e) {
    auto [i, j] = positions[e];
    const FieldElement& val =
        G.family == Family::A ? M.at(G.pos(i), G.pos(j)) : M.at(G.pos(i), G.pos(-j));
    uint64_t v = F.ordinal(val);
    if (v >> b) throw NotCodecShape("entry outside packed range");
    for (uint32_t k = 0; k < b; ++k) bits[e * b + k] = (v >> (b - 1 - k)) & 1;
  }
  int last = -1;
  for (int i = int(bits.size()) - 1; i >= 0; --i)
    if (bits[i]) {
      last = i;
      break;
    }
  if (last < 0) return {};
  if (last % 8 != 0) throw NotCodecShape("terminator misaligned");
  size_t len = size_t(last) / 8;
  std::vector<uint8_t> out(len, 0);
  for (size_t i = 0; i < len; ++i)
    for (int k = 0; k < 8; ++k) out[i] = uint8_t((out[i] << 1) | uint8_t(bits[i * 8 + k]));
  return out;
}

}  // namespace chevmor
