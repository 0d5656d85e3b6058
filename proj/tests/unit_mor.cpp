#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "chevmor/io.hpp"

using namespace chevmor;

TEST_CASE("keygen invariants and test hooks") {
  GroupId G{Family::C, 2, Field(3, 1)};
  Rng rng(5);
  SUBCASE("forced m = 1 makes both reps equal") {
    KeygenOptions opts;
    opts.force_m = 1;
    auto [pk, sk] = keygen(G, rng, opts);
    CHECK(same_images(pk.phi, pk.phi_m));
    CHECK(sk.m == 1);
  }
  SUBCASE("forced identity conjugator gives the identity rep") {
    KeygenOptions opts;
    opts.force_conjugator = identity(G.field, 4);
    auto [pk, sk] = keygen(G, rng, opts);
    CHECK(same_images(pk.phi, identity_automorphism(G)));
    CHECK(same_images(pk.phi_m, pk.phi));
  }
  SUBCASE("random keygen over Sp(4,3) satisfies the rep invariants") {
    auto [pk, sk] = keygen(G, rng);
    CHECK(sk.m >= 2);
    for (const Matrix& img : pk.phi.images) CHECK(is_member(G, img));
    for (const Matrix& img : pk.phi_m.images) CHECK(is_member(G, img));
    // key equation with the retained conjugator, checked at matrix level
    CHECK(same_images(pk.phi, auto_from_conjugation(G, sk.conjugator)));
  }
  SUBCASE("key equation phi^m = phi_m for a small forced m") {
    KeygenOptions opts;
    opts.force_m = 5;
    auto [pk, sk] = keygen(G, rng, opts);
    CHECK(same_images(auto_pow(pk.phi, sk.m), pk.phi_m));
  }
}

TEST_CASE("encrypt/decrypt") {
  GroupId G{Family::C, 2, Field(3, 1)};
  Rng rng(17);
  SUBCASE("identity plaintext stays the identity") {
    KeygenOptions opts;
    opts.force_m = 3;
    auto [pk, sk] = keygen(G, rng, opts);
    Ciphertext ct = encrypt(pk, identity(G.field, 4), rng, 4);
    CHECK(ct.payload == identity(G.field, 4));
    CHECK(decrypt(sk, ct) == identity(G.field, 4));
  }
  SUBCASE("forced exponents match direct conjugation by c^{rm}") {
    KeygenOptions opts;
    opts.force_m = 3;
    auto [pk, sk] = keygen(G, rng, opts);
    Matrix msg = random_element(G, rng);
    uint64_t r = 5;
    Ciphertext ct = encrypt(pk, msg, rng, r);
    Matrix crm = matpow(G.field, sk.conjugator, r * sk.m);
    CHECK(ct.payload == matmul(G.field, crm, matmul(G.field, msg, matinv(G.field, crm))));
    CHECK(decrypt(sk, ct) == msg);
  }
  SUBCASE("roundtrip with fully random keys") {
    for (int n = 0; n < 5; ++n) {
      auto [pk, sk] = keygen(G, rng);
      Matrix msg = random_element(G, rng);
      Ciphertext ct = encrypt(pk, msg, rng);
      CHECK(is_member(G, ct.payload));
      CHECK(decrypt(sk, ct) == msg);
    }
  }
  SUBCASE("non-member plaintext is rejected") {
    auto [pk, sk] = keygen(G, rng);
    Matrix bad = identity(G.field, 4);
    bad.at(0, 1) = G.field.one();
    CHECK_THROWS_AS(encrypt(pk, bad, rng), NotMember);
  }
  SUBCASE("tampered payload is flagged") {
    KeygenOptions opts;
    opts.force_m = 3;
    auto [pk, sk] = keygen(G, rng, opts);
    Ciphertext ct = encrypt(pk, random_element(G, rng), rng);
    ct.payload.at(0, 1) = G.field.add(ct.payload.at(0, 1), G.field.one());
    CHECK_THROWS_AS(decrypt(sk, ct), Error);  // NotMember or RecoveryFailed
  }
}

TEST_CASE("codec") {
  SUBCASE("free entry counts match the block shapes") {
    CHECK(codec_free_entries(GroupId{Family::C, 2, Field(3, 1)}) == 3);   // l(l+1)/2
    CHECK(codec_free_entries(GroupId{Family::C, 4, Field(7, 1)}) == 10);
    CHECK(codec_free_entries(GroupId{Family::B, 3, Field(3, 1)}) == 3);   // l(l-1)/2
    CHECK(codec_free_entries(GroupId{Family::D, 4, Field(3, 1)}) == 6);
    CHECK(codec_free_entries(GroupId{Family::A, 2, Field(3, 1)}) == 3);   // l(l+1)/2, d = l+1
    CHECK(codec_free_entries(GroupId{Family::A, 4, Field(3, 1)}) == 10);
  }
  SUBCASE("empty payload is the identity") {
    for (Family fam : {Family::A, Family::B, Family::C, Family::D}) {
      GroupId G{fam, 3, Field(5, 1)};
      CHECK(encode_bytes(G, {}) == identity(G.field, G.dim()));
      CHECK(decode_bytes(G, identity(G.field, G.dim())).empty());
    }
  }
  SUBCASE("a single zero byte packs zero digits but stays distinguishable") {
    GroupId G{Family::C, 4, Field(7, 1)};
    Matrix m = encode_bytes(G, {0});
    CHECK(!(m == identity(G.field, G.dim())));
    CHECK(decode_bytes(G, m) == std::vector<uint8_t>{0});
  }
  SUBCASE("roundtrip of 8-byte payloads over the rank-8 symplectic group / F_7") {
    GroupId G{Family::C, 8, Field(7, 1)};
    CHECK(codec_capacity(G) >= 8);
    Rng rng(23);
    for (int n = 0; n < 100; ++n) {
      std::vector<uint8_t> data(8);
      for (auto& b : data) b = uint8_t(rng.below(256));
      Matrix m = encode_bytes(G, data);
      CHECK(is_member(G, m));
      CHECK(decode_bytes(G, m) == data);
    }
  }
  SUBCASE("all lengths up to capacity roundtrip, all families") {
    Rng rng(29);
    for (Family fam : {Family::A, Family::B, Family::C, Family::D}) {
      GroupId G{fam, 4, Field(9 < 7 ? 7 : 7, 1)};
      size_t cap = codec_capacity(G);
      for (size_t len = 0; len <= cap; ++len) {
        std::vector<uint8_t> data(len);
        for (auto& b : data) b = uint8_t(rng.below(256));
        Matrix m = encode_bytes(G, data);
        CHECK(is_member(G, m));
        CHECK(decode_bytes(G, m) == data);
      }
      std::vector<uint8_t> too_long(cap + 1, 0xAB);
      CHECK_THROWS_AS(encode_bytes(G, too_long), TooLong);
    }
  }
  SUBCASE("extension fields pack k digits per entry") {
    GroupId G{Family::D, 4, Field(3, 2)};
    Rng rng(31);
    size_t cap = codec_capacity(G);
    CHECK(cap >= 1);
    std::vector<uint8_t> data(cap);
    for (auto& b : data) b = uint8_t(rng.below(256));
    CHECK(decode_bytes(G, encode_bytes(G, data)) == data);
  }
  SUBCASE("non-codec matrices are rejected") {
    GroupId G{Family::C, 2, Field(3, 1)};
    Matrix bad = identity(G.field, 4);
    bad.at(G.pos(-1), G.pos(1)) = G.field.one();  // lower-left entry
    CHECK_THROWS_AS(decode_bytes(G, bad), NotCodecShape);
    GroupId D{Family::D, 3, Field(3, 1)};
    Matrix skewbad = identity(D.field, 6);
    skewbad.at(D.pos(1), D.pos(-2)) = D.field.one();
    skewbad.at(D.pos(2), D.pos(-1)) = D.field.one();  // mirror must be -1
    CHECK_THROWS_AS(decode_bytes(D, skewbad), NotCodecShape);
  }
}

TEST_CASE("text round-trips") {
  GroupId G{Family::B, 2, Field(3, 2)};
  Rng rng(37);
  SUBCASE("group header") {
    std::string h = group_to_text(G);
    CHECK(group_from_text(h) == G);
    CHECK(h == "family=B l=2 p=3 k=2 mod=1,0,1");
  }
  SUBCASE("field elements and matrices") {
    Matrix m = random_element(G, rng, 15);
    std::ostringstream os;
    write_matrix(os, G.field, m);
    std::istringstream is(os.str());
    LineReader r(is);
    CHECK(read_matrix(r, G.field, m.rows, m.cols) == m);
  }
  SUBCASE("words") {
    Matrix g = random_element(G, rng, 15);
    auto [w, ctr] = decompose(G, g);
    std::ostringstream os;
    write_word(os, G, w);
    std::istringstream is(os.str());
    Word back = read_word(is, G);
    CHECK(back == w);
    CHECK(word_eval(G, back) == g);
  }
  SUBCASE("label grammar") {
    CHECK(label_to_text(G, make_dz(3)) == "DZ e=3");
    CHECK(label_to_text(G, make_wl()) == "WL");
    GenLabel up = make_root(GenKind::XUpper, 1, 2, G.field.element(5));
    CHECK(label_from_text(G, label_to_text(G, up)) == up);
    CHECK_THROWS_AS(label_from_text(G, "XQ 1 2 t=0,0"), ParseError);
    CHECK_THROWS_AS(label_from_text(G, "XSU 1 t=0,0"), BadLabel);  // C-only kind
  }
  SUBCASE("keys and ciphertexts") {
    GroupId C2{Family::C, 2, Field(3, 1)};
    Rng krng(41);
    KeygenOptions opts;
    opts.force_m = 4;
    auto [pk, sk] = keygen(C2, krng, opts);
    std::ostringstream pks, sks;
    write_public_key(pks, pk);
    write_private_key(sks, sk);
    std::istringstream pki(pks.str()), ski(sks.str());
    PublicKey pk2 = read_public_key(pki);
    PrivateKey sk2 = read_private_key(ski);
    CHECK(same_images(pk2.phi, pk.phi));
    CHECK(same_images(pk2.phi_m, pk.phi_m));
    CHECK(sk2.m == sk.m);
    Ciphertext ct = encrypt(pk, random_element(C2, krng), krng, 3);
    std::ostringstream cts;
    write_ciphertext(cts, ct);
    std::istringstream cti(cts.str());
    Ciphertext ct2 = read_ciphertext(cti);
    CHECK(same_images(ct2.phi_r, ct.phi_r));
    CHECK(ct2.payload == ct.payload);
    CHECK(decrypt(sk2, ct2) == decrypt(sk, ct));
  }
}

TEST_CASE("exponent bound") {
  GroupId G{Family::C, 2, Field(3, 1)};
  CHECK(exponent_bound(G) == 6561ull);  // 3^8 = q^(2d) with d = 4
  GroupId big{Family::C, 16, Field(9 - 2, 1)};
  CHECK(exponent_bound(big) == (uint64_t(1) << 62));  // saturated
}
