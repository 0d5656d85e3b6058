#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chevmor/generators.hpp"

using namespace chevmor;

namespace {

std::vector<GroupId> small_grid() {
  std::vector<GroupId> gs;
  for (Family fam : {Family::A, Family::B, Family::C, Family::D})
    for (int l : {2, 3})
      for (auto [p, k] : {std::pair<uint32_t, uint32_t>{3, 1}, {5, 1}, {3, 2}})
        gs.push_back(GroupId{fam, l, Field(p, k)});
  return gs;
}

Matrix from_ints(const Field& F, int rows, int cols, const std::vector<int>& v) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows * cols; ++i) m.a[i] = F.from_int(v[i]);
  return m;
}

}  // namespace

TEST_CASE("form matrices match the fixed block displays") {
  SUBCASE("C_2 over F_3") {
    GroupId G{Family::C, 2, Field(3, 1)};
    CHECK(form_matrix(G) == from_ints(G.field, 4, 4,
                                      {0, 0, 1, 0,
                                       0, 0, 0, 1,
                                       2, 0, 0, 0,
                                       0, 2, 0, 0}));
  }
  SUBCASE("D_2 over F_3") {
    GroupId G{Family::D, 2, Field(3, 1)};
    CHECK(form_matrix(G) == from_ints(G.field, 4, 4,
                                      {0, 0, 1, 0,
                                       0, 0, 0, 1,
                                       1, 0, 0, 0,
                                       0, 1, 0, 0}));
  }
  SUBCASE("B_2 over F_5") {
    GroupId G{Family::B, 2, Field(5, 1)};
    CHECK(form_matrix(G) == from_ints(G.field, 5, 5,
                                      {2, 0, 0, 0, 0,
                                       0, 0, 0, 1, 0,
                                       0, 0, 0, 0, 1,
                                       0, 1, 0, 0, 0,
                                       0, 0, 1, 0, 0}));
  }
  SUBCASE("no form for family A") {
    GroupId G{Family::A, 2, Field(3, 1)};
    CHECK_THROWS_AS(form_matrix(G), NoForm);
  }
  SUBCASE("symmetry sign per family over the grid") {
    for (const GroupId& G : small_grid()) {
      if (G.family == Family::A) continue;
      Matrix b = form_matrix(G);
      Matrix bt = transpose(b);
      if (G.family == Family::C)
        CHECK(bt == scalar_mul(G.field, G.field.from_int(-1), b));
      else
        CHECK(bt == b);
      CHECK(!G.field.is_zero(det(G.field, b)));
    }
  }
}

TEST_CASE("membership") {
  GroupId G{Family::C, 2, Field(3, 1)};
  const Field& F = G.field;
  CHECK(is_member(G, identity(F, 4)));
  SUBCASE("x_{1,-1}(1) = I + e_{1,-1} is symplectic") {
    Matrix m = identity(F, 4);
    m.at(G.pos(1), G.pos(-1)) = F.one();
    CHECK(is_member(G, m));
  }
  SUBCASE("I + e_{1,2} without the mirror term is not") {
    Matrix m = identity(F, 4);
    m.at(G.pos(1), G.pos(2)) = F.one();
    CHECK(!is_member(G, m));
    CHECK_THROWS_AS(similitude_factor(G, m), NotSimilitude);
  }
  SUBCASE("SL membership is det = 1") {
    GroupId A{Family::A, 2, Field(5, 1)};
    Matrix m = identity(A.field, 3);
    m.at(0, 0) = A.field.from_uint(2);
    CHECK(!is_member(A, m));
    m.at(1, 1) = A.field.from_uint(3);  // det = 6 = 1 mod 5
    CHECK(is_member(A, m));
  }
}

TEST_CASE("every canonical generator is a member, five extra parameters per root") {
  for (const GroupId& G : small_grid()) {
    Rng rng(G.field.order() + uint64_t(G.rank) + uint64_t(char(G.family)));
    for (const GenLabel& lab : enumerate_generators(G)) {
      CHECK(is_member(G, gen_matrix(G, lab)));
      if (lab.kind == GenKind::DZ || lab.kind == GenKind::WL) continue;
      for (int n = 0; n < 5; ++n) {
        GenLabel l2 = lab;
        l2.t = rng.element(G.field);
        CHECK(is_member(G, gen_matrix(G, l2)));
      }
    }
  }
}

TEST_CASE("generator matrix displays") {
  SUBCASE("A_2: x_{1,2}(t) = I + t e_{1,2}") {
    GroupId G{Family::A, 2, Field(7, 1)};
    FieldElement t = G.field.from_uint(4);
    Matrix m = identity(G.field, 3);
    m.at(0, 1) = t;
    CHECK(gen_matrix(G, make_root(GenKind::XPlain, 1, 2, t)) == m);
  }
  SUBCASE("B_2: x_{1,0}(t) = I + t(2e_{1,0} - e_{0,-1}) - t^2 e_{1,-1}") {
    GroupId G{Family::B, 2, Field(7, 1)};
    const Field& F = G.field;
    FieldElement t = F.from_uint(3);
    Matrix m = identity(F, 5);
    m.at(G.pos(1), G.pos(0)) = F.add(t, t);
    m.at(G.pos(0), G.pos(-1)) = F.neg(t);
    m.at(G.pos(1), G.pos(-1)) = F.neg(F.mul(t, t));
    CHECK(gen_matrix(G, make_root(GenKind::XB0Up, 1, 0, t)) == m);
  }
  SUBCASE("D_2: d(zeta) over F_3 is diag(1,2,1,2)") {
    GroupId G{Family::D, 2, Field(3, 1)};
    Matrix m = from_ints(G.field, 4, 4,
                         {1, 0, 0, 0,
                          0, 2, 0, 0,
                          0, 0, 1, 0,
                          0, 0, 0, 2});
    CHECK(gen_matrix(G, make_dz(1)) == m);
  }
  SUBCASE("w_l squares to the identity") {
    for (Family fam : {Family::B, Family::D}) {
      GroupId G{fam, 3, Field(5, 1)};
      Matrix w = gen_matrix(G, make_wl());
      CHECK(matmul(G.field, w, w) == identity(G.field, G.dim()));
    }
  }
}

TEST_CASE("root subgroups are additive in the parameter") {
  for (const GroupId& G : small_grid()) {
    Rng rng(99 + G.field.order());
    for (const GenLabel& lab : enumerate_generators(G)) {
      if (lab.kind == GenKind::DZ || lab.kind == GenKind::WL) continue;
      for (int n = 0; n < 5; ++n) {
        GenLabel a = lab, b = lab, c = lab;
        a.t = rng.element(G.field);
        b.t = rng.element(G.field);
        c.t = G.field.add(a.t, b.t);
        CHECK(matmul(G.field, gen_matrix(G, a), gen_matrix(G, b)) == gen_matrix(G, c));
      }
    }
  }
}

TEST_CASE("gen_inverse inverts") {
  for (const GroupId& G : small_grid()) {
    Rng rng(5);
    for (GenLabel lab : enumerate_generators(G)) {
      if (lab.kind != GenKind::DZ && lab.kind != GenKind::WL) lab.t = rng.element(G.field);
      Matrix prod = matmul(G.field, gen_matrix(G, lab), gen_matrix(G, gen_inverse(G, lab)));
      CHECK(prod == identity(G.field, G.dim()));
    }
  }
}

TEST_CASE("canonical generating set sizes") {
  CHECK(enumerate_generators(GroupId{Family::C, 2, Field(5, 1)}).size() == 8);   // 2 l^2
  CHECK(enumerate_generators(GroupId{Family::D, 2, Field(5, 1)}).size() == 6);   // 4 roots + DZ + WL
  CHECK(enumerate_generators(GroupId{Family::A, 2, Field(5, 1)}).size() == 6);   // l(l+1)
  CHECK(enumerate_generators(GroupId{Family::B, 2, Field(5, 1)}).size() == 10);  // 8 roots + DZ + WL
  CHECK(enumerate_generators(GroupId{Family::C, 2, Field(3, 2)}).size() == 16);  // doubled by k
}

TEST_CASE("word evaluation") {
  GroupId G{Family::C, 2, Field(5, 1)};
  const Field& F = G.field;
  SUBCASE("empty word is the identity") { CHECK(word_eval(G, {}) == identity(F, 4)); }
  SUBCASE("the switching word x y x hits the displayed matrix") {
    Word w{make_root(GenKind::XShortU, 1, 0, F.one()), make_root(GenKind::XShortL, 1, 0, F.from_int(-1)),
           make_root(GenKind::XShortU, 1, 0, F.one())};
    CHECK(word_eval(G, w) == from_ints(F, 4, 4,
                                       {0, 0, 1, 0,
                                        0, 1, 0, 0,
                                        4, 0, 0, 0,
                                        0, 0, 0, 1}));
  }
  SUBCASE("concatenation multiplies") {
    Rng rng(17);
    Matrix a = random_element(G, rng, 8);
    Word w1, w2;
    for (int n = 0; n < 6; ++n) {
      w1.push_back(make_root(GenKind::XShortU, 1 + int(rng.below(2)), 0, rng.nonzero(F)));
      w2.push_back(make_root(GenKind::XShortL, 1 + int(rng.below(2)), 0, rng.nonzero(F)));
    }
    Word cat = w1;
    cat.insert(cat.end(), w2.begin(), w2.end());
    CHECK(word_eval(G, cat) == matmul(F, word_eval(G, w1), word_eval(G, w2)));
    (void)a;
  }
  SUBCASE("a word followed by its reversed inverse cancels") {
    for (const GroupId& H : small_grid()) {
      Rng rng(23);
      Word w;
      auto labels = enumerate_generators(H);
      for (int n = 0; n < 12; ++n) {
        GenLabel lab = labels[rng.below(labels.size())];
        if (lab.kind != GenKind::DZ && lab.kind != GenKind::WL) lab.t = rng.nonzero(H.field);
        w.push_back(lab);
      }
      Word undo = w;
      for (auto it = w.rbegin(); it != w.rend(); ++it) undo.push_back(gen_inverse(H, *it));
      CHECK(word_eval(H, undo) == identity(H.field, H.dim()));
    }
  }
  SUBCASE("apply_left and apply_right agree with dense multiplication") {
    for (const GroupId& H : small_grid()) {
      Rng rng(31);
      Matrix m = random_element(H, rng, 10);
      auto labels = enumerate_generators(H);
      GenLabel lab = labels[rng.below(labels.size())];
      Matrix lhs = m, rhs = m;
      apply_left(H, lab, lhs);
      apply_right(H, rhs, lab);
      CHECK(lhs == matmul(H.field, gen_matrix(H, lab), m));
      CHECK(rhs == matmul(H.field, m, gen_matrix(H, lab)));
    }
  }
}

TEST_CASE("bad labels are rejected") {
  GroupId G{Family::C, 2, Field(3, 1)};
  CHECK_THROWS_AS(validate_label(G, make_root(GenKind::XPlain, 1, 1, G.field.one())), BadLabel);
  CHECK_THROWS_AS(validate_label(G, make_root(GenKind::XUpper, 2, 1, G.field.one())), BadLabel);
  CHECK_THROWS_AS(validate_label(G, make_root(GenKind::XB0Up, 1, 0, G.field.one())), BadLabel);
  CHECK_THROWS_AS(validate_label(G, make_dz(1)), BadLabel);
  GroupId A{Family::A, 2, Field(3, 1)};
  CHECK_THROWS_AS(validate_label(A, make_root(GenKind::XUpper, 1, 2, A.field.one())), BadLabel);
  CHECK_THROWS_AS(validate_label(A, make_root(GenKind::XPlain, 1, 4, A.field.one())), BadLabel);
}

TEST_CASE("similitude factors") {
  GroupId G{Family::C, 2, Field(7, 1)};
  const Field& F = G.field;
  CHECK(similitude_factor(G, identity(F, 4)) == F.one());
  SUBCASE("diagonal similitudes expose mu") {
    Rng rng(13);
    for (int n = 0; n < 100; ++n) {
      Matrix m = sample_diagonal_similitude(G, rng);
      FieldElement mu = similitude_factor(G, m);
      CHECK(m.at(G.pos(-1), G.pos(-1)) == F.mul(mu, F.inv(m.at(G.pos(1), G.pos(1)))));
    }
  }
  SUBCASE("multiplicative on random similitude pairs") {
    for (const GroupId& H : small_grid()) {
      if (H.family == Family::A) continue;
      Rng rng(29);
      for (int n = 0; n < 20; ++n) {
        Matrix a = matmul(H.field, random_element(H, rng, 12), sample_diagonal_similitude(H, rng));
        Matrix b = matmul(H.field, random_element(H, rng, 12), sample_diagonal_similitude(H, rng));
        FieldElement lhs = similitude_factor(H, matmul(H.field, a, b));
        CHECK(lhs == H.field.mul(similitude_factor(H, a), similitude_factor(H, b)));
      }
    }
  }
  SUBCASE("family B carries alpha with alpha^2 = mu") {
    GroupId B{Family::B, 2, Field(5, 1)};
    Rng rng(37);
    for (int n = 0; n < 50; ++n) {
      Matrix m = sample_diagonal_similitude(B, rng);
      FieldElement alpha = m.at(0, 0);
      CHECK(B.field.mul(alpha, alpha) == similitude_factor(B, m));
    }
  }
}

TEST_CASE("random elements and closure") {
  for (const GroupId& G : small_grid()) {
    Rng rng(41 + uint64_t(char(G.family)));
    CHECK(random_element(G, rng, 0) == identity(G.field, G.dim()));
    for (int n = 0; n < 25; ++n) {
      Matrix x = random_element(G, rng, 30);
      Matrix y = random_element(G, rng, 30);
      CHECK(is_member(G, x));
      CHECK(is_member(G, matmul(G.field, x, y)));
      CHECK(is_member(G, matinv(G.field, x)));
      if (G.family != Family::A) {
        Matrix dsim = sample_diagonal_similitude(G, rng);
        Matrix conj = matmul(G.field, dsim, matmul(G.field, x, matinv(G.field, dsim)));
        CHECK(is_member(G, conj));
      }
    }
  }
}

TEST_CASE("200 random length-50 words in O(5,3) satisfy the form identity") {
  GroupId G{Family::B, 2, Field(3, 1)};
  Rng rng(53);
  Matrix b = form_matrix(G);
  for (int n = 0; n < 200; ++n) {
    Matrix x = random_element(G, rng, 50);
    CHECK(matmul(G.field, transpose(x), matmul(G.field, b, x)) == b);
  }
}
