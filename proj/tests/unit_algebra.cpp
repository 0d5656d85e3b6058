#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "chevmor/field.hpp"
#include "chevmor/matrix.hpp"
#include "chevmor/rng.hpp"

using namespace chevmor;

namespace {

// Independent oracle: the set of nonzero squares by brute-force enumeration.
std::set<uint64_t> square_ordinals(const Field& F) {
  std::set<uint64_t> sq;
  for (uint64_t i = 1; i < F.order(); ++i) {
    FieldElement x = F.element(i);
    sq.insert(F.ordinal(F.mul(x, x)));
  }
  return sq;
}

std::vector<Field> test_grid() {
  return {Field(3, 1), Field(5, 1), Field(7, 1), Field(3, 2), Field(5, 2), Field(7, 2)};
}

}  // namespace

TEST_CASE("prime field basics in F_7") {
  Field F(7, 1);
  CHECK(F.order() == 7);
  CHECK(F.mul(F.from_uint(3), F.from_uint(5)) == F.one());  // 15 = 1 mod 7
  CHECK(F.inv(F.from_uint(3)) == F.from_uint(5));
  CHECK(F.inv(F.one()) == F.one());
  CHECK_THROWS_AS(F.inv(F.zero()), ZeroInverse);
}

TEST_CASE("F_9 arithmetic against the modulus theta^2 + 1") {
  Field F(3, 2);
  CHECK(F.order() == 9);
  // lexicographically smallest irreducible monic quadratic over F_3
  CHECK(F.modulus() == std::vector<uint32_t>{1, 0, 1});
  FieldElement theta = F.theta_power(1);
  CHECK(F.mul(theta, theta) == F.from_uint(2));               // theta^2 = -1 = 2
  CHECK(F.inv(theta) == F.mul(F.from_uint(2), theta));        // theta * 2theta = 1
  CHECK(F.mul(theta, F.inv(theta)) == F.one());
}

TEST_CASE("multiplication by one is the identity on random elements") {
  Field F(7, 1);
  Rng rng(42);
  for (int n = 0; n < 50; ++n) {
    FieldElement a = rng.element(F);
    CHECK(F.mul(a, F.one()) == a);
  }
}

TEST_CASE("canonical non-square") {
  // frozen from the enumeration oracle: squares mod 7 = {1,2,4}, mod 3 = {1}
  CHECK(square_ordinals(Field(7, 1)) == std::set<uint64_t>{1, 2, 4});
  CHECK(Field(7, 1).nonsquare() == Field(7, 1).from_uint(3));
  CHECK(Field(3, 1).nonsquare() == Field(3, 1).from_uint(2));
  SUBCASE("zeta is the smallest non-square in canonical order, whole grid") {
    for (const Field& F : test_grid()) {
      auto sq = square_ordinals(F);
      uint64_t smallest = 0;
      for (uint64_t i = 1; i < F.order(); ++i)
        if (!sq.count(i)) {
          smallest = i;
          break;
        }
      CHECK(F.ordinal(F.nonsquare()) == smallest);
      CHECK(F.pow(F.nonsquare(), (F.order() - 1) / 2) == F.neg(F.one()));
    }
  }
  SUBCASE("F_9: the oracle puts zeta at 1+theta") {
    // theta^2 = -1 makes theta itself a square ((theta+2)^2 = theta); the
    // enumeration picks 1+theta as the first non-square.
    Field F(3, 2);
    auto sq = square_ordinals(F);
    CHECK(sq.count(F.ordinal(F.theta_power(1))) == 1);
    FieldElement expect = F.add(F.one(), F.theta_power(1));
    CHECK(F.nonsquare() == expect);
  }
}

TEST_CASE("square roots") {
  Field F7(7, 1);
  CHECK(F7.sqrt(F7.from_uint(2)) == F7.from_uint(3));  // roots 3 and 4, keep 3
  CHECK(F7.sqrt(F7.zero()) == F7.zero());
  CHECK(!F7.sqrt(F7.from_uint(3)));                    // 3 is not in {1,2,4}
  SUBCASE("sqrt(x^2) returns x or -x, exhaustively for q <= 49") {
    for (const Field& F : test_grid()) {
      for (uint64_t i = 0; i < F.order(); ++i) {
        FieldElement x = F.element(i);
        auto r = F.sqrt(F.mul(x, x));
        REQUIRE(r);
        CHECK((*r == x || *r == F.neg(x)));
      }
    }
  }
  SUBCASE("non-squares report NotASquare, exhaustively") {
    for (const Field& F : test_grid()) {
      auto sq = square_ordinals(F);
      for (uint64_t i = 1; i < F.order(); ++i) {
        CHECK(bool(F.sqrt(F.element(i))) == bool(sq.count(i)));
        CHECK(F.is_square(F.element(i)) == bool(sq.count(i)));
      }
    }
  }
  SUBCASE("Tonelli-Shanks agrees with exhaustive search") {
    for (const Field& F : {Field(101, 1), Field(7, 2), Field(3, 4)}) {
      for (uint64_t i = 0; i < std::min<uint64_t>(F.order(), 400); ++i) {
        FieldElement a = F.element(i);
        auto ex = FieldTestHook::sqrt_exhaustive(F, a);
        auto ts = F.is_zero(a) ? std::optional<FieldElement>(F.zero()) : FieldTestHook::sqrt_tonelli(F, a);
        CHECK(bool(ex) == bool(ts));
        if (ex) CHECK(*ex == *ts);
      }
    }
  }
}

TEST_CASE("field axioms on random triples") {
  for (const Field& F : test_grid()) {
    Rng rng(7 + F.order());
    for (int n = 0; n < 500; ++n) {
      FieldElement a = rng.element(F), b = rng.element(F), c = rng.element(F);
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      if (!F.is_zero(a)) CHECK(F.mul(a, F.inv(a)) == F.one());
      CHECK(F.add(a, F.neg(a)) == F.zero());
      CHECK(F.sub(a, b) == F.add(a, F.neg(b)));
    }
  }
}

TEST_CASE("element ordering and ordinals round-trip") {
  for (const Field& F : test_grid()) {
    for (uint64_t i = 0; i + 1 < std::min<uint64_t>(F.order(), 200); ++i) {
      CHECK(F.ordinal(F.element(i)) == i);
      CHECK(F.less(F.element(i), F.element(i + 1)));
    }
  }
}

TEST_CASE("unipotent inverse over F_7") {
  Field F(7, 1);
  Matrix A(2, 2);
  A.at(0, 0) = F.one();
  A.at(0, 1) = F.one();
  A.at(1, 1) = F.one();
  Matrix Ainv = matinv(F, A);
  CHECK(Ainv.at(0, 1) == F.from_uint(6));
  CHECK(matmul(F, A, Ainv) == identity(F, 2));
}

TEST_CASE("matrix identities on random input") {
  Field F(5, 1);
  Rng rng(11);
  auto random_matrix = [&](int d) {
    Matrix m(d, d);
    for (auto& v : m.a) v = rng.element(F);
    return m;
  };
  SUBCASE("I * A = A") {
    Matrix A = random_matrix(4);
    CHECK(matmul(F, identity(F, 4), A) == A);
    CHECK(matmul(F, A, identity(F, 4)) == A);
  }
  SUBCASE("inverse of a random invertible 6x6 composes to I") {
    Matrix A;
    do {
      A = random_matrix(6);
    } while (F.is_zero(det(F, A)));
    CHECK(matmul(F, A, matinv(F, A)) == identity(F, 6));
    CHECK(matinv(F, matinv(F, A)) == A);
  }
  SUBCASE("transpose is an involution") {
    Matrix A = random_matrix(5);
    CHECK(transpose(transpose(A)) == A);
  }
  SUBCASE("singular matrix throws") {
    Matrix Z(3, 3);
    CHECK_THROWS_AS(matinv(F, Z), Singular);
  }
  SUBCASE("dimension mismatch throws") {
    CHECK_THROWS_AS(matmul(F, Matrix(2, 3), Matrix(2, 3)), DimMismatch);
  }
}

TEST_CASE("determinant is multiplicative") {
  Field F(7, 1);
  Rng rng(3);
  for (int n = 0; n < 30; ++n) {
    Matrix A(4, 4), B(4, 4);
    for (auto& v : A.a) v = rng.element(F);
    for (auto& v : B.a) v = rng.element(F);
    CHECK(det(F, matmul(F, A, B)) == F.mul(det(F, A), det(F, B)));
  }
}
