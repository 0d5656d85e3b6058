#include "chevmor/group.hpp"

#include "chevmor/generators.hpp"

namespace chevmor {

int GroupId::pos(int index) const {
  int l = rank;
  switch (family) {
    case Family::A:
      if (index < 1 || index > l + 1) throw BadIndex("A-family index");
      return index - 1;
    case Family::B:
      if (index == 0) return 0;
      if (index >= 1 && index <= l) return index;
      if (index <= -1 && index >= -l) return l - index;
      throw BadIndex("B-family index");
    case Family::C:
    case Family::D:
      if (index >= 1 && index <= l) return index - 1;
      if (index <= -1 && index >= -l) return l - index - 1;
      throw BadIndex("C/D-family index");
  }
  throw BadIndex("unknown family");
}

Matrix form_matrix(const GroupId& G) {
  const Field& F = G.field;
  int l = G.rank;
  int d = G.dim();
  Matrix b(d, d);
  switch (G.family) {
    case Family::A:
      throw NoForm("family A has no bilinear form");
    case Family::B:
      b.at(0, 0) = F.from_uint(2);
      for (int i = 1; i <= l; ++i) {
        b.at(G.pos(i), G.pos(-i)) = F.one();
        b.at(G.pos(-i), G.pos(i)) = F.one();
      }
      return b;
    case Family::C:
      for (int i = 1; i <= l; ++i) {
        b.at(G.pos(i), G.pos(-i)) = F.one();
        b.at(G.pos(-i), G.pos(i)) = F.from_int(-1);
      }
      return b;
    case Family::D:
      for (int i = 1; i <= l; ++i) {
        b.at(G.pos(i), G.pos(-i)) = F.one();
        b.at(G.pos(-i), G.pos(i)) = F.one();
      }
      return b;
  }
  throw NoForm("unknown family");
}

bool is_member(const GroupId& G, const Matrix& X) {
  if (X.rows != G.dim() || X.cols != G.dim()) throw DimMismatch("is_member");
  const Field& F = G.field;
  if (G.family == Family::A) return det(F, X) == F.one();
  Matrix b = form_matrix(G);
  return matmul(F, transpose(X), matmul(F, b, X)) == b;
}

FieldElement similitude_factor(const GroupId& G, const Matrix& X) {
  if (G.family == Family::A) throw NoForm("similitude factor needs a form");
  if (X.rows != G.dim() || X.cols != G.dim()) throw DimMismatch("similitude_factor");
  const Field& F = G.field;
  Matrix b = form_matrix(G);
  Matrix M = matmul(F, transpose(X), matmul(F, b, X));
  FieldElement mu = F.zero();
  for (int r = 0; r < b.rows && F.is_zero(mu); ++r)
    for (int c = 0; c < b.cols; ++c)
      if (!F.is_zero(b.at(r, c))) {
        mu = F.mul(M.at(r, c), F.inv(b.at(r, c)));
        break;
      }
  if (F.is_zero(mu) || !(M == scalar_mul(F, mu, b))) throw NotSimilitude("tXbX is not a scalar multiple of b");
  return mu;
}

Matrix sample_diagonal_similitude(const GroupId& G, Rng& rng) {
  const Field& F = G.field;
  int l = G.rank;
  Matrix m(G.dim(), G.dim());
  FieldElement mu;
  if (G.family == Family::B) {
    // alpha^2 = mu, so mu ranges over the squares
    FieldElement alpha = rng.nonzero(F);
    mu = F.mul(alpha, alpha);
    m.at(0, 0) = alpha;
  } else if (G.family == Family::C || G.family == Family::D) {
    mu = rng.nonzero(F);
  } else {
    throw NoForm("diagonal similitude needs a form");
  }
  for (int i = 1; i <= l; ++i) {
    FieldElement lam = rng.nonzero(F);
    m.at(G.pos(i), G.pos(i)) = lam;
    m.at(G.pos(-i), G.pos(-i)) = F.mul(mu, F.inv(lam));
  }
  return m;
}

namespace {

// All root shapes of the family, parameter left open, plus DZ/WL for B/D.
std::vector<GenLabel> label_shapes(const GroupId& G) {
  std::vector<GenLabel> shapes;
  int l = G.rank;
  switch (G.family) {
    case Family::A:
      for (int i = 1; i <= l + 1; ++i)
        for (int j = 1; j <= l + 1; ++j)
          if (i != j) shapes.push_back(make_root(GenKind::XPlain, i, j, {}));
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
          if (i != j) shapes.push_back(make_root(GenKind::XPlain, i, j, {}));
      for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) {
          shapes.push_back(make_root(GenKind::XUpper, i, j, {}));
          shapes.push_back(make_root(GenKind::XLower, i, j, {}));
        }
      if (G.family == Family::C) {
        for (int i = 1; i <= l; ++i) {
          shapes.push_back(make_root(GenKind::XShortU, i, 0, {}));
          shapes.push_back(make_root(GenKind::XShortL, i, 0, {}));
        }
      }
      if (G.family == Family::B) {
        for (int i = 1; i <= l; ++i) {
          shapes.push_back(make_root(GenKind::XB0Up, i, 0, {}));
          shapes.push_back(make_root(GenKind::XB0Lo, i, 0, {}));
        }
      }
      if (G.family == Family::B || G.family == Family::D) {
        shapes.push_back(make_dz(1));
        shapes.push_back(make_wl());
      }
      break;
  }
  return shapes;
}

}  // namespace

Matrix random_element(const GroupId& G, Rng& rng, int length) {
  if (length < 0) length = 10 * G.rank * G.rank;
  std::vector<GenLabel> shapes = label_shapes(G);
  Matrix m = identity(G.field, G.dim());
  for (int n = 0; n < length; ++n) {
    GenLabel lab = shapes[rng.below(shapes.size())];
    if (lab.kind != GenKind::DZ && lab.kind != GenKind::WL) lab.t = rng.nonzero(G.field);
    apply_right(G, m, lab);
  }
  return m;
}

}  // namespace chevmor
