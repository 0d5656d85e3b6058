#include "chevmor/attack.hpp"

namespace chevmor {

namespace {

// Normalize so the first nonzero entry of the first nonzero column is 1.
Matrix normalize_leading(const Field& F, Matrix m) {
  for (int c = 0; c < m.cols; ++c)
    for (int r = 0; r < m.rows; ++r)
      if (!F.is_zero(m.at(r, c))) return scalar_mul(F, F.inv(m.at(r, c)), m);
  throw Inconsistent("recovered matrix is zero");
}

const Matrix& image_at(const AutoRep& rep, GenKind kind, int i, int j) {
  int idx = canonical_index(rep.group, kind, i, j, 0);
  if (idx < 0) throw Inconsistent("canonical label missing");
  return rep.images[size_t(idx)];
}

// First nonzero column of M, or -1.
int first_nonzero_column(const Field& F, const Matrix& M) {
  for (int c = 0; c < M.cols; ++c)
    for (int r = 0; r < M.rows; ++r)
      if (!F.is_zero(M.at(r, c))) return c;
  return -1;
}

void set_column(Matrix& dst, int col, const Field& F, const Matrix& src, int src_col) {
  (void)F;
  for (int r = 0; r < dst.rows; ++r) dst.at(r, col) = src.at(r, src_col);
}

}  // namespace

Matrix recover_conjugator_fast(const AutoRep& phi) {
  const GroupId& G = phi.group;
  const Field& F = G.field;
  int d = G.dim();
  int l = G.rank;
  if (G.family != Family::A && G.family != Family::C)
    throw FamilyUnsupported("fast recovery works for families A and C only");

  Matrix I = identity(F, d);
  Matrix N(d, d);
  if (G.family == Family::A) {
    // image of x_{i,j}(1) - I = g e_{i,j} g^{-1}: every nonzero column is a
    // multiple of column i of g
    for (int i = 1; i <= d; ++i) {
      int j = i % d + 1;
      Matrix P = matsub(F, image_at(phi, GenKind::XPlain, i, j), I);
      int c = first_nonzero_column(F, P);
      if (c < 0) throw Inconsistent("zero root image");
      set_column(N, G.pos(i), F, P, c);
    }
  } else {
    for (int i = 1; i <= l; ++i) {
      Matrix P = matsub(F, image_at(phi, GenKind::XShortU, i, 0), I);
      int c = first_nonzero_column(F, P);
      if (c < 0) throw Inconsistent("zero root image");
      set_column(N, G.pos(i), F, P, c);
      Matrix Q = matsub(F, image_at(phi, GenKind::XShortL, i, 0), I);
      c = first_nonzero_column(F, Q);
      if (c < 0) throw Inconsistent("zero root image");
      set_column(N, G.pos(-i), F, Q, c);
    }
  }

  Matrix Ninv;
  try {
    Ninv = matinv(F, N);
  } catch (const Singular&) {
    throw Inconsistent("extracted columns are not independent");
  }

  // N = gD with D diagonal; conjugating the root images back by N leaves
  // D^{-1} e_r D, whose entries are the ratios needed to undo D.
  auto ratio = [&](GenKind kind, int i, int j, int row_index, int col_index) {
    Matrix T = matmul(F, Ninv, matmul(F, matsub(F, image_at(phi, kind, i, j), I), N));
    return T.at(G.pos(row_index), G.pos(col_index));
  };

  Matrix scaled = N;
  auto scale_column = [&](int index, const FieldElement& s) {
    if (F.is_zero(s)) throw Inconsistent("vanishing diagonal ratio");
    for (int r = 0; r < d; ++r) scaled.at(r, G.pos(index)) = F.mul(scaled.at(r, G.pos(index)), s);
  };

  if (G.family == Family::A) {
    for (int i = 2; i <= d; ++i) scale_column(i, ratio(GenKind::XPlain, i, 1, i, 1));
  } else {
    for (int i = 2; i <= l; ++i) scale_column(i, ratio(GenKind::XPlain, i, 1, i, 1));
    FieldElement sneg1 = ratio(GenKind::XShortL, 1, 0, -1, 1);
    scale_column(-1, sneg1);
    for (int i = 2; i <= l; ++i) {
      // x_{1,i} carries -e_{-i,-1}, so the (-i,-1) entry is -d_{-i}^{-1} d_{-1}
      FieldElement r = F.neg(ratio(GenKind::XPlain, 1, i, -i, -1));
      scale_column(-i, F.mul(r, sneg1));
    }
  }

  Matrix ghat = normalize_leading(F, scaled);
  // success criterion: the induced automorphism agrees image for image
  AutoRep check = auto_from_conjugation(G, ghat);
  if (!same_images(check, phi)) throw Inconsistent("recovered matrix does not induce phi");
  return ghat;
}

Matrix recover_conjugator_linear(const AutoRep& phi) {
  const GroupId& G = phi.group;
  const Field& F = G.field;
  int d = G.dim();
  int n = d * d;

  // Streaming row reduction of the system h A - B h = 0 over all labels.
  std::vector<std::vector<FieldElement>> pivots;  // reduced rows
  std::vector<int> pivot_col;
  auto reduce_row = [&](std::vector<FieldElement>& row) {
    for (size_t p = 0; p < pivots.size(); ++p) {
      const FieldElement& f = row[pivot_col[p]];
      if (F.is_zero(f)) continue;
      FieldElement fneg = F.neg(f);
      for (int c = 0; c < n; ++c) row[c] = F.add(row[c], F.mul(fneg, pivots[p][c]));
    }
  };

  const auto labels = enumerate_generators(G);
  for (size_t idx = 0; idx < labels.size(); ++idx) {
    Matrix A = gen_matrix(G, labels[idx]);
    const Matrix& B = phi.images[idx];
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        // sum_m A[m][c] h[r][m] - sum_m B[r][m] h[m][c] = 0
        std::vector<FieldElement> row(n, F.zero());
        for (int m = 0; m < d; ++m) {
          row[r * d + m] = F.add(row[r * d + m], A.at(m, c));
          row[m * d + c] = F.sub(row[m * d + c], B.at(r, m));
        }
        reduce_row(row);
        int pc = -1;
        for (int cc = 0; cc < n; ++cc)
          if (!F.is_zero(row[cc])) {
            pc = cc;
            break;
          }
        if (pc < 0) continue;
        FieldElement pinv = F.inv(row[pc]);
        for (int cc = 0; cc < n; ++cc) row[cc] = F.mul(pinv, row[cc]);
        for (size_t p = 0; p < pivots.size(); ++p) {
          const FieldElement& f = pivots[p][pc];
          if (F.is_zero(f)) continue;
          FieldElement fneg = F.neg(f);
          for (int cc = 0; cc < n; ++cc)
            pivots[p][cc] = F.add(pivots[p][cc], F.mul(fneg, row[cc]));
        }
        pivots.push_back(std::move(row));
        pivot_col.push_back(pc);
      }
    }
  }

  int rank = int(pivots.size());
  if (n - rank != 1) throw AmbiguousRecovery("nullspace dimension " + std::to_string(n - rank));

  std::vector<bool> is_pivot(n, false);
  for (int pc : pivot_col) is_pivot[pc] = true;
  int free_col = -1;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  std::vector<FieldElement> x(n, F.zero());
  x[free_col] = F.one();
  for (size_t p = 0; p < pivots.size(); ++p) x[pivot_col[p]] = F.neg(pivots[p][free_col]);

  Matrix h(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) h.at(r, c) = x[r * d + c];
  h = normalize_leading(F, h);
  matinv(F, h);  // throws Singular if not invertible
  return h;
}

StructureReport bd_obstruction_report(const AutoRep& phi, const Matrix& conjugator) {
  const GroupId& G = phi.group;
  const Field& F = G.field;
  if (G.family != Family::B && G.family != Family::D)
    throw FamilyUnsupported("obstruction report is about families B and D");
  int d = G.dim();
  int l = G.rank;
  Matrix I = identity(F, d);
  Matrix N(d, d);

  // Mimic the A/C column extraction: for each target column take the image
  // column where, for g = I, the bare root would put that basis vector.
  auto grab = [&](GenKind kind, int i, int j, int image_col, int dest_index) {
    Matrix P = matsub(F, image_at(phi, kind, i, j), I);
    int c = G.pos(image_col);
    bool zero = true;
    for (int r = 0; r < d && zero; ++r) zero = F.is_zero(P.at(r, c));
    if (zero) c = first_nonzero_column(F, P);
    if (c < 0) throw Inconsistent("zero root image");
    set_column(N, G.pos(dest_index), F, P, c);
  };

  for (int i = 1; i <= l; ++i) {
    int j = l + 1 - i;
    if (j == i) j = i < l ? i + 1 : i - 1;
    grab(GenKind::XPlain, i, j, j, i);
  }
  for (int i = 1; i < l; ++i) grab(GenKind::XLower, i, l, l, -i);
  grab(GenKind::XLower, 1, l, 1, -l);
  if (G.family == Family::B) grab(GenKind::XB0Lo, 1, 0, 0, 0);

  Matrix D = matmul(F, matinv(F, conjugator), N);

  StructureReport rep{D, true, true, true, false, false};
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if (r != c && !F.is_zero(D.at(r, c))) rep.d_diagonal = false;
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      const FieldElement& w = D.at(G.pos(i), G.pos(j));
      if (i != j && !F.is_zero(w)) rep.w_diagonal = false;
      const FieldElement& y = D.at(G.pos(-i), G.pos(j));
      if (i + j != l + 1 && !F.is_zero(y)) rep.y_antidiagonal = false;
      if (!F.is_zero(D.at(G.pos(i), G.pos(-j)))) rep.x_nonzero = true;
      if (i != j && !F.is_zero(D.at(G.pos(-i), G.pos(-j)))) rep.z_offdiag_nonzero = true;
    }
  return rep;
}

}  // namespace chevmor
