#include "chevmor/matrix.hpp"

namespace chevmor {

Matrix identity(const Field& F, int d) {
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) m.at(i, i) = F.one();
  return m;
}

Matrix matmul(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.cols != B.rows) throw DimMismatch("matmul");
  Matrix R(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int k = 0; k < A.cols; ++k) {
      const FieldElement& s = A.at(i, k);
      if (F.is_zero(s)) continue;
      for (int j = 0; j < B.cols; ++j) {
        R.at(i, j) = F.add(R.at(i, j), F.mul(s, B.at(k, j)));
      }
    }
  }
  return R;
}

Matrix matadd(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw DimMismatch("matadd");
  Matrix R(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) R.a[i] = F.add(A.a[i], B.a[i]);
  return R;
}

Matrix matsub(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw DimMismatch("matsub");
  Matrix R(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) R.a[i] = F.sub(A.a[i], B.a[i]);
  return R;
}

Matrix transpose(const Matrix& A) {
  Matrix R(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) R.at(j, i) = A.at(i, j);
  return R;
}

Matrix scalar_mul(const Field& F, const FieldElement& s, const Matrix& A) {
  Matrix R(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) R.a[i] = F.mul(s, A.a[i]);
  return R;
}

Matrix matinv(const Field& F, const Matrix& A) {
  if (A.rows != A.cols) throw DimMismatch("matinv: square matrix required");
  int d = A.rows;
  Matrix w = A;
  Matrix inv = identity(F, d);
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r) {
      if (!F.is_zero(w.at(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw Singular("matinv");
    if (pivot != col) {
      for (int j = 0; j < d; ++j) {
        std::swap(w.at(pivot, j), w.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    FieldElement pinv = F.inv(w.at(col, col));
    for (int j = 0; j < d; ++j) {
      w.at(col, j) = F.mul(pinv, w.at(col, j));
      inv.at(col, j) = F.mul(pinv, inv.at(col, j));
    }
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      FieldElement f = w.at(r, col);
      if (F.is_zero(f)) continue;
      for (int j = 0; j < d; ++j) {
        w.at(r, j) = F.sub(w.at(r, j), F.mul(f, w.at(col, j)));
        inv.at(r, j) = F.sub(inv.at(r, j), F.mul(f, inv.at(col, j)));
      }
    }
  }
  return inv;
}

Matrix matpow(const Field& F, const Matrix& A, uint64_t e) {
  if (A.rows != A.cols) throw DimMismatch("matpow");
  Matrix r = identity(F, A.rows);
  Matrix base = A;
  while (e) {
    if (e & 1) r = matmul(F, r, base);
    if (e >>= 1) base = matmul(F, base, base);
  }
  return r;
}

FieldElement det(const Field& F, Matrix A) {
  if (A.rows != A.cols) throw DimMismatch("det");
  int d = A.rows;
  FieldElement result = F.one();
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r) {
      if (!F.is_zero(A.at(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return F.zero();
    if (pivot != col) {
      for (int j = col; j < d; ++j) std::swap(A.at(pivot, j), A.at(col, j));
      result = F.neg(result);
    }
    FieldElement p = A.at(col, col);
    result = F.mul(result, p);
    FieldElement pinv = F.inv(p);
    for (int r = col + 1; r < d; ++r) {
      FieldElement f = F.mul(A.at(r, col), pinv);
      if (F.is_zero(f)) continue;
      for (int j = col; j < d; ++j) A.at(r, j) = F.sub(A.at(r, j), F.mul(f, A.at(col, j)));
    }
  }
  return result;
}

bool is_identity(const Field& F, const Matrix& A) {
  if (A.rows != A.cols) return false;
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) {
      const FieldElement& v = A.at(i, j);
      if (i == j ? !(v == F.one()) : !F.is_zero(v)) return false;
    }
  return true;
}

bool is_zero(const Field& F, const Matrix& A) {
  for (const auto& v : A.a)
    if (!F.is_zero(v)) return false;
  return true;
}

bool scalar_multiple_of(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.rows != B.rows || A.cols != B.cols) return false;
  FieldElement s = F.zero();
  for (size_t i = 0; i < A.a.size(); ++i) {
    bool az = F.is_zero(A.a[i]);
    bool bz = F.is_zero(B.a[i]);
    if (az != bz) return false;
    if (az) continue;
    FieldElement ratio = F.mul(A.a[i], F.inv(B.a[i]));
    if (F.is_zero(s)) {
      s = ratio;
    } else if (!(s == ratio)) {
      return false;
    }
  }
  return !F.is_zero(s);
}

}  // namespace chevmor
