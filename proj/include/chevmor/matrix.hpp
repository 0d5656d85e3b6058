#pragma once

#include <vector>

#include "chevmor/field.hpp"

namespace chevmor {

/// Dense row-major matrix over a Field.  The universal carrier for group
/// elements, forms and automorphism images.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<FieldElement> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}

  FieldElement& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const FieldElement& at(int r, int c) const { return a[size_t(r) * cols + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix identity(const Field& F, int d);
Matrix matmul(const Field& F, const Matrix& A, const Matrix& B);
Matrix matadd(const Field& F, const Matrix& A, const Matrix& B);
Matrix matsub(const Field& F, const Matrix& A, const Matrix& B);
Matrix transpose(const Matrix& A);
Matrix scalar_mul(const Field& F, const FieldElement& s, const Matrix& A);

/// Gauss-Jordan inverse; throws Singular for non-invertible input.
Matrix matinv(const Field& F, const Matrix& A);
Matrix matpow(const Field& F, const Matrix& A, uint64_t e);
FieldElement det(const Field& F, Matrix A);
bool is_identity(const Field& F, const Matrix& A);
bool is_zero(const Field& F, const Matrix& A);

/// True when A = s*B for some nonzero scalar s.
bool scalar_multiple_of(const Field& F, const Matrix& A, const Matrix& B);

}  // namespace chevmor
