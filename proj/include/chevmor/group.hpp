#pragma once

#include "chevmor/field.hpp"
#include "chevmor/matrix.hpp"
#include "chevmor/rng.hpp"

namespace chevmor {

/// The four classical families: A = SL(l+1,q), B = O(2l+1,q),
/// C = Sp(2l,q), D = O(2l,q).
enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

/// A concrete group: family, rank and field.  Fixes the dimension, the
/// bilinear form and the basis index layout.
///
/// Basis positions: for C/D the basis 1..l,-1..-l maps to 0..l-1, l..2l-1;
/// for B the basis 0,1..l,-1..-l maps to 0, 1..l, l+1..2l; for A the basis
/// 1..l+1 maps to 0..l.
struct GroupId {
  Family family;
  int rank;
  Field field;

  int dim() const {
    switch (family) {
      case Family::A:
        return rank + 1;
      case Family::B:
        return 2 * rank + 1;
      default:
        return 2 * rank;
    }
  }

  /// Matrix position of a basis index (positive, negative, or 0 for B).
  int pos(int index) const;

  bool operator==(const GroupId& o) const {
    return family == o.family && rank == o.rank && field == o.field;
  }
};

/// Gram matrix of the fixed bilinear form; families B, C, D only.
Matrix form_matrix(const GroupId& G);

/// det X = 1 for family A; tXbX = b for B/C/D.
bool is_member(const GroupId& G, const Matrix& X);

/// The scalar mu with tXbX = mu*b; throws NotSimilitude when no scalar
/// works and NoForm for family A.
FieldElement similitude_factor(const GroupId& G, const Matrix& X);

/// Uniformly random element of the diagonal similitude group (B/C/D).
Matrix sample_diagonal_similitude(const GroupId& G, Rng& rng);

/// Evaluation of a random generator word; length < 0 selects the default
/// 10*l^2 labels.  Parameters are uniform nonzero field elements.
Matrix random_element(const GroupId& G, Rng& rng, int length = -1);

}  // namespace chevmor
