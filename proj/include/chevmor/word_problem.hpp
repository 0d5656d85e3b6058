#pragma once

#include <utility>

#include "chevmor/generators.hpp"

namespace chevmor {

/// Arithmetic accounting for one decomposition run.  Counts the field
/// multiplications/additions performed by the row-column reduction itself
/// (label applications and coefficient solves); the up-front membership
/// check is validation and is not counted.  Fields only ever increase
/// during a run.
struct OpCounter {
  uint64_t mults = 0;
  uint64_t adds = 0;
  uint64_t labels = 0;
};

/// Word for the Weyl element w_i that swaps basis row i with row -i, up to
/// sign.  Family C: the 3-letter x_{i,-i} y_{i,-i} x_{i,-i}.  Families B/D:
/// built from w_l by the recursion w_i = w_{i+1} sigma_{i+1,i} w_{i,i+1}.
Word row_flip_word(const GroupId& G, int i);

/// Word for diag(1,...,1,lambda,1,...,1,lambda^{-1}) (entries at basis
/// positions l and -l; leading 1 for family B).  Families B/D require
/// lambda to be a square (NotASquareForFamily otherwise; the caller factors
/// out the fixed non-square and appends a DZ label).
Word torus_word(const GroupId& G, const FieldElement& lambda);

/// Family B: word for diag(-1,1,...,1), the product w_{l,0} w_l.
Word sign_word(const GroupId& G);

/// Row-column decomposition: a word evaluating to g, with operation counts.
/// Throws NotMember when g is not in the group and InternalStuck when a
/// step's shape lemma fails (a bug, never a legitimate outcome).
/// Emits at most 64*l^2 labels.
std::pair<Word, OpCounter> decompose(const GroupId& G, const Matrix& g);

}  // namespace chevmor
