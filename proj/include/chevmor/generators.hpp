#pragma once

#include <vector>

#include "chevmor/group.hpp"

namespace chevmor {

/// Kinds of Chevalley generators.  Indices i, j are the 1-based basis
/// indices of the defining block; the matrix realizations are family
/// dependent.
///
///   XPlain(i,j)   x_{i,j}     (all families; i != j)
///   XUpper(i,j)   x_{i,-j}    (B/C/D; i < j)
///   XLower(i,j)   x_{-i,j}    (B/C/D; i < j)
///   XShortU(i)    x_{i,-i}    (C only)
///   XShortL(i)    x_{-i,i}    (C only)
///   XB0Up(i)      x_{i,0}     (B only)
///   XB0Lo(i)      x_{0,i}     (B only)
///   DZ(e)         d(zeta)^e   (B/D)
///   WL            w_l         (B/D)
enum class GenKind : uint8_t { XPlain, XUpper, XLower, XShortU, XShortL, XB0Up, XB0Lo, DZ, WL };

struct GenLabel {
  GenKind kind = GenKind::XPlain;
  int i = 0;
  int j = 0;
  FieldElement t{};  // root kinds only
  int64_t e = 0;     // DZ only

  friend bool operator==(const GenLabel&, const GenLabel&) = default;
};

using Word = std::vector<GenLabel>;

/// One nonzero off-identity entry of a generator: gen = I + sum v*e_{r,c}
/// with r, c matrix positions.
struct SparseEntry {
  int r;
  int c;
  FieldElement v;
};

GenLabel make_root(GenKind kind, int i, int j, FieldElement t);
GenLabel make_dz(int64_t e);
GenLabel make_wl();

/// Throws BadLabel when the label is not valid for the group.
void validate_label(const GroupId& G, const GenLabel& lab);

/// The off-identity entries of the generator matrix.
std::vector<SparseEntry> gen_entries(const GroupId& G, const GenLabel& lab);

Matrix gen_matrix(const GroupId& G, const GenLabel& lab);

/// Label of the inverse generator: x_r(t) -> x_r(-t), DZ(e) -> DZ(-e),
/// WL -> WL.
GenLabel gen_inverse(const GroupId& G, const GenLabel& lab);

/// The canonical generating set: one label per root kind per power-basis
/// parameter theta^j, with DZ(1) and WL appended for B/D.  Order is fixed;
/// automorphism representations and key files index into it.
std::vector<GenLabel> enumerate_generators(const GroupId& G);

/// M <- gen * M and M <- M * gen, exploiting sparsity.
void apply_left(const GroupId& G, const GenLabel& lab, Matrix& M);
void apply_right(const GroupId& G, Matrix& M, const GenLabel& lab);

/// Ordered product of the word's generator matrices; empty word gives I.
Matrix word_eval(const GroupId& G, const Word& w);

}  // namespace chevmor
