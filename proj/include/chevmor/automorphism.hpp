#pragma once

#include "chevmor/word_problem.hpp"

namespace chevmor {

/// A conjugation-type automorphism, stored as its images on the canonical
/// generating set (enumerate_generators order).  Immutable once built.
struct AutoRep {
  GroupId group;
  std::vector<Matrix> images;
};

/// The identity automorphism: images are the generator matrices themselves.
AutoRep identity_automorphism(const GroupId& G);

/// phi(x) = c x c^{-1}.  c must normalize the group: a similitude-group
/// element for B/C/D, any invertible matrix for A.  Every image is checked
/// for membership; failures raise NotNormalizing.
AutoRep auto_from_conjugation(const GroupId& G, const Matrix& c);

/// Apply the automorphism to a member h: decompose h into a word and
/// substitute generator images.  For a conjugation rep this equals
/// c h c^{-1}.
Matrix auto_apply(const AutoRep& phi, const Matrix& h);

/// Composition h -> phi(psi(h)): each image of psi is pushed through phi.
AutoRep auto_compose(const AutoRep& phi, const AutoRep& psi);

/// n-fold composition by square-and-multiply; n = 0 gives the identity rep.
AutoRep auto_pow(const AutoRep& phi, uint64_t n);

/// Image-list equality (the working notion of equality for automorphisms).
bool same_images(const AutoRep& a, const AutoRep& b);

/// Index of the canonical label with the given shape and power-basis
/// parameter theta^power (ignored for DZ/WL); -1 when absent.
int canonical_index(const GroupId& G, GenKind kind, int i, int j, uint32_t power);

}  // namespace chevmor
