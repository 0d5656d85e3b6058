#pragma once

#include "chevmor/automorphism.hpp"

namespace chevmor {

/// Column-extraction recovery of the conjugating matrix, up to scalar.
/// Families A and C only; the sparse column trick needs rank-one root
/// elements.  Returns g-hat with auto_from_conjugation(g-hat) equal to phi
/// image for image; normalized so the leading nonzero entry of the first
/// column is 1.
Matrix recover_conjugator_fast(const AutoRep& phi);

/// Recovery by solving the homogeneous linear system h x_r = phi(x_r) h in
/// the d^2 entries of h, over all canonical labels.  Works for every
/// family.  The solution space must be exactly one-dimensional
/// (AmbiguousRecovery otherwise); the result is normalized to leading
/// entry 1 and must be invertible (Singular otherwise).
Matrix recover_conjugator_linear(const AutoRep& phi);

/// What the column extraction produces for B/D: D = g^{-1} N assembled from
/// the rank-two root images.  Test-only; needs the secret conjugator.
struct StructureReport {
  Matrix extracted;        // D = g^{-1} N
  bool d_diagonal;         // the headline flag
  bool w_diagonal;         // top-left block of the +/- split
  bool y_antidiagonal;     // bottom-left block supported on the anti-diagonal
  bool x_nonzero;          // top-right block has a nonzero entry
  bool z_offdiag_nonzero;  // bottom-right block has off-diagonal entries
};

StructureReport bd_obstruction_report(const AutoRep& phi, const Matrix& conjugator);

}  // namespace chevmor
