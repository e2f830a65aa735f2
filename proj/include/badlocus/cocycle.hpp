#pragma once

// Group cohomology in degree one, two ways:
//  - Fox-calculus Z1/B1/H1 dimensions over exact cyclotomic fields for a
//    finitely presented group acting through given generator matrices;
//  - finite-level cohomology with coefficients in the m-torsion of the
//    projective diagonal torus, the group acting by cyclic shifts through a
//    homomorphism to Z/p, computed with integer lattices and Smith normal
//    form.

#include <vector>

#include "badlocus/modp.hpp"
#include "badlocus/torsion.hpp"
#include "badlocus/words.hpp"

namespace badlocus {

struct CohomologyReport {
  size_t dim_Z1 = 0, dim_B1 = 0, dim_H1 = 0;
};

// Dimensions of 1-cocycles, 1-coboundaries and H1 for the group presented by
// P acting on a d-dimensional space by alpha (one matrix per generator).
// Z1 is the kernel of the Fox-Jacobian block matrix of the relators; B1 is
// the image of v -> ((1 - alpha(x_j)) v)_j.  Throws FieldError if a relator
// image is not the identity.
CohomologyReport cocycle_dims(const Presentation& P,
                              const std::vector<CycMat>& alpha);

// The adjoint action of monomial matrices preserves the splitting of sl_p
// into the trace-zero diagonal block (dimension p-1) and, for each offset
// k = 1..p-1, the span of the matrix units E_{i,i+k} (dimension p).  Returns
// blocks[k] = the list of exact matrices of Ad(image) on block k, one per
// generator, in the bases (E_00 - E_11, ..., E_{p-2,p-2} - E_{p-1,p-1}) and
// (E_{0,k}, E_{1,1+k}, ...).  Throws FieldError if an image is not monomial
// with single-cycle support.
std::vector<std::vector<CycMat>> ad_blocks(const std::vector<ProjMat>& images);

struct TorsionH1 {
  // Invariant factors > 1 of H1, ascending.
  std::vector<long> invariants;
  // Matrix of the coefficient-shift action in the invariant-factor
  // coordinates (entry (i,j) taken modulo invariants[i]).
  IntMat shift_action;
  // One cocycle per invariant factor, as generator values; the classes of
  // these generate H1.
  std::vector<std::vector<TorsionDiag>> generator_cocycles;
};

// H1 of the group presented by P with coefficients in the m-torsion
// diagonal classes (or in the full module (Z/m)^p when full_module is set),
// the action being the cyclic coordinate shift composed with rhobar:
// generators -> Z/p.  Coboundaries are taken from potentials in the ambient
// divisible torus (saturation), so the answer matches the torus computation
// restricted to level m.  Throws FieldError if rhobar kills no relator.
TorsionH1 torsion_h1(const Presentation& P, const std::vector<long>& rhobar,
                     long p, long m, bool full_module = false);

// Direct cyclic-group oracle: Ker(Norm) / Im(shift - 1) for Z/p acting on
// (Z/m)^p (full_module) or its quotient by constants, as invariant factors.
std::vector<long> cyclic_h1_oracle(long p, long m, bool full_module);

// Evaluate a 1-cocycle given by generator values on a word:
// u(gh) = u(g) + shift^{rhobar(g)} u(h).
TorsionDiag cocycle_eval(const Word& w,
                         const std::vector<TorsionDiag>& gen_values,
                         const std::vector<long>& rhobar);

// A homomorphism on the standard generators of the layer-map kernel K0 of a
// free group <x_1..x_l> (rhobar = (1,0,..,0)): X = x_1^p and
// Y[j][i] = x_1^i x_{j+2} x_1^{-i}, j = 0..l-2, i = 0..p-1.
struct KernelHom {
  long p = 2, m = 1;
  TorsionDiag fX;
  std::vector<std::vector<TorsionDiag>> fY;
};

// The transgression obstruction f(x_1^p): zero iff f extends to a class on
// the whole group.  Checks the shift-equivariance preconditions
// (f(Y[j][i+1]) = shift f(Y[j][i]) cyclically, shift f(X) = f(X)) and throws
// FieldError when they fail.
TorsionDiag transgression_obstruction(const KernelHom& f);

// Restriction of a cocycle (values on x_1..x_l) to the K0 generators above.
KernelHom restrict_to_kernel(const std::vector<TorsionDiag>& gen_values,
                             const std::vector<long>& rhobar);

}  // namespace badlocus
