#pragma once

#include <string>

#include "nilskt/complex_structure.hpp"
#include "nilskt/form.hpp"
#include "nilskt/linalg.hpp"

namespace nilskt {

/// Parameters of the nilpotent family with d a1 = d a2 = 0 and
/// d a3 = C a1^c1 + D a1^c2 - A a2^c1 - B a2^c2 + E a1^a2.
/// Every tuple satisfies Jacobi and defines a Lie algebra.
struct SktParams {
  Scalar A, B, C, D, E;

  bool all_zero() const {
    return A.is_zero(0.0) && B.is_zero(0.0) && C.is_zero(0.0) && D.is_zero(0.0) &&
           E.is_zero(0.0);
  }
  /// Coefficient matrix Y = [[A, B], [C, D]].
  Mat2 y_matrix() const { return {A, B, C, D}; }
};

/// The coframe of the family as a complex structure on its real algebra.
ComplexStructure build_family(const SktParams& p, double tol = kDefaultTol);

/// |A|^2 + |D|^2 + |E|^2 + 2 Re(conj(B) C); zero iff the family is SKT
/// for every compatible metric.
Scalar skt2_residual(const SktParams& p);

/// The (1,1)-form attached to a 2x2 matrix M = [[A,B],[C,D]]:
/// C a1^c1 + D a1^c2 - A a2^c1 - B a2^c2.
Form matrix_form(const Mat2& m, const CoframePtr& cf);

/// a1 ^ c1 ^ a2 ^ c2 (the 4-volume all (2,2) wedges are measured against).
Form volume4(const CoframePtr& cf);
/// a1 ^ a2 ^ a3 ^ c1 ^ c2 ^ c3.
Form volume6(const CoframePtr& cf);
/// Coefficient t with f = t * unit, for a one-monomial reference form.
/// Throws if f has support outside the reference monomial.
Scalar coeff_wrt(const Form& f, const Form& unit, double tol = 0.0);

/// The three wedge coefficients relative to volume4, computed symbolically:
///   d a3 ^ d c3       -> tr(Y conj(Y)) - |E|^2
///   (J d a3) ^ d c3   -> tr(Y conj(Y)) + |E|^2
///   d a3 ^ d a3       -> 2 det Y
struct TripleCoeffs {
  Scalar da_dc;
  Scalar Jda_dc;
  Scalar da_da;
};
TripleCoeffs triple_identities(const SktParams& p);

/// The 2x2 real symmetric matrix -[[|E|^2 + Re U, Im U], [Im U, |E|^2 - Re U]]
/// with U = BC - AD. Under the SKT constraint this is the Gram matrix of the
/// real and imaginary parts of d a3.
Mat b_matrix(const SktParams& p);

/// Isomorphism label of the underlying real Lie algebra, one of the six
/// 2-step classes with b1 >= 4, e.g. "(0,0,0,0,13+42,14+23)".
/// Decides by (rank of d on 1-forms, rank/definiteness of the Gram matrix
/// of the image 2-forms). Throws on abelian input.
std::string classify_real(const SktParams& p, double tol = kDefaultTol);
std::string classify_real(const RealLieAlgebra& L, double tol = kDefaultTol);

/// Left-hand side of the balanced condition A z + i(B x - C y) + D conj(z)
/// for the metric x11 = ix, x22 = iy, x12 = z. Requires x, y > 0 and
/// xy > |z|^2.
Scalar balanced_residual(const SktParams& p, const Scalar& x, const Scalar& y,
                         const Scalar& z);

}  // namespace nilskt
