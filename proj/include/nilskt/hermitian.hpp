#pragma once

#include <string>

#include "nilskt/complex_structure.hpp"
#include "nilskt/linalg.hpp"

namespace nilskt {

/// Coefficient matrix x of a real (1,1)-form W = sum x_ij a^i ^ c^j.
/// Reality of the form is the skew-Hermitian symmetry conj(x_ji) = -x_ij,
/// checked at construction. H = -i x is then Hermitian, and W tames the
/// complex structure exactly when H is positive definite.
class HermitianForm {
 public:
  explicit HermitianForm(Mat x, double tol = kDefaultTol);
  /// The standard form (i/2)(a1^c1 + a2^c2 + a3^c3).
  static HermitianForm standard(int n = 3);
  /// x11 = ix, x22 = iy, x12 = z (x21 = -conj z), x33 as given, rest zero.
  static HermitianForm from_xyz(const Scalar& x, const Scalar& y, const Scalar& z,
                                const Scalar& x33);

  int dim() const { return x_.rows(); }
  const Mat& x() const { return x_; }
  Mat h() const { return x_.scaled(-Scalar::i()); }
  /// Leading principal minors of -i x all positive.
  bool positive(double tol = kDefaultTol) const;

 private:
  Mat x_;
};

/// The 2-form of W over a complex coframe.
Form omega_form(const HermitianForm& w, const CoframePtr& cf);
/// Express a real 2-form (over the real coframe) as a HermitianForm in the
/// basis of S; throws when the form is not of type (1,1).
HermitianForm hermitian_from_real(const Form& omega_real, const ComplexStructure& s,
                                  double tol = kDefaultTol);

/// The symmetric tensor g(X, Y) = W(X, JY) on the real coframe duals.
/// Positive definite exactly when W.positive().
Mat metric_tensor(const HermitianForm& w, const ComplexStructure& s);
Mat metric_from_real(const Form& omega_real, const ComplexStructure& s);

enum class SktStatus { kahler, skt, neither };
const char* to_string(SktStatus st);

/// kahler when dW = 0; skt when box(W) = 0 but dW != 0; neither otherwise.
/// Rejects non-positive W unless allow_pseudo is set.
SktStatus skt_status(const HermitianForm& w, const ComplexStructure& s,
                     bool allow_pseudo = false, double tol = kDefaultTol);
/// Same decision on an already-assembled 2-form over a complex coframe.
SktStatus skt_status_on(const Form& omega, double tol = kDefaultTol);

/// The unique 1-form with theta ^ W^2 = d(W^2); throws when W is degenerate.
Form lee_form(const HermitianForm& w, const ComplexStructure& s,
              double tol = kDefaultTol);
Form lee_form_on(const Form& omega, double tol = kDefaultTol);

/// The torsion 3-form J dW.
Form bismut_torsion(const Form& omega);

/// d W - (1/(n-1)) theta ^ W; wedging with W^(n-2) gives zero.
Form primitive_defect_on(const Form& omega, double tol = kDefaultTol);

}  // namespace nilskt
