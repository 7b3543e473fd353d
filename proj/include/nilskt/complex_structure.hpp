#pragma once

#include <memory>
#include <optional>

#include "nilskt/form.hpp"
#include "nilskt/linalg.hpp"

namespace nilskt {

/// A real Lie algebra presented through the differentials of an invariant
/// coframe e1..en (one 2-form per generator).
struct RealLieAlgebra {
  CoframePtr coframe;

  int dim() const { return coframe->size(); }
  bool jacobi() const { return coframe->jacobi(); }
  /// Bracket coefficient: [e_i, e_j] = sum_k c(k,i,j) e_k, via
  /// de^k(X, Y) = -e^k([X, Y]).
  Scalar bracket_coeff(int k, int i, int j) const;

  static RealLieAlgebra from_terms(std::vector<TermMap> diffs);
};

/// An invariant almost complex structure on a real Lie algebra, given by
/// the n-dimensional subspace of (1,0)-forms: `lambda` holds one row per
/// generator, with 2n complex coordinates over the real coframe.
class ComplexStructure {
 public:
  ComplexStructure(RealLieAlgebra algebra, Mat lambda, double tol = kDefaultTol);

  const RealLieAlgebra& algebra() const { return alg_; }
  const Mat& lambda() const { return lambda_; }
  int n() const { return lambda_.rows(); }

  /// Lambda and its conjugate together span the complexified dual.
  bool maximally_complex() const { return static_cast<bool>(inv_); }

  /// The 2n x 2n real matrix of J acting on the coframe (rows of lambda
  /// are +i eigenvectors of the row action).
  const Mat& j_matrix() const;

  /// The complex coframe a1..an, c1..cn with induced differentials.
  const CoframePtr& complex_coframe() const;
  /// Express a form over the real coframe in the complex one, and back.
  Form to_complex(const Form& real_form) const;
  Form to_real(const Form& complex_form) const;

  bool integrable() const;
  bool abelian() const;

  double tol() const { return tol_; }

 private:
  RealLieAlgebra alg_;
  Mat lambda_;
  double tol_;
  std::optional<Mat> inv_;  // inverse of [lambda; conj lambda], when it exists
  Mat jmat_;
  CoframePtr complex_cf_;
  Mat complex_to_real_;  // rows: a_k, c_k over e_1..e_2n
  Mat real_to_complex_;
};

inline bool is_maximally_complex(const ComplexStructure& s) { return s.maximally_complex(); }
inline bool is_integrable(const ComplexStructure& s) { return s.integrable(); }
inline bool is_abelian(const ComplexStructure& s) { return s.abelian(); }

/// Re-basis the (1,0) space so that d a1 = 0 and each d a_i lies in the
/// ideal generated by its predecessors. Throws when not integrable or
/// when the staging fails to exhaust the space in n steps.
ComplexStructure echelon_basis(const ComplexStructure& s);

/// Structure constants on the adapted real coframe defined by
/// a^k = e^(2k-1) + i e^(2k).
RealLieAlgebra real_structure_constants(const ComplexStructure& s);

/// dim ker(d) on 1-forms. Requires Jacobi.
int betti_b1(const RealLieAlgebra& L, double tol = kDefaultTol);

/// True when the derived algebra is central.
bool is_two_step(const RealLieAlgebra& L, double tol = kDefaultTol);

/// Build the structure from the matrix of J acting on the real coframe
/// (J e^i = sum_j F[i][j] e^j). Requires F^2 = -I.
ComplexStructure from_coframe_action(RealLieAlgebra algebra, const Mat& F,
                                     double tol = kDefaultTol);

}  // namespace nilskt
