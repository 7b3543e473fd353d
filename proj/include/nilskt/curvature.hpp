#pragma once

#include <string>
#include <vector>

#include "nilskt/complex_structure.hpp"
#include "nilskt/linalg.hpp"

namespace nilskt {

/// Levi-Civita connection coefficients of a left-invariant metric,
/// nabla_{e_i} e_j = sum_k gamma(k, i, j) e_k.
class Christoffel {
 public:
  Christoffel(int n) : n_(n), g_(n * n * n) {}
  int dim() const { return n_; }
  Scalar& at(int k, int i, int j) { return g_[(k * n_ + i) * n_ + j]; }
  const Scalar& at(int k, int i, int j) const { return g_[(k * n_ + i) * n_ + j]; }

 private:
  int n_;
  std::vector<Scalar> g_;
};

/// Koszul formula 2h(nabla_X Y, Z) = h([X,Y],Z) - h([Y,Z],X) + h([Z,X],Y)
/// on the invariant frame. Throws when h is degenerate.
Christoffel koszul(const RealLieAlgebra& L, const Mat& h, double tol = kDefaultTol);

/// Fully lowered curvature R_{ijkl} = h(R(e_i,e_j) e_k, e_l) with
/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z.
class Riemann {
 public:
  Riemann(int n) : n_(n), r_(n * n * n * n) {}
  int dim() const { return n_; }
  Scalar& at(int i, int j, int k, int l) { return r_[((i * n_ + j) * n_ + k) * n_ + l]; }
  const Scalar& at(int i, int j, int k, int l) const {
    return r_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  double max_abs() const;

 private:
  int n_;
  std::vector<Scalar> r_;
};
Riemann riemann(const RealLieAlgebra& L, const Mat& h, double tol = kDefaultTol);

/// Ricci tensor Ric(Y, Z) = tr(X -> R(X, Y) Z).
Mat ricci(const RealLieAlgebra& L, const Mat& h, double tol = kDefaultTol);

/// Ricci 2-form rho(X, Y) = (1/2) sum_i eps_i h(R(X,Y) u_i, J u_i) over an
/// orthonormal frame, evaluated as a trace of J with the curvature
/// endomorphism. Zero for every invariant pseudo-Kahler structure.
Form ricci_form(const RealLieAlgebra& L, const Mat& h, const Mat& jmat,
                double tol = kDefaultTol);

struct PseudoKahlerReport {
  bool ok = false;
  std::string reason;  // empty when ok
};

/// dW = 0, J integrable, metric nondegenerate, and the Levi-Civita
/// connection parallelises J.
PseudoKahlerReport pseudo_kahler_check(const ComplexStructure& s, const Form& omega_real,
                                       double tol = kDefaultTol);

/// Basis of the closed invariant 2-forms.
std::vector<Form> closed_two_forms(const RealLieAlgebra& L, double tol = kDefaultTol);

/// Whether some closed invariant 2-form is nondegenerate. Decided exactly:
/// on a 6-dim algebra the top power of a generic kernel element is a cubic
/// whose coefficients are the triple wedges of the kernel basis.
bool has_invariant_symplectic(const RealLieAlgebra& L, double tol = kDefaultTol);

}  // namespace nilskt
